#include "ucon/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "ucon/connectivity.hpp"

namespace ucon {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  s.erase(s.find_last_not_of('0') + 1);
  if (s.back() == '.') s.pop_back();
  return s == "-0" ? "0" : s;
}

class Svg {
 public:
  Svg(const BoundingBox& box, double width_px) {
    const double w = std::max(box.hi.x - box.lo.x, 1e-9);
    const double h = std::max(box.hi.y - box.lo.y, 1e-9);
    const double m = 0.05 * std::max(w, h);
    x0_ = box.lo.x - m;
    y1_ = box.hi.y + m;
    const double vw = w + 2 * m, vh = h + 2 * m;
    scale_ = width_px / vw;
    out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width_px) << "\" height=\""
         << num(vh * scale_) << "\" viewBox=\"0 0 " << num(width_px) << ' ' << num(vh * scale_) << "\">\n";
    out_ << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    unit_ = std::clamp(width_px / 400.0, 1.0, 3.0);
  }

  double sx(double x) const { return (x - x0_) * scale_; }
  double sy(double y) const { return (y1_ - y) * scale_; }
  double len(double d) const { return d * scale_; }
  double unit() const { return unit_; }

  void circle(Point2 c, double r_px, const std::string& attrs) {
    out_ << "<circle cx=\"" << num(sx(c.x)) << "\" cy=\"" << num(sy(c.y)) << "\" r=\"" << num(r_px) << "\" "
         << attrs << "/>\n";
  }
  void line(Point2 a, Point2 b, const std::string& attrs) {
    out_ << "<line x1=\"" << num(sx(a.x)) << "\" y1=\"" << num(sy(a.y)) << "\" x2=\"" << num(sx(b.x))
         << "\" y2=\"" << num(sy(b.y)) << "\" " << attrs << "/>\n";
  }
  void rect(Point2 lo, double side, const std::string& attrs) {
    out_ << "<rect x=\"" << num(sx(lo.x)) << "\" y=\"" << num(sy(lo.y + side)) << "\" width=\"" << num(len(side))
         << "\" height=\"" << num(len(side)) << "\" " << attrs << "/>\n";
  }
  void raw(const std::string& s) { out_ << s; }
  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  std::ostringstream out_;
  double x0_ = 0, y1_ = 0, scale_ = 1, unit_ = 1;
};

std::string mark_color(const std::vector<RegionTag>* tags, std::size_t region, std::size_t mark,
                       const char* fallback) {
  if (!tags) return fallback;
  const auto& c = (*tags)[region].colors;
  return mark < c.size() ? c[mark] : fallback;
}

}  // namespace

std::string render_svg(const Instance& inst, const RenderOptions& opts) {
  if (opts.selection && opts.selection->points.size() != inst.regions.size())
    throw std::invalid_argument("render: selection has " + std::to_string(opts.selection->points.size()) +
                                " points for " + std::to_string(inst.regions.size()) + " regions");
  if (opts.tags && opts.tags->size() != inst.regions.size())
    throw std::invalid_argument("render: tag count does not match the instance");
  if (opts.alpha && !(*opts.alpha >= 0.0)) throw std::invalid_argument("render: alpha must be non-negative");
  if (!(opts.width_px > 0.0)) throw std::invalid_argument("render: width must be positive");

  Svg svg(inst.bounds(), opts.width_px);
  const double u = svg.unit();
  const std::string stroke = "fill=\"none\" stroke-width=\"" + num(u) + "\" stroke=\"";

  if (opts.selection && opts.alpha) {
    svg.raw("<g fill=\"#4a90d9\" fill-opacity=\"0.15\" stroke=\"none\">\n");
    for (const auto& p : opts.selection->points) svg.circle(p, svg.len(*opts.alpha), "");
    svg.raw("</g>\n");
  }

  for (std::size_t i = 0; i < inst.regions.size(); ++i) {
    const auto& r = inst.regions[i];
    if (const auto* p = std::get_if<FixedPoint>(&r)) {
      svg.circle(p->p, 2 * u, "fill=\"" + mark_color(opts.tags, i, 0, "black") + "\"");
    } else if (const auto* q = std::get_if<PointPair>(&r)) {
      svg.line(q->a, q->b, stroke + "#bbbbbb\" stroke-dasharray=\"" + num(2 * u) + "\"");
      svg.circle(q->a, 2 * u, "fill=\"" + mark_color(opts.tags, i, 0, "blue") + "\"");
      svg.circle(q->b, 2 * u, "fill=\"" + mark_color(opts.tags, i, 1, "red") + "\"");
    } else if (const auto* s = std::get_if<SegmentRegion>(&r)) {
      svg.line(s->s.a, s->s.b, stroke + mark_color(opts.tags, i, 0, "black") + "\"");
    } else if (const auto* d = std::get_if<Disk>(&r)) {
      svg.circle(d->center, svg.len(d->radius), stroke + "black\"");
    } else if (const auto* sq = std::get_if<Square>(&r)) {
      svg.rect(sq->corner, sq->side, stroke + "black\"");
      if (opts.tags)
        for (std::size_t k = 0; k < (*opts.tags)[i].marks.size(); ++k)
          svg.circle((*opts.tags)[i].marks[k], u, "fill=\"" + mark_color(opts.tags, i, k, "gray") + "\"");
    }
  }

  if (opts.selection && opts.selection->points.size() >= 2) {
    const auto tree = mbst(opts.selection->points);
    svg.raw("<g stroke=\"black\" stroke-width=\"" + num(u) + "\">\n");
    for (const auto& [a, b] : tree.edges) svg.line(opts.selection->points[a], opts.selection->points[b], "");
    svg.raw("</g>\n");
  }
  if (opts.selection) {
    svg.raw("<g fill=\"black\">\n");
    for (const auto& p : opts.selection->points) svg.circle(p, 1.5 * u, "");
    svg.raw("</g>\n");
  }
  return svg.finish();
}

}  // namespace ucon
