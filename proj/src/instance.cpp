#include "ucon/instance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ucon {

namespace {
template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;
}  // namespace

const char* region_kind(const Region& r) {
  return std::visit(overloaded{
                        [](const FixedPoint&) { return "point"; },
                        [](const PointPair&) { return "pair"; },
                        [](const SegmentRegion&) { return "segment"; },
                        [](const Disk&) { return "disk"; },
                        [](const Square&) { return "square"; },
                    },
                    r);
}

void check_region(const Region& r) {
  std::visit(overloaded{
                 [](const FixedPoint& f) {
                   if (!is_finite(f.p)) throw std::invalid_argument("point: non-finite coordinate");
                 },
                 [](const PointPair& p) {
                   if (!is_finite(p.a) || !is_finite(p.b))
                     throw std::invalid_argument("pair: non-finite coordinate");
                   if (p.a == p.b) throw std::invalid_argument("pair: the two points coincide");
                 },
                 [](const SegmentRegion& s) {
                   if (!is_finite(s.s.a) || !is_finite(s.s.b))
                     throw std::invalid_argument("segment: non-finite coordinate");
                 },
                 [](const Disk& d) {
                   if (!is_finite(d.center)) throw std::invalid_argument("disk: non-finite center");
                   if (!(d.radius > 0.0) || !std::isfinite(d.radius))
                     throw std::invalid_argument("disk: radius must be positive");
                 },
                 [](const Square& q) {
                   if (!is_finite(q.corner))
                     throw std::invalid_argument("square: non-finite corner");
                   if (!(q.side > 0.0) || !std::isfinite(q.side))
                     throw std::invalid_argument("square: side must be positive");
                 },
             },
             r);
}

void add_to_bounds(BoundingBox& box, const Region& r) {
  std::visit(overloaded{
                 [&](const FixedPoint& f) { box.add(f.p); },
                 [&](const PointPair& p) {
                   box.add(p.a);
                   box.add(p.b);
                 },
                 [&](const SegmentRegion& s) {
                   box.add(s.s.a);
                   box.add(s.s.b);
                 },
                 [&](const Disk& d) {
                   box.add(d.center - Point2{d.radius, d.radius});
                   box.add(d.center + Point2{d.radius, d.radius});
                 },
                 [&](const Square& q) {
                   box.add(q.corner);
                   box.add(q.corner + Point2{q.side, q.side});
                 },
             },
             r);
}

BoundingBox Instance::bounds() const {
  BoundingBox box;
  for (const auto& r : regions) add_to_bounds(box, r);
  return box;
}

double Instance::default_epsilon() const {
  const double diam = bounds().diameter();
  return diam > 0.0 ? 1e-9 * diam : 1e-9;
}

void check_instance(const Instance& inst) {
  if (inst.regions.size() < 2)
    throw std::invalid_argument("instance needs at least 2 regions, got " +
                                std::to_string(inst.regions.size()));
  for (std::size_t i = 0; i < inst.regions.size(); ++i) {
    try {
      check_region(inst.regions[i]);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("region " + std::to_string(i) + ": " + e.what());
    }
  }
}

double distance_to_region(const Region& r, Point2 p) {
  return std::visit(
      overloaded{
          [&](const FixedPoint& f) { return dist(p, f.p); },
          [&](const PointPair& q) { return std::min(dist(p, q.a), dist(p, q.b)); },
          [&](const SegmentRegion& s) { return point_segment_distance(p, s.s).distance; },
          [&](const Disk& d) { return std::max(0.0, dist(p, d.center) - d.radius); },
          [&](const Square& q) {
            const double cx = std::clamp(p.x, q.corner.x, q.corner.x + q.side);
            const double cy = std::clamp(p.y, q.corner.y, q.corner.y + q.side);
            return dist(p, {cx, cy});
          },
      },
      r);
}

std::vector<Violation> validate_selection(const Instance& inst, const Selection& sel,
                                          double eps) {
  if (sel.points.size() != inst.regions.size())
    throw std::invalid_argument("selection has " + std::to_string(sel.points.size()) +
                                " points but the instance has " +
                                std::to_string(inst.regions.size()) + " regions");
  std::vector<Violation> out;
  for (std::size_t i = 0; i < sel.points.size(); ++i) {
    const double d = distance_to_region(inst.regions[i], sel.points[i]);
    if (!(d <= eps)) out.push_back({i, d});
  }
  return out;
}

Point2 containment_project(const Region& r, Point2 p) {
  return std::visit(overloaded{
                        [&](const FixedPoint& f) { return f.p; },
                        [&](const PointPair& q) { return dist(p, q.b) < dist(p, q.a) ? q.b : q.a; },
                        [&](const SegmentRegion& s) { return point_segment_distance(p, s.s).point; },
                        [&](const Disk& d) {
                          const double r0 = dist(p, d.center);
                          if (r0 <= d.radius) return p;
                          return d.center + (d.radius / r0) * (p - d.center);
                        },
                        [&](const Square& q) {
                          return Point2{std::clamp(p.x, q.corner.x, q.corner.x + q.side),
                                        std::clamp(p.y, q.corner.y, q.corner.y + q.side)};
                        },
                    },
                    r);
}

std::vector<Point2> discretize(const Region& r, int g) {
  if (g < 1) throw std::invalid_argument("discretize: g must be >= 1");
  std::vector<Point2> out;
  std::visit(overloaded{
                 [&](const FixedPoint& f) { out.push_back(f.p); },
                 [&](const PointPair& q) {
                   out.push_back(q.a);
                   out.push_back(q.b);
                 },
                 [&](const SegmentRegion& s) {
                   out.reserve(static_cast<std::size_t>(g) + 1);
                   for (int i = 0; i <= g; ++i) {
                     // Exact endpoints regardless of rounding in the interpolation.
                     if (i == 0) out.push_back(s.s.a);
                     else if (i == g) out.push_back(s.s.b);
                     else out.push_back(s.s.at(static_cast<double>(i) / g));
                   }
                 },
                 [&](const Disk& d) {
                   const double step = d.radius / g;
                   const long long g2 = static_cast<long long>(g) * g;
                   for (int i = -g; i <= g; ++i)
                     for (int j = -g; j <= g; ++j)
                       if (static_cast<long long>(i) * i + static_cast<long long>(j) * j <= g2)
                         out.push_back({d.center.x + i * step, d.center.y + j * step});
                 },
                 [&](const Square& q) {
                   const double step = q.side / g;
                   for (int i = 0; i <= g; ++i)
                     for (int j = 0; j <= g; ++j) {
                       const double x = i == g ? q.corner.x + q.side : q.corner.x + i * step;
                       const double y = j == g ? q.corner.y + q.side : q.corner.y + j * step;
                       out.push_back({x, y});
                     }
                 },
             },
             r);
  return out;
}

}  // namespace ucon
