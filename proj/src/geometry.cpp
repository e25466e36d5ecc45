#include "ucon/geometry.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace ucon {

NearestPoint point_segment_distance(Point2 p, const Segment2& s) {
  const Point2 d = s.direction();
  const double len2 = dot(d, d);
  if (len2 == 0.0) return {dist(p, s.a), s.a, 0.0};
  const double t = std::clamp(dot(p - s.a, d) / len2, 0.0, 1.0);
  const Point2 q = s.at(t);
  return {dist(p, q), q, t};
}

SegmentPair segment_segment_distance(const Segment2& s, const Segment2& u) {
  const Point2 d1 = s.direction();
  const Point2 d2 = u.direction();
  const double denom = cross(d1, d2);
  if (denom != 0.0) {
    const Point2 w = u.a - s.a;
    const double t = cross(w, d2) / denom;
    const double v = cross(w, d1) / denom;
    if (t >= 0.0 && t <= 1.0 && v >= 0.0 && v <= 1.0) return {0.0, t, v};
  }
  SegmentPair best{std::numeric_limits<double>::infinity(), 0.0, 0.0};
  auto consider = [&best](double dd, double t1, double t2) {
    if (dd < best.distance) best = {dd, t1, t2};
  };
  {
    const auto n = point_segment_distance(s.a, u);
    consider(n.distance, 0.0, n.t);
  }
  {
    const auto n = point_segment_distance(s.b, u);
    consider(n.distance, 1.0, n.t);
  }
  {
    const auto n = point_segment_distance(u.a, s);
    consider(n.distance, n.t, 0.0);
  }
  {
    const auto n = point_segment_distance(u.b, s);
    consider(n.distance, n.t, 1.0);
  }
  return best;
}

double segment_segment_max_distance(const Segment2& s, const Segment2& u) {
  return std::max({dist(s.a, u.a), dist(s.a, u.b), dist(s.b, u.a), dist(s.b, u.b)});
}

double Capsule::distance_to_base(Point2 p) const {
  if (const auto* q = std::get_if<Point2>(&base)) return dist(p, *q);
  return point_segment_distance(p, std::get<Segment2>(base)).distance;
}

Point2 Capsule::nearest_on_base(Point2 p) const {
  if (const auto* q = std::get_if<Point2>(&base)) return *q;
  return point_segment_distance(p, std::get<Segment2>(base)).point;
}

namespace {

struct Interval {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  bool empty() const { return lo > hi; }
  void merge(const Interval& o) {
    if (o.empty()) return;
    lo = std::min(lo, o.lo);
    hi = std::max(hi, o.hi);
  }
};

// Parameters of the infinite line a + t*d inside the closed disk (center, r).
Interval line_disk(Point2 a, Point2 d, Point2 center, double r) {
  const double len2 = dot(d, d);
  const double len = std::sqrt(len2);
  const Point2 f = a - center;
  const double tf = -dot(f, d) / len2;
  const double h = std::abs(cross(d, f)) / len;
  if (h > r) return {};
  const double w = std::sqrt(std::max(0.0, r * r - h * h)) / len;
  return {tf - w, tf + w};
}

// Parameters of the line inside the rectangle {0 <= u <= len, |v| <= r} spanned by base p->q.
Interval line_slab(Point2 a, Point2 d, Point2 p, Point2 q, double r) {
  const Point2 axis = q - p;
  const double len = norm(axis);
  const Point2 u = (1.0 / len) * axis;
  const Point2 n{-u.y, u.x};
  const double u0 = dot(a - p, u), du = dot(d, u);
  const double v0 = dot(a - p, n), dv = dot(d, n);
  Interval out{-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  // lo_bound <= x0 + dx*t <= hi_bound
  auto clip = [&out](double x0, double dx, double lo_bound, double hi_bound) {
    if (dx == 0.0) {
      if (x0 < lo_bound || x0 > hi_bound) out = {};
      return;
    }
    double t1 = (lo_bound - x0) / dx;
    double t2 = (hi_bound - x0) / dx;
    if (t1 > t2) std::swap(t1, t2);
    out.lo = std::max(out.lo, t1);
    out.hi = std::min(out.hi, t2);
  };
  clip(u0, du, 0.0, len);
  if (out.empty()) return {};
  clip(v0, dv, -r, r);
  if (out.empty()) return {};
  return out;
}

}  // namespace

std::optional<OverlapInterval> capsule_segment_interval(const Capsule& c, const Segment2& s,
                                                        double eps) {
  const Point2 d = s.direction();
  const bool seg_degenerate = dot(d, d) == 0.0;
  if (seg_degenerate) {
    if (c.distance_to_base(s.a) <= c.radius + eps) return OverlapInterval{0.0, 1.0, true, true};
    return std::nullopt;
  }

  Interval line;
  if (const auto* p = std::get_if<Point2>(&c.base)) {
    line = line_disk(s.a, d, *p, c.radius);
  } else {
    const auto& b = std::get<Segment2>(c.base);
    if (b.a == b.b) {
      line = line_disk(s.a, d, b.a, c.radius);
    } else {
      line.merge(line_disk(s.a, d, b.a, c.radius));
      line.merge(line_disk(s.a, d, b.b, c.radius));
      line.merge(line_slab(s.a, d, b.a, b.b, c.radius));
    }
  }

  if (!line.empty() && line.hi >= 0.0 && line.lo <= 1.0) {
    OverlapInterval out;
    out.t0 = std::max(0.0, line.lo);
    out.t1 = std::min(1.0, line.hi);
    out.clipped_lo = line.lo <= 0.0;
    out.clipped_hi = line.hi >= 1.0;
    return out;
  }

  // Near-miss within the tolerance: report the touching point.
  double dmin = 0.0;
  double tnear = 0.0;
  if (const auto* p = std::get_if<Point2>(&c.base)) {
    const auto n = point_segment_distance(*p, s);
    dmin = n.distance;
    tnear = n.t;
  } else {
    const auto sp = segment_segment_distance(s, std::get<Segment2>(c.base));
    dmin = sp.distance;
    tnear = sp.t_first;
  }
  if (dmin <= c.radius + eps) {
    return OverlapInterval{tnear, tnear, tnear <= 0.0, tnear >= 1.0};
  }
  return std::nullopt;
}

SegmentOverlap capsule_segment_intersection(const Capsule& c, const Segment2& s, double eps) {
  const auto iv = capsule_segment_interval(c, s, eps);
  if (!iv) return EmptyOverlap{};
  const double len = s.length();
  if ((iv->t1 - iv->t0) * len <= eps) {
    const double tm = 0.5 * (iv->t0 + iv->t1);
    return SinglePoint{s.at(tm), tm};
  }
  return Subsegment{{s.at(iv->t0), s.at(iv->t1)}, iv->t0, iv->t1};
}

std::vector<Point2> circle_segment_intersection(Point2 center, double r, const Segment2& s,
                                                double eps) {
  std::vector<Point2> out;
  const Point2 d = s.direction();
  const double len2 = dot(d, d);
  if (len2 == 0.0) {
    if (std::abs(dist(center, s.a) - r) <= eps) out.push_back(s.a);
    return out;
  }
  const double len = std::sqrt(len2);
  const Point2 f = s.a - center;
  const double tf = -dot(f, d) / len2;
  const double h = std::abs(cross(d, f)) / len;
  std::array<double, 2> ts{};
  std::size_t count = 0;
  if (h > r + eps) return out;
  if (h >= r - eps) {
    ts[count++] = tf;
  } else {
    const double w = std::sqrt(r * r - h * h) / len;
    ts[count++] = tf - w;
    ts[count++] = tf + w;
  }
  const double tslack = eps / len;
  for (std::size_t i = 0; i < count; ++i) {
    double t = ts[i];
    if (t < -tslack || t > 1.0 + tslack) continue;
    t = std::clamp(t, 0.0, 1.0);
    const Point2 p = s.at(t);
    const bool dup = std::any_of(out.begin(), out.end(),
                                 [&](Point2 q) { return dist(p, q) <= eps; });
    if (!dup) out.push_back(p);
  }
  return out;
}

void BoundingBox::add(Point2 p) {
  if (empty) {
    lo = hi = p;
    empty = false;
    return;
  }
  lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
  hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
}

}  // namespace ucon
