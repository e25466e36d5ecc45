#pragma once

#include <cmath>
#include <optional>
#include <variant>
#include <vector>

namespace ucon {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
  friend Point2 operator*(Point2 p, double s) { return {s * p.x, s * p.y}; }
  friend bool operator==(Point2 a, Point2 b) = default;
};

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Euclidean distance.
inline double dist(Point2 p, Point2 q) { return std::hypot(p.x - q.x, p.y - q.y); }

struct Segment2 {
  Point2 a;
  Point2 b;

  Point2 at(double t) const { return a + t * (b - a); }
  Point2 direction() const { return b - a; }
  double length() const { return dist(a, b); }
  bool is_degenerate(double eps = 0.0) const { return length() <= eps; }
  friend bool operator==(const Segment2&, const Segment2&) = default;
};

struct NearestPoint {
  double distance = 0.0;
  Point2 point;
  double t = 0.0;  // parameter of `point` along the segment
};

NearestPoint point_segment_distance(Point2 p, const Segment2& s);

/// Closest pair between two segments. `t_first`/`t_second` are the
/// parameters of the witnesses along `s` and `u`.
struct SegmentPair {
  double distance = 0.0;
  double t_first = 0.0;
  double t_second = 0.0;
};

SegmentPair segment_segment_distance(const Segment2& s, const Segment2& u);

/// Largest distance between any point of `s` and any point of `u`
/// (attained at a pair of endpoints).
double segment_segment_max_distance(const Segment2& s, const Segment2& u);

/// Base of a capsule: a single point or a segment.
using CapsuleBase = std::variant<Point2, Segment2>;

/// Minkowski sum of a base with a closed disk of radius `radius`.
struct Capsule {
  CapsuleBase base;
  double radius = 0.0;

  double distance_to_base(Point2 p) const;
  Point2 nearest_on_base(Point2 p) const;
  bool contains(Point2 p, double eps) const { return distance_to_base(p) <= radius + eps; }
};

struct EmptyOverlap {};
struct SinglePoint {
  Point2 p;
  double t = 0.0;
};
struct Subsegment {
  Segment2 s;
  double t0 = 0.0;
  double t1 = 0.0;
};

using SegmentOverlap = std::variant<EmptyOverlap, SinglePoint, Subsegment>;

inline bool is_empty(const SegmentOverlap& o) { return std::holds_alternative<EmptyOverlap>(o); }

/// Interval of `s` lying inside the capsule, before classification.
/// Returns nullopt when the segment misses the capsule by more than eps.
struct OverlapInterval {
  double t0 = 0.0;
  double t1 = 0.0;
  bool clipped_lo = false;  // t0 was clamped to the segment's start
  bool clipped_hi = false;  // t1 was clamped to the segment's end
};

std::optional<OverlapInterval> capsule_segment_interval(const Capsule& c, const Segment2& s,
                                                        double eps);

/// {t in [0,1] : distance(s(t), c.base) <= c.radius}, classified by its length against eps.
SegmentOverlap capsule_segment_intersection(const Capsule& c, const Segment2& s, double eps);

/// Points of `s` at distance exactly `r` from `center`, deduplicated within eps.
std::vector<Point2> circle_segment_intersection(Point2 center, double r, const Segment2& s,
                                                double eps);

struct BoundingBox {
  Point2 lo{0.0, 0.0};
  Point2 hi{0.0, 0.0};
  bool empty = true;

  void add(Point2 p);
  double diameter() const { return empty ? 0.0 : dist(lo, hi); }
};

}  // namespace ucon
