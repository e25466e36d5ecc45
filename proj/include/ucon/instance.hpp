#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ucon/geometry.hpp"

namespace ucon {

struct FixedPoint {
  Point2 p;
};

struct PointPair {
  Point2 a;
  Point2 b;
};

struct SegmentRegion {
  Segment2 s;
};

/// Closed disk. Unit disks are disks with radius 1.
struct Disk {
  Point2 center;
  double radius = 1.0;
  bool is_unit() const { return radius == 1.0; }
};

/// Closed axis-aligned square [corner.x, corner.x+side] x [corner.y, corner.y+side].
struct Square {
  Point2 corner;
  double side = 1.0;
};

using Region = std::variant<FixedPoint, PointPair, SegmentRegion, Disk, Square>;

/// Short lowercase tag ("point", "pair", "segment", "disk", "square").
const char* region_kind(const Region& r);

/// Throws std::invalid_argument if a region violates its invariants.
void check_region(const Region& r);

struct Instance {
  std::vector<Region> regions;
  std::optional<std::string> name;

  std::size_t size() const { return regions.size(); }
  BoundingBox bounds() const;
  /// Scale-relative default resolution: 1e-9 x bounding-box diameter (1e-9 when degenerate).
  double default_epsilon() const;
};

/// Throws std::invalid_argument unless the instance has >= 2 valid, finite regions.
void check_instance(const Instance& inst);

struct Selection {
  std::vector<Point2> points;
};

struct Violation {
  std::size_t index = 0;
  double excess = 0.0;
};

/// Distance from p to region r (0 when p is a member).
double distance_to_region(const Region& r, Point2 p);

/// Empty iff every point lies in its region within eps.
/// Throws std::invalid_argument on a length mismatch.
std::vector<Violation> validate_selection(const Instance& inst, const Selection& sel, double eps);

/// Point of `r` nearest to `p`; pairs break ties toward `a`.
Point2 containment_project(const Region& r, Point2 p);

/// Finite sample of a region; see the README for the lattice conventions.
std::vector<Point2> discretize(const Region& r, int g);

void add_to_bounds(BoundingBox& box, const Region& r);

}  // namespace ucon
