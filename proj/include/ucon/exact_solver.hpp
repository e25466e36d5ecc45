#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "ucon/connectivity.hpp"
#include "ucon/geometry.hpp"
#include "ucon/instance.hpp"

namespace ucon {

/// A fixed point or a segment, tagged with its region index in the instance.
struct Element {
  enum class Kind { Fixed, Seg };
  Kind kind = Kind::Fixed;
  Point2 p;
  Segment2 s;
  std::size_t index = 0;

  static Element fixed(Point2 p, std::size_t index) { return {Kind::Fixed, p, {p, p}, index}; }
  static Element seg(Segment2 s, std::size_t index) { return {Kind::Seg, s.a, s, index}; }
  bool is_seg() const { return kind == Kind::Seg; }
};

using SupportSequence = std::vector<Element>;

std::vector<std::size_t> sequence_key(const SupportSequence& seq);

// Shapes of the exact-reach set S. CaseB is the full circle of radius Λ around p;
// CaseC the half of the circle around `extremity` on the side of `direction`;
// CaseD the two outward half circles at both extremities of the base.
struct CaseA {};
struct CaseB {
  Point2 p;
};
struct CaseC {
  Point2 extremity;
  Point2 direction;  // unit, pointing away from the subsegment interior
};
struct CaseD {
  Point2 ext1;
  Point2 ext2;
};
/// Whole capsule boundary; the start of a sequence beginning with a segment.
struct FullBoundary {};

using SCase = std::variant<CaseA, CaseB, CaseC, CaseD, FullBoundary>;

struct ReachState {
  Capsule capsule;  // U_i(Λ)
  SCase s_case;
  SegmentOverlap overlap;  // classification of the base against the tolerance
};

ReachState initial_reach(const Element& first, double lambda);

/// Next reach state, or nullopt when the capsule misses `next`.
/// Overlaps no longer than `point_tol` are classified as single points.
std::optional<ReachState> propagate_reach(const ReachState& state, const Element& next,
                                          double lambda, double eps, double point_tol);
inline std::optional<ReachState> propagate_reach(const ReachState& state, const Element& next,
                                                 double lambda, double eps) {
  return propagate_reach(state, next, lambda, eps, eps);
}

/// Whether q lies on the S descriptor of `state` within tol.
bool on_exact_reach(const ReachState& state, Point2 q, double tol);

/// `count` evenly spread points of the S descriptor (empty for CaseA).
std::vector<Point2> sample_exact_reach(const ReachState& state, int count);

/// True iff every step of the sequence has a non-empty overlap at Λ.
bool reach_feasible(const SupportSequence& seq, double lambda);

struct LambdaBracket {
  double lo = 0.0;
  double hi = 0.0;  // always feasible
  int iterations = 0;
  std::vector<std::pair<double, bool>> trace;  // every (Λ, feasible) evaluation
};

/// Smallest feasible Λ to within delta. Throws PrecisionExhausted after max_iter halvings.
LambdaBracket min_lambda(const SupportSequence& seq, double delta, int max_iter = 200);

enum class Outcome { Beta, AlphaFail, GammaFail, DeltaFail, EmptyFail };
const char* outcome_name(Outcome o);

struct CriticalPath {
  SupportSequence sequence;
  double lambda = 0.0;
  std::vector<Point2> points;  // filled for Beta only
  Outcome outcome = Outcome::EmptyFail;
};

CriticalPath critical_path(const SupportSequence& seq, double delta, double eps);

enum class PointType { Type1, Type2, Type3, NotLocallyOptimal };
const char* point_type_name(PointType t);

/// `eps` is used both as a distance tolerance for extremities and as the angular
/// tolerance (cosine) for perpendicularity.
PointType classify_point_type(Point2 p, const Segment2& seg,
                              const std::vector<Point2>& incident_longest, double eps);

/// Canonical support sequences (first index < last), ordered by interior length then indices.
std::vector<SupportSequence> enumerate_sequences(const std::vector<Element>& elements);

struct ExactOptions {
  double delta = 0.0;  // <= 0: 1e-9 x bounding-box diameter
  double eps = 0.0;    // <= 0: same default
  std::size_t node_budget = 200000;
  unsigned threads = 1;
};

struct LevelRecord {
  std::vector<std::size_t> sequence;
  double lambda = 0.0;
  std::vector<Point2> points;
};

struct ExactResult {
  Selection selection;
  SpanningSolution solution;
  std::vector<LevelRecord> levels;  // critical paths fixed on the way to the reported leaf
  std::size_t nodes = 0;
  std::size_t sequences_evaluated = 0;
};

/// Instances of fixed points, segments and point pairs.
/// Throws std::invalid_argument for other regions, BudgetExceeded, PrecisionExhausted.
ExactResult solve_exact(const Instance& inst, const ExactOptions& opts = {});

}  // namespace ucon
