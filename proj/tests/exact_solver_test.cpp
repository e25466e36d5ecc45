#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ucon/errors.hpp"
#include "ucon/exact_solver.hpp"

using namespace ucon;

namespace {
constexpr double kEps = 1e-9;

Element F(double x, double y, std::size_t i) { return Element::fixed({x, y}, i); }
Element S(double ax, double ay, double bx, double by, std::size_t i) {
  return Element::seg({{ax, ay}, {bx, by}}, i);
}

// Minimum over x in [0, 2] of the longer edge of (0,0)-(x,1)-(0,3), by dense sampling.
double grid_min_max_edge() {
  double best = 1e9;
  for (int i = 0; i <= 200000; ++i) {
    const Point2 p{2.0 * i / 200000, 1.0};
    best = std::min(best, std::max(dist({0, 0}, p), dist(p, {0, 3})));
  }
  return best;
}
}  // namespace

TEST(PropagateReach, TangentFixedStartGivesCaseB) {
  auto st = initial_reach(F(0, 0, 0), 2.0);
  auto next = propagate_reach(st, S(2, -1, 2, 1, 1), 2.0, kEps);
  ASSERT_TRUE(next);
  ASSERT_TRUE(std::holds_alternative<SinglePoint>(next->overlap));
  EXPECT_NEAR(std::get<SinglePoint>(next->overlap).p.x, 2.0, 1e-12);
  EXPECT_NEAR(std::get<SinglePoint>(next->overlap).p.y, 0.0, 1e-12);
  ASSERT_TRUE(std::holds_alternative<CaseB>(next->s_case));
  EXPECT_NEAR(std::get<CaseB>(next->s_case).p.x, 2.0, 1e-12);
}

TEST(PropagateReach, SegmentEndpointIsNotAReachBoundary) {
  // (sqrt(3), 1) is the only overlap end at distance exactly 2 from the origin.
  auto next = propagate_reach(initial_reach(F(0, 0, 0), 2.0), S(0, 1, 2, 1, 1), 2.0, kEps);
  ASSERT_TRUE(next);
  const auto& sub = std::get<Subsegment>(next->overlap);
  EXPECT_NEAR(sub.s.a.x, 0.0, 1e-12);
  EXPECT_NEAR(sub.s.b.x, std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(sub.s.b.y, 1.0, 1e-12);
  ASSERT_TRUE(std::holds_alternative<CaseC>(next->s_case));
  const auto& c = std::get<CaseC>(next->s_case);
  EXPECT_NEAR(c.extremity.x, 1.7320508075688772, 1e-12);
  EXPECT_NEAR(c.direction.x, 1.0, 1e-12);
  EXPECT_NEAR(c.direction.y, 0.0, 1e-12);
}

TEST(PropagateReach, EmptyOverlapStaysEmpty) {
  EXPECT_FALSE(propagate_reach(initial_reach(F(0, 0, 0), 1.0), S(5, 0, 5, 1, 1), 1.0, kEps));
}

TEST(PropagateReach, BothEndsTightGiveCaseD) {
  auto next = propagate_reach(initial_reach(F(0, 0, 0), 2.0), S(-3, 1, 3, 1, 1), 2.0, kEps);
  ASSERT_TRUE(next);
  EXPECT_TRUE(std::holds_alternative<CaseD>(next->s_case));
  auto caps = propagate_reach(*next, S(-5, 2.5, 5, 2.5, 2), 2.0, kEps);
  ASSERT_TRUE(caps);
  EXPECT_TRUE(std::holds_alternative<CaseD>(caps->s_case));
  auto inside = propagate_reach(*next, S(-1, 2.5, 1, 2.5, 2), 2.0, kEps);
  ASSERT_TRUE(inside);
  EXPECT_TRUE(std::holds_alternative<CaseA>(inside->s_case));
}

TEST(MinLambda, Examples) {
  auto b = min_lambda({F(0, 0, 0), F(3, 0, 1)}, 1e-9);
  EXPECT_NEAR(b.hi, 3.0, 1e-9);
  b = min_lambda({F(0, 0, 0), S(2, -1, 2, 1, 1), F(4, 0, 2)}, 1e-9);
  EXPECT_NEAR(b.hi, 2.0, 1e-9);
  b = min_lambda({F(0, 0, 0), S(0, 1, 2, 1, 1), F(0, 3, 2)}, 1e-9);
  EXPECT_NEAR(b.hi, 2.0, 1e-9);
  EXPECT_NEAR(grid_min_max_edge(), 2.0, 1e-9);
}

TEST(MinLambda, BracketIsTightAndTraceMonotone) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0, 10);
  for (int trial = 0; trial < 50; ++trial) {
    SupportSequence seq{F(u(rng), u(rng), 0), S(u(rng), u(rng), u(rng), u(rng), 1),
                        S(u(rng), u(rng), u(rng), u(rng), 2), F(u(rng), u(rng), 3)};
    auto b = min_lambda(seq, 1e-9);
    EXPECT_LE(b.hi - b.lo, 1e-9);
    EXPECT_TRUE(reach_feasible(seq, b.hi));
    for (const auto& [l1, f1] : b.trace)
      for (const auto& [l2, f2] : b.trace)
        if (f1 && !f2) EXPECT_GT(l1, l2);
  }
}

TEST(MinLambda, ImpossiblePrecisionIsReported) {
  EXPECT_THROW(min_lambda({F(0, 0, 0), S(2, -1, 2, 1, 1), F(4, 0.5, 2)}, 1e-300), PrecisionExhausted);
}

TEST(CriticalPath, SymmetricMidpoint) {
  auto cp = critical_path({F(0, 0, 0), S(2, -1, 2, 1, 1), F(4, 0, 2)}, 1e-12, kEps);
  ASSERT_EQ(cp.outcome, Outcome::Beta);
  EXPECT_NEAR(cp.lambda, 2.0, 1e-9);
  ASSERT_EQ(cp.points.size(), 3u);
  EXPECT_NEAR(cp.points[1].x, 2.0, 1e-9);
  EXPECT_NEAR(cp.points[1].y, 0.0, 1e-9);
}

TEST(CriticalPath, TouchOutsideExactReachIsGamma) {
  auto cp = critical_path({F(0, 0, 0), S(0, 1, 2, 1, 1), F(0, 3, 2)}, 1e-12, kEps);
  EXPECT_EQ(cp.outcome, Outcome::GammaFail);
  EXPECT_NEAR(cp.lambda, 2.0, 1e-9);
  EXPECT_TRUE(cp.points.empty());
}

TEST(CriticalPath, TwoFixedPoints) {
  auto cp = critical_path({F(0, 0, 0), F(5, 0, 1)}, 1e-12, kEps);
  ASSERT_EQ(cp.outcome, Outcome::Beta);
  EXPECT_NEAR(cp.lambda, 5.0, 1e-12);
  EXPECT_EQ(cp.points[0], (Point2{0, 0}));
  EXPECT_EQ(cp.points[1], (Point2{5, 0}));
}

TEST(CriticalPath, CrossingInteriorIsAlpha) {
  // The far point is reached with slack once the segment is reached.
  auto cp = critical_path({F(0, 0, 0), S(3, -1, 3, 1, 1), F(4, 0, 2)}, 1e-12, kEps);
  EXPECT_EQ(cp.outcome, Outcome::AlphaFail);
}

TEST(CriticalPath, ParallelTouchIsDelta) {
  auto cp = critical_path({S(0, 0, 4, 0, 0), S(1, 2, 3, 2, 1)}, 1e-12, kEps);
  EXPECT_EQ(cp.outcome, Outcome::DeltaFail);
  EXPECT_NEAR(cp.lambda, 2.0, 1e-9);
}

TEST(CriticalPath, BetaInvariantsOnRandomSequences) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(0, 10);
  int betas = 0;
  for (int trial = 0; trial < 400; ++trial) {
    SupportSequence seq{F(u(rng), u(rng), 0)};
    const int k = 1 + trial % 3;
    for (int j = 0; j < k; ++j) seq.push_back(S(u(rng), u(rng), u(rng), u(rng), 1 + j));
    seq.push_back(F(u(rng), u(rng), 10));
    auto cp = critical_path(seq, 1e-12, kEps);
    if (cp.outcome != Outcome::Beta) continue;
    ++betas;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
      EXPECT_NEAR(dist(cp.points[i], cp.points[i + 1]), cp.lambda, 1e-7);
    for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
      EXPECT_LE(point_segment_distance(cp.points[i], seq[i].s).distance, 1e-9);
      auto t = classify_point_type(cp.points[i], seq[i].s, {cp.points[i - 1], cp.points[i + 1]}, 1e-4);
      EXPECT_NE(t, PointType::NotLocallyOptimal);
    }
    // The same path derived from the other end.
    SupportSequence rev(seq.rbegin(), seq.rend());
    auto back = critical_path(rev, 1e-12, kEps);
    ASSERT_EQ(back.outcome, Outcome::Beta);
    for (std::size_t i = 0; i < seq.size(); ++i) {
      EXPECT_NEAR(back.points[seq.size() - 1 - i].x, cp.points[i].x, 1e-5);
      EXPECT_NEAR(back.points[seq.size() - 1 - i].y, cp.points[i].y, 1e-5);
    }
  }
  EXPECT_GT(betas, 20);
}

TEST(ClassifyPointType, Examples) {
  EXPECT_EQ(classify_point_type({0, 0}, {{0, 0}, {1, 0}}, {{-2, 0}}, 1e-9), PointType::Type1);
  EXPECT_EQ(classify_point_type({1, 0}, {{0, 0}, {2, 0}}, {{1, 3}}, 1e-9), PointType::Type2);
  EXPECT_EQ(classify_point_type({1, 0}, {{0, 0}, {2, 0}}, {{0, 2}, {2, 2}}, 1e-9), PointType::Type3);
  EXPECT_EQ(classify_point_type({1, 0}, {{0, 0}, {2, 0}}, {{3, 2}}, 1e-9), PointType::NotLocallyOptimal);
  EXPECT_THROW(classify_point_type({1, 0}, {{0, 0}, {2, 0}}, {}, 1e-9), std::invalid_argument);
}

TEST(EnumerateSequences, Counts) {
  EXPECT_EQ(enumerate_sequences({F(0, 0, 0), F(1, 0, 1)}).size(), 1u);
  auto seqs = enumerate_sequences({F(0, 0, 0), F(1, 0, 1), S(0, 1, 1, 1, 2)});
  ASSERT_EQ(seqs.size(), 4u);
  EXPECT_EQ(sequence_key(seqs[0]), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(sequence_key(seqs[3]), (std::vector<std::size_t>{0, 2, 1}));
  EXPECT_EQ(enumerate_sequences({S(0, 0, 1, 0, 0), S(0, 1, 1, 1, 1)}).size(), 1u);
  // 3 fixed + 2 segments: C(5,2) + 2*C(4,2) + 2*C(3,2).
  EXPECT_EQ(enumerate_sequences({F(0, 0, 0), F(1, 0, 1), F(2, 0, 2), S(0, 1, 1, 1, 3),
                                 S(0, 2, 1, 2, 4)})
                .size(),
            10u + 12u + 6u);
}

TEST(SolveExact, Examples) {
  Instance a{{FixedPoint{{0, 0}}, FixedPoint{{4, 0}}, SegmentRegion{{{2, -1}, {2, 1}}}}, {}};
  auto r = solve_exact(a);
  EXPECT_NEAR(r.solution.alpha, 1.0, 1e-6);
  EXPECT_NEAR(r.selection.points[2].x, 2.0, 1e-6);
  EXPECT_NEAR(r.selection.points[2].y, 0.0, 1e-6);

  Instance b{{FixedPoint{{0, 0}}, SegmentRegion{{{3, -1}, {3, 1}}}}, {}};
  r = solve_exact(b);
  EXPECT_NEAR(r.solution.bottleneck, 3.0, 1e-6);
  EXPECT_NEAR(r.selection.points[1].y, 0.0, 1e-6);

  Instance c{{FixedPoint{{0, 0}}, FixedPoint{{10, 0}}, SegmentRegion{{{5, -4}, {5, 4}}}}, {}};
  r = solve_exact(c);
  EXPECT_NEAR(r.solution.bottleneck, 5.0, 1e-6);
  EXPECT_NEAR(r.selection.points[2].y, 0.0, 1e-6);
}

TEST(SolveExact, SmallestCriticalPathIsNotAlwaysOptimal) {
  // Greedy on the smallest critical path pins the tilted segment first and ends at ~5.099.
  Instance inst{{FixedPoint{{0, 0}}, FixedPoint{{10, 0}}, SegmentRegion{{{5, -1}, {5, 1}}},
                 SegmentRegion{{{5.5, -1}, {5.6, 1}}}},
                {}};
  auto r = solve_exact(inst);
  EXPECT_NEAR(r.solution.bottleneck, 5.0, 1e-6);
}

TEST(SolveExact, PointsOnlyIsMst) {
  Instance inst{{FixedPoint{{0, 0}}, FixedPoint{{1, 0}}, FixedPoint{{5, 0}}}, {}};
  EXPECT_DOUBLE_EQ(solve_exact(inst).solution.bottleneck, 4.0);
}

TEST(SolveExact, PairsAreBranched) {
  Instance inst{{PointPair{{0, 0}, {0, 1}}, PointPair{{0, 2}, {0, 3}}, SegmentRegion{{{5, 0}, {5, 5}}}}, {}};
  auto r = solve_exact(inst);
  EXPECT_NEAR(r.solution.bottleneck, 5.0, 1e-6);
  EXPECT_EQ(r.selection.points[0], (Point2{0, 1}));
}

TEST(SolveExact, RejectsDisks) {
  Instance inst{{FixedPoint{{0, 0}}, Disk{{3, 0}}}, {}};
  EXPECT_THROW(solve_exact(inst), std::invalid_argument);
}

TEST(SolveExact, NodeBudget) {
  Instance inst{{FixedPoint{{0, 0}}, FixedPoint{{10, 0}}, SegmentRegion{{{5, -1}, {5, 1}}},
                 SegmentRegion{{{5.5, -1}, {5.6, 1}}}},
                {}};
  ExactOptions o;
  o.node_budget = 1;
  EXPECT_THROW(solve_exact(inst, o), BudgetExceeded);
}
