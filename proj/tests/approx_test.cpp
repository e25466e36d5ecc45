#include <gtest/gtest.h>

#include <cmath>

#include "ucon/approx.hpp"
#include "ucon/connectivity.hpp"
#include "ucon/errors.hpp"

using namespace ucon;

namespace {
Instance disks(std::initializer_list<Point2> cs) {
  Instance inst;
  for (auto c : cs) inst.regions.push_back(Disk{c, 1.0});
  return inst;
}
}  // namespace

TEST(CinchUp, TangentPairMeets) {
  auto r = cinch_up(disks({{0, 0}, {2, 0}}));
  EXPECT_NEAR(r.alpha, 0.0, 1e-12);
  EXPECT_TRUE(r.warnings.empty());
}

TEST(CinchUp, ThreeTangentInARow) {
  auto inst = disks({{0, 0}, {2, 0}, {4, 0}});
  EXPECT_NEAR(bcu_center_heuristic(inst).alpha, 1.0, 1e-12);
  auto r = cinch_up(inst);
  EXPECT_NEAR(r.alpha, 0.5, 1e-12);
  EXPECT_TRUE(validate_selection(inst, r.selection, 1e-12).empty());
}

TEST(CinchUp, StarLeavesPulledIn) {
  auto inst = disks({{0, 0}, {3, 0}, {-3, 0}, {0, 3}});
  EXPECT_NEAR(bcu_center_heuristic(inst).alpha, 1.5, 1e-12);
  EXPECT_NEAR(cinch_up(inst).alpha, 1.0, 1e-12);
}

TEST(CinchUp, OverlapWarns) {
  auto r = cinch_up(disks({{0, 0}, {1, 0}}));
  EXPECT_EQ(r.warnings.size(), 1u);
}

TEST(CinchUp, RejectsNonDisks) {
  Instance inst{{FixedPoint{{0, 0}}, Disk{{3, 0}, 1.0}}};
  EXPECT_THROW(cinch_up(inst), std::invalid_argument);
}

TEST(CenterHeuristic, CertificateOnlyForUnitDisks) {
  EXPECT_EQ(bcu_center_heuristic(disks({{0, 0}, {5, 0}})).certificates.size(), 1u);
  Instance big{{Disk{{0, 0}, 2.0}, Disk{{5, 0}, 1.0}}};
  EXPECT_TRUE(bcu_center_heuristic(big).certificates.empty());
}

TEST(WcuCenter, TwoDisks) {
  auto r = wcu_center_heuristic(disks({{0, 0}, {6, 0}}));
  EXPECT_NEAR(r.alpha, 4.0, 1e-12);
  EXPECT_EQ(r.certificates.size(), 2u);
}

TEST(WcuCenter, SingleDisk) {
  auto r = wcu_center_heuristic(disks({{0, 0}}));
  EXPECT_NEAR(r.alpha, 1.0, 1e-12);
  EXPECT_EQ(r.certificates.size(), 1u);
}

TEST(WcuCenter, RejectsNonUnit) {
  Instance inst{{Disk{{0, 0}, 2.0}, Disk{{6, 0}, 1.0}}};
  EXPECT_THROW(wcu_center_heuristic(inst), std::invalid_argument);
}

TEST(Flower, RimRatioNearSqrtOfLSquaredPlusFour) {
  FlowerParams p;
  p.spacing = 2.01;
  p.eps = 0.0009;
  p.with_chains = false;
  const auto f = flower_instance(p);
  EXPECT_EQ(f.instance.size(), f.rim_count);
  const double centre = bcu_center_heuristic(f.instance).alpha;
  EXPECT_NEAR(centre, 2.01 / 2, 1e-9);
  const double lstar = mbst(f.lstar.points).alpha;
  EXPECT_NEAR(lstar / centre, std::sqrt(2.01 * 2.01 + 4) / 2.01, 1e-3);
  EXPECT_TRUE(validate_selection(f.instance, f.lstar, 1e-9).empty());
}

TEST(Flower, RimGeometry) {
  FlowerParams p;
  p.n = 20;
  p.spacing = 3.0;
  p.eps = 0.05;
  p.with_chains = false;
  const auto f = flower_instance(p);
  ASSERT_EQ(f.rim_count, 40u);
  for (std::size_t i = 0; i < 40; ++i) {
    const auto& a = std::get<Disk>(f.instance.regions[i]).center;
    const auto& b = std::get<Disk>(f.instance.regions[(i + 1) % 40]).center;
    EXPECT_NEAR(dist(a, b), 3.0, 1e-9);
  }
  EXPECT_FALSE(f.sag_ok);
}

TEST(Flower, FullConstructionKeepsClearance) {
  FlowerParams p;
  p.spacing = 3.0;
  p.eps = 0.09;
  p.big_radius = 105.0;
  const auto f = flower_instance(p);
  EXPECT_GT(f.min_clearance, 3.0);
  EXPECT_GT(f.instance.size(), f.rim_count);
  EXPECT_TRUE(validate_selection(f.instance, f.lstar, 1e-9).empty());
  // Consecutive spoke centres sit exactly eps apart.
  const auto& c0 = std::get<Disk>(f.instance.regions[f.rim_count]).center;
  const auto& c1 = std::get<Disk>(f.instance.regions[f.rim_count + 1]).center;
  EXPECT_NEAR(dist(c0, c1), 0.09, 1e-9);
}

TEST(Flower, ChainsTooCloseRejected) {
  FlowerParams p;
  p.spacing = 3.0;
  p.eps = 0.05;
  p.big_radius = 105.0;
  EXPECT_THROW(flower_instance(p), std::invalid_argument);
}

TEST(Flower, RegionCap) {
  FlowerParams p;
  p.spacing = 3.0;
  p.eps = 0.09;
  p.big_radius = 105.0;
  p.max_regions = 1000;
  EXPECT_THROW(flower_instance(p), BudgetExceeded);
}

TEST(Flower, BadParameters) {
  FlowerParams p;
  p.spacing = 2.0;
  p.eps = 0.01;
  EXPECT_THROW(flower_instance(p), std::invalid_argument);
  p.spacing = 3.0;
  p.eps = 0.2;
  EXPECT_THROW(flower_instance(p), std::invalid_argument);
}
