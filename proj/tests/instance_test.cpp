#include <gtest/gtest.h>

#include <random>

#include "ucon/instance.hpp"
#include "ucon/io.hpp"

using namespace ucon;

TEST(ValidateSelection, Examples) {
  Instance inst{{Disk{{0, 0}}, PointPair{{0, 0}, {0, 1}}, SegmentRegion{{{0, 0}, {2, 0}}}}, {}};
  auto v = validate_selection(inst, {{{0.5, 0}, {0, 0.5}, {1, 0}}}, 1e-9);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].index, 1u);
  EXPECT_DOUBLE_EQ(v[0].excess, 0.5);
}

TEST(ValidateSelection, LengthMismatchIsStructural) {
  Instance inst{{FixedPoint{{0, 0}}, FixedPoint{{1, 0}}}, {}};
  EXPECT_THROW(validate_selection(inst, {{{0, 0}}}, 1e-9), std::invalid_argument);
}

TEST(ContainmentProject, Examples) {
  EXPECT_EQ(containment_project(Disk{{0, 0}}, {3, 0}), (Point2{1, 0}));
  EXPECT_EQ(containment_project(SegmentRegion{{{0, 0}, {2, 0}}}, {1, 5}), (Point2{1, 0}));
  EXPECT_EQ(containment_project(PointPair{{0, 0}, {0, 1}}, {0, 0.9}), (Point2{0, 1}));
  EXPECT_EQ(containment_project(PointPair{{0, 0}, {0, 1}}, {0, 0.5}), (Point2{0, 0}));
  EXPECT_EQ(containment_project(Square{{0, 0}, 1}, {2, 0.5}), (Point2{1, 0.5}));
}

TEST(ContainmentProject, MembersAreFixed) {
  std::mt19937_64 rng(3);
  std::vector<Region> regions{Disk{{1, 1}, 2.0}, Square{{0, 0}, 3}, SegmentRegion{{{0, 0}, {4, 1}}}};
  for (const auto& r : regions)
    for (const auto& p : discretize(r, 7)) {
      const Point2 q = containment_project(r, p);
      EXPECT_NEAR(dist(p, q), 0.0, 1e-12);
    }
}

TEST(Discretize, Examples) {
  auto seg = discretize(SegmentRegion{{{0, 0}, {1, 0}}}, 2);
  ASSERT_EQ(seg.size(), 3u);
  EXPECT_EQ(seg[1], (Point2{0.5, 0}));
  EXPECT_EQ(seg[2], (Point2{1, 0}));
  EXPECT_EQ(discretize(PointPair{{0, 0}, {0, 1}}, 100).size(), 2u);
  auto fixed = discretize(FixedPoint{{3, 3}}, 5);
  ASSERT_EQ(fixed.size(), 1u);
  EXPECT_EQ(fixed[0], (Point2{3, 3}));
}

TEST(Discretize, DiskLatticeContainsCenterAndStaysInside) {
  Disk d{{2, -1}, 1.5};
  auto pts = discretize(d, 10);
  EXPECT_NE(std::find(pts.begin(), pts.end(), d.center), pts.end());
  Instance one{{d, d}, {}};
  for (const auto& p : pts) EXPECT_LE(distance_to_region(d, p), 1e-12);
  EXPECT_EQ(discretize(Square{{0, 0}, 1}, 3).size(), 16u);
}

TEST(Discretize, SegmentRefinementKeepsCoarsePoints) {
  SegmentRegion s{{{0, 0}, {3, 7}}};
  auto coarse = discretize(s, 8);
  auto fine = discretize(s, 16);
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    EXPECT_NEAR(coarse[i].x, fine[2 * i].x, 1e-12);
    EXPECT_NEAR(coarse[i].y, fine[2 * i].y, 1e-12);
  }
}

TEST(InstanceJson, RoundTripIsBitExact) {
  Instance inst{{FixedPoint{{0.1, 1.0 / 3}}, PointPair{{0, 0}, {0, 1}},
                 SegmentRegion{{{1e-17, 2.5}, {3.141592653589793, -7}}}, Disk{{4, 4}, 0.7},
                 Square{{-1, -1}, 1}},
                std::string("sample")};
  const auto text = dump(instance_to_json(inst));
  const auto back = instance_from_json(nlohmann::json::parse(text));
  EXPECT_EQ(dump(instance_to_json(back)), text);
  EXPECT_EQ(std::get<FixedPoint>(back.regions[0]).p.y, 1.0 / 3);
  EXPECT_EQ(back.name, inst.name);
}

TEST(InstanceJson, DiskRadiusDefaultsToOne) {
  auto j = nlohmann::json::parse(
      R"({"regions":[{"type":"disk","center":[0,0]},{"type":"point","p":[1,2]}]})");
  auto inst = instance_from_json(j);
  EXPECT_EQ(std::get<Disk>(inst.regions[0]).radius, 1.0);
}

TEST(InstanceJson, Rejections) {
  EXPECT_THROW(instance_from_json(nlohmann::json::parse(R"({"regions":[{"type":"point","p":[0,0]}]})")),
               std::invalid_argument);
  EXPECT_THROW(instance_from_json(nlohmann::json::parse(
                   R"({"regions":[{"type":"blob"},{"type":"point","p":[0,0]}]})")),
               IoError);
  EXPECT_THROW(instance_from_json(nlohmann::json::parse(
                   R"({"regions":[{"type":"pair","a":[0,0],"b":[0,0]},{"type":"point","p":[0,0]}]})")),
               std::invalid_argument);
}
