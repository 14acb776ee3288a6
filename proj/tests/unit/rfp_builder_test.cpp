#include <gtest/gtest.h>

#include "rectfp/fixtures.hpp"
#include "rectfp/pipeline.hpp"
#include "rectfp/rfp_builder.hpp"

namespace rectfp {
namespace {

const RoomId r1{1}, r2{2}, r3{3}, r4{4};

Floorplan grid_of_fives() {
  const auto em = parse_matrix("1 2\n3 4");
  DimensionMap five{{r1, 5}, {r2, 5}, {r3, 5}, {r4, 5}};
  return place_rooms(em, five, five);
}

TEST(PlaceRooms, SingleRoom) {
  const auto fp = place_rooms(parse_matrix("1"), {{r1, 5}}, {{r1, 5}});
  EXPECT_EQ(fp.rooms().at(r1), (Rect{0, 0, 5, 5}));
  EXPECT_EQ(fp.envelope(), (Rect{0, 0, 5, 5}));
}

TEST(PlaceRooms, Grid) {
  const auto fp = grid_of_fives();
  EXPECT_EQ(fp.rooms().at(r1), (Rect{0, 0, 5, 5}));
  EXPECT_EQ(fp.rooms().at(r2), (Rect{5, 0, 5, 5}));
  EXPECT_EQ(fp.rooms().at(r3), (Rect{0, 5, 5, 5}));
  EXPECT_EQ(fp.rooms().at(r4), (Rect{5, 5, 5, 5}));
  EXPECT_EQ(fp.envelope(), (Rect{0, 0, 10, 10}));
}

TEST(Floorplan, RejectsEmptyAndDegenerate) {
  const auto em = parse_matrix("1");
  EXPECT_THROW(Floorplan({}, Rect{0, 0, 1, 1}, em), std::invalid_argument);
  EXPECT_THROW(Floorplan({{r1, Rect{0, 0, 0, 1}}}, Rect{0, 0, 1, 1}, em), std::invalid_argument);
}

TEST(VerifyTiling, GridIsClean) {
  const auto check = verify_tiling(grid_of_fives());
  EXPECT_TRUE(check.ok);
  EXPECT_TRUE(check.messages.empty());
}

TEST(VerifyTiling, WiderRoomIsCaught) {
  const auto fp = grid_of_fives();
  const auto bad = fp.with_room(r1, Rect{0, 0, 6, 5});
  const auto check = verify_tiling(bad);
  EXPECT_FALSE(check.ok);
  bool overlap = false;
  for (const auto& m : check.messages) overlap = overlap || m.find("overlap") != std::string::npos;
  EXPECT_TRUE(overlap);

  const auto out = verify_tiling(fp.with_room(r2, Rect{5, 0, 6, 5}));
  EXPECT_FALSE(out.ok);
}

TEST(VerifyAdjacency, GridWallsAreFive) {
  const auto fp = grid_of_fives();
  const auto check = verify_adjacency(fp, fp.source(), DoorSpec{});
  EXPECT_TRUE(check.ok());
  ASSERT_EQ(check.pairs.size(), 4u);
  for (const auto& p : check.pairs) {
    EXPECT_NEAR(p.shared_length, 5.0, 1e-12);
    EXPECT_TRUE(p.aligned);
  }
}

TEST(VerifyAdjacency, OverrideLargerThanWall) {
  const auto fp = grid_of_fives();
  DoorSpec door;
  door.set_override(r1, r2, 6.0);
  const auto check = verify_adjacency(fp, fp.source(), door);
  EXPECT_FALSE(check.ok());
  EXPECT_TRUE(check.geometry_preserved);
  ASSERT_EQ(check.messages.size(), 1u);
  EXPECT_NE(check.messages[0].find("below the door width"), std::string::npos);
}

TEST(VerifyAdjacency, NewContactIsReported) {
  // Widening room 3 slides it under room 2: a wall the arrangement lacks.
  const auto fp = grid_of_fives();
  const Floorplan moved({{r1, Rect{0, 0, 5, 5}}, {r2, Rect{5, 0, 5, 5}}, {r3, Rect{0, 5, 6, 5}}, {r4, Rect{6, 5, 4, 5}}},
                        fp.envelope(), fp.source());
  EXPECT_TRUE(verify_tiling(moved).ok);
  const auto check = verify_adjacency(moved, moved.source(), DoorSpec{});
  EXPECT_FALSE(check.geometry_preserved);
  EXPECT_FALSE(check.ok());
}

TEST(Verify, PinwheelCenterDiagonalsStayApart) {
  const auto p = *find_fixture("pinwheel");
  const auto result = solve(p);
  ASSERT_EQ(result.status, SolveStatus::Solved);
  const auto& rooms = result.floorplan->rooms();
  for (auto [a, b] : {std::pair{RoomId{1}, RoomId{3}}, std::pair{RoomId{2}, RoomId{4}}}) {
    const Rect& p1 = rooms.at(a);
    const Rect& p2 = rooms.at(b);
    const double ox = std::min(p1.right(), p2.right()) - std::max(p1.x, p2.x);
    const double oy = std::min(p1.bottom(), p2.bottom()) - std::max(p1.y, p2.y);
    EXPECT_LE(std::max(0.0, std::min(ox, oy)), 1e-9);
    EXPECT_FALSE(adjacency_graph(p.matrix).adjacent(a, b));
  }
  EXPECT_TRUE(result.verification->ok());
}

TEST(CornerJunctions, GridHasOneFourWayPoint) {
  const auto points = corner_junctions(grid_of_fives(), 4);
  ASSERT_EQ(points.size(), 1u);
  EXPECT_NEAR(points[0].first, 5.0, 1e-12);
  EXPECT_NEAR(points[0].second, 5.0, 1e-12);
}

TEST(CornerJunctions, PlainPinwheelHasOnlyTJunctions) {
  const auto result = solve(*find_fixture("pinwheel"));
  ASSERT_TRUE(result.floorplan);
  EXPECT_TRUE(corner_junctions(*result.floorplan, 4).empty());
  EXPECT_EQ(corner_junctions(*result.floorplan, 2).size(), 4u);
}

TEST(PlaceRooms, AreaIdentityOnFixtures) {
  for (const Project& p : fixture_catalog()) {
    const auto result = solve(p);
    ASSERT_EQ(result.status, SolveStatus::Solved) << p.name;
    double area = 0.0;
    for (const auto& [id, r] : result.floorplan->rooms()) area += r.area();
    EXPECT_NEAR(area, result.floorplan->envelope().area(), 1e-6 * area) << p.name;
  }
}

}  // namespace
}  // namespace rectfp
