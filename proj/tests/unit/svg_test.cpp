#include <gtest/gtest.h>

#include <regex>

#include "rectfp/fixtures.hpp"
#include "rectfp/pipeline.hpp"
#include "rectfp/svg.hpp"

namespace rectfp {
namespace {

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

TEST(EmitSvg, SingleRoom) {
  const auto fp = place_rooms(parse_matrix("1"), {{RoomId{1}, 5}}, {{RoomId{1}, 5}});
  const std::string svg = emit_svg(fp);
  EXPECT_EQ(occurrences(svg, "<rect "), 2u);
  EXPECT_EQ(occurrences(svg, "<text "), 1u);
  EXPECT_NE(svg.find(">1 (5×5)<"), std::string::npos);
}

TEST(EmitSvg, GridFixture) {
  const auto result = solve(*find_fixture("grid2x2"));
  ASSERT_TRUE(result.floorplan);
  const std::string svg = emit_svg(*result.floorplan);
  EXPECT_EQ(occurrences(svg, "<rect "), 5u);
  EXPECT_EQ(occurrences(svg, "<text "), 4u);
  EXPECT_EQ(occurrences(emit_svg(*result.floorplan, {false}), "<text "), 0u);
}

TEST(EmitSvg, Deterministic) {
  for (const Project& p : fixture_catalog()) {
    const auto a = solve(p);
    const auto b = solve(p);
    EXPECT_EQ(emit_svg(*a.floorplan), emit_svg(*b.floorplan)) << p.name;
  }
}

// Every room rect is the floorplan rect times the declared scale.
TEST(EmitSvg, SingleScaleFactor) {
  const auto result = solve(*find_fixture("palladio"));
  const SvgOptions options{true, 12.5, 4};
  const std::string svg = emit_svg(*result.floorplan, options);
  const std::regex room(R"re(data-room="(\d+)" x="([-\d.]+)" y="([-\d.]+)" width="([-\d.]+)" height="([-\d.]+)")re");
  std::size_t seen = 0;
  for (std::sregex_iterator it(svg.begin(), svg.end(), room), end; it != end; ++it, ++seen) {
    const Rect& r = result.floorplan->rooms().at(RoomId{std::stoi((*it)[1])});
    EXPECT_NEAR(std::stod((*it)[2]), r.x * options.scale, 1e-3);
    EXPECT_NEAR(std::stod((*it)[3]), r.y * options.scale, 1e-3);
    EXPECT_NEAR(std::stod((*it)[4]), r.w * options.scale, 1e-3);
    EXPECT_NEAR(std::stod((*it)[5]), r.h * options.scale, 1e-3);
  }
  EXPECT_EQ(seen, result.floorplan->rooms().size());
}

TEST(FormatNumber, TrimsZeros) {
  EXPECT_EQ(format_number(5.0), "5");
  EXPECT_EQ(format_number(2.5), "2.5");
  EXPECT_EQ(format_number(1.0 / 3.0, 2), "0.33");
  EXPECT_EQ(format_number(-0.00001), "0");
  EXPECT_EQ(format_number(-1.25), "-1.25");
}

}  // namespace
}  // namespace rectfp
