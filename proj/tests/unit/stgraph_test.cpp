#include <gtest/gtest.h>

#include <random>

#include "random_ra.hpp"
#include "rectfp/stgraph.hpp"

namespace rectfp {
namespace {

const RoomId r1{1}, r2{2}, r3{3}, r4{4}, r5{5};

std::vector<Edge> edges(std::initializer_list<Edge> list) { return list; }

StGraph hst_of(const char* text) { return build_hst(pad_boundary(parse_matrix(text))); }
StGraph vst_of(const char* text) { return build_vst(pad_boundary(parse_matrix(text))); }

TEST(BuildHst, SingleRoom) {
  const auto g = hst_of("1");
  EXPECT_EQ(g.edges(), edges({{kWest, r1}, {r1, kEast}}));
  EXPECT_EQ(g.vertices().size(), 3u);
}

TEST(BuildHst, TwoByTwo) {
  const auto g = hst_of("1 2\n3 4");
  EXPECT_EQ(g.edges(), edges({{kWest, r1}, {kWest, r3}, {r1, r2}, {r2, kEast}, {r3, r4}, {r4, kEast}}));
}

TEST(BuildHst, Pinwheel) {
  const auto g = hst_of("1 1 2\n4 5 2\n4 3 3");
  EXPECT_TRUE(g.has_edge(r4, r5));
  EXPECT_TRUE(g.has_edge(r5, r2));
  EXPECT_FALSE(g.has_edge(r1, r3));
}

TEST(BuildVst, SingleRoom) { EXPECT_EQ(vst_of("1").edges(), edges({{kNorth, r1}, {r1, kSouth}})); }

TEST(BuildVst, TwoByTwo) {
  const auto g = vst_of("1 2\n3 4");
  EXPECT_EQ(g.edges(), edges({{kNorth, r1}, {kNorth, r2}, {r1, r3}, {r2, r4}, {r3, kSouth}, {r4, kSouth}}));
}

TEST(PruneSinkEdges, Examples) {
  const auto single = prune_sink_edges(vst_of("1"));
  EXPECT_EQ(single.edges(), edges({{kNorth, r1}}));
  EXPECT_EQ(single.terminal_rooms(), std::set<RoomId>{r1});
  EXPECT_FALSE(single.conserves_at(r1));

  const auto grid = prune_sink_edges(vst_of("1 2\n3 4"));
  EXPECT_EQ(grid.edges(), edges({{kNorth, r1}, {kNorth, r2}, {r1, r3}, {r2, r4}}));
  EXPECT_TRUE(grid.conserves_at(r1));
  EXPECT_FALSE(grid.conserves_at(r3));
  EXPECT_EQ(prune_sink_edges(grid), grid);
}

TEST(StGraph, RejectsUnknownVertices) {
  EXPECT_THROW(StGraph(Orientation::Horizontal, {r1}, {{kWest, r2}}), std::invalid_argument);
  EXPECT_THROW(StGraph(Orientation::Horizontal, {r1}, {{kNorth, r1}}), std::invalid_argument);
}

TEST(StGraph, CanonicalOrderAndDedup) {
  const StGraph g(Orientation::Horizontal, {r2, r1}, {{r2, kEast}, {r1, r2}, {kWest, r1}, {r1, r2}});
  EXPECT_EQ(g.edges(), edges({{kWest, r1}, {r1, r2}, {r2, kEast}}));
  EXPECT_EQ(to_text(g), "W -> 1\n1 -> 2\n2 -> E\n");
}

TEST(CheckStProperties, DetectsCycle) {
  const StGraph g(Orientation::Horizontal, {r1, r2}, {{kWest, r1}, {r1, r2}, {r2, r1}, {r2, kEast}});
  EXPECT_FALSE(check_st_properties(g).empty());
  EXPECT_TRUE(topological_order(g).empty());
}

// Properties over random arrangements: both graphs have n + 2 vertices, are
// acyclic st-graphs, every room lies on a source-sink path, and the two graphs
// split the arrangement's adjacencies between them with no overlap.
TEST(StGraphProperties, RandomArrangements) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const auto em = testing::random_arrangement(rng);
    const auto pm = pad_boundary(em);
    const auto hst = build_hst(pm);
    const auto vst = build_vst(pm);
    const std::size_t n = em.room_count();

    for (const StGraph* g : {&hst, &vst}) {
      EXPECT_EQ(g->vertices().size(), n + 2);
      EXPECT_TRUE(check_st_properties(*g).empty()) << to_text(em);
      EXPECT_EQ(topological_order(*g).size(), n + 2);
      const auto pruned = prune_sink_edges(*g);
      EXPECT_TRUE(check_st_properties(pruned).empty());
      EXPECT_EQ(prune_sink_edges(pruned), pruned);
      for (const Edge& e : pruned.edges()) EXPECT_NE(e.to, g->sink());
    }

    std::set<std::pair<RoomId, RoomId>> combined;
    for (const StGraph* g : {&hst, &vst}) {
      for (const Edge& e : g->edges()) {
        if (!e.from.is_room() || !e.to.is_room()) continue;
        const auto key = std::minmax(e.from, e.to);
        EXPECT_TRUE(combined.insert({key.first, key.second}).second) << "pair in both graphs";
      }
    }
    EXPECT_EQ(combined, adjacency_graph(em).edges) << to_text(em);
  }
}

// A row scan of the transposed arrangement is a column scan of the original.
TEST(StGraphProperties, TransposeSwapsScans) {
  std::mt19937_64 rng(29);
  auto rename = [](RoomId v) {
    if (v == kWest) return kNorth;
    if (v == kEast) return kSouth;
    return v;
  };
  for (int i = 0; i < 100; ++i) {
    const auto em = testing::random_arrangement(rng);
    const auto vst = build_vst(pad_boundary(em));
    const auto hst_t = build_hst(pad_boundary(transpose(em)));
    std::vector<Edge> mapped;
    for (const Edge& e : hst_t.edges()) mapped.push_back({rename(e.from), rename(e.to)});
    const StGraph as_vst(Orientation::Vertical, hst_t.rooms(), mapped);
    EXPECT_EQ(as_vst, vst);
  }
}

// Corner cells of the padding never touch a room, so both schemes give the
// same graphs.
TEST(StGraphProperties, CornerSchemeIsIrrelevant) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    const auto em = testing::random_arrangement(rng);
    const auto a = pad_boundary(em, CornerScheme::Pinwheel);
    const auto b = pad_boundary(em, CornerScheme::CounterPinwheel);
    EXPECT_EQ(build_hst(a), build_hst(b));
    EXPECT_EQ(build_vst(a), build_vst(b));
  }
}

TEST(InOutEdges, Indices) {
  const auto g = hst_of("1 2\n3 4");
  for (std::size_t i : g.in_edges(r2)) EXPECT_EQ(g.edges()[i].to, r2);
  EXPECT_EQ(g.out_edges(kWest).size(), 2u);
  EXPECT_EQ(g.in_edges(kEast).size(), 2u);
}

}  // namespace
}  // namespace rectfp
