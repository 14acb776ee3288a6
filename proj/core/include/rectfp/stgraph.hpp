#pragma once

#include <set>
#include <string>
#include <vector>

#include "rectfp/encoded_matrix.hpp"

namespace rectfp {

enum class Orientation {
  /// Left-to-right adjacencies, source WEST, sink EAST. Throughflow is height.
  Horizontal,
  /// Top-to-bottom adjacencies, source NORTH, sink SOUTH. Throughflow is width.
  Vertical,
};

std::string to_string(Orientation o);

struct Edge {
  RoomId from;
  RoomId to;
  auto operator<=>(const Edge&) const = default;
};

/// Directed source/sink adjacency graph of an arrangement.
///
/// Edges are deduplicated and kept in canonical order (source first, rooms
/// ascending, sink last, compared on `from` then `to`). After sink pruning the
/// rooms that used to feed the sink are listed in `terminal_rooms`; flow
/// conservation is not asserted there.
class StGraph {
 public:
  StGraph(Orientation orientation, std::vector<RoomId> rooms, std::vector<Edge> edges);

  Orientation orientation() const { return orientation_; }
  RoomId source() const { return orientation_ == Orientation::Horizontal ? kWest : kNorth; }
  RoomId sink() const { return orientation_ == Orientation::Horizontal ? kEast : kSouth; }

  /// Source, rooms ascending, sink.
  std::vector<RoomId> vertices() const;
  const std::vector<RoomId>& rooms() const { return rooms_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool sink_pruned() const { return sink_pruned_; }
  const std::set<RoomId>& terminal_rooms() const { return terminal_rooms_; }
  bool conserves_at(RoomId room) const { return room.is_room() && !terminal_rooms_.count(room); }

  bool has_edge(RoomId from, RoomId to) const;
  std::vector<std::size_t> in_edges(RoomId v) const;
  std::vector<std::size_t> out_edges(RoomId v) const;

  bool operator==(const StGraph&) const = default;

 private:
  friend StGraph prune_sink_edges(const StGraph&);

  Orientation orientation_;
  std::vector<RoomId> rooms_;
  std::vector<Edge> edges_;
  bool sink_pruned_ = false;
  std::set<RoomId> terminal_rooms_;
};

/// Row scan of the padded matrix; NORTH and SOUTH are dropped.
StGraph build_hst(const PaddedMatrix& pm);

/// Column scan of the padded matrix; WEST and EAST are dropped.
StGraph build_vst(const PaddedMatrix& pm);

/// Removes every edge entering the sink. Idempotent.
StGraph prune_sink_edges(const StGraph& g);

/// Problems with the st-graph properties: source in-edges, sink out-edges,
/// directed cycles, rooms off every source-to-sink path. Empty when sound.
/// For pruned graphs a room only needs to be reachable from the source.
std::vector<std::string> check_st_properties(const StGraph& g);

/// Vertices in a topological order, or empty if the graph has a cycle.
std::vector<RoomId> topological_order(const StGraph& g);

/// One `u -> v` line per edge in canonical order.
std::string to_text(const StGraph& g);

}  // namespace rectfp
