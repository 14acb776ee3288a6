#include "rectfp/stgraph.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <stdexcept>

namespace rectfp {

std::string to_string(Orientation o) { return o == Orientation::Horizontal ? "horizontal" : "vertical"; }

namespace {

// Source sorts first, sink last, rooms by index in between.
int rank(RoomId v, Orientation o) {
  const RoomId source = o == Orientation::Horizontal ? kWest : kNorth;
  if (v == source) return 0;
  if (v.is_boundary()) return std::numeric_limits<int>::max();
  return v.value;
}

void canonicalize(std::vector<Edge>& edges, Orientation o) {
  auto key = [o](const Edge& e) { return std::pair{rank(e.from, o), rank(e.to, o)}; };
  std::sort(edges.begin(), edges.end(), [&](const Edge& a, const Edge& b) { return key(a) < key(b); });
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

StGraph scan(const PaddedMatrix& pm, Orientation o) {
  const bool rows = o == Orientation::Horizontal;
  const RoomId drop_a = rows ? kNorth : kWest;
  const RoomId drop_b = rows ? kSouth : kEast;

  std::vector<Edge> edges;
  const std::size_t lines = rows ? pm.rows() : pm.cols();
  const std::size_t length = rows ? pm.cols() : pm.rows();
  for (std::size_t line = 0; line < lines; ++line) {
    for (std::size_t k = 0; k + 1 < length; ++k) {
      const RoomId a = rows ? pm.at(line, k) : pm.at(k, line);
      const RoomId b = rows ? pm.at(line, k + 1) : pm.at(k + 1, line);
      if (a == b) continue;
      if (a == drop_a || a == drop_b || b == drop_a || b == drop_b) continue;
      edges.push_back({a, b});
    }
  }

  std::vector<RoomId> rooms;
  for (std::size_t i = 1; i <= pm.room_count(); ++i) rooms.emplace_back(static_cast<int>(i));
  return StGraph(o, std::move(rooms), std::move(edges));
}

}  // namespace

StGraph::StGraph(Orientation orientation, std::vector<RoomId> rooms, std::vector<Edge> edges)
    : orientation_(orientation), rooms_(std::move(rooms)), edges_(std::move(edges)) {
  std::sort(rooms_.begin(), rooms_.end());
  for (const Edge& e : edges_) {
    auto known = [&](RoomId v) {
      return v == source() || v == sink() || std::binary_search(rooms_.begin(), rooms_.end(), v);
    };
    if (!known(e.from) || !known(e.to)) {
      throw std::invalid_argument("edge " + to_string(e.from) + " -> " + to_string(e.to) +
                                  " references a vertex outside the " + to_string(orientation) + " graph");
    }
  }
  canonicalize(edges_, orientation_);
}

std::vector<RoomId> StGraph::vertices() const {
  std::vector<RoomId> out;
  out.reserve(rooms_.size() + 2);
  out.push_back(source());
  out.insert(out.end(), rooms_.begin(), rooms_.end());
  out.push_back(sink());
  return out;
}

bool StGraph::has_edge(RoomId from, RoomId to) const {
  return std::find(edges_.begin(), edges_.end(), Edge{from, to}) != edges_.end();
}

std::vector<std::size_t> StGraph::in_edges(RoomId v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].to == v) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> StGraph::out_edges(RoomId v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].from == v) out.push_back(i);
  }
  return out;
}

StGraph build_hst(const PaddedMatrix& pm) { return scan(pm, Orientation::Horizontal); }

StGraph build_vst(const PaddedMatrix& pm) { return scan(pm, Orientation::Vertical); }

StGraph prune_sink_edges(const StGraph& g) {
  StGraph out = g;
  out.edges_.clear();
  for (const Edge& e : g.edges_) {
    if (e.to == g.sink()) {
      out.terminal_rooms_.insert(e.from);
    } else {
      out.edges_.push_back(e);
    }
  }
  out.sink_pruned_ = true;
  return out;
}

std::vector<RoomId> topological_order(const StGraph& g) {
  const auto vertices = g.vertices();
  std::map<RoomId, std::size_t> indegree;
  std::map<RoomId, std::vector<RoomId>> succ;
  for (RoomId v : vertices) indegree[v] = 0;
  for (const Edge& e : g.edges()) {
    ++indegree[e.to];
    succ[e.from].push_back(e.to);
  }
  std::queue<RoomId> ready;
  for (RoomId v : vertices) {
    if (indegree[v] == 0) ready.push(v);
  }
  std::vector<RoomId> order;
  while (!ready.empty()) {
    RoomId v = ready.front();
    ready.pop();
    order.push_back(v);
    for (RoomId w : succ[v]) {
      if (--indegree[w] == 0) ready.push(w);
    }
  }
  if (order.size() != vertices.size()) return {};
  return order;
}

std::vector<std::string> check_st_properties(const StGraph& g) {
  std::vector<std::string> problems;
  if (!g.in_edges(g.source()).empty()) problems.push_back("source has incoming edges");
  if (!g.out_edges(g.sink()).empty()) problems.push_back("sink has outgoing edges");
  if (topological_order(g).empty()) problems.push_back("graph contains a directed cycle");

  auto reach = [&](RoomId start, bool forward) {
    std::set<RoomId> seen{start};
    std::vector<RoomId> stack{start};
    while (!stack.empty()) {
      RoomId v = stack.back();
      stack.pop_back();
      for (const Edge& e : g.edges()) {
        RoomId from = forward ? e.from : e.to;
        RoomId to = forward ? e.to : e.from;
        if (from == v && seen.insert(to).second) stack.push_back(to);
      }
    }
    return seen;
  };
  const auto from_source = reach(g.source(), true);
  const auto to_sink = reach(g.sink(), false);
  for (RoomId r : g.rooms()) {
    if (!from_source.count(r)) {
      problems.push_back("room " + to_string(r) + " is unreachable from the source");
    } else if (!g.sink_pruned() && !to_sink.count(r)) {
      problems.push_back("room " + to_string(r) + " cannot reach the sink");
    }
  }
  return problems;
}

std::string to_text(const StGraph& g) {
  std::string out;
  for (const Edge& e : g.edges()) out += to_string(e.from) + " -> " + to_string(e.to) + "\n";
  return out;
}

}  // namespace rectfp
