#include "rectfp/rfp_builder.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rectfp {

namespace {

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(10);
  out << v;
  return out.str();
}

double overlap(double a0, double a1, double b0, double b1) { return std::min(a1, b1) - std::max(a0, b0); }

}  // namespace

Floorplan::Floorplan(std::map<RoomId, Rect> rooms, Rect envelope, EncodedMatrix source)
    : rooms_(std::move(rooms)), envelope_(envelope), source_(std::move(source)) {
  if (rooms_.empty()) throw std::invalid_argument("floorplan needs at least one room");
  for (const auto& [id, r] : rooms_) {
    if (!(r.w > 0.0 && r.h > 0.0)) throw std::invalid_argument("room " + to_string(id) + " has a non-positive size");
  }
  if (!(envelope_.w > 0.0 && envelope_.h > 0.0)) throw std::invalid_argument("envelope has a non-positive size");
}

Floorplan Floorplan::with_room(RoomId id, Rect r) const {
  auto rooms = rooms_;
  rooms.at(id) = r;
  return Floorplan(std::move(rooms), envelope_, source_);
}

Floorplan place_rooms(const EncodedMatrix& em, const DimensionMap& widths, const DimensionMap& heights) {
  const auto extents = room_extents(em);
  std::vector<RoomExtent> order;
  order.reserve(extents.size());
  for (const auto& [id, e] : extents) order.push_back(e);
  std::sort(order.begin(), order.end(), [](const RoomExtent& a, const RoomExtent& b) {
    return std::pair{a.left, a.top} < std::pair{b.left, b.top};
  });

  std::map<RoomId, Rect> rooms;
  auto placed = [&](RoomId id) -> const Rect& {
    auto it = rooms.find(id);
    if (it == rooms.end()) throw std::logic_error("room " + to_string(id) + " referenced before placement");
    return it->second;
  };

  for (const RoomExtent& e : order) {
    Rect r;
    r.w = widths.at(e.id);
    r.h = heights.at(e.id);
    r.x = e.left == 0 ? 0.0 : placed(em.at(e.top, e.left - 1)).right();
    r.y = e.top == 0 ? 0.0 : placed(em.at(e.top - 1, e.left)).bottom();
    rooms.emplace(e.id, r);
  }

  Rect envelope;
  for (std::size_t c = 0; c < em.cols(); ++c) {
    if (c == 0 || em.at(0, c) != em.at(0, c - 1)) envelope.w += widths.at(em.at(0, c));
  }
  for (std::size_t r = 0; r < em.rows(); ++r) {
    if (r == 0 || em.at(r, 0) != em.at(r - 1, 0)) envelope.h += heights.at(em.at(r, 0));
  }
  return Floorplan(std::move(rooms), envelope, em);
}

TilingCheck verify_tiling(const Floorplan& fp, double tol) {
  TilingCheck out;
  auto fail = [&](std::string msg) {
    out.ok = false;
    out.messages.push_back(std::move(msg));
  };

  const Rect& env = fp.envelope();
  double area = 0.0;
  std::vector<std::pair<RoomId, Rect>> sorted(fp.rooms().begin(), fp.rooms().end());
  for (const auto& [id, r] : sorted) {
    area += r.area();
    if (r.x < env.x - tol || r.y < env.y - tol || r.right() > env.right() + tol || r.bottom() > env.bottom() + tol) {
      fail("room " + to_string(id) + " protrudes outside the envelope");
    }
  }
  if (std::abs(area - env.area()) > tol * std::max(1.0, env.area())) {
    fail("room areas sum to " + fmt(area) + " but the envelope area is " + fmt(env.area()));
  }

  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.second.x < b.second.x; });
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const Rect& a = sorted[i].second;
    for (std::size_t j = i + 1; j < sorted.size() && sorted[j].second.x < a.right() - tol; ++j) {
      const Rect& b = sorted[j].second;
      if (overlap(a.x, a.right(), b.x, b.right()) > tol && overlap(a.y, a.bottom(), b.y, b.bottom()) > tol) {
        fail("rooms " + to_string(sorted[i].first) + " and " + to_string(sorted[j].first) + " overlap");
      }
    }
  }
  return out;
}

bool AdjacencyCheck::ok() const {
  if (!geometry_preserved) return false;
  return std::all_of(pairs.begin(), pairs.end(), [](const AdjacencyResult& p) { return p.ok; });
}

AdjacencyCheck verify_adjacency(const Floorplan& fp, const EncodedMatrix& em, const DoorSpec& door, double tol) {
  AdjacencyCheck out;
  const auto graph = adjacency_graph(em);
  const auto extents = room_extents(em);
  const auto& rooms = fp.rooms();

  for (const auto& [a, b] : graph.edges) {
    AdjacencyResult res{a, b};
    RoomId first = a, second = b;
    res.contact = contact(extents.at(a), extents.at(b));
    if (res.contact == Contact::None) {
      first = b;
      second = a;
      res.contact = contact(extents.at(b), extents.at(a));
    }
    const Rect& p = rooms.at(first);
    const Rect& q = rooms.at(second);
    if (res.contact == Contact::LeftRight) {
      res.aligned = std::abs(p.right() - q.x) <= tol;
      res.shared_length = std::max(0.0, overlap(p.y, p.bottom(), q.y, q.bottom()));
    } else {
      res.aligned = std::abs(p.bottom() - q.y) <= tol;
      res.shared_length = std::max(0.0, overlap(p.x, p.right(), q.x, q.right()));
    }
    if (!res.aligned) res.shared_length = 0.0;
    res.door_required = door.width_for(a, b);
    res.ok = res.aligned && res.shared_length > tol && res.shared_length >= res.door_required - tol;

    if (!res.aligned) {
      out.geometry_preserved = false;
      out.messages.push_back("rooms " + to_string(first) + " and " + to_string(second) +
                             " are no longer side by side as in the arrangement");
    } else if (res.shared_length <= tol) {
      out.messages.push_back("rooms " + to_string(a) + " and " + to_string(b) + " lost their shared wall");
    } else if (!res.ok) {
      out.messages.push_back("wall between rooms " + to_string(a) + " and " + to_string(b) + " is " +
                             fmt(res.shared_length) + ", below the door width " + fmt(res.door_required));
    }
    out.pairs.push_back(res);
  }

  // Pairs the arrangement keeps apart must not share a wall either.
  for (auto i = rooms.begin(); i != rooms.end(); ++i) {
    for (auto j = std::next(i); j != rooms.end(); ++j) {
      if (graph.adjacent(i->first, j->first)) continue;
      const Rect& p = i->second;
      const Rect& q = j->second;
      const bool vertical_touch = (std::abs(p.right() - q.x) <= tol || std::abs(q.right() - p.x) <= tol) &&
                                  overlap(p.y, p.bottom(), q.y, q.bottom()) > tol;
      const bool horizontal_touch = (std::abs(p.bottom() - q.y) <= tol || std::abs(q.bottom() - p.y) <= tol) &&
                                    overlap(p.x, p.right(), q.x, q.right()) > tol;
      if (vertical_touch || horizontal_touch) {
        out.geometry_preserved = false;
        out.messages.push_back("rooms " + to_string(i->first) + " and " + to_string(j->first) +
                               " share a wall the arrangement does not have");
      }
    }
  }
  return out;
}

VerificationReport verify(const Floorplan& fp, const DoorSpec& door, double tol) {
  return {verify_tiling(fp, tol), verify_adjacency(fp, fp.source(), door, tol)};
}

std::vector<std::pair<double, double>> corner_junctions(const Floorplan& fp, std::size_t k, double tol) {
  std::vector<std::pair<double, double>> corners;
  for (const auto& [id, r] : fp.rooms()) {
    corners.emplace_back(r.x, r.y);
    corners.emplace_back(r.right(), r.y);
    corners.emplace_back(r.x, r.bottom());
    corners.emplace_back(r.right(), r.bottom());
  }
  std::sort(corners.begin(), corners.end());

  const Rect& env = fp.envelope();
  std::vector<std::pair<double, double>> out;
  std::vector<bool> used(corners.size(), false);
  for (std::size_t i = 0; i < corners.size(); ++i) {
    if (used[i]) continue;
    std::size_t count = 0;
    for (std::size_t j = i; j < corners.size() && corners[j].first <= corners[i].first + tol; ++j) {
      if (!used[j] && std::abs(corners[j].second - corners[i].second) <= tol) {
        used[j] = true;
        ++count;
      }
    }
    const auto [x, y] = corners[i];
    const bool interior = x > env.x + tol && x < env.right() - tol && y > env.y + tol && y < env.bottom() - tol;
    if (interior && count == k) out.push_back(corners[i]);
  }
  return out;
}

}  // namespace rectfp
