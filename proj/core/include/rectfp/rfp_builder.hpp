#pragma once

#include <map>
#include <string>
#include <vector>

#include "rectfp/dimensioner.hpp"
#include "rectfp/encoded_matrix.hpp"

namespace rectfp {

/// Axis-aligned rectangle; origin top-left, y grows downward.
struct Rect {
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;
  double h = 0.0;

  double right() const { return x + w; }
  double bottom() const { return y + h; }
  double area() const { return w * h; }
  bool operator==(const Rect&) const = default;
};

/// Placed rooms inside an envelope anchored at the origin.
class Floorplan {
 public:
  /// Throws std::invalid_argument for an empty room set or non-positive sizes.
  Floorplan(std::map<RoomId, Rect> rooms, Rect envelope, EncodedMatrix source);

  const std::map<RoomId, Rect>& rooms() const { return rooms_; }
  const Rect& envelope() const { return envelope_; }
  const EncodedMatrix& source() const { return source_; }

  /// Copy with one room replaced; used to probe the verifiers.
  Floorplan with_room(RoomId id, Rect r) const;

  bool operator==(const Floorplan&) const = default;

 private:
  std::map<RoomId, Rect> rooms_;
  Rect envelope_;
  EncodedMatrix source_;
};

/// Places rooms in column-major order of their top-left cell. Each room sits
/// at the right edge of the room left of its top-left cell and the bottom
/// edge of the room above it (0 at the envelope).
Floorplan place_rooms(const EncodedMatrix& em, const DimensionMap& widths, const DimensionMap& heights);

struct TilingCheck {
  bool ok = true;
  std::vector<std::string> messages;
};

/// Interior overlaps (x-sorted sweep), rooms outside the envelope and area
/// mismatch against the envelope.
TilingCheck verify_tiling(const Floorplan& fp, double tol = 1e-6);

struct AdjacencyResult {
  RoomId a;
  RoomId b;
  Contact contact = Contact::None;
  double shared_length = 0.0;
  double door_required = 0.0;
  bool aligned = false;  // shared wall sits where the arrangement puts it
  bool ok = false;
};

struct AdjacencyCheck {
  std::vector<AdjacencyResult> pairs;
  bool geometry_preserved = true;
  std::vector<std::string> messages;

  bool ok() const;
};

/// Checks every pair adjacent in the arrangement shares a wall of at least
/// its door width on the expected side, and that no other pair touches
/// along a segment of positive length.
AdjacencyCheck verify_adjacency(const Floorplan& fp, const EncodedMatrix& em, const DoorSpec& door,
                                double tol = 1e-6);

struct VerificationReport {
  TilingCheck tiling;
  AdjacencyCheck adjacency;

  bool ok() const { return tiling.ok && adjacency.ok(); }
};

VerificationReport verify(const Floorplan& fp, const DoorSpec& door, double tol = 1e-6);

/// Interior points where exactly `k` room corners coincide.
std::vector<std::pair<double, double>> corner_junctions(const Floorplan& fp, std::size_t k, double tol = 1e-6);

}  // namespace rectfp
