#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rectfp {

/// Identifier of a room in an arrangement. Rooms are numbered 1..n; the four
/// envelope sides use reserved negative values so they never collide.
struct RoomId {
  int value = 0;

  constexpr RoomId() = default;
  constexpr explicit RoomId(int v) : value(v) {}

  constexpr bool is_boundary() const { return value < 0; }
  constexpr bool is_room() const { return value > 0; }

  constexpr auto operator<=>(const RoomId&) const = default;
};

inline constexpr RoomId kNorth{-1};
inline constexpr RoomId kSouth{-2};
inline constexpr RoomId kEast{-3};
inline constexpr RoomId kWest{-4};

/// "N", "S", "E", "W" for boundary ids, the decimal index otherwise.
std::string to_string(RoomId id);

/// Inverse of to_string; throws std::invalid_argument.
RoomId room_id_from_string(std::string_view text);

struct Cell {
  std::size_t row = 0;
  std::size_t col = 0;
  auto operator<=>(const Cell&) const = default;
};

/// A rule broken by a candidate matrix, with the cells that break it.
struct Violation {
  std::string rule;
  std::string message;
  std::vector<Cell> cells;
};

/// Raw row-major integer grid. Carries no validity guarantee; this is what the
/// parsers produce and what validate() inspects.
class Grid {
 public:
  Grid() = default;
  Grid(std::size_t rows, std::size_t cols, std::vector<int> cells);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int at(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }
  const std::vector<int>& cells() const { return cells_; }

  bool operator==(const Grid&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<int> cells_;
};

/// Malformed text (ragged rows, non-integers, empty input).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A grid that parsed but breaks one or more arrangement rules.
class MatrixError : public std::runtime_error {
 public:
  explicit MatrixError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Parses whitespace-separated integers. Rows end at a newline, ';' or '/'.
Grid parse_grid(std::string_view text);

/// Empty iff every cell holds an id in 1..n, ids have no gaps and each id
/// occupies a solid rectangle of cells.
std::vector<Violation> validate(const Grid& grid);

/// Inclusive 0-based cell bounds of one room.
struct RoomExtent {
  RoomId id;
  std::size_t top = 0;
  std::size_t left = 0;
  std::size_t bottom = 0;
  std::size_t right = 0;

  std::size_t height() const { return bottom - top + 1; }
  std::size_t width() const { return right - left + 1; }
  std::size_t area() const { return height() * width(); }
  bool operator==(const RoomExtent&) const = default;
};

/// A validated rectangular arrangement. Construction enforces every rule that
/// validate() checks, so instances are always well formed.
class EncodedMatrix {
 public:
  /// Throws MatrixError when the grid is not a valid arrangement.
  static EncodedMatrix from_grid(Grid grid);

  std::size_t rows() const { return grid_.rows(); }
  std::size_t cols() const { return grid_.cols(); }
  std::size_t room_count() const { return room_count_; }
  RoomId at(std::size_t r, std::size_t c) const { return RoomId{grid_.at(r, c)}; }
  const Grid& grid() const { return grid_; }

  /// Room ids 1..n in ascending order.
  std::vector<RoomId> rooms() const;

  bool operator==(const EncodedMatrix&) const = default;

 private:
  explicit EncodedMatrix(Grid grid, std::size_t n) : grid_(std::move(grid)), room_count_(n) {}

  Grid grid_;
  std::size_t room_count_ = 0;
};

/// parse_grid followed by validation. Throws ParseError or MatrixError.
EncodedMatrix parse_matrix(std::string_view text);

/// One row per line, single spaces between ids, trailing newline.
std::string to_text(const EncodedMatrix& em);

std::map<RoomId, RoomExtent> room_extents(const EncodedMatrix& em);

/// Collapses runs of identical rows and identical columns.
EncodedMatrix normalize(const EncodedMatrix& em);

EncodedMatrix transpose(const EncodedMatrix& em);

/// Which side owns each corner of the padding ring. Corner cells only ever
/// touch other boundary cells, so the choice never reaches a room.
enum class CornerScheme {
  /// NW->NORTH, NE->EAST, SE->SOUTH, SW->WEST
  Pinwheel,
  /// NW->WEST, NE->NORTH, SE->EAST, SW->SOUTH
  CounterPinwheel,
};

/// Matrix with a one-cell ring of boundary ids around an arrangement.
class PaddedMatrix {
 public:
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  RoomId at(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }
  std::size_t room_count() const { return room_count_; }

 private:
  friend PaddedMatrix pad_boundary(const EncodedMatrix&, CornerScheme);

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t room_count_ = 0;
  std::vector<RoomId> cells_;
};

PaddedMatrix pad_boundary(const EncodedMatrix& em, CornerScheme scheme = CornerScheme::Pinwheel);

/// Undirected simple graph over room ids. Edges are stored with first < second.
struct AdjacencyGraph {
  std::set<RoomId> vertices;
  std::set<std::pair<RoomId, RoomId>> edges;

  bool adjacent(RoomId a, RoomId b) const;
  bool operator==(const AdjacencyGraph&) const = default;
};

/// Two rooms are adjacent iff some pair of their cells shares a side; corner
/// contact alone does not count.
AdjacencyGraph adjacency_graph(const EncodedMatrix& em);

/// How two adjacent rooms touch in the arrangement.
enum class Contact { None, LeftRight, TopBottom };

/// Contact::LeftRight when `first` lies immediately left of `second`,
/// TopBottom when `first` lies immediately above it.
Contact contact(const RoomExtent& first, const RoomExtent& second);

}  // namespace rectfp

template <>
struct std::hash<rectfp::RoomId> {
  std::size_t operator()(rectfp::RoomId id) const noexcept { return std::hash<int>{}(id.value); }
};
