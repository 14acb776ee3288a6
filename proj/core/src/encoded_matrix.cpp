#include "rectfp/encoded_matrix.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace rectfp {

std::string to_string(RoomId id) {
  if (id == kNorth) return "N";
  if (id == kSouth) return "S";
  if (id == kEast) return "E";
  if (id == kWest) return "W";
  return std::to_string(id.value);
}

RoomId room_id_from_string(std::string_view text) {
  if (text == "N") return kNorth;
  if (text == "S") return kSouth;
  if (text == "E") return kEast;
  if (text == "W") return kWest;
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value <= 0) {
    throw std::invalid_argument("not a room id: '" + std::string(text) + "'");
  }
  return RoomId{value};
}

Grid::Grid(std::size_t rows, std::size_t cols, std::vector<int> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
  if (cells_.size() != rows_ * cols_) {
    throw std::invalid_argument("grid cell count does not match its shape");
  }
}

namespace {

std::string describe(const std::vector<Violation>& violations) {
  std::ostringstream out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) out << "; ";
    out << violations[i].message;
  }
  return out.str();
}

std::string cell_list(const std::vector<Cell>& cells, std::size_t limit = 8) {
  std::ostringstream out;
  for (std::size_t i = 0; i < cells.size() && i < limit; ++i) {
    if (i) out << ", ";
    out << '(' << cells[i].row << ',' << cells[i].col << ')';
  }
  if (cells.size() > limit) out << ", ...";
  return out.str();
}

}  // namespace

MatrixError::MatrixError(std::vector<Violation> violations)
    : std::runtime_error(describe(violations)), violations_(std::move(violations)) {}

Grid parse_grid(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::vector<int> current;
  std::size_t line = 1;

  auto end_row = [&] {
    if (!current.empty()) rows.push_back(std::move(current));
    current.clear();
  };

  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (ch == '\n' || ch == ';' || ch == '/') {
      if (ch == '\n') ++line;
      end_row();
      ++i;
    } else if (ch == ' ' || ch == '\t' || ch == '\r' || ch == ',') {
      ++i;
    } else {
      std::size_t j = i;
      while (j < text.size() && std::string_view(" \t\r\n,;/").find(text[j]) == std::string_view::npos) ++j;
      std::string_view token = text.substr(i, j - i);
      int value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError("line " + std::to_string(line) + ": '" + std::string(token) + "' is not an integer");
      }
      current.push_back(value);
      i = j;
    }
  }
  end_row();

  if (rows.empty()) throw ParseError("matrix is empty");
  const std::size_t cols = rows.front().size();
  std::vector<int> cells;
  cells.reserve(rows.size() * cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw ParseError("ragged matrix: row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                       " entries, row 0 has " + std::to_string(cols));
    }
    cells.insert(cells.end(), rows[r].begin(), rows[r].end());
  }
  return Grid(rows.size(), cols, std::move(cells));
}

std::vector<Violation> validate(const Grid& grid) {
  std::vector<Violation> out;
  if (grid.rows() == 0 || grid.cols() == 0) {
    out.push_back({"empty", "matrix has no cells", {}});
    return out;
  }

  std::map<int, std::vector<Cell>> cells_by_id;
  std::vector<Cell> non_positive;
  for (std::size_t r = 0; r < grid.rows(); ++r) {
    for (std::size_t c = 0; c < grid.cols(); ++c) {
      int v = grid.at(r, c);
      if (v <= 0) {
        non_positive.push_back({r, c});
      } else {
        cells_by_id[v].push_back({r, c});
      }
    }
  }
  if (!non_positive.empty()) {
    out.push_back({"non_positive_id", "room ids must be positive; offending cells " + cell_list(non_positive),
                   non_positive});
  }

  if (!cells_by_id.empty()) {
    const int n = cells_by_id.rbegin()->first;
    std::vector<int> missing;
    for (int id = 1; id <= n; ++id) {
      if (!cells_by_id.count(id)) missing.push_back(id);
    }
    if (!missing.empty()) {
      std::ostringstream msg;
      msg << "room ids must be exactly 1.." << n << "; missing";
      for (int id : missing) msg << ' ' << id;
      out.push_back({"id_gap", msg.str(), {}});
    }
  }

  // One violation covers every misshapen room.
  std::vector<std::string> misshapen;
  std::vector<Cell> misshapen_cells;
  for (const auto& [id, cells] : cells_by_id) {
    std::size_t top = cells.front().row, bottom = top, left = cells.front().col, right = left;
    for (const Cell& cell : cells) {
      top = std::min(top, cell.row);
      bottom = std::max(bottom, cell.row);
      left = std::min(left, cell.col);
      right = std::max(right, cell.col);
    }
    const std::size_t box = (bottom - top + 1) * (right - left + 1);
    if (box != cells.size()) {
      misshapen.push_back("room " + std::to_string(id) + " occupies " + cell_list(cells) +
                          ", not a solid rectangle");
      misshapen_cells.insert(misshapen_cells.end(), cells.begin(), cells.end());
    }
  }
  if (!misshapen.empty()) {
    std::string message;
    for (std::size_t i = 0; i < misshapen.size(); ++i) {
      if (i) message += "; ";
      message += misshapen[i];
    }
    out.push_back({"room_not_rectangular", std::move(message), std::move(misshapen_cells)});
  }
  return out;
}

EncodedMatrix EncodedMatrix::from_grid(Grid grid) {
  auto violations = validate(grid);
  if (!violations.empty()) throw MatrixError(std::move(violations));
  const int n = *std::max_element(grid.cells().begin(), grid.cells().end());
  return EncodedMatrix(std::move(grid), static_cast<std::size_t>(n));
}

std::vector<RoomId> EncodedMatrix::rooms() const {
  std::vector<RoomId> ids;
  ids.reserve(room_count_);
  for (std::size_t i = 1; i <= room_count_; ++i) ids.emplace_back(static_cast<int>(i));
  return ids;
}

EncodedMatrix parse_matrix(std::string_view text) { return EncodedMatrix::from_grid(parse_grid(text)); }

std::string to_text(const EncodedMatrix& em) {
  std::string out;
  for (std::size_t r = 0; r < em.rows(); ++r) {
    for (std::size_t c = 0; c < em.cols(); ++c) {
      if (c) out += ' ';
      out += std::to_string(em.at(r, c).value);
    }
    out += '\n';
  }
  return out;
}

std::map<RoomId, RoomExtent> room_extents(const EncodedMatrix& em) {
  std::map<RoomId, RoomExtent> extents;
  for (std::size_t r = 0; r < em.rows(); ++r) {
    for (std::size_t c = 0; c < em.cols(); ++c) {
      const RoomId id = em.at(r, c);
      auto [it, inserted] = extents.try_emplace(id, RoomExtent{id, r, c, r, c});
      if (!inserted) {
        RoomExtent& e = it->second;
        e.top = std::min(e.top, r);
        e.bottom = std::max(e.bottom, r);
        e.left = std::min(e.left, c);
        e.right = std::max(e.right, c);
      }
    }
  }
  return extents;
}

EncodedMatrix normalize(const EncodedMatrix& em) {
  const Grid& g = em.grid();
  auto rows_equal = [&](std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < g.cols(); ++c) {
      if (g.at(a, c) != g.at(b, c)) return false;
    }
    return true;
  };
  auto cols_equal = [&](std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < g.rows(); ++r) {
      if (g.at(r, a) != g.at(r, b)) return false;
    }
    return true;
  };

  std::vector<std::size_t> keep_rows{0};
  for (std::size_t r = 1; r < g.rows(); ++r) {
    if (!rows_equal(r, keep_rows.back())) keep_rows.push_back(r);
  }
  std::vector<std::size_t> keep_cols{0};
  for (std::size_t c = 1; c < g.cols(); ++c) {
    if (!cols_equal(c, keep_cols.back())) keep_cols.push_back(c);
  }

  std::vector<int> cells;
  cells.reserve(keep_rows.size() * keep_cols.size());
  for (std::size_t r : keep_rows) {
    for (std::size_t c : keep_cols) cells.push_back(g.at(r, c));
  }
  return EncodedMatrix::from_grid(Grid(keep_rows.size(), keep_cols.size(), std::move(cells)));
}

EncodedMatrix transpose(const EncodedMatrix& em) {
  std::vector<int> cells;
  cells.reserve(em.rows() * em.cols());
  for (std::size_t c = 0; c < em.cols(); ++c) {
    for (std::size_t r = 0; r < em.rows(); ++r) cells.push_back(em.at(r, c).value);
  }
  return EncodedMatrix::from_grid(Grid(em.cols(), em.rows(), std::move(cells)));
}

PaddedMatrix pad_boundary(const EncodedMatrix& em, CornerScheme scheme) {
  PaddedMatrix pm;
  pm.rows_ = em.rows() + 2;
  pm.cols_ = em.cols() + 2;
  pm.room_count_ = em.room_count();
  pm.cells_.assign(pm.rows_ * pm.cols_, RoomId{});

  auto set = [&](std::size_t r, std::size_t c, RoomId id) { pm.cells_[r * pm.cols_ + c] = id; };
  const std::size_t last_row = pm.rows_ - 1;
  const std::size_t last_col = pm.cols_ - 1;

  for (std::size_t c = 1; c < last_col; ++c) {
    set(0, c, kNorth);
    set(last_row, c, kSouth);
  }
  for (std::size_t r = 1; r < last_row; ++r) {
    set(r, 0, kWest);
    set(r, last_col, kEast);
  }
  if (scheme == CornerScheme::Pinwheel) {
    set(0, 0, kNorth);
    set(0, last_col, kEast);
    set(last_row, last_col, kSouth);
    set(last_row, 0, kWest);
  } else {
    set(0, 0, kWest);
    set(0, last_col, kNorth);
    set(last_row, last_col, kEast);
    set(last_row, 0, kSouth);
  }
  for (std::size_t r = 0; r < em.rows(); ++r) {
    for (std::size_t c = 0; c < em.cols(); ++c) set(r + 1, c + 1, em.at(r, c));
  }
  return pm;
}

bool AdjacencyGraph::adjacent(RoomId a, RoomId b) const {
  if (b < a) std::swap(a, b);
  return edges.count({a, b}) > 0;
}

AdjacencyGraph adjacency_graph(const EncodedMatrix& em) {
  AdjacencyGraph g;
  for (RoomId id : em.rooms()) g.vertices.insert(id);
  auto link = [&](RoomId a, RoomId b) {
    if (a == b) return;
    if (b < a) std::swap(a, b);
    g.edges.insert({a, b});
  };
  for (std::size_t r = 0; r < em.rows(); ++r) {
    for (std::size_t c = 0; c < em.cols(); ++c) {
      if (c + 1 < em.cols()) link(em.at(r, c), em.at(r, c + 1));
      if (r + 1 < em.rows()) link(em.at(r, c), em.at(r + 1, c));
    }
  }
  return g;
}

Contact contact(const RoomExtent& first, const RoomExtent& second) {
  const bool rows_overlap = first.top <= second.bottom && second.top <= first.bottom;
  const bool cols_overlap = first.left <= second.right && second.left <= first.right;
  if (rows_overlap && first.right + 1 == second.left) return Contact::LeftRight;
  if (cols_overlap && first.bottom + 1 == second.top) return Contact::TopBottom;
  return Contact::None;
}

}  // namespace rectfp
