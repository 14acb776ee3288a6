#include "rectfp/fixtures.hpp"

#include <initializer_list>

namespace rectfp {

namespace {

struct RoomRow {
  int room;
  double min_width;
  double ar_min;
  double ar_max;
};

Project make(std::string name, std::string description, const char* matrix, std::initializer_list<RoomRow> rows,
             double door = 1.0) {
  Project p{std::move(name), std::move(description), parse_matrix(matrix), {}, {}, {}};
  for (const RoomRow& s : rows) p.constraints[RoomId{s.room}] = RoomConstraint{s.min_width, s.ar_min, s.ar_max, {}, {}};
  p.door.default_min = door;
  return p;
}

Project uniform(std::string name, std::string description, const char* matrix, double min_width, double ar_min,
                double ar_max, double door = 1.0) {
  Project p = make(std::move(name), std::move(description), matrix, {}, door);
  for (RoomId id : p.matrix.rooms()) p.constraints[id] = RoomConstraint{min_width, ar_min, ar_max, {}, {}};
  return p;
}

std::vector<Project> build() {
  std::vector<Project> out;
  out.push_back(uniform("single", "One room; aspect ratio pinned to 2.", "1", 4.0, 2.0, 2.0));
  out.push_back(uniform("grid2x2", "Four rooms meeting at one point.", "1 2\n3 4", 5.0, 1.0, 2.0));
  out.push_back(uniform("pinwheel", "Five-room non-sliceable pinwheel around a central room.",
                        "1 1 2\n"
                        "4 5 2\n"
                        "4 3 3",
                        4.0, 0.5, 2.0));
  out.push_back(uniform("pinwheel_cross",
                        "Pinwheel with a four-room block attached on the east; two interior points where four "
                        "rooms meet.",
                        "1 1 2 6 7\n"
                        "4 5 2 6 7\n"
                        "4 3 3 8 9",
                        4.0, 0.5, 2.0));
  out.push_back(make("eight_room", "Eight rooms with nested T-junctions on every side.",
                     "1 1 2 3\n"
                     "4 5 5 3\n"
                     "4 6 7 7\n"
                     "8 8 7 7",
                     {{1, 5.0, 0.6, 1.5},
                      {2, 3.0, 0.8, 2.0},
                      {3, 4.0, 1.0, 2.5},
                      {4, 3.5, 1.0, 2.5},
                      {5, 4.0, 0.5, 1.2},
                      {6, 3.0, 0.8, 2.0},
                      {7, 5.0, 0.7, 1.4},
                      {8, 4.0, 0.4, 1.0}}));
  out.push_back(make("worked_example", "Six-room arrangement with a full-height west wing.",
                     "1 1 2\n"
                     "3 4 2\n"
                     "3 5 5\n"
                     "3 6 6",
                     {{1, 6.0, 0.4, 1.0},
                      {2, 3.0, 1.0, 3.0},
                      {3, 3.0, 1.5, 4.0},
                      {4, 3.0, 0.8, 1.5},
                      {5, 4.0, 0.4, 1.0},
                      {6, 4.0, 0.4, 1.0}}));
  out.push_back(make("palladio",
                     "Hand transcription of a symmetric Palladian villa plan: central sala, front and rear "
                     "loggias, side halls and paired chambers.",
                     "1 2 3 3 3 4 5\n"
                     "1 2 6 6 6 4 5\n"
                     "7 7 6 6 6 8 8\n"
                     "9 10 6 6 6 11 12\n"
                     "9 10 13 13 13 11 12",
                     {{1, 4.0, 1.0, 2.0},
                      {2, 2.5, 1.0, 3.0},
                      {3, 8.0, 0.25, 0.6},
                      {4, 2.5, 1.0, 3.0},
                      {5, 4.0, 1.0, 2.0},
                      {6, 8.0, 1.0, 1.5},
                      {7, 5.0, 0.3, 1.0},
                      {8, 5.0, 0.3, 1.0},
                      {9, 4.0, 1.0, 2.0},
                      {10, 2.5, 1.0, 3.0},
                      {11, 2.5, 1.0, 3.0},
                      {12, 4.0, 1.0, 2.0},
                      {13, 8.0, 0.25, 0.6}}));
  return out;
}

}  // namespace

const std::vector<Project>& fixture_catalog() {
  static const std::vector<Project> catalog = build();
  return catalog;
}

std::optional<Project> find_fixture(std::string_view name) {
  for (const Project& p : fixture_catalog()) {
    if (p.name == name) return p;
  }
  return std::nullopt;
}

}  // namespace rectfp
