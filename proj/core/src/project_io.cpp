#include <algorithm>
#include <initializer_list>
#include <set>

#include "rectfp/io.hpp"

namespace rectfp {

namespace {

std::string join(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string join(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

void require_object(const json& v, const std::string& path) {
  if (!v.is_object()) throw SchemaError(path.empty() ? "/" : path, "expected an object");
}

void require_keys(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  require_object(obj, path);
  for (const auto& [key, _] : obj.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; })) {
      throw SchemaError(join(path, key), "unknown key '" + key + "'");
    }
  }
}

const json& member(const json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(join(path, key), "required key is missing");
  return *it;
}

double number(const json& v, const std::string& path) {
  if (!v.is_number()) throw SchemaError(path, "expected a number");
  return v.get<double>();
}

double number(const json& obj, const std::string& path, const char* key) {
  return number(member(obj, path, key), join(path, key));
}

int integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw SchemaError(path, "expected an integer");
  return v.get<int>();
}

bool boolean(const json& v, const std::string& path) {
  if (!v.is_boolean()) throw SchemaError(path, "expected true or false");
  return v.get<bool>();
}

std::string string(const json& v, const std::string& path) {
  if (!v.is_string()) throw SchemaError(path, "expected a string");
  return v.get<std::string>();
}

const json& array(const json& v, const std::string& path) {
  if (!v.is_array()) throw SchemaError(path, "expected an array");
  return v;
}

std::optional<double> optional_number(const json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  return number(*it, join(path, key));
}

RoomId room_ref(const json& v, const std::string& path) {
  if (v.is_number_integer()) {
    const int id = v.get<int>();
    if (id <= 0) throw SchemaError(path, "room ids are positive");
    return RoomId{id};
  }
  if (v.is_string()) {
    try {
      return room_id_from_string(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw SchemaError(path, e.what());
    }
  }
  throw SchemaError(path, "expected a room id");
}

json dims_json(const DimensionMap& dims) {
  json out = json::object();
  for (const auto& [room, v] : dims) out[to_string(room)] = v;
  return out;
}

DimensionMap read_dims(const json& v, const std::string& path) {
  require_object(v, path);
  DimensionMap out;
  for (const auto& [key, value] : v.items()) out[room_ref(json(key), join(path, key))] = number(value, join(path, key));
  return out;
}

std::string contact_name(Contact c) {
  switch (c) {
    case Contact::LeftRight:
      return "left_right";
    case Contact::TopBottom:
      return "top_bottom";
    case Contact::None:
      break;
  }
  return "none";
}

Orientation orientation_from(const std::string& s, const std::string& path) {
  if (s == "horizontal") return Orientation::Horizontal;
  if (s == "vertical") return Orientation::Vertical;
  throw SchemaError(path, "expected \"horizontal\" or \"vertical\"");
}

DimensionStatus dimension_status_from(const std::string& s, const std::string& path) {
  for (auto st : {DimensionStatus::Converged, DimensionStatus::Infeasible, DimensionStatus::NonConvergent}) {
    if (to_string(st) == s) return st;
  }
  throw SchemaError(path, "unknown status '" + s + "'");
}

ConstraintMap read_constraints(const json& doc, const std::string& path) {
  ConstraintMap out;
  const json& list = array(doc, path);
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string p = join(path, i);
    const json& item = list[i];
    require_keys(item, p, {"room", "min_width", "ar_min", "ar_max", "max_width", "max_height"});
    const RoomId room = room_ref(member(item, p, "room"), join(p, "room"));
    RoomConstraint c;
    c.min_width = number(item, p, "min_width");
    c.ar_min = number(item, p, "ar_min");
    c.ar_max = number(item, p, "ar_max");
    c.max_width = optional_number(item, p, "max_width");
    c.max_height = optional_number(item, p, "max_height");
    const auto problems = check_constraint(c);
    if (!problems.empty()) throw SchemaError(p, problems.front());
    if (!out.emplace(room, c).second) throw SchemaError(join(p, "room"), "duplicate constraint for room " + to_string(room));
  }
  return out;
}

DoorSpec read_door(const json& doc, const std::string& path) {
  require_keys(doc, path, {"default", "overrides"});
  DoorSpec door;
  if (doc.contains("default")) door.default_min = number(doc, path, "default");
  if (!(door.default_min > 0.0)) throw SchemaError(join(path, "default"), "door width must be positive");
  if (doc.contains("overrides")) {
    const std::string op = join(path, "overrides");
    const json& list = array(doc["overrides"], op);
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string p = join(op, i);
      require_keys(list[i], p, {"rooms", "width"});
      const json& pair = array(member(list[i], p, "rooms"), join(p, "rooms"));
      if (pair.size() != 2) throw SchemaError(join(p, "rooms"), "expected two room ids");
      const RoomId a = room_ref(pair[0], join(join(p, "rooms"), 0));
      const RoomId b = room_ref(pair[1], join(join(p, "rooms"), 1));
      if (a == b || !a.is_room() || !b.is_room()) throw SchemaError(join(p, "rooms"), "expected two distinct rooms");
      const double w = number(list[i], p, "width");
      if (!(w > 0.0)) throw SchemaError(join(p, "width"), "door width must be positive");
      door.set_override(a, b, w);
    }
  }
  return door;
}

SolveOptions read_options(const json& doc, const std::string& path) {
  require_keys(doc, path, {"max_iterations", "tol", "prune_sink_edges"});
  SolveOptions o;
  if (doc.contains("max_iterations")) {
    o.max_iterations = integer(doc["max_iterations"], join(path, "max_iterations"));
    if (o.max_iterations < 1) throw SchemaError(join(path, "max_iterations"), "must be at least 1");
  }
  if (doc.contains("tol")) {
    o.tol = number(doc, path, "tol");
    if (!(o.tol > 0.0)) throw SchemaError(join(path, "tol"), "must be positive");
  }
  if (doc.contains("prune_sink_edges")) o.prune_sink_edges = boolean(doc["prune_sink_edges"], join(path, "prune_sink_edges"));
  return o;
}

void check_coverage(const ConstraintMap& constraints, const EncodedMatrix& em, const DoorSpec& door) {
  for (RoomId room : em.rooms()) {
    if (!constraints.count(room)) throw SchemaError("/constraints", "missing constraint for room " + to_string(room));
  }
  for (const auto& [room, _] : constraints) {
    if (!room.is_room() || static_cast<std::size_t>(room.value) > em.room_count()) {
      throw SchemaError("/constraints", "constraint for room " + to_string(room) + " which is not in the matrix");
    }
  }
  for (const auto& [pair, _] : door.overrides) {
    if (static_cast<std::size_t>(pair.second.value) > em.room_count()) {
      throw SchemaError("/door/overrides", "override names room " + to_string(pair.second) + " which is not in the matrix");
    }
  }
}

}  // namespace

Grid read_grid(const json& doc, const std::string& path) {
  const json& rows = array(doc, path);
  if (rows.empty()) throw SchemaError(path, "matrix has no rows");
  std::size_t cols = 0;
  std::vector<int> cells;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const json& row = array(rows[r], join(path, r));
    if (r == 0) {
      cols = row.size();
      if (cols == 0) throw SchemaError(join(path, r), "matrix row is empty");
    } else if (row.size() != cols) {
      throw SchemaError(join(path, r), "ragged matrix: expected " + std::to_string(cols) + " entries");
    }
    for (std::size_t c = 0; c < row.size(); ++c) cells.push_back(integer(row[c], join(join(path, r), c)));
  }
  return Grid(rows.size(), cols, std::move(cells));
}

json write_matrix(const EncodedMatrix& em) {
  json rows = json::array();
  for (std::size_t r = 0; r < em.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < em.cols(); ++c) row.push_back(em.at(r, c).value);
    rows.push_back(std::move(row));
  }
  return rows;
}

Project read_project(const json& doc) {
  require_keys(doc, "", {"name", "description", "matrix", "constraints", "door", "options"});
  EncodedMatrix em = EncodedMatrix::from_grid(read_grid(member(doc, "", "matrix"), "/matrix"));
  ConstraintMap constraints = read_constraints(member(doc, "", "constraints"), "/constraints");
  DoorSpec door = doc.contains("door") ? read_door(doc["door"], "/door") : DoorSpec{};
  SolveOptions options = doc.contains("options") ? read_options(doc["options"], "/options") : SolveOptions{};
  check_coverage(constraints, em, door);
  return Project{doc.contains("name") ? string(doc["name"], "/name") : "",
                 doc.contains("description") ? string(doc["description"], "/description") : "",
                 std::move(em),
                 std::move(constraints),
                 std::move(door),
                 options};
}

json write_project(const Project& project) {
  json doc;
  if (!project.name.empty()) doc["name"] = project.name;
  if (!project.description.empty()) doc["description"] = project.description;
  doc["matrix"] = write_matrix(project.matrix);
  json constraints = json::array();
  for (const auto& [room, c] : project.constraints) {
    json item{{"room", room.value}, {"min_width", c.min_width}, {"ar_min", c.ar_min}, {"ar_max", c.ar_max}};
    if (c.max_width) item["max_width"] = *c.max_width;
    if (c.max_height) item["max_height"] = *c.max_height;
    constraints.push_back(std::move(item));
  }
  doc["constraints"] = std::move(constraints);
  json overrides = json::array();
  for (const auto& [pair, w] : project.door.overrides) {
    overrides.push_back({{"rooms", {pair.first.value, pair.second.value}}, {"width", w}});
  }
  doc["door"] = {{"default", project.door.default_min}, {"overrides", std::move(overrides)}};
  doc["options"] = {{"max_iterations", project.options.max_iterations},
                    {"tol", project.options.tol},
                    {"prune_sink_edges", project.options.prune_sink_edges}};
  return doc;
}

std::vector<Violation> validate_project(const json& doc) {
  std::vector<Violation> out;
  if (!doc.is_object()) {
    out.push_back({"schema", "/: expected an object", {}});
    return out;
  }
  std::optional<Grid> grid;
  try {
    grid = read_grid(member(doc, "", "matrix"), "/matrix");
  } catch (const SchemaError& e) {
    out.push_back({"schema", e.what(), {}});
    return out;
  }
  auto matrix_problems = validate(*grid);
  out.insert(out.end(), matrix_problems.begin(), matrix_problems.end());
  if (!matrix_problems.empty()) return out;
  try {
    read_project(doc);
  } catch (const SchemaError& e) {
    out.push_back({e.path() == "/constraints" ? "constraints" : "schema", e.what(), {}});
  }
  return out;
}

json write_violations(const std::vector<Violation>& violations) {
  json out = json::array();
  for (const auto& v : violations) {
    json cells = json::array();
    for (const Cell& c : v.cells) cells.push_back({c.row, c.col});
    out.push_back({{"rule", v.rule}, {"message", v.message}, {"cells", std::move(cells)}});
  }
  return out;
}

json write_floorplan(const Floorplan& fp) {
  json rooms = json::array();
  for (const auto& [id, r] : fp.rooms()) {
    rooms.push_back({{"id", id.value}, {"x", r.x}, {"y", r.y}, {"w", r.w}, {"h", r.h}});
  }
  return {{"envelope", {{"w", fp.envelope().w}, {"h", fp.envelope().h}}}, {"rooms", std::move(rooms)}};
}

Floorplan read_floorplan(const json& doc, const EncodedMatrix& em) {
  const std::string path = "/floorplan";
  require_keys(doc, path, {"envelope", "rooms"});
  const json& env = member(doc, path, "envelope");
  require_keys(env, join(path, "envelope"), {"w", "h"});
  Rect envelope{0.0, 0.0, number(env, join(path, "envelope"), "w"), number(env, join(path, "envelope"), "h")};
  std::map<RoomId, Rect> rooms;
  const json& list = array(member(doc, path, "rooms"), join(path, "rooms"));
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string p = join(join(path, "rooms"), i);
    require_keys(list[i], p, {"id", "x", "y", "w", "h"});
    rooms[room_ref(member(list[i], p, "id"), join(p, "id"))] =
        Rect{number(list[i], p, "x"), number(list[i], p, "y"), number(list[i], p, "w"), number(list[i], p, "h")};
  }
  try {
    return Floorplan(std::move(rooms), envelope, em);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(path, e.what());
  }
}

json write_trace(const IterationTrace& trace) {
  json iterations = json::array();
  for (const auto& it : trace.iterations) {
    json violators = json::array();
    for (RoomId r : it.violators) violators.push_back(r.value);
    iterations.push_back({{"index", it.index},
                          {"min_widths", dims_json(it.min_widths)},
                          {"widths", dims_json(it.widths)},
                          {"min_heights", dims_json(it.min_heights)},
                          {"heights", dims_json(it.heights)},
                          {"violators", std::move(violators)},
                          {"updated_min_widths", dims_json(it.updated_min_widths)},
                          {"envelope_width", it.envelope_width},
                          {"envelope_height", it.envelope_height}});
  }
  return {{"status", to_string(trace.status)},
          {"message", trace.message},
          {"iteration_count", trace.iterations.size()},
          {"iterations", std::move(iterations)}};
}

IterationTrace read_trace(const json& doc) {
  const std::string path = "/trace";
  require_keys(doc, path, {"status", "message", "iteration_count", "iterations"});
  IterationTrace trace;
  trace.status = dimension_status_from(string(member(doc, path, "status"), join(path, "status")), join(path, "status"));
  if (doc.contains("message")) trace.message = string(doc["message"], join(path, "message"));
  const json& list = array(member(doc, path, "iterations"), join(path, "iterations"));
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string p = join(join(path, "iterations"), i);
    const json& item = list[i];
    require_keys(item, p,
                 {"index", "min_widths", "widths", "min_heights", "heights", "violators", "updated_min_widths",
                  "envelope_width", "envelope_height"});
    IterationRecord rec;
    rec.index = integer(member(item, p, "index"), join(p, "index"));
    rec.min_widths = read_dims(member(item, p, "min_widths"), join(p, "min_widths"));
    rec.widths = read_dims(member(item, p, "widths"), join(p, "widths"));
    rec.min_heights = read_dims(member(item, p, "min_heights"), join(p, "min_heights"));
    rec.heights = read_dims(member(item, p, "heights"), join(p, "heights"));
    const json& v = array(member(item, p, "violators"), join(p, "violators"));
    for (std::size_t k = 0; k < v.size(); ++k) rec.violators.insert(room_ref(v[k], join(join(p, "violators"), k)));
    rec.updated_min_widths = read_dims(member(item, p, "updated_min_widths"), join(p, "updated_min_widths"));
    rec.envelope_width = number(item, p, "envelope_width");
    rec.envelope_height = number(item, p, "envelope_height");
    trace.iterations.push_back(std::move(rec));
  }
  return trace;
}

json write_verification(const VerificationReport& report) {
  json pairs = json::array();
  for (const auto& p : report.adjacency.pairs) {
    pairs.push_back({{"rooms", {p.a.value, p.b.value}},
                     {"contact", contact_name(p.contact)},
                     {"shared_length", p.shared_length},
                     {"door_required", p.door_required},
                     {"aligned", p.aligned},
                     {"ok", p.ok}});
  }
  json messages = report.tiling.messages;
  for (const auto& m : report.adjacency.messages) messages.push_back(m);
  return {{"ok", report.ok()},
          {"tiling_ok", report.tiling.ok},
          {"geometry_preserved", report.adjacency.geometry_preserved},
          {"adjacency", std::move(pairs)},
          {"messages", std::move(messages)}};
}

json write_flow(const FlowAssignment& flow) {
  json edges = json::array();
  for (std::size_t i = 0; i < flow.graph.edges().size(); ++i) {
    const Edge& e = flow.graph.edges()[i];
    edges.push_back({{"from", to_string(e.from)}, {"to", to_string(e.to)}, {"flow", flow.flow[i]}});
  }
  json terminal = json::array();
  for (RoomId r : flow.graph.terminal_rooms()) terminal.push_back(r.value);
  return {{"network", to_string(flow.graph.orientation())},
          {"objective", flow.objective},
          {"sink_pruned", flow.graph.sink_pruned()},
          {"terminal_rooms", std::move(terminal)},
          {"room_dims", dims_json(flow.room_dim)},
          {"edges", std::move(edges)}};
}

FlowAssignment read_flow(const json& doc, const EncodedMatrix& em) {
  const std::string path = "/wall_flows";
  require_keys(doc, path, {"network", "objective", "sink_pruned", "terminal_rooms", "room_dims", "edges"});
  const Orientation o = orientation_from(string(member(doc, path, "network"), join(path, "network")), join(path, "network"));
  const bool pruned = boolean(member(doc, path, "sink_pruned"), join(path, "sink_pruned"));
  std::vector<Edge> edges;
  std::vector<std::pair<Edge, double>> flows;
  const json& list = array(member(doc, path, "edges"), join(path, "edges"));
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string p = join(join(path, "edges"), i);
    require_keys(list[i], p, {"from", "to", "flow"});
    Edge e{room_ref(member(list[i], p, "from"), join(p, "from")), room_ref(member(list[i], p, "to"), join(p, "to"))};
    edges.push_back(e);
    flows.emplace_back(e, number(list[i], p, "flow"));
  }
  const json& terminal = array(member(doc, path, "terminal_rooms"), join(path, "terminal_rooms"));
  const RoomId sink = o == Orientation::Horizontal ? kEast : kSouth;
  for (std::size_t k = 0; k < terminal.size(); ++k) {
    edges.push_back({room_ref(terminal[k], join(join(path, "terminal_rooms"), k)), sink});
  }
  StGraph g(o, em.rooms(), edges);
  if (pruned) g = prune_sink_edges(g);

  FlowAssignment fa{g, std::vector<double>(g.edges().size(), 0.0), {}, 0.0};
  for (const auto& [e, f] : flows) {
    auto it = std::find(g.edges().begin(), g.edges().end(), e);
    if (it == g.edges().end()) throw SchemaError(join(path, "edges"), "edge not in the network");
    fa.flow[static_cast<std::size_t>(it - g.edges().begin())] = f;
  }
  fa.room_dim = read_dims(member(doc, path, "room_dims"), join(path, "room_dims"));
  fa.objective = number(doc, path, "objective");
  return fa;
}

json write_result(const SolveResult& result, bool include_timing) {
  json doc;
  doc["status"] = to_string(result.status);
  doc["message"] = result.message;
  doc["matrix"] = write_matrix(result.matrix);
  if (result.floorplan) doc["floorplan"] = write_floorplan(*result.floorplan);
  if (result.verification) doc["verification"] = write_verification(*result.verification);
  doc["trace"] = write_trace(result.trace);
  if (result.vnf || result.hnf) {
    json flows = json::object();
    if (result.vnf) flows["vnf"] = write_flow(*result.vnf);
    if (result.hnf) flows["hnf"] = write_flow(*result.hnf);
    doc["wall_flows"] = std::move(flows);
  }
  if (result.infeasible) {
    doc["infeasible"] = {{"network", to_string(result.infeasible->network)},
                         {"iteration", result.infeasible->iteration},
                         {"certificate", result.infeasible->certificate}};
  }
  if (include_timing) doc["timing_ms"] = result.timing_ms;
  return doc;
}

SolveResult read_result(const json& doc) {
  require_keys(doc, "",
               {"status", "message", "matrix", "floorplan", "verification", "trace", "wall_flows", "infeasible",
                "timing_ms"});
  EncodedMatrix em = EncodedMatrix::from_grid(read_grid(member(doc, "", "matrix"), "/matrix"));
  SolveResult result(em);
  try {
    result.status = solve_status_from_string(string(member(doc, "", "status"), "/status"));
  } catch (const std::invalid_argument& e) {
    throw SchemaError("/status", e.what());
  }
  if (doc.contains("message")) result.message = string(doc["message"], "/message");
  if (doc.contains("floorplan")) result.floorplan = read_floorplan(doc["floorplan"], em);
  result.trace = read_trace(member(doc, "", "trace"));
  if (doc.contains("wall_flows")) {
    const json& flows = doc["wall_flows"];
    require_keys(flows, "/wall_flows", {"vnf", "hnf"});
    if (flows.contains("vnf")) result.vnf = read_flow(flows["vnf"], em);
    if (flows.contains("hnf")) result.hnf = read_flow(flows["hnf"], em);
  }
  if (doc.contains("verification") && result.floorplan) {
    // The report is a pure function of the plan; recompute rather than parse.
    DoorSpec door;
    if (const json& v = doc["verification"]; v.contains("adjacency")) {
      for (const auto& p : v["adjacency"]) {
        door.set_override(RoomId{p["rooms"][0].get<int>()}, RoomId{p["rooms"][1].get<int>()},
                          p["door_required"].get<double>());
      }
    }
    result.verification = verify(*result.floorplan, door);
  }
  if (doc.contains("infeasible")) {
    const json& inf = doc["infeasible"];
    require_keys(inf, "/infeasible", {"network", "iteration", "certificate"});
    result.infeasible = InfeasibleDetail{
        orientation_from(string(member(inf, "/infeasible", "network"), "/infeasible/network"), "/infeasible/network"),
        integer(member(inf, "/infeasible", "iteration"), "/infeasible/iteration"),
        number(inf, "/infeasible", "certificate")};
  }
  if (doc.contains("timing_ms")) result.timing_ms = number(doc["timing_ms"], "/timing_ms");
  return result;
}

std::string result_text(const SolveResult& result, bool include_timing) {
  return write_result(result, include_timing).dump(2) + "\n";
}

}  // namespace rectfp
