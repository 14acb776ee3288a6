#include "cli.hpp"

#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>

#include "rectfp/fixtures.hpp"
#include "rectfp/io.hpp"
#include "rectfp/svg.hpp"

namespace rectfp::cli {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  std::shared_ptr<spdlog::logger> log;
};

std::string slurp(const std::string& path, Streams& io) {
  std::ostringstream buf;
  if (path == "-") {
    buf << io.in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

void emit(const std::string& path, const std::string& text, Streams& io) {
  if (path.empty() || path == "-") {
    io.out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write '" + path + "'");
  file << text;
  io.log->info("wrote {}", path);
}

json parse_json(const std::string& text, const std::string& what) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw InputError(what + " is not valid JSON");
  return doc;
}

std::shared_ptr<spdlog::logger> make_logger(std::ostream& err) {
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err);
  auto log = std::make_shared<spdlog::logger>("rectfp", sink);
  log->set_pattern("[%l] %v");
  log->set_level(spdlog::level::warn);
  if (const char* level = std::getenv("RECTFP_LOG")) log->set_level(spdlog::level::from_str(level));
  return log;
}

int exit_code(SolveStatus s) {
  switch (s) {
    case SolveStatus::Solved:
      return kOk;
    case SolveStatus::Infeasible:
      return kInfeasible;
    case SolveStatus::NonConvergent:
      return kNonConvergent;
    case SolveStatus::VerificationFailed:
      return kVerificationFailed;
  }
  return kVerificationFailed;
}

struct Overrides {
  std::optional<double> door;
  std::optional<int> max_iterations;
  std::optional<double> tol;
  bool prune = false;

  void apply(Project& p) const {
    if (door) p.door.default_min = *door;
    if (max_iterations) p.options.max_iterations = *max_iterations;
    if (tol) p.options.tol = *tol;
    if (prune) p.options.prune_sink_edges = true;
  }
};

std::string cell(double v) { return format_number(v, 4); }

std::string trace_table(const IterationTrace& trace) {
  std::ostringstream out;
  out << "status: " << to_string(trace.status) << "\n";
  if (!trace.message.empty()) out << "message: " << trace.message << "\n";
  for (const IterationRecord& it : trace.iterations) {
    out << "\niteration " << it.index << "  envelope " << cell(it.envelope_width) << " x "
        << cell(it.envelope_height) << "\n";
    out << std::left << std::setw(6) << "room" << std::right << std::setw(10) << "min_w" << std::setw(10) << "w"
        << std::setw(10) << "min_h" << std::setw(10) << "h" << std::setw(10) << "h/w" << "  note\n";
    for (const auto& [id, w] : it.widths) {
      const double h = it.heights.count(id) ? it.heights.at(id) : 0.0;
      out << std::left << std::setw(6) << id.value << std::right << std::setw(10) << cell(it.min_widths.at(id))
          << std::setw(10) << cell(w) << std::setw(10)
          << (it.min_heights.count(id) ? cell(it.min_heights.at(id)) : "-") << std::setw(10)
          << (it.heights.count(id) ? cell(h) : "-") << std::setw(10) << (it.heights.count(id) ? cell(h / w) : "-");
      if (it.violators.count(id)) out << "  min_w -> " << cell(it.updated_min_widths.at(id));
      out << "\n";
    }
  }
  return out.str();
}

int cmd_solve(const std::string& input, const Overrides& ov, const std::string& out_path, const std::string& svg_path,
              bool labels, bool timing, Streams& io) {
  Project project = read_project(parse_json(slurp(input, io), "project"));
  ov.apply(project);
  io.log->info("solving {} rooms", project.matrix.room_count());
  const SolveResult result = solve(project);
  for (const IterationRecord& it : result.trace.iterations) {
    io.log->debug("iteration {}: envelope {} x {}, {} violators", it.index, it.envelope_width, it.envelope_height,
                  it.violators.size());
  }
  emit(out_path, result_text(result, timing), io);
  if (!svg_path.empty() && result.floorplan) emit(svg_path, emit_svg(*result.floorplan, {labels}), io);
  if (result.status != SolveStatus::Solved) io.err << to_string(result.status) << ": " << result.message << "\n";
  return exit_code(result.status);
}

int cmd_validate(const std::string& input, const std::string& out_path, Streams& io) {
  const std::string text = slurp(input, io);
  json doc = json::parse(text, nullptr, false);
  std::vector<Violation> violations;
  if (doc.is_discarded()) {
    // Plain matrix text, one row per line.
    try {
      violations = validate(parse_grid(text));
    } catch (const ParseError& e) {
      violations.push_back({"parse", e.what(), {}});
    }
  } else {
    violations = validate_project(doc);
  }
  emit(out_path, write_violations(violations).dump(2) + "\n", io);
  for (const Violation& v : violations) io.err << v.rule << ": " << v.message << "\n";
  return violations.empty() ? kOk : kInvalidInput;
}

EncodedMatrix matrix_from(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) return parse_matrix(text);
  if (doc.is_object() && doc.contains("matrix")) return EncodedMatrix::from_grid(read_grid(doc.at("matrix")));
  throw InputError("expected a project document or matrix text");
}

int cmd_graph(const std::string& input, bool prune, const std::string& out_path, Streams& io) {
  const EncodedMatrix em = matrix_from(slurp(input, io));
  const PaddedMatrix pm = pad_boundary(em);
  StGraph hst = build_hst(pm);
  StGraph vst = build_vst(pm);
  if (prune) {
    hst = prune_sink_edges(hst);
    vst = prune_sink_edges(vst);
  }
  std::ostringstream text;
  text << "# HST (W -> E)\n" << to_text(hst) << "\n# VST (N -> S)\n" << to_text(vst);
  emit(out_path, text.str(), io);
  return kOk;
}

int cmd_svg(const std::string& input, bool labels, const std::string& out_path, Streams& io) {
  const SolveResult result = read_result(parse_json(slurp(input, io), "result"));
  if (!result.floorplan) throw InputError("result has no floorplan (status " + to_string(result.status) + ")");
  emit(out_path, emit_svg(*result.floorplan, {labels}), io);
  return kOk;
}

int cmd_trace(const std::string& input, bool as_json, const Overrides& ov, const std::string& out_path, Streams& io) {
  const json doc = parse_json(slurp(input, io), "input");
  IterationTrace trace;
  if (doc.is_object() && doc.contains("trace")) {
    trace = read_trace(doc.at("trace"));
  } else {
    Project project = read_project(doc);
    ov.apply(project);
    trace = solve(project).trace;
  }
  emit(out_path, as_json ? write_trace(trace).dump(2) + "\n" : trace_table(trace), io);
  return kOk;
}

int cmd_fixtures(const std::string& name, const std::string& out_path, Streams& io) {
  if (name.empty()) {
    std::ostringstream text;
    for (const Project& p : fixture_catalog()) text << p.name << "\t" << p.description << "\n";
    emit(out_path, text.str(), io);
    return kOk;
  }
  const auto project = find_fixture(name);
  if (!project) throw InputError("no fixture named '" + name + "'");
  emit(out_path, write_project(*project).dump(2) + "\n", io);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Streams io{in, out, err, make_logger(err)};

  CLI::App app{"Dimension rectangular floorplans from encoded matrices.", "rectfp"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string out_path;
  std::string svg_path;
  std::string fixture_name;
  bool labels = true;
  bool no_timing = false;
  bool as_json = false;
  Overrides ov;

  auto add_overrides = [&](CLI::App* sub) {
    sub->add_option("--door", ov.door, "Default minimum door width")->check(CLI::PositiveNumber);
    sub->add_option("--max-iterations", ov.max_iterations, "Iteration cap")->check(CLI::PositiveNumber);
    sub->add_option("--tol", ov.tol, "Aspect-ratio and verification tolerance")->check(CLI::PositiveNumber);
    sub->add_flag("--prune", ov.prune, "Remove redundant sink edges before solving");
  };

  auto* solve_cmd = app.add_subcommand("solve", "Dimension a project; writes a result document");
  solve_cmd->add_option("input", input, "Project JSON, or - for stdin");
  add_overrides(solve_cmd);
  solve_cmd->add_option("-o,--out", out_path, "Result path (default stdout)");
  solve_cmd->add_option("--svg", svg_path, "Also render the plan to this path");
  solve_cmd->add_flag("--labels,!--no-labels", labels, "Room captions in the SVG");
  solve_cmd->add_flag("--no-timing", no_timing, "Omit timing_ms for reproducible output");

  auto* validate_cmd = app.add_subcommand("validate", "List problems with a project or matrix; exit 0 iff none");
  validate_cmd->add_option("input", input, "Project JSON or matrix text, or - for stdin");
  validate_cmd->add_option("-o,--out", out_path, "Violation list path (default stdout)");

  auto* graph_cmd = app.add_subcommand("graph", "Print the horizontal and vertical st-graphs");
  graph_cmd->add_option("input", input, "Project JSON or matrix text, or - for stdin");
  graph_cmd->add_flag("--prune", ov.prune, "Remove redundant sink edges");
  graph_cmd->add_option("-o,--out", out_path, "Output path (default stdout)");

  auto* svg_cmd = app.add_subcommand("svg", "Render a result document as SVG");
  svg_cmd->add_option("input", input, "Result JSON, or - for stdin");
  svg_cmd->add_flag("--labels,!--no-labels", labels, "Room captions");
  svg_cmd->add_option("-o,--out", out_path, "SVG path (default stdout)");

  auto* trace_cmd = app.add_subcommand("trace", "Show the iteration history of a result or of a fresh solve");
  trace_cmd->add_option("input", input, "Result or project JSON, or - for stdin");
  add_overrides(trace_cmd);
  trace_cmd->add_flag("--json", as_json, "Emit the trace document instead of a table");
  trace_cmd->add_option("-o,--out", out_path, "Output path (default stdout)");

  auto* fixtures_cmd = app.add_subcommand("fixtures", "List bundled example projects or print one");
  fixtures_cmd->add_option("name", fixture_name, "Fixture to print");
  fixtures_cmd->add_option("-o,--out", out_path, "Output path (default stdout)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (*solve_cmd) return cmd_solve(input, ov, out_path, svg_path, labels, !no_timing, io);
    if (*validate_cmd) return cmd_validate(input, out_path, io);
    if (*graph_cmd) return cmd_graph(input, ov.prune, out_path, io);
    if (*svg_cmd) return cmd_svg(input, labels, out_path, io);
    if (*trace_cmd) return cmd_trace(input, as_json, ov, out_path, io);
    if (*fixtures_cmd) return cmd_fixtures(fixture_name, out_path, io);
  } catch (const MatrixError& e) {
    io.err << "error: " << e.what() << "\n";
    for (const Violation& v : e.violations()) io.err << "  " << v.rule << ": " << v.message << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    io.err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace rectfp::cli
