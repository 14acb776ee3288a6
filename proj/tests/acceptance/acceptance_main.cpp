#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lp_oracle.hpp"
#include "random_ra.hpp"
#include "rectfp/fixtures.hpp"
#include "rectfp/pipeline.hpp"

namespace {

using namespace rectfp;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

struct Case {
  std::string label;
  Project project;
};

// Every shipped fixture plus 200 random arrangements of at most ten rooms.
const std::vector<Case>& invariant_cases() {
  static const std::vector<Case> cases = [] {
    std::vector<Case> out;
    for (const Project& p : fixture_catalog()) out.push_back({p.name, p});
    std::mt19937_64 rng(20240601);
    for (int i = 0; i < 200; ++i) out.push_back({"random#" + std::to_string(i), testing::random_project(rng)});
    return out;
  }();
  return cases;
}

struct Solved {
  const Case* source;
  SolveResult result;
};

const std::vector<Solved>& invariant_results() {
  static const std::vector<Solved> results = [] {
    std::vector<Solved> out;
    for (const Case& c : invariant_cases()) out.push_back({&c, solve(c.project)});
    return out;
  }();
  return results;
}

class Failures {
 public:
  void add(const std::string& what) {
    if (count_++ < 5) list_ << (count_ > 1 ? "; " : "") << what;
  }
  Outcome finish(const std::string& summary) const {
    if (count_ == 0) return {true, summary};
    return {false, std::to_string(count_) + " failures: " + list_.str()};
  }

 private:
  int count_ = 0;
  std::ostringstream list_;
};

// Independent geometric oracle: pairwise interiors disjoint, every room inside
// the envelope and areas summing to the envelope's area.
bool tiles_exactly(const Floorplan& fp, double tol) {
  const Rect& env = fp.envelope();
  double area = 0.0;
  std::vector<Rect> rects;
  for (const auto& [id, r] : fp.rooms()) {
    if (r.x < -tol || r.y < -tol || r.x + r.w > env.w + tol || r.y + r.h > env.h + tol) return false;
    area += r.w * r.h;
    rects.push_back(r);
  }
  for (std::size_t i = 0; i < rects.size(); ++i) {
    for (std::size_t j = i + 1; j < rects.size(); ++j) {
      const double ox = std::min(rects[i].x + rects[i].w, rects[j].x + rects[j].w) - std::max(rects[i].x, rects[j].x);
      const double oy = std::min(rects[i].y + rects[i].h, rects[j].y + rects[j].h) - std::max(rects[i].y, rects[j].y);
      if (ox > tol && oy > tol) return false;
    }
  }
  return std::abs(area - env.w * env.h) <= tol * std::max(1.0, area);
}

Outcome end_to_end_invariants() {
  constexpr double tol = 1e-6;
  Failures f;
  int converged = 0, non_convergent = 0;
  for (const Solved& s : invariant_results()) {
    const std::string& label = s.source->label;
    const Project& p = s.source->project;
    const SolveResult& r = s.result;
    if (r.status == SolveStatus::NonConvergent) {
      ++non_convergent;
      continue;
    }
    if (r.status != SolveStatus::Solved || !r.floorplan) {
      f.add(label + " ended " + to_string(r.status) + ": " + r.message);
      continue;
    }
    ++converged;
    const Floorplan& fp = *r.floorplan;
    if (!verify_tiling(fp, tol).ok) f.add(label + " tiling");
    if (!verify_adjacency(fp, p.matrix, p.door, tol).ok()) f.add(label + " adjacency");
    if (!tiles_exactly(fp, tol)) f.add(label + " independent tiling oracle");
    for (const auto& [id, rect] : fp.rooms()) {
      const RoomConstraint& c = p.constraints.at(id);
      if (rect.w < c.min_width - tol) f.add(label + " room " + to_string(id) + " below min width");
      const double ratio = rect.h / rect.w;
      if (ratio < c.ar_min - tol || ratio > c.ar_max + tol) f.add(label + " room " + to_string(id) + " aspect ratio");
    }
    for (const FlowAssignment* flow : {&*r.vnf, &*r.hnf}) {
      for (std::size_t i = 0; i < flow->flow.size(); ++i) {
        const Edge& e = flow->graph.edges()[i];
        if (flow->flow[i] < p.door.width_for(e.from, e.to) - tol) {
          f.add(label + " flow " + to_string(e.from) + "->" + to_string(e.to) + " below door");
        }
      }
    }
  }
  return f.finish(std::to_string(invariant_results().size()) + " cases, " + std::to_string(converged) +
                  " converged, " + std::to_string(non_convergent) + " non-convergent, 0 violations");
}

Outcome grid_oracle() {
  // Hand-solved: each column of the vertical network is one chain carrying a
  // single flow of max(5, 5) = 5; heights are widths times ar_min = 5 and the
  // horizontal network repeats the argument row-wise. 5/5 = 1 lies in [1, 2],
  // so the first iteration is final: envelope 10 × 10, every room 5 × 5.
  Project p{"", "", parse_matrix("1 2/3 4"), {}, {}, {}};
  for (RoomId id : p.matrix.rooms()) p.constraints[id] = RoomConstraint{5.0, 1.0, 2.0, {}, {}};
  p.door.default_min = 1.0;
  const SolveResult r = solve(p);
  if (r.status != SolveStatus::Solved) return {false, "status " + to_string(r.status)};
  const double tol = 1e-6;
  const Rect& env = r.floorplan->envelope();
  bool ok = std::abs(env.w - 10.0) <= tol && std::abs(env.h - 10.0) <= tol;
  for (const auto& [id, rect] : r.floorplan->rooms()) {
    ok = ok && std::abs(rect.w - 5.0) <= tol && std::abs(rect.h - 5.0) <= tol;
  }
  std::ostringstream d;
  d << "envelope " << env.w << " x " << env.h;
  return {ok, d.str()};
}

Outcome lp_oracle() {
  std::mt19937_64 rng(7);
  int compared = 0, infeasible_seen = 0, agree = 0;
  Failures f;
  while (compared < 500) {
    const LinearProgram lp = testing::random_boxed_lp(rng);
    const auto expected = testing::enumerate_vertices(lp);
    const LpOutcome got = solve_lp(lp);
    if (!expected) {
      ++infeasible_seen;
      if (got.status != LpStatus::Infeasible) f.add("infeasible program reported " + to_string(got.status));
      continue;
    }
    ++compared;
    if (got.status != LpStatus::Optimal) {
      f.add("status " + to_string(got.status) + " on a feasible program");
    } else if (std::abs(got.objective_value - *expected) > 1e-6) {
      std::ostringstream d;
      d << "objective " << got.objective_value << " vs " << *expected;
      f.add(d.str());
    } else {
      ++agree;
    }
  }
  return f.finish(std::to_string(agree) + "/500 bounded-feasible programs agree; " + std::to_string(infeasible_seen) +
                  " infeasible draws also agreed on status");
}

Outcome conservation_and_envelope() {
  constexpr double tol = 1e-6;
  Failures f;
  int checked = 0;
  for (const Solved& s : invariant_results()) {
    const SolveResult& r = s.result;
    if (r.status != SolveStatus::Solved) continue;
    ++checked;
    const std::string& label = s.source->label;
    const std::pair<const FlowAssignment*, double> networks[] = {{&*r.vnf, r.floorplan->envelope().w},
                                                                 {&*r.hnf, r.floorplan->envelope().h}};
    for (const auto& [flow, envelope] : networks) {
      const StGraph& g = flow->graph;
      double source_out = 0.0;
      for (RoomId v : g.vertices()) {
        double in = 0.0, out = 0.0;
        for (std::size_t i = 0; i < g.edges().size(); ++i) {
          if (g.edges()[i].to == v) in += flow->flow[i];
          if (g.edges()[i].from == v) out += flow->flow[i];
        }
        if (v == g.source()) source_out = out;
        if (v.is_room() && g.conserves_at(v) && std::abs(in - out) > tol) {
          f.add(label + " " + to_string(g.orientation()) + " room " + to_string(v) + " leaks");
        }
      }
      if (std::abs(source_out - envelope) > tol * std::max(1.0, envelope)) {
        f.add(label + " " + to_string(g.orientation()) + " source flow differs from envelope");
      }
    }
  }
  return f.finish(std::to_string(checked) + " converged solves, both networks");
}

Outcome prune_equivalence() {
  Failures f;
  int rooms = 0;
  for (const Project& base : fixture_catalog()) {
    Project pruned = base;
    pruned.options.prune_sink_edges = true;
    Project plain = base;
    plain.options.prune_sink_edges = false;
    const SolveResult a = solve(plain);
    const SolveResult b = solve(pruned);
    if (a.status != SolveStatus::Solved || b.status != SolveStatus::Solved) {
      f.add(base.name + " did not solve both ways");
      continue;
    }
    for (const auto& [id, ra] : a.floorplan->rooms()) {
      const Rect& rb = b.floorplan->rooms().at(id);
      ++rooms;
      if (std::abs(ra.w - rb.w) > 1e-6 || std::abs(ra.h - rb.h) > 1e-6) {
        f.add(base.name + " room " + to_string(id));
      }
    }
  }
  return f.finish(std::to_string(fixture_catalog().size()) + " fixtures, " + std::to_string(rooms) +
                  " rooms identical within 1e-6");
}

Outcome four_rooms_at_a_point() {
  const SolveResult r = solve(*find_fixture("pinwheel"));
  if (r.status != SolveStatus::Solved) return {false, "pinwheel did not solve"};
  const bool checks = r.verification->ok();
  const auto four = corner_junctions(*r.floorplan, 4);
  const auto two = corner_junctions(*r.floorplan, 2);
  std::ostringstream d;
  d << "pinwheel: " << four.size() << " interior points with 4 corners, " << two.size()
    << " with 2; tiling and adjacency " << (checks ? "pass" : "fail")
    << ". A valid five-room pinwheel has only T-junctions, so this cannot hold";
  return {checks && !four.empty(), d.str()};
}

Outcome four_rooms_supplement() {
  const SolveResult r = solve(*find_fixture("pinwheel_cross"));
  if (r.status != SolveStatus::Solved) return {false, "pinwheel_cross did not solve"};
  const auto four = corner_junctions(*r.floorplan, 4);
  std::ostringstream d;
  d << "pinwheel_cross: " << four.size() << " interior points with 4 corners; checks "
    << (r.verification->ok() ? "pass" : "fail");
  return {r.verification->ok() && !four.empty(), d.str()};
}

Outcome performance() {
  using clock = std::chrono::steady_clock;
  const Project eight = *find_fixture("eight_room");
  const auto t0 = clock::now();
  const SolveResult r = solve(eight);
  const double eight_s = std::chrono::duration<double>(clock::now() - t0).count();

  std::mt19937_64 rng(99);
  testing::RandomRaOptions ten;
  ten.min_rooms = ten.max_rooms = 10;
  constexpr int kInstances = 50;
  double total = 0.0;
  for (int i = 0; i < kInstances; ++i) {
    const Project p = testing::random_project(rng, ten);
    const auto t = clock::now();
    (void)solve(p);
    total += std::chrono::duration<double>(clock::now() - t).count();
  }
  const double mean = total / kInstances;
  std::ostringstream d;
  d << "eight_room " << eight_s * 1e3 << " ms; n=10 random mean " << mean * 1e3 << " ms over " << kInstances;
  return {r.status == SolveStatus::Solved && eight_s < 1.0 && mean < 1.0, d.str()};
}

Outcome monotone_envelope() {
  Failures f;
  std::size_t traces = 0, multi = 0;
  auto check = [&](const std::string& label, const IterationTrace& t) {
    ++traces;
    if (t.iterations.size() > 1) ++multi;
    for (std::size_t i = 1; i < t.iterations.size(); ++i) {
      if (t.iterations[i].envelope_width < t.iterations[i - 1].envelope_width - 1e-9) {
        f.add(label + " iteration " + std::to_string(i + 1));
      }
    }
  };
  for (const Solved& s : invariant_results()) check(s.source->label, s.result.trace);
  // Tight ratio ranges force several rounds of widening.
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    Project p = testing::random_project(rng);
    for (auto& [id, c] : p.constraints) c.ar_max = c.ar_min + 0.2;
    check("tight#" + std::to_string(i), solve(p).trace);
  }
  return f.finish(std::to_string(traces) + " traces, " + std::to_string(multi) + " with more than one iteration");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"end-to-end invariants", end_to_end_invariants},
      {"2x2 oracle", grid_oracle},
      {"LP oracle equivalence", lp_oracle},
      {"conservation and envelope identities", conservation_and_envelope},
      {"prune equivalence", prune_equivalence},
      {"four rooms at a point", four_rooms_at_a_point},
      {"performance", performance},
      {"monotone envelope", monotone_envelope},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str());
  }

  const Outcome extra = four_rooms_supplement();
  std::printf("[%s] (supplementary) four rooms at a point, non-sliceable fixture: %s\n", extra.pass ? "PASS" : "FAIL",
              extra.detail.c_str());
  std::printf("[SKIP] UI round trip: browser front end not part of this build\n");
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
