// rotlabel: generate, solve, validate, render and benchmark rotating-map
// label instances.
//
// Exit codes: 0 ok, 1 other failure, 2 parse error, 3 solver cap, 4 invalid assignment.

#include <chrono>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>

#include "rotlabel/approx.hpp"
#include "rotlabel/bench.hpp"
#include "rotlabel/exact.hpp"
#include "rotlabel/gadgets.hpp"
#include "rotlabel/io.hpp"
#include "rotlabel/render.hpp"

using namespace rotlabel;

namespace {

constexpr int kExitOther = 1;
constexpr int kExitParse = 2;
constexpr int kExitCap = 3;
constexpr int kExitViolation = 4;

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_file(path, text);
  }
}

std::vector<std::size_t> resolve_ids(const Instance& inst, const std::vector<std::string>& ids) {
  std::vector<std::size_t> out;
  for (const auto& id : ids) {
    std::size_t i = 0;
    while (i < inst.size() && inst.labels[i].id != id) ++i;
    if (i == inst.size()) throw ParseError("--labels", "unknown label id '" + id + "'");
    out.push_back(i);
  }
  return out;
}

void print_violations(const Instance& inst, const std::vector<Violation>& vs) {
  for (const auto& v : vs) {
    std::cerr << to_string(v.kind) << ": " << v.detail;
    if (v.kind != Violation::Kind::Malformed) std::cerr << " near angle " << v.witness << " ('" << inst.labels[v.label].id << "')";
    std::cerr << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Active ranges for labels on a rotating map"};
  app.require_subcommand(1);

  std::string out;

  auto* gen = app.add_subcommand("generate", "Write a gadget or random instance");
  std::string kind = "random";
  int m = 6;
  RandomSpec rspec;
  gen->add_option("kind", kind, "chain | inverter | turn | clause | clause-bare | random")
      ->check(CLI::IsMember({"chain", "inverter", "turn", "clause", "clause-bare", "random"}));
  gen->add_option("--m", m, "chain length")->check(CLI::Range(4, 1'000'000));
  gen->add_option("--n", rspec.n, "random: number of labels")->check(CLI::NonNegativeNumber);
  auto* area_opt = gen->add_option("--area", rspec.area, "random: area of the sampling square (default 10 per label)")->check(CLI::PositiveNumber);
  gen->add_option("--seed", rspec.seed, "random: seed");
  gen->add_flag("--general", rspec.general, "random: bounded-ratio rectangles instead of unit squares");
  gen->add_option("-o,--out", out, "output file (default stdout)");

  auto* solve = app.add_subcommand("solve", "Compute an active range assignment");
  std::string instance_path, algo = "quarter";
  double epsilon = 0.0;
  std::vector<std::string> subset;
  solve->add_option("instance", instance_path, "instance file")->required();
  solve->add_option("--algo", algo, "exact | quarter | eptas")->check(CLI::IsMember({"exact", "quarter", "eptas"}));
  auto* eps_opt = solve->add_option("--epsilon", epsilon, "eptas accuracy in (0, 1)");
  solve->add_option("--labels", subset, "exact: solve only these label ids; the rest stay inactive")->delimiter(',');
  solve->add_option("-o,--out", out, "report file (default stdout)");

  auto* validate = app.add_subcommand("validate", "Recheck a report against its instance");
  std::string report_path;
  validate->add_option("instance", instance_path, "instance file")->required();
  validate->add_option("report", report_path, "report file")->required();

  auto* render = app.add_subcommand("render", "Draw the map rotated by an angle as SVG");
  double alpha = 0.0;
  RenderOptions ropt;
  render->add_option("instance", instance_path, "instance file")->required();
  render->add_option("--report", report_path, "report whose assignment decides which labels are shown");
  render->add_option("--alpha", alpha, "rotation angle in radians");
  render->add_flag("--circles", ropt.draw_outer_circles, "draw outer circles");
  render->add_option("-o,--out", out, "SVG file (default stdout)");

  auto* bench = app.add_subcommand("bench", "Approximation ratios and scaling, as JSON");
  std::string suite = "ratio";
  std::size_t count = 200;
  std::uint64_t bench_seed = 1;
  std::vector<int> sizes{10'000, 100'000};
  bench->add_option("suite", suite, "ratio | scale")->check(CLI::IsMember({"ratio", "scale"}));
  bench->add_option("--count", count, "ratio: number of instances");
  bench->add_option("--seed", bench_seed, "base seed");
  bench->add_option("--sizes", sizes, "scale: label counts")->delimiter(',');
  bench->add_option("-o,--out", out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*gen) {
      GadgetInstance g;
      if (kind == "chain") g = gen_chain(m);
      else if (kind == "inverter") g = gen_inverter();
      else if (kind == "turn") g = gen_turn();
      else if (kind == "clause") g = gen_clause_core();
      else if (kind == "clause-bare") g = gen_clause_core_bare();
      else {
        if (area_opt->count() == 0) rspec.area = std::max(1.0, 10.0 * rspec.n);
        g.instance = gen_random(rspec);
      }
      emit(out, dump_instance(g.instance));
      return 0;
    }

    if (*solve) {
      if (algo == "eptas" && eps_opt->count() == 0) throw ParseError("--epsilon", "required for eptas");
      if (algo != "eptas" && eps_opt->count() != 0) throw ParseError("--epsilon", "only used by eptas");
      if (algo != "exact" && !subset.empty()) throw ParseError("--labels", "only used by exact");
      const Instance inst = parse_instance(read_file(instance_path));
      const auto diag = check_instance(inst);
      for (const auto& w : diag.warnings) std::cerr << "warning: " << w << "\n";
      if (!diag.ok()) {
        for (const auto& e : diag.errors) std::cerr << "error: " << e << "\n";
        return kExitParse;
      }
      const auto t0 = std::chrono::steady_clock::now();
      const ConflictGraph graph = build_conflict_graph(inst);
      ActiveRangeAssignment phi;
      if (algo == "exact") {
        std::vector<std::size_t> labels(inst.size());
        std::iota(labels.begin(), labels.end(), 0);
        if (!subset.empty()) labels = resolve_ids(inst, subset);
        phi = solve_exact(inst, graph, labels);
      } else if (algo == "quarter") {
        phi = quarter_approx(inst, graph);
      } else {
        phi = eptas(inst, graph, epsilon);
      }
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      const auto violations = validate_assignment(inst, graph, phi);
      emit(out, dump_report(make_report(inst, phi, secs, violations.size())));
      if (!violations.empty()) {
        print_violations(inst, violations);
        return kExitViolation;
      }
      return 0;
    }

    if (*validate) {
      const Instance inst = parse_instance(read_file(instance_path));
      ActiveRangeAssignment phi;
      const RunReport r = parse_report(read_file(report_path), inst, phi);
      std::vector<Violation> problems;
      assignment_from_records(inst, r.ranges, problems);
      print_violations(inst, problems);
      print_violations(inst, validate_assignment(inst, build_conflict_graph(inst), phi));
      std::cout << "max_total " << r.max_total << "\nmax_min " << r.max_min << "\nviolations " << r.violations << "\n";
      return r.violations == 0 ? 0 : kExitViolation;
    }

    if (*render) {
      const Instance inst = parse_instance(read_file(instance_path));
      ActiveRangeAssignment phi;
      const bool with_report = !report_path.empty();
      if (with_report) parse_report(read_file(report_path), inst, phi);
      emit(out, render_svg(inst, with_report ? &phi : nullptr, alpha, ropt));
      return 0;
    }

    if (*bench) {
      if (suite == "ratio") {
        emit(out, ratio_rows_json(run_ratio_suite(count, bench_seed)));
      } else {
        std::vector<ScaleRow> rows;
        for (int n : sizes) rows.push_back(run_scale(n, bench_seed));
        emit(out, scale_rows_json(rows));
      }
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const SolverCapExceeded& e) {
    std::cerr << "solver cap: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOther;
  }
  return 0;
}
