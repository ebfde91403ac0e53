#include "rotlabel/bench.hpp"

#include <chrono>
#include <numeric>

#include <json.hpp>

#include "rotlabel/approx.hpp"
#include "rotlabel/exact.hpp"

namespace rotlabel {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

RandomSpec ratio_suite_spec(std::size_t index, std::uint64_t base_seed, int max_n) {
  RandomSpec spec;
  spec.n = 2 + static_cast<int>(index % static_cast<std::size_t>(max_n - 1));
  spec.area = 3.0 * spec.n;
  spec.seed = base_seed + index;
  spec.general = index % 2 == 1;
  return spec;
}

std::vector<RatioRow> run_ratio_suite(std::size_t count, std::uint64_t base_seed, int max_n) {
  std::vector<RatioRow> rows;
  for (std::size_t i = 0; i < count; ++i) {
    const RandomSpec spec = ratio_suite_spec(i, base_seed, max_n);
    const auto t0 = std::chrono::steady_clock::now();
    const Instance inst = gen_random(spec);
    const ConflictGraph graph = build_conflict_graph(inst);
    std::vector<std::size_t> all(inst.size());
    std::iota(all.begin(), all.end(), 0);

    RatioRow row;
    row.seed = spec.seed;
    row.n = spec.n;
    row.general = spec.general;
    const auto check = [&](const ActiveRangeAssignment& phi) {
      row.violations += validate_assignment(inst, graph, phi).size();
      return max_total(phi);
    };
    row.exact = check(solve_exact(inst, graph, all));
    row.quarter = check(quarter_approx(inst, graph));
    row.eptas_05 = check(eptas(inst, graph, 0.5));
    row.eptas_09 = check(eptas(inst, graph, 0.9));
    row.seconds = seconds_since(t0);
    rows.push_back(row);
  }
  return rows;
}

ScaleRow run_scale(int n, std::uint64_t seed) {
  const Instance inst = gen_random({n, 10.0 * n, seed, false});
  ScaleRow row;
  row.n = n;
  auto t0 = std::chrono::steady_clock::now();
  const ConflictGraph graph = build_conflict_graph(inst);
  row.build_seconds = seconds_since(t0);
  t0 = std::chrono::steady_clock::now();
  row.value = max_total(quarter_approx(inst, graph));
  row.solve_seconds = seconds_since(t0);
  return row;
}

std::string ratio_rows_json(const std::vector<RatioRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    const auto ratio = [&](double v) { return r.exact > 0.0 ? v / r.exact : 1.0; };
    out.push_back({{"seed", r.seed},
                   {"n", r.n},
                   {"general", r.general},
                   {"exact", r.exact},
                   {"quarter", r.quarter},
                   {"eptas_0.5", r.eptas_05},
                   {"eptas_0.9", r.eptas_09},
                   {"ratio_quarter", ratio(r.quarter)},
                   {"ratio_eptas_0.5", ratio(r.eptas_05)},
                   {"ratio_eptas_0.9", ratio(r.eptas_09)},
                   {"seconds", r.seconds},
                   {"violations", r.violations}});
  }
  return out.dump(2) + "\n";
}

std::string scale_rows_json(const std::vector<ScaleRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    out.push_back({{"n", r.n}, {"build_seconds", r.build_seconds}, {"solve_seconds", r.solve_seconds}, {"value", r.value}});
  }
  return out.dump(2) + "\n";
}

}  // namespace rotlabel
