#include "rotlabel/approx.hpp"

#include <cmath>
#include <future>
#include <map>
#include <stdexcept>

namespace rotlabel {

MetaCellCollection meta_cells(const GridIndex& grid, int k, int row_offset, int col_offset) {
  if (k < 2) throw std::invalid_argument("meta_cells: k must be at least 2");
  MetaCellCollection out;
  out.k = k;
  out.row_offset = row_offset;
  out.col_offset = col_offset;
  std::map<CellKey, std::vector<std::size_t>> groups;
  for (const auto& [key, members] : grid.cells) {
    const std::int64_t r = key.first - row_offset;
    const std::int64_t c = key.second - col_offset;
    if (floor_mod(r, k) == 0 || floor_mod(c, k) == 0) {
      out.dropped.insert(out.dropped.end(), members.begin(), members.end());
      continue;
    }
    auto& g = groups[{floor_div(r, k), floor_div(c, k)}];
    g.insert(g.end(), members.begin(), members.end());
  }
  for (auto& [key, g] : groups) out.groups.push_back(std::move(g));
  return out;
}

MetaCellCollection parity_class(const GridIndex& grid, int row_parity, int col_parity) {
  // With k = 2 the kept rows are those one past the deleted offset.
  return meta_cells(grid, 2, 1 - row_parity, 1 - col_parity);
}

ActiveRangeAssignment solve_collection(const Instance& inst, const ConflictGraph& graph,
                                       const MetaCellCollection& collection, const ExactOptions& options,
                                       std::uint64_t* nodes) {
  ActiveRangeAssignment out(inst.size());
  for (const auto& group : collection.groups) {
    ExactStats stats;
    solve_exact_into(graph, group, options, out, &stats);
    if (nodes) *nodes += stats.nodes;
  }
  return out;
}

namespace {

struct ShiftResult {
  ActiveRangeAssignment phi;
  std::uint64_t nodes = 0;
};

ActiveRangeAssignment best_of_shifts(const Instance& inst, const ConflictGraph& graph, int k,
                                     const std::vector<std::pair<int, int>>& offsets, const ApproxOptions& options,
                                     ApproxReport* report) {
  const GridIndex grid = build_grid(inst, approximation_cell_size(inst));
  const auto solve_shift = [&](int ro, int co) {
    ShiftResult r;
    r.phi = solve_collection(inst, graph, meta_cells(grid, k, ro, co), options.exact, &r.nodes);
    return r;
  };

  std::vector<ShiftResult> results;
  if (options.parallel && offsets.size() > 1) {
    std::vector<std::future<ShiftResult>> jobs;
    for (const auto& [ro, co] : offsets) jobs.push_back(std::async(std::launch::async, solve_shift, ro, co));
    for (auto& j : jobs) results.push_back(j.get());
  } else {
    for (const auto& [ro, co] : offsets) results.push_back(solve_shift(ro, co));
  }

  std::size_t best = 0;
  ApproxReport rep;
  for (std::size_t s = 0; s < results.size(); ++s) {
    const double v = max_total(results[s].phi);
    rep.per_shift_values.push_back(v);
    rep.nodes += results[s].nodes;
    if (v > max_total(results[best].phi) + 1e-9) best = s;
  }
  rep.value = max_total(results[best].phi);
  rep.chosen_row_offset = offsets[best].first;
  rep.chosen_col_offset = offsets[best].second;
  if (report) *report = rep;
  return std::move(results[best].phi);
}

}  // namespace

ActiveRangeAssignment quarter_approx(const Instance& inst, const ConflictGraph& graph, const ApproxOptions& options,
                                     ApproxReport* report) {
  // Parity classes (0,0), (0,1), (1,0), (1,1) in that order.
  std::vector<std::pair<int, int>> offsets;
  for (int rp = 0; rp < 2; ++rp) {
    for (int cp = 0; cp < 2; ++cp) offsets.emplace_back(1 - rp, 1 - cp);
  }
  ApproxReport rep;
  auto phi = best_of_shifts(inst, graph, 2, offsets, options, &rep);
  phi.algorithm = "quarter";
  phi.parameters = {{"row_parity", 1 - rep.chosen_row_offset}, {"col_parity", 1 - rep.chosen_col_offset}};
  if (report) *report = rep;
  return phi;
}

ActiveRangeAssignment quarter_approx(const Instance& inst, const ApproxOptions& options) {
  return quarter_approx(inst, build_conflict_graph(inst), options);
}

int eptas_k(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("eptas: epsilon must lie in (0, 1)");
  return static_cast<int>(std::ceil(2.0 / epsilon - 1e-12));
}

ActiveRangeAssignment eptas(const Instance& inst, const ConflictGraph& graph, double epsilon,
                            const ApproxOptions& options, ApproxReport* report) {
  const int k = eptas_k(epsilon);
  std::vector<std::pair<int, int>> offsets;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) offsets.emplace_back(i, j);
  }
  ApproxReport rep;
  auto phi = best_of_shifts(inst, graph, k, offsets, options, &rep);
  phi.algorithm = "eptas";
  phi.parameters = {{"epsilon", epsilon},
                    {"k", k},
                    {"row_offset", rep.chosen_row_offset},
                    {"col_offset", rep.chosen_col_offset}};
  if (report) *report = rep;
  return phi;
}

ActiveRangeAssignment eptas(const Instance& inst, double epsilon, const ApproxOptions& options) {
  return eptas(inst, build_conflict_graph(inst), epsilon, options);
}

}  // namespace rotlabel
