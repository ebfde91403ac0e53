#include "rotlabel/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rotlabel {

CellKey GridIndex::cell_of(const Point& p) const {
  return {static_cast<std::int64_t>(std::floor(p.y() / cell_size)),
          static_cast<std::int64_t>(std::floor(p.x() / cell_size))};
}

std::size_t GridIndex::label_count() const {
  std::size_t n = 0;
  for (const auto& [key, ids] : cells) n += ids.size();
  return n;
}

GridIndex build_grid(const Instance& inst, double cell_size) {
  if (!(cell_size > 0.0) || !std::isfinite(cell_size)) {
    throw std::invalid_argument("build_grid: cell size must be positive and finite");
  }
  GridIndex g;
  g.cell_size = cell_size;
  for (std::size_t i = 0; i < inst.labels.size(); ++i) {
    g.cells[g.cell_of(inst.labels[i].anchor)].push_back(i);
  }
  return g;
}

std::vector<std::pair<std::size_t, std::size_t>> GridIndex::candidate_pairs(const Instance& inst,
                                                                            double reach) const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const auto span = static_cast<std::int64_t>(std::ceil(reach / cell_size));
  const double reach2 = reach * reach * (1 + 1e-12);
  for (const auto& [key, members] : cells) {
    for (std::int64_t dr = -span; dr <= span; ++dr) {
      for (std::int64_t dc = -span; dc <= span; ++dc) {
        const CellKey other{key.first + dr, key.second + dc};
        if (other < key) continue;
        const auto it = cells.find(other);
        if (it == cells.end()) continue;
        const bool same = other == key;
        for (std::size_t u = 0; u < members.size(); ++u) {
          for (std::size_t v = same ? u + 1 : 0; v < it->second.size(); ++v) {
            const std::size_t i = members[u];
            const std::size_t j = it->second[v];
            if ((inst.labels[i].anchor - inst.labels[j].anchor).squaredNorm() <= reach2) {
              out.emplace_back(std::min(i, j), std::max(i, j));
            }
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

double approximation_cell_size(const Instance& inst) {
  const double d = max_diagonal(inst);
  return d > 0.0 ? 2.0 * d : 1.0;
}

std::size_t packing_bound(double width, double height, double w_min, double h_min, double a_min) {
  return static_cast<std::size_t>(std::ceil(2.0 * width / w_min) + std::ceil(2.0 * height / h_min) +
                                  std::ceil(width * height / a_min));
}

}  // namespace rotlabel
