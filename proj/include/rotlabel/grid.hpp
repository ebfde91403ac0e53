#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "rotlabel/geom.hpp"

namespace rotlabel {

/// (row, col) of a grid cell.
using CellKey = std::pair<std::int64_t, std::int64_t>;

/// Anchors bucketed into half-open square cells [c·s, (c+1)·s). Only non-empty
/// cells are stored, in an ordered map.
struct GridIndex {
  double cell_size = 1.0;
  std::map<CellKey, std::vector<std::size_t>> cells;

  CellKey cell_of(const Point& p) const;

  std::size_t label_count() const;

  /// Pairs (i < j) of labels whose anchors are at most `reach` apart, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> candidate_pairs(const Instance& inst, double reach) const;
};

/// Throws std::invalid_argument unless cell_size > 0.
GridIndex build_grid(const Instance& inst, double cell_size);

/// Cell side used by the approximation schemes: twice the largest label diagonal.
double approximation_cell_size(const Instance& inst);

/// Upper bound on anchors inside a W×H rectangle for labels that are pairwise
/// disjoint at rotation 0: ⌈2W/w_min⌉ + ⌈2H/h_min⌉ + ⌈WH/a_min⌉.
std::size_t packing_bound(double width, double height, double w_min, double h_min, double a_min);

/// Floor-mod for possibly negative cell coordinates.
inline std::int64_t floor_mod(std::int64_t v, std::int64_t m) {
  const std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

inline std::int64_t floor_div(std::int64_t v, std::int64_t m) { return (v - floor_mod(v, m)) / m; }

}  // namespace rotlabel
