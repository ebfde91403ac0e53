#pragma once

#include <cstdint>
#include <vector>

#include "rotlabel/conflicts.hpp"
#include "rotlabel/exact.hpp"
#include "rotlabel/grid.hpp"
#include "rotlabel/labeling.hpp"

namespace rotlabel {

/// Independent groups of kept grid cells for one shift of the grid. Labels in
/// different groups never conflict; labels in deleted rows/columns get nothing.
struct MetaCellCollection {
  int k = 2;
  int row_offset = 0;
  int col_offset = 0;
  std::vector<std::vector<std::size_t>> groups;  // label indices per meta-cell, canonical order
  std::vector<std::size_t> dropped;              // labels in deleted rows or columns
};

/// Deletes every k-th row and column starting at the given offsets and groups
/// the surviving cells into (k−1)×(k−1) meta-cells.
MetaCellCollection meta_cells(const GridIndex& grid, int k, int row_offset, int col_offset);

/// The four parity classes used by the 1/4-approximation: keep the cells with
/// row ≡ row_parity and col ≡ col_parity (mod 2), each cell on its own.
MetaCellCollection parity_class(const GridIndex& grid, int row_parity, int col_parity);

struct ApproxOptions {
  ExactOptions exact;
  /// Solve shifts on worker threads; the selection does not depend on it.
  bool parallel = true;
};

struct ApproxReport {
  double value = 0.0;
  int chosen_row_offset = 0;
  int chosen_col_offset = 0;
  std::vector<double> per_shift_values;  // row-major over offsets
  std::uint64_t nodes = 0;
};

/// Best of the four parity classes, each solved exactly per kept cell.
ActiveRangeAssignment quarter_approx(const Instance& inst, const ConflictGraph& graph, const ApproxOptions& options = {},
                                     ApproxReport* report = nullptr);
ActiveRangeAssignment quarter_approx(const Instance& inst, const ApproxOptions& options = {});

/// k = ⌈2/ε⌉.  Throws std::invalid_argument unless 0 < ε < 1.
int eptas_k(double epsilon);

/// Best of the k² shifted meta-cell collections, each meta-cell solved exactly.
ActiveRangeAssignment eptas(const Instance& inst, const ConflictGraph& graph, double epsilon,
                            const ApproxOptions& options = {}, ApproxReport* report = nullptr);
ActiveRangeAssignment eptas(const Instance& inst, double epsilon, const ApproxOptions& options = {});

/// Solves every group of `collection` exactly and merges the results.
ActiveRangeAssignment solve_collection(const Instance& inst, const ConflictGraph& graph,
                                       const MetaCellCollection& collection, const ExactOptions& options,
                                       std::uint64_t* nodes = nullptr);

}  // namespace rotlabel
