#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rotlabel/gadgets.hpp"

namespace rotlabel {

/// One random instance of the ratio suite, solved by every algorithm.
struct RatioRow {
  std::uint64_t seed = 0;
  int n = 0;
  bool general = false;
  double exact = 0.0;
  double quarter = 0.0;
  double eptas_05 = 0.0;
  double eptas_09 = 0.0;
  double seconds = 0.0;
  std::size_t violations = 0;  // summed over all four assignments
};

/// Instance `index` of the suite: n cycles through 2..max_n, every other
/// instance uses general rectangles, anchors are packed at about one label
/// per three square units so most instances have conflicts.
RandomSpec ratio_suite_spec(std::size_t index, std::uint64_t base_seed, int max_n = 10);

std::vector<RatioRow> run_ratio_suite(std::size_t count, std::uint64_t base_seed = 1, int max_n = 10);

struct ScaleRow {
  int n = 0;
  double build_seconds = 0.0;   // conflict graph
  double solve_seconds = 0.0;   // quarter_approx including its own grid
  double value = 0.0;
};

/// Sparse unit squares: ten square units of area per label.
ScaleRow run_scale(int n, std::uint64_t seed = 1);

std::string ratio_rows_json(const std::vector<RatioRow>& rows);
std::string scale_rows_json(const std::vector<ScaleRow>& rows);

}  // namespace rotlabel
