#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "rotlabel/circular.hpp"
#include "rotlabel/conflicts.hpp"
#include "rotlabel/labeling.hpp"

namespace rotlabel {

/// Active ranges worth trying for one label: every arc whose endpoints are
/// events and whose interior avoids the label's hard conflicts, plus EMPTY
/// (always first).
struct CandidateRangeSet {
  std::size_t label = 0;
  std::vector<CircularInterval> candidates;
};

CandidateRangeSet enumerate_candidates(std::size_t label, const std::vector<double>& events,
                                       const std::vector<CircularInterval>& hard_ranges);

/// Thrown when a component exceeds the configured label or node budget.
class SolverCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExactOptions {
  std::size_t max_component_labels = 20;
  std::uint64_t max_nodes = 10'000'000;
  /// Optional restriction on candidates (label index, range); EMPTY is always kept.
  std::function<bool(std::size_t, const CircularInterval&)> candidate_filter;
};

struct ExactStats {
  std::uint64_t nodes = 0;
  std::size_t components = 0;
  std::size_t largest_component = 0;
};

/// Optimal MaxTotal assignment for `labels` (indices into inst). Labels
/// outside the set are treated as never active, but their anchors still
/// block. Every other entry of the result is absent. Among optimal
/// assignments the one with the earliest starts in label order is returned;
/// at equal starts the longer range wins and absent ranges come last.
ActiveRangeAssignment solve_exact(const Instance& inst, const ConflictGraph& graph, std::span<const std::size_t> labels,
                                  const ExactOptions& options = {}, ExactStats* stats = nullptr);

/// As solve_exact, but writes the ranges of `labels` into `out` and leaves
/// every other entry untouched.
void solve_exact_into(const ConflictGraph& graph, std::span<const std::size_t> labels, const ExactOptions& options,
                      ActiveRangeAssignment& out, ExactStats* stats = nullptr);

/// Every optimal assignment for `labels` (value within 1e-9 of the optimum),
/// at most `max_solutions` of them, in search order.
std::vector<ActiveRangeAssignment> solve_exact_all(const Instance& inst, const ConflictGraph& graph,
                                                   std::span<const std::size_t> labels, const ExactOptions& options = {},
                                                   std::size_t max_solutions = 10'000);

/// Candidate sets as the solver sees them. Events are the endpoints of the
/// hard ranges and of the soft ranges between members of `labels`, pooled
/// over each connected component.
std::vector<CandidateRangeSet> candidate_sets(const ConflictGraph& graph, std::span<const std::size_t> labels);

struct SampledCheck {
  bool ok = false;
  double grid_best = 0.0;  // best total over grid-endpoint assignments
  double reference = 0.0;  // total of the checked assignment on `labels`
  double slack = 0.0;
};

/// Searches every assignment whose ranges start and end on multiples of
/// 2π/resolution and confirms none beats `phi` on `labels` by more than
/// 2π/resolution per label.
SampledCheck sampled_upper_check(const Instance& inst, const ConflictGraph& graph, std::span<const std::size_t> labels,
                                 const ActiveRangeAssignment& phi, int resolution);

/// True iff the open arc (start, start + extent) shares a point with `arc`.
bool open_arc_meets(double start, double extent, const CircularInterval& arc);

}  // namespace rotlabel
