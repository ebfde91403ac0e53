#pragma once

#include <cstddef>
#include <vector>

#include "rotlabel/circular.hpp"
#include "rotlabel/geom.hpp"

namespace rotlabel {

enum class ConflictKind { Soft, Hard };

/// A maximal arc of rotation angles (possibly a single angle) at which a pair
/// is in conflict.
///
/// Soft: labels `label` and `other` intersect; stored once per unordered pair
/// with label < other. Hard: label `label` covers the anchor of label `other`;
/// directed.
struct ConflictRange {
  std::size_t label = 0;
  std::size_t other = 0;
  CircularInterval interval;
  ConflictKind kind = ConflictKind::Soft;
};

/// Angles (at most 8, sorted, deduplicated) at which the boundaries of `a` and
/// `b` can start or stop touching. Throws std::invalid_argument when the
/// anchors coincide.
std::vector<double> candidate_conflict_events(const Label& a, const Label& b);

/// Angles (at most 8) at which the boundary of `a` can sweep over `q`.
std::vector<double> candidate_hard_events(const Label& a, const Point& q);

/// Maximal closed arcs where `a` and `b` intersect; at most four.
std::vector<CircularInterval> conflict_ranges(const Label& a, const Label& b);

/// Maximal closed arcs where `a` covers `q`.
std::vector<CircularInterval> hard_conflict_ranges(const Label& a, const Point& q);

struct ConflictGraph {
  std::vector<ConflictRange> soft;
  std::vector<ConflictRange> hard;
  /// Soft partners per label, sorted.
  std::vector<std::vector<std::size_t>> adjacency;
  /// Indices into `soft` / `hard` per label.
  std::vector<std::vector<std::size_t>> soft_by_label;
  std::vector<std::vector<std::size_t>> hard_by_label;

  std::size_t label_count() const { return adjacency.size(); }

  /// Soft conflict arcs shared by labels i and j (in either order).
  std::vector<CircularInterval> soft_between(std::size_t i, std::size_t j) const;
  /// All hard arcs of label i.
  std::vector<CircularInterval> hard_of(std::size_t i) const;
};

/// Conflict graph of the whole instance. Neighbor pairs come from grid
/// bucketing; the result is ordered canonically by (label, other).
ConflictGraph build_conflict_graph(const Instance& inst);

/// Sorted, deduplicated endpoints of every conflict arc involving `label`.
std::vector<double> event_set(std::size_t label, const ConflictGraph& graph);

/// Sorts angles into [0, 2π) and merges those within kAngleTol.
std::vector<double> dedup_angles(std::vector<double> angles);

}  // namespace rotlabel
