#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rotlabel/geom.hpp"

namespace rotlabel {

/// A generated instance plus the labels that form the gadget proper. Any
/// remaining labels are connectors: the first labels of the chains or pipes
/// that attach to the gadget. Their anchors fix the gadget's hard conflicts;
/// solving only `core` treats them as plain map points.
struct GadgetInstance {
  Instance instance;
  std::vector<std::size_t> core;
};

/// m ≥ 4 unit squares on a horizontal line, spacing √2. Labels 0, 1 and
/// m−2, m−1 are terminals; the rest form the inner chain.
GadgetInstance gen_chain(int m);

/// Five unit squares on a horizontal line, spacing 3√2/4.
GadgetInstance gen_inverter();

/// Turn point b at (√2, 0) with incoming a at the origin and outgoing c, d at
/// ±π/6 from the a→b axis, all neighbours √2 apart. Connectors continue the
/// incoming chain to the left of a and both outgoing chains straight on.
/// Core order: a, b, c, d.
GadgetInstance gen_turn();

/// Inner unit square at the origin and three outer ones anchored on its outer
/// circle, 2π/3 apart. Each outer label has two connectors on its own outer
/// circle at ±3π/4 from the direction back to the inner anchor, splitting that
/// circle into arcs of 3π/4, 3π/4 and π/2. Core order: inner, outer 0..2.
GadgetInstance gen_clause_core();

/// The inner and outer clause labels only.
GadgetInstance gen_clause_core_bare();

struct RandomSpec {
  int n = 10;
  double area = 100.0;  // side of the sampling square is sqrt(area)
  std::uint64_t seed = 1;
  /// Bounded-ratio rectangles (width 1..2, height 0.5..1) anchored anywhere
  /// inside instead of lower-left anchored unit squares.
  bool general = false;
};

/// n labels with anchors uniform in the square, rejection-sampled so labels
/// are pairwise disjoint at rotation 0. Deterministic per seed. Throws
/// std::runtime_error if the area is too small to place them.
Instance gen_random(const RandomSpec& spec);

}  // namespace rotlabel
