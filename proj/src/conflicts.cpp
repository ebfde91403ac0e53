#include "rotlabel/conflicts.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "rotlabel/grid.hpp"

namespace rotlabel {

std::vector<double> dedup_angles(std::vector<double> angles) {
  for (double& a : angles) a = normalize(a);
  std::sort(angles.begin(), angles.end());
  std::vector<double> out;
  for (double a : angles) {
    if (out.empty() || a - out.back() > kAngleTol) out.push_back(a);
  }
  if (out.size() > 1 && angles_equal(out.front(), out.back())) out.pop_back();
  return out;
}

namespace {

// Rotation angles at which the offset vector (length d, direction theta),
// seen from the rotating frame, crosses one of the four lines bounding the
// contact box. With theta = 0 these are exactly
//   {2π − f(h_t+h'_b), π + f(h_t+h'_b), f(h_b+h'_t), π − f(h_b+h'_t),
//    2π − g(w_r+w'_l), g(w_r+w'_l), π − g(w_l+w'_r), π + g(w_l+w'_r)}
// with f(x) = asin(x/d), g(x) = acos(x/d).
std::vector<double> boundary_events(const Point& offset, const Extents& a, const Extents& b) {
  const double d = offset.norm();
  if (!(d > 0.0)) throw std::invalid_argument("conflict events: anchors coincide");
  const double theta = std::atan2(offset.y(), offset.x());

  const double top = a.top + b.bottom;
  const double bottom = a.bottom + b.top;
  const double right = a.right + b.left;
  const double left = a.left + b.right;

  std::vector<double> ev;
  const auto f = [d](double x) { return std::asin(std::min(1.0, x / d)); };
  const auto g = [d](double x) { return std::acos(std::min(1.0, x / d)); };
  const double slack = 1e-12 * d;
  if (top <= d + slack) {
    ev.push_back(kTwoPi - f(top));
    ev.push_back(kPi + f(top));
  }
  if (bottom <= d + slack) {
    ev.push_back(f(bottom));
    ev.push_back(kPi - f(bottom));
  }
  if (right <= d + slack) {
    ev.push_back(kTwoPi - g(right));
    ev.push_back(g(right));
  }
  if (left <= d + slack) {
    ev.push_back(kPi - g(left));
    ev.push_back(kPi + g(left));
  }
  for (double& e : ev) e += theta;
  return dedup_angles(std::move(ev));
}

// Assembles maximal closed arcs of the indicator `pred` given a superset of
// its transition angles. Every event and every gap midpoint is classified.
std::vector<CircularInterval> classify(const std::vector<double>& events, const std::function<bool(double)>& pred) {
  const std::size_t m = events.size();
  if (m == 0) {
    if (pred(0.0)) return {CircularInterval::full()};
    return {};
  }
  std::vector<char> at(m), gap(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double next = i + 1 < m ? events[i + 1] : events[0] + kTwoPi;
    at[i] = pred(events[i]);
    gap[i] = pred(normalize(0.5 * (events[i] + next)));
  }
  // Conflict sets are closed: an event bounding a conflicting gap conflicts.
  for (std::size_t i = 0; i < m; ++i) {
    if (gap[i] || gap[(i + m - 1) % m]) at[i] = 1;
  }
  const bool everything = std::all_of(at.begin(), at.end(), [](char c) { return c; }) &&
                          std::all_of(gap.begin(), gap.end(), [](char c) { return c; });
  if (everything) return {CircularInterval::full()};

  // Items alternate event, gap, event, gap... Start scanning just after a
  // non-conflicting item so that no run is split by the wrap.
  const std::size_t items = 2 * m;
  const auto item = [&](std::size_t k) { return (k % 2 == 0) ? at[k / 2] : gap[k / 2]; };
  std::size_t first_false = 0;
  while (item(first_false)) ++first_false;

  std::vector<CircularInterval> out;
  std::size_t k = 0;
  while (k < items) {
    const std::size_t idx = (first_false + 1 + k) % items;
    if (!item(idx)) {
      ++k;
      continue;
    }
    std::size_t run_end = idx;
    std::size_t len = 1;
    while (k + len < items && item((first_false + 1 + k + len) % items)) {
      run_end = (first_false + 1 + k + len) % items;
      ++len;
    }
    // Closure makes runs start and end on events.
    const double from = events[idx / 2];
    const double to = events[run_end / 2];
    out.push_back(len == 1 ? CircularInterval::point(from) : CircularInterval::between(from, to));
    k += len;
  }
  std::sort(out.begin(), out.end(),
            [](const CircularInterval& x, const CircularInterval& y) { return x.start() < y.start(); });
  return out;
}

}  // namespace

namespace {

bool within_outer_circle(const Label& a, const Point& q) {
  const double r = a.outer_radius();
  return (q - a.anchor).squaredNorm() <= r * r * (1 + 1e-12);
}

}  // namespace

std::vector<double> candidate_conflict_events(const Label& a, const Label& b) {
  if (a.anchor == b.anchor) throw std::invalid_argument("candidate_conflict_events: coincident anchors");
  if (!outer_circles_overlap(a, b)) return {};
  return boundary_events(b.anchor - a.anchor, a.extents, b.extents);
}

std::vector<double> candidate_hard_events(const Label& a, const Point& q) {
  if (!within_outer_circle(a, q)) return {};
  return boundary_events(q - a.anchor, a.extents, Extents{});
}

std::vector<CircularInterval> conflict_ranges(const Label& a, const Label& b) {
  if (!outer_circles_overlap(a, b)) return {};
  return classify(candidate_conflict_events(a, b), [&](double alpha) { return labels_intersect(a, b, alpha); });
}

std::vector<CircularInterval> hard_conflict_ranges(const Label& a, const Point& q) {
  if (!within_outer_circle(a, q)) return {};
  return classify(candidate_hard_events(a, q), [&](double alpha) { return point_in_label(a, q, alpha); });
}

std::vector<CircularInterval> ConflictGraph::soft_between(std::size_t i, std::size_t j) const {
  std::vector<CircularInterval> out;
  const std::size_t lo = std::min(i, j), hi = std::max(i, j);
  for (std::size_t k : soft_by_label[lo]) {
    if (soft[k].label == lo && soft[k].other == hi) out.push_back(soft[k].interval);
  }
  return out;
}

std::vector<CircularInterval> ConflictGraph::hard_of(std::size_t i) const {
  std::vector<CircularInterval> out;
  for (std::size_t k : hard_by_label[i]) out.push_back(hard[k].interval);
  return out;
}

ConflictGraph build_conflict_graph(const Instance& inst) {
  const std::size_t n = inst.labels.size();
  ConflictGraph g;
  g.adjacency.resize(n);
  g.soft_by_label.resize(n);
  g.hard_by_label.resize(n);
  if (n == 0) return g;

  const double reach = 2.0 * max_outer_radius(inst);
  const GridIndex grid = build_grid(inst, reach);
  for (const auto& [i, j] : grid.candidate_pairs(inst, reach)) {
    const Label& a = inst.labels[i];
    const Label& b = inst.labels[j];
    if (a.anchor == b.anchor) throw std::invalid_argument("conflict graph: labels '" + a.id + "' and '" + b.id + "' share an anchor");
    for (const auto& r : conflict_ranges(a, b)) g.soft.push_back({i, j, r, ConflictKind::Soft});
    for (const auto& r : hard_conflict_ranges(a, b.anchor)) g.hard.push_back({i, j, r, ConflictKind::Hard});
    for (const auto& r : hard_conflict_ranges(b, a.anchor)) g.hard.push_back({j, i, r, ConflictKind::Hard});
  }
  const auto by_pair = [](const ConflictRange& x, const ConflictRange& y) {
    if (x.label != y.label) return x.label < y.label;
    if (x.other != y.other) return x.other < y.other;
    return x.interval.start() < y.interval.start();
  };
  std::sort(g.soft.begin(), g.soft.end(), by_pair);
  std::sort(g.hard.begin(), g.hard.end(), by_pair);

  for (std::size_t k = 0; k < g.soft.size(); ++k) {
    const auto& c = g.soft[k];
    g.soft_by_label[c.label].push_back(k);
    g.soft_by_label[c.other].push_back(k);
    g.adjacency[c.label].push_back(c.other);
    g.adjacency[c.other].push_back(c.label);
  }
  for (std::size_t k = 0; k < g.hard.size(); ++k) g.hard_by_label[g.hard[k].label].push_back(k);
  for (auto& adj : g.adjacency) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }
  return g;
}

std::vector<double> event_set(std::size_t label, const ConflictGraph& graph) {
  std::vector<double> ev;
  const auto add = [&ev](const CircularInterval& r) {
    if (r.is_empty() || r.is_full()) return;
    ev.push_back(r.start());
    if (!r.is_point()) ev.push_back(r.end());
  };
  for (std::size_t k : graph.soft_by_label[label]) add(graph.soft[k].interval);
  for (std::size_t k : graph.hard_by_label[label]) add(graph.hard[k].interval);
  return dedup_angles(std::move(ev));
}

}  // namespace rotlabel
