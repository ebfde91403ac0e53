#include "rotlabel/exact.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

namespace rotlabel {

bool open_arc_meets(double start, double extent, const CircularInterval& arc) {
  if (arc.is_empty() || extent <= kAngleTol) return false;
  double t = ccw_distance(start, arc.start());
  if (t >= kTwoPi - kAngleTol) t = 0.0;
  for (int k = -1; k <= 1; ++k) {
    const double lo = t + k * kTwoPi;
    const double hi = lo + arc.extent();
    const double left = std::max(0.0, lo);
    const double right = std::min(extent, hi);
    if (right - left > kAngleTol) return true;
    if (std::abs(right - left) <= kAngleTol && left > kAngleTol && left < extent - kAngleTol &&
        arc.contains(start + left)) {
      return true;
    }
  }
  return false;
}

CandidateRangeSet enumerate_candidates(std::size_t label, const std::vector<double>& events,
                                       const std::vector<CircularInterval>& hard_ranges) {
  CandidateRangeSet out;
  out.label = label;
  auto& c = out.candidates;
  c.push_back(CircularInterval::empty());

  const std::vector<double> ev = dedup_angles(events);
  if (hard_ranges.empty()) {
    if (ev.empty()) {
      c.push_back(CircularInterval::full());
      return out;
    }
    for (double from : ev) {
      for (double to : ev) {
        c.push_back(angles_equal(from, to) ? CircularInterval::closed(from, kTwoPi) : CircularInterval::between(from, to));
      }
    }
  } else {
    for (const auto& free : subtract(CircularInterval::full(), hard_ranges)) {
      std::vector<double> pos{0.0, free.extent()};
      for (double e : ev) {
        const double p = ccw_distance(free.start(), e);
        if (p > kAngleTol && p < free.extent() - kAngleTol) pos.push_back(p);
      }
      std::sort(pos.begin(), pos.end());
      for (std::size_t i = 0; i < pos.size(); ++i) {
        for (std::size_t j = i + 1; j < pos.size(); ++j) {
          if (pos[j] - pos[i] > kAngleTol) c.push_back(CircularInterval::closed(free.start() + pos[i], pos[j] - pos[i]));
        }
      }
    }
  }
  std::sort(c.begin() + 1, c.end(), [](const CircularInterval& x, const CircularInterval& y) {
    if (x.start() != y.start()) return x.start() < y.start();
    return x.extent() < y.extent();
  });
  const auto same = [](const CircularInterval& x, const CircularInterval& y) {
    return angles_equal(x.start(), y.start()) && std::abs(x.extent() - y.extent()) <= kAngleTol;
  };
  c.erase(std::unique(c.begin() + 1, c.end(), same), c.end());
  return out;
}

namespace {

std::vector<std::vector<std::size_t>> components(const ConflictGraph& graph, std::span<const std::size_t> labels) {
  std::vector<std::size_t> members(labels.begin(), labels.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::map<std::size_t, std::size_t> parent;
  for (std::size_t l : members) parent[l] = l;
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t l : members) {
    for (std::size_t v : graph.adjacency[l]) {
      if (!parent.count(v)) continue;
      const std::size_t a = find(l), b = find(v);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t l : members) groups[find(l)].push_back(l);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, g] : groups) out.push_back(std::move(g));
  return out;
}

}  // namespace

std::vector<CandidateRangeSet> candidate_sets(const ConflictGraph& graph, std::span<const std::size_t> labels) {
  std::vector<std::size_t> members(labels.begin(), labels.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  const auto slot = [&](std::size_t l) {
    return static_cast<std::size_t>(std::lower_bound(members.begin(), members.end(), l) - members.begin());
  };
  const auto add = [](std::vector<double>& ev, const CircularInterval& r) {
    if (r.is_empty() || r.is_full()) return;
    ev.push_back(r.start());
    if (!r.is_point()) ev.push_back(r.end());
  };

  // Own events first.
  const std::size_t m = members.size();
  std::vector<std::vector<double>> events(m);
  std::vector<std::vector<std::pair<std::size_t, CircularInterval>>> soft(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t l = members[i];
    for (std::size_t k : graph.soft_by_label[l]) {
      const auto& c = graph.soft[k];
      const std::size_t partner = c.label == l ? c.other : c.label;
      if (!std::binary_search(members.begin(), members.end(), partner)) continue;
      add(events[i], c.interval);
      soft[i].emplace_back(slot(partner), c.interval);
    }
    for (const auto& h : graph.hard_of(l)) add(events[i], h);
    events[i] = dedup_angles(std::move(events[i]));
  }

  // A border that is no event of its own label can be shared with a
  // conflicting neighbour whose border is pinned there, so a neighbour's
  // border angles inside a common soft range count as well.
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<double> more;
      for (const auto& [j, range] : soft[i]) {
        for (double t : events[j]) {
          if (!range.contains(t)) continue;
          const bool known = std::any_of(events[i].begin(), events[i].end(), [t](double e) { return angles_equal(e, t); });
          if (!known) more.push_back(t);
        }
      }
      if (more.empty()) continue;
      more.insert(more.end(), events[i].begin(), events[i].end());
      const std::size_t before = events[i].size();
      events[i] = dedup_angles(std::move(more));
      grew = grew || events[i].size() != before;
    }
  }

  std::vector<CandidateRangeSet> out;
  out.reserve(labels.size());
  for (std::size_t l : labels) out.push_back(enumerate_candidates(l, events[slot(l)], graph.hard_of(l)));
  return out;
}

namespace {

constexpr double kObjTol = 1e-9;

using Bits = std::vector<std::uint64_t>;

Bits all_bits(std::size_t n) {
  Bits b((n + 63) / 64, ~std::uint64_t{0});
  if (n % 64) b.back() = (std::uint64_t{1} << (n % 64)) - 1;
  return b;
}

void set_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }

std::size_t first_bit(const Bits& b) {
  for (std::size_t w = 0; w < b.size(); ++w) {
    if (b[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(b[w]));
  }
  return std::numeric_limits<std::size_t>::max();
}

// True when `c` can grow at one end without meeting a hard range or any
// soft range it does not already meet. Conflict status is constant between
// consecutive events, so probing the next gap is enough. At the endpoint
// itself only a soft range that begins there (ends there, for the start
// side) is new: one that continues inside `c` already keeps its partner out.
bool dominated(const CircularInterval& c, const std::vector<double>& events, const std::vector<CircularInterval>& soft,
               const std::vector<CircularInterval>& hard) {
  if (c.is_empty() || c.extent() >= kTwoPi - kAngleTol || events.empty()) return false;
  const auto inside = [&](double t) {
    const auto hit = [t](const CircularInterval& r) { return r.contains(t); };
    return std::any_of(soft.begin(), soft.end(), hit) || std::any_of(hard.begin(), hard.end(), hit);
  };
  const auto opens_at = [&](double t, bool forward) {
    if (std::any_of(hard.begin(), hard.end(), [t](const CircularInterval& r) { return r.contains(t); })) return true;
    return std::any_of(soft.begin(), soft.end(), [&](const CircularInterval& r) {
      return r.contains(t) && angles_equal(forward ? r.start() : r.end(), t);
    });
  };
  const auto gap_mid = [](double from, double to) {
    const double gap = ccw_distance(from, to);
    return normalize(from + 0.5 * (gap <= kAngleTol ? kTwoPi : gap));
  };
  const double e = c.end(), s = c.start();
  auto it = std::upper_bound(events.begin(), events.end(), e + kAngleTol);
  const double next = it == events.end() ? events.front() : *it;
  if (!opens_at(e, true) && !inside(gap_mid(e, next))) return true;
  it = std::lower_bound(events.begin(), events.end(), s - kAngleTol);
  const double prev = it == events.begin() ? events.back() : *std::prev(it);
  return !opens_at(s, false) && !inside(gap_mid(prev, s));
}

// Labels of one search, in search order, with candidates sorted by
// decreasing length (EMPTY last) and pairwise compatibility bitsets.
struct Problem {
  std::vector<std::size_t> labels;
  std::vector<std::vector<CircularInterval>> cands;
  std::vector<std::vector<double>> lens;
  std::vector<Bits> initial;
  struct Edge {
    std::size_t to;
    std::vector<Bits> rows;  // rows[c]: candidates of `to` compatible with candidate c
  };
  std::vector<std::vector<Edge>> edges;
};

// Search order. Value order visits labels by decreasing conflict degree and
// candidates by decreasing length; tie-break order visits labels by index and
// candidates by start, so the first assignment reaching a value is the
// lexicographically smallest one.
enum class Order { Value, TieBreak };

Problem build_problem(const ConflictGraph& graph, std::vector<std::size_t> labels, const ExactOptions& options,
                      Order order = Order::Value) {
  Problem p;
  std::vector<std::size_t> members = labels;
  std::sort(members.begin(), members.end());
  const auto degree = [&](std::size_t l) {
    std::size_t d = 0;
    for (std::size_t v : graph.adjacency[l]) d += std::binary_search(members.begin(), members.end(), v);
    return d;
  };
  if (order == Order::TieBreak) {
    labels = members;
  } else {
    std::stable_sort(labels.begin(), labels.end(), [&](std::size_t a, std::size_t b) {
      const std::size_t da = degree(a), db = degree(b);
      return da != db ? da > db : a < b;
    });
  }
  p.labels = labels;
  const std::size_t m = labels.size();

  const auto sets = candidate_sets(graph, labels);
  p.cands.resize(m);
  p.lens.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    auto cs = sets[i].candidates;
    if (!options.candidate_filter) {
      std::vector<double> ends;
      for (const auto& c : cs) {
        if (c.is_empty()) continue;
        ends.push_back(c.start());
        ends.push_back(c.end());
      }
      ends = dedup_angles(std::move(ends));
      std::vector<CircularInterval> soft;
      for (std::size_t other : graph.adjacency[labels[i]]) {
        if (!std::binary_search(members.begin(), members.end(), other)) continue;
        for (const auto& r : graph.soft_between(labels[i], other)) soft.push_back(r);
      }
      const auto hard = graph.hard_of(labels[i]);
      std::erase_if(cs, [&](const CircularInterval& c) { return dominated(c, ends, soft, hard); });
    } else {
      std::erase_if(cs, [&](const CircularInterval& c) { return !c.is_empty() && !options.candidate_filter(labels[i], c); });
    }
    std::erase_if(cs, [](const CircularInterval& c) { return c.is_empty(); });
    if (order == Order::TieBreak) {
      std::sort(cs.begin(), cs.end(), [](const CircularInterval& a, const CircularInterval& b) {
        if (std::abs(a.start() - b.start()) > kAngleTol) return a.start() < b.start();
        return a.length() > b.length();
      });
    } else {
      std::stable_sort(cs.begin(), cs.end(),
                       [](const CircularInterval& a, const CircularInterval& b) { return a.length() > b.length(); });
    }
    cs.push_back(CircularInterval::empty());
    p.cands[i] = cs;
    for (const auto& c : cs) p.lens[i].push_back(c.length());
    p.initial.push_back(all_bits(cs.size()));
  }

  std::map<std::size_t, std::size_t> pos;
  for (std::size_t i = 0; i < m; ++i) pos[labels[i]] = i;
  p.edges.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t other : graph.adjacency[labels[i]]) {
      const auto it = pos.find(other);
      if (it == pos.end()) continue;
      const std::size_t j = it->second;
      const auto soft = graph.soft_between(labels[i], other);
      Problem::Edge e{j, {}};
      e.rows.reserve(p.cands[i].size());
      for (const auto& ca : p.cands[i]) {
        std::vector<CircularInterval> blocked;
        if (!ca.is_empty()) {
          for (const auto& r : soft) {
            for (const auto& x : intersect(ca.interior(), r)) blocked.push_back(x);
          }
        }
        Bits row = all_bits(p.cands[j].size());
        if (!blocked.empty()) {
          row.assign(row.size(), 0);
          for (std::size_t cb = 0; cb < p.cands[j].size(); ++cb) {
            const auto& b = p.cands[j][cb];
            const bool clash = !b.is_empty() && std::any_of(blocked.begin(), blocked.end(), [&](const CircularInterval& x) {
              return open_arc_meets(b.start(), b.extent(), x);
            });
            if (!clash) set_bit(row, cb);
          }
        }
        e.rows.push_back(std::move(row));
      }
      p.edges[i].push_back(std::move(e));
    }
  }
  return p;
}

class Search {
 public:
  enum class Mode {
    Best,    // one optimal assignment, first found in search order
    All,     // every assignment within tolerance of the optimum
    Reach,   // first assignment reaching `target`
  };

  Search(const Problem& p, Mode mode, std::uint64_t max_nodes, std::size_t max_solutions = 1, double target = 0.0)
      : p_(p), mode_(mode), max_solutions_(max_solutions), max_nodes_(max_nodes), target_(target) {
    choice_.assign(p.labels.size(), 0);
    allowed_ = p.initial;
    // Candidates are sorted by length only in value order.
    by_length_ = mode != Mode::Reach;
    suffix_.assign(p.labels.size() + 1, std::numeric_limits<double>::infinity());
    suffix_.back() = 0.0;
  }

  void run() {
    // Optimum of every suffix of the label order on its own, solved from the
    // back so each pass can use the ones before it as bounds.
    const Mode mode = mode_;
    mode_ = Mode::Best;
    for (std::size_t d = p_.labels.size(); d-- > 1;) {
      best_ = -1.0;
      visit(d, 0.0);
      suffix_[d] = best_ + static_cast<double>(p_.labels.size() - d) * kObjTol;
    }
    mode_ = mode;
    best_ = -1.0;
    best_choice_.clear();
    try {
      visit(0, 0.0);
    } catch (const Done&) {
    }
  }

  double best() const { return best_; }
  const std::vector<std::size_t>& best_choice() const { return best_choice_; }
  const std::vector<std::vector<std::size_t>>& all() const { return all_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  struct Done {};

  double longest(std::size_t d) const {
    if (by_length_) {
      const std::size_t f = first_bit(allowed_[d]);
      return f < p_.lens[d].size() ? p_.lens[d][f] : 0.0;
    }
    double best = 0.0;
    const Bits& b = allowed_[d];
    for (std::size_t w = 0; w < b.size(); ++w) {
      for (std::uint64_t word = b[w]; word; word &= word - 1) {
        best = std::max(best, p_.lens[d][w * 64 + static_cast<std::size_t>(std::countr_zero(word))]);
      }
    }
    return best;
  }

  // Longest allowed candidates up to some label, then that label's suffix
  // optimum; the tightest split wins.
  double remaining_bound(std::size_t from) const {
    double s = 0.0;
    double bound = suffix_[from];
    for (std::size_t d = from; d < allowed_.size(); ++d) {
      s += longest(d);
      bound = std::min(bound, s + suffix_[d + 1]);
    }
    return bound;
  }

  // True when a branch with this optimistic value cannot matter.
  bool hopeless(double optimistic) const {
    switch (mode_) {
      case Mode::Best: return optimistic <= best_ + kObjTol;
      case Mode::All: return optimistic < best_ - kObjTol;
      case Mode::Reach: return optimistic < target_ - kObjTol;
    }
    return false;
  }

  void record(double value) {
    switch (mode_) {
      case Mode::Best:
        if (value > best_ + kObjTol) {
          best_ = value;
          best_choice_ = choice_;
        }
        break;
      case Mode::All:
        if (value > best_ + kObjTol) {
          best_ = value;
          all_.clear();
        }
        if (value >= best_ - kObjTol && all_.size() < max_solutions_) all_.push_back(choice_);
        break;
      case Mode::Reach:
        if (value >= target_ - kObjTol) {
          best_ = value;
          best_choice_ = choice_;
          throw Done{};
        }
        break;
    }
  }

  void visit(std::size_t depth, double value) {
    if (++nodes_ > max_nodes_) throw SolverCapExceeded("exact search exceeded the node budget");
    if (depth == p_.labels.size()) {
      record(value);
      return;
    }
    if (hopeless(value + remaining_bound(depth))) return;
    const double rest = remaining_bound(depth + 1);

    const Bits here = allowed_[depth];
    std::vector<std::pair<std::size_t, Bits>> saved;
    for (std::size_t w = 0; w < here.size(); ++w) {
      std::uint64_t word = here[w];
      while (word) {
        const std::size_t c = w * 64 + static_cast<std::size_t>(std::countr_zero(word));
        word &= word - 1;
        const double v = value + p_.lens[depth][c];
        if (hopeless(v + rest)) {
          if (by_length_) return;  // later candidates are no longer
          continue;
        }
        saved.clear();
        for (const auto& e : p_.edges[depth]) {
          if (e.to <= depth) continue;
          saved.emplace_back(e.to, allowed_[e.to]);
          auto& target = allowed_[e.to];
          const auto& row = e.rows[c];
          for (std::size_t k = 0; k < target.size(); ++k) target[k] &= row[k];
        }
        choice_[depth] = c;
        visit(depth + 1, v);
        for (auto& [to, bits] : saved) allowed_[to] = std::move(bits);
      }
    }
  }

  const Problem& p_;
  Mode mode_;
  std::size_t max_solutions_;
  std::uint64_t max_nodes_;
  double target_;
  bool by_length_ = true;
  std::vector<double> suffix_;
  std::vector<std::size_t> choice_;
  std::vector<Bits> allowed_;
  double best_ = -1.0;
  std::vector<std::size_t> best_choice_;
  std::vector<std::vector<std::size_t>> all_;
  std::uint64_t nodes_ = 0;
};

void write_choice(const Problem& p, const std::vector<std::size_t>& choice, ActiveRangeAssignment& out) {
  for (std::size_t d = 0; d < p.labels.size(); ++d) out.set(p.labels[d], p.cands[d][choice[d]]);
}

}  // namespace

void solve_exact_into(const ConflictGraph& graph, std::span<const std::size_t> labels, const ExactOptions& options,
                      ActiveRangeAssignment& out, ExactStats* stats) {
  for (const auto& comp : components(graph, labels)) {
    if (comp.size() > options.max_component_labels) {
      throw SolverCapExceeded("component of " + std::to_string(comp.size()) + " labels exceeds the cap of " +
                              std::to_string(options.max_component_labels));
    }
    const Problem p = build_problem(graph, comp, options);
    Search s(p, Search::Mode::Best, options.max_nodes);
    s.run();
    const Problem q = build_problem(graph, comp, options, Order::TieBreak);
    Search t(q, Search::Mode::Reach, options.max_nodes, 1, s.best());
    t.run();
    if (t.best_choice().empty()) throw std::logic_error("exact: tie-break pass lost the optimum");
    write_choice(q, t.best_choice(), out);
    if (stats) {
      stats->nodes += s.nodes() + t.nodes();
      stats->components += 1;
      stats->largest_component = std::max(stats->largest_component, comp.size());
    }
  }
}

ActiveRangeAssignment solve_exact(const Instance& inst, const ConflictGraph& graph, std::span<const std::size_t> labels,
                                  const ExactOptions& options, ExactStats* stats) {
  ActiveRangeAssignment out(inst.size());
  out.algorithm = "exact";
  solve_exact_into(graph, labels, options, out, stats);
  return out;
}

std::vector<ActiveRangeAssignment> solve_exact_all(const Instance& inst, const ConflictGraph& graph,
                                                   std::span<const std::size_t> labels, const ExactOptions& options,
                                                   std::size_t max_solutions) {
  std::vector<std::size_t> members(labels.begin(), labels.end());
  if (members.size() > options.max_component_labels) {
    throw SolverCapExceeded("label set exceeds the cap of " + std::to_string(options.max_component_labels));
  }
  const Problem p = build_problem(graph, members, options);
  Search s(p, Search::Mode::All, options.max_nodes, max_solutions);
  s.run();
  std::vector<ActiveRangeAssignment> out;
  for (const auto& choice : s.all()) {
    ActiveRangeAssignment phi(inst.size());
    phi.algorithm = "exact";
    write_choice(p, choice, phi);
    out.push_back(std::move(phi));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Grid oracle. Angles are cut into `resolution` cells; atom 2k is the grid
// point k·step and atom 2k+1 the open cell between points k and k+1. A range
// from point i spanning L cells covers the atoms 2i+1 .. 2i+2L-1, so every
// covered run starts and ends on a cell atom.
//
// The best grid assignment is found by sweeping the atoms once per choice of
// which labels wrap through angle 0. Each label carries one of three phases:
//   not wrapping: before, inside, after
//   wrapping:     inside (from 0), gap, inside (up to 2π)
// and the sweep advances labels one at a time so hard and pairwise checks
// only look at labels already placed on the current atom.

namespace {

class GridOracle {
 public:
  GridOracle(const ConflictGraph& graph, std::span<const std::size_t> labels, int resolution)
      : r_(resolution), atoms_(2 * static_cast<std::size_t>(resolution)), step_(kTwoPi / resolution) {
    labels_.assign(labels.begin(), labels.end());
    const std::size_t m = labels_.size();
    if (m > 8) throw std::invalid_argument("sampled_upper_check: at most 8 labels");
    hard_.assign(m, std::vector<char>(atoms_, 0));
    for (std::size_t i = 0; i < m; ++i) {
      for (const auto& h : graph.hard_of(labels_[i])) mark(h, hard_[i]);
    }
    clash_.assign(m, std::vector<std::vector<char>>(m));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        std::vector<char> hit(atoms_, 0);
        for (const auto& s : graph.soft_between(labels_[i], labels_[j])) mark(s, hit);
        clash_[i][j] = std::move(hit);
      }
    }
  }

  int best_cells() const {
    const std::size_t m = labels_.size();
    int best = 0;
    for (std::uint32_t wrap = 0; wrap < (1u << m); ++wrap) best = std::max(best, sweep(wrap));
    return best;
  }

  double step() const { return step_; }

 private:
  void mark(const CircularInterval& arc, std::vector<char>& out) const {
    for (int k = 0; k < r_; ++k) {
      if (arc.contains(k * step_)) out[2 * k] = 1;
      if (open_arc_meets(k * step_, step_, arc)) out[2 * k + 1] = 1;
    }
  }

  int sweep(std::uint32_t wrap) const {
    const std::size_t m = labels_.size();
    std::size_t states = 1;
    std::vector<std::size_t> pow3(m + 1, 1);
    for (std::size_t k = 0; k < m; ++k) pow3[k + 1] = pow3[k] * 3;
    states = pow3[m];
    constexpr int kDead = std::numeric_limits<int>::min() / 2;
    std::vector<int> dp(states, kDead), next(states);
    dp[0] = 0;
    const auto wraps = [&](std::size_t k) { return (wrap >> k) & 1u; };
    const auto covering = [&](std::size_t k, std::size_t phase) { return wraps(k) ? phase != 1 : phase == 1; };

    for (std::size_t a = 0; a < atoms_; ++a) {
      const bool cell = a % 2 == 1;
      for (std::size_t k = 0; k < m; ++k) {
        std::fill(next.begin(), next.end(), kDead);
        for (std::size_t s = 0; s < states; ++s) {
          if (dp[s] == kDead) continue;
          const std::size_t phase = (s / pow3[k]) % 3;
          for (std::size_t step = 0; step < 2; ++step) {
            std::size_t np = phase;
            if (step == 1) {
              if (phase == 2) continue;
              // Covered runs start on a cell atom and stop right before a point atom.
              const bool entering = wraps(k) ? phase == 1 : phase == 0;
              if (entering ? !cell : cell) continue;
              if (wraps(k) && a == 0) continue;
              np = phase + 1;
            }
            const std::size_t ns = s + (np - phase) * pow3[k];
            int gain = 0;
            if (covering(k, np)) {
              if (hard_[k][a]) continue;
              bool clash = false;
              for (std::size_t j = 0; j < k && !clash; ++j) {
                const std::size_t pj = (ns / pow3[j]) % 3;
                clash = covering(j, pj) && clash_[k][j][a];
              }
              if (clash) continue;
              gain = cell ? 1 : 0;
            }
            next[ns] = std::max(next[ns], dp[s] + gain);
          }
        }
        std::swap(dp, next);
      }
    }
    int best = kDead;
    for (std::size_t s = 0; s < states; ++s) {
      bool ok = dp[s] != kDead;
      for (std::size_t k = 0; k < m && ok; ++k) {
        if (wraps(k) && (s / pow3[k]) % 3 != 2) ok = false;
      }
      if (ok) best = std::max(best, dp[s]);
    }
    return std::max(best, 0);
  }

  int r_;
  std::size_t atoms_;
  double step_;
  std::vector<std::size_t> labels_;
  std::vector<std::vector<char>> hard_;
  std::vector<std::vector<std::vector<char>>> clash_;  // clash_[i][j] for j < i
};

}  // namespace

SampledCheck sampled_upper_check(const Instance& inst, const ConflictGraph& graph, std::span<const std::size_t> labels,
                                 const ActiveRangeAssignment& phi, int resolution) {
  if (resolution < 4) throw std::invalid_argument("sampled_upper_check: resolution must be at least 4");
  (void)inst;
  SampledCheck out;
  for (std::size_t l : labels) {
    if (l < phi.size() && phi[l]) out.reference += phi[l]->length();
  }
  GridOracle oracle(graph, labels, resolution);
  out.grid_best = oracle.best_cells() * oracle.step();
  out.slack = static_cast<double>(labels.size()) * oracle.step();
  out.ok = out.grid_best <= out.reference + out.slack + kObjTol;
  return out;
}

}  // namespace rotlabel
