#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include <functional>
#include <numeric>
#include <optional>
#include <random>

#include "rotlabel/exact.hpp"
#include "rotlabel/gadgets.hpp"

using namespace rotlabel;

namespace {

std::vector<std::size_t> all_of(const Instance& inst) {
  std::vector<std::size_t> v(inst.size());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

// Every combination of candidates, checked with the validator.
double brute_force(const Instance& inst, const ConflictGraph& g) {
  const auto all = all_of(inst);
  const auto sets = candidate_sets(g, all);
  ActiveRangeAssignment phi(inst.size());
  double best = 0.0;
  std::function<void(std::size_t)> rec = [&](std::size_t d) {
    if (d == sets.size()) {
      if (validate_assignment(inst, g, phi).empty()) best = std::max(best, max_total(phi));
      return;
    }
    for (const auto& c : sets[d].candidates) {
      phi.clear(sets[d].label);
      if (!c.is_empty()) phi.set(sets[d].label, c);
      rec(d + 1);
    }
    phi.clear(sets[d].label);
  };
  rec(0);
  return best;
}

}  // namespace

TEST_CASE("enumerate candidates") {
  auto c = enumerate_candidates(0, {}, {});
  REQUIRE(c.candidates.size() == 2);
  CHECK(c.candidates[0].is_empty());
  CHECK(c.candidates[1].is_full());

  // Events only: arcs between any two events plus the full circle cut at each event.
  c = enumerate_candidates(0, {0.0, 1.0, 2.0}, {});
  CHECK(c.candidates.size() == 1 + 9);
  CHECK(c.candidates.size() <= 3 * 3 + 2);

  // Inner chain label.
  const auto chain = gen_chain(6);
  const auto g = build_conflict_graph(chain.instance);
  c = enumerate_candidates(2, event_set(2, g), g.hard_of(2));
  double longest = 0.0;
  for (const auto& x : c.candidates) {
    longest = std::max(longest, x.length());
    for (const auto& h : g.hard_of(2)) CHECK_FALSE(intersects(x.interior(), h));
  }
  CHECK(longest == doctest::Approx(kPi).epsilon(1e-9));
  const auto ev = event_set(2, g);
  for (const auto& x : c.candidates) {
    if (x.is_empty()) continue;
    CHECK(std::any_of(ev.begin(), ev.end(), [&](double e) { return angles_equal(e, x.start()); }));
    CHECK(std::any_of(ev.begin(), ev.end(), [&](double e) { return angles_equal(e, x.end()); }));
  }
}

TEST_CASE("d = 1.2 pair candidates stay inside free arcs") {
  Instance inst;
  inst.labels = {unit_square("a", Point(0, 0)), unit_square("b", Point(1.2, 0))};
  const auto g = build_conflict_graph(inst);
  const auto sets = candidate_sets(g, all_of(inst));
  for (const auto& s : sets) {
    const auto hard = g.hard_of(s.label);
    const auto free = subtract(CircularInterval::full(), hard);
    for (const auto& c : s.candidates) {
      if (c.is_empty()) continue;
      CHECK(std::any_of(free.begin(), free.end(), [&](const CircularInterval& f) {
        return total_length(intersect(f, c)) >= c.length() - 1e-9;
      }));
    }
  }
}

TEST_CASE("solve_exact basics") {
  const Instance one{{unit_square("a", Point(0, 0))}};
  const auto g = build_conflict_graph(one);
  const auto phi = solve_exact(one, g, all_of(one));
  CHECK(max_total(phi) == doctest::Approx(kTwoPi));

  const auto chain = gen_chain(30);
  const auto gc = build_conflict_graph(chain.instance);
  ExactOptions small;
  small.max_component_labels = 10;
  CHECK_THROWS_AS(solve_exact(chain.instance, gc, all_of(chain.instance), small), SolverCapExceeded);
  ExactOptions few_nodes;
  few_nodes.max_nodes = 5;
  CHECK_THROWS_AS(solve_exact(chain.instance, gc, all_of(chain.instance), few_nodes), SolverCapExceeded);
}

TEST_CASE("solve_exact equals brute force on small instances") {
  int compared = 0;
  for (std::uint64_t seed = 1; compared < 60 && seed < 2000; ++seed) {
    const int n = 2 + static_cast<int>(seed % 2);
    const Instance inst = gen_random({n, 2.5 * n, seed, seed % 3 == 0});
    const auto g = build_conflict_graph(inst);
    std::size_t events = 0;
    for (std::size_t i = 0; i < inst.size(); ++i) events += event_set(i, g).size();
    if (events > 12 || g.soft.empty()) continue;
    ++compared;
    const auto phi = solve_exact(inst, g, all_of(inst));
    CHECK(validate_assignment(inst, g, phi).empty());
    CHECK(max_total(phi) == doctest::Approx(brute_force(inst, g)).epsilon(1e-9));
  }
  CHECK(compared >= 20);
}

TEST_CASE("solve_exact is invariant under translation and rotation") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const Instance inst = gen_random({5, 15.0, seed, seed % 2 == 0});
    const auto g = build_conflict_graph(inst);
    const auto phi = solve_exact(inst, g, all_of(inst));
    const double base = max_total(phi);

    const double beta = kPi * u(rng);
    const Point shift(100 * u(rng), 100 * u(rng));
    const Eigen::Rotation2D<double> rot(beta);
    Instance moved = inst;
    for (auto& l : moved.labels) l.anchor = rot * l.anchor + shift;
    const auto gm = build_conflict_graph(moved);
    const auto psi = solve_exact(moved, gm, all_of(moved));
    CHECK(max_total(psi) == doctest::Approx(base).epsilon(1e-7));

    // The original optimum, turned by β, stays valid for the moved instance.
    ActiveRangeAssignment turned(inst.size());
    for (std::size_t i = 0; i < inst.size(); ++i) {
      if (phi[i]) turned.set(i, phi[i]->rotated(beta));
    }
    CHECK(validate_assignment(moved, gm, turned).empty());
  }
}

TEST_CASE("labels outside the solved set still block with their anchors") {
  Instance inst;
  inst.labels = {unit_square("a", Point(0, 0)), unit_square("b", Point(1.2, 0))};
  const auto g = build_conflict_graph(inst);
  const std::vector<std::size_t> only_a{0};
  const auto phi = solve_exact(inst, g, only_a);
  CHECK_FALSE(phi[1].has_value());
  CHECK(max_total(phi) == doctest::Approx(kTwoPi - total_length(g.hard_of(0))).epsilon(1e-9));
}

TEST_CASE("sampled upper check") {
  const Instance one{{unit_square("a", Point(0, 0))}};
  auto g = build_conflict_graph(one);
  auto check = sampled_upper_check(one, g, all_of(one), solve_exact(one, g, all_of(one)), 360);
  CHECK(check.ok);
  CHECK(check.grid_best == doctest::Approx(kTwoPi));

  Instance pair;
  pair.labels = {unit_square("a", Point(0, 0)), unit_square("b", Point(1.2, 0))};
  g = build_conflict_graph(pair);
  const auto phi = solve_exact(pair, g, all_of(pair));
  check = sampled_upper_check(pair, g, all_of(pair), phi, 720);
  CHECK(check.ok);
  CHECK(check.grid_best <= check.reference + 1e-9);

  const auto chain = gen_chain(6);
  g = build_conflict_graph(chain.instance);
  check = sampled_upper_check(chain.instance, g, all_of(chain.instance), solve_exact(chain.instance, g, all_of(chain.instance)), 360);
  CHECK(check.ok);

  // A deliberately poor reference is caught.
  ActiveRangeAssignment weak(pair.size());
  check = sampled_upper_check(pair, g, all_of(pair), weak, 720);
  CHECK_FALSE(check.ok);
}

TEST_CASE("ties go to the smallest starts in label order") {
  // Order on one label: earlier start first, longer first, nothing last.
  const auto before = [](const std::optional<CircularInterval>& a, const std::optional<CircularInterval>& b) {
    if (a.has_value() != b.has_value()) return a.has_value() ? -1 : 1;
    if (!a) return 0;
    if (std::abs(a->start() - b->start()) > 1e-9) return a->start() < b->start() ? -1 : 1;
    if (std::abs(a->length() - b->length()) > 1e-9) return a->length() > b->length() ? -1 : 1;
    return 0;
  };
  const auto check = [&](const Instance& inst, const std::vector<std::size_t>& labels) {
    const auto g = build_conflict_graph(inst);
    const auto phi = solve_exact(inst, g, labels);
    const auto all = solve_exact_all(inst, g, labels);
    REQUIRE_FALSE(all.empty());
    for (const auto& other : all) {
      for (std::size_t l : labels) {
        const int c = before(phi[l], other[l]);
        CHECK(c <= 0);
        if (c < 0) break;
      }
    }
  };
  const auto chain = gen_chain(6);
  check(chain.instance, chain.core);
  const auto turn = gen_turn();
  check(turn.instance, turn.core);
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const Instance inst = gen_random({3, 7.5, seed, seed % 2 == 0});
    check(inst, all_of(inst));
  }
}
