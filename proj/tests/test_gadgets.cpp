#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include <cmath>
#include <numeric>

#include "rotlabel/exact.hpp"
#include "rotlabel/gadgets.hpp"

using namespace rotlabel;

namespace {

const double kS2 = std::sqrt(2.0);

double circular_gap(double a, double b) {
  const double d = ccw_distance(a, b);
  return std::min(d, kTwoPi - d);
}

}  // namespace

TEST_CASE("chain geometry") {
  CHECK_THROWS_AS(gen_chain(3), std::invalid_argument);
  const auto c = gen_chain(4);
  REQUIRE(c.instance.size() == 4);
  for (int i = 0; i < 4; ++i) {
    CHECK(c.instance.labels[i].anchor.x() == doctest::Approx(i * kS2));
    CHECK(c.instance.labels[i].anchor.y() == 0.0);
  }
  CHECK(check_instance(c.instance).ok());
  CHECK(check_instance(c.instance).warnings.empty());
}

TEST_CASE("chain optimum") {
  const auto c = gen_chain(6);
  const auto g = build_conflict_graph(c.instance);
  const auto phi = solve_exact(c.instance, g, c.core);
  REQUIRE(phi[2].has_value());
  REQUIRE(phi[3].has_value());
  CHECK(phi[2]->length() == doctest::Approx(kPi).epsilon(1e-9));
  CHECK(phi[3]->length() == doctest::Approx(kPi).epsilon(1e-9));
  CHECK(circular_gap(phi[2]->midpoint(), phi[3]->midpoint()) == doctest::Approx(kPi).epsilon(1e-9));
}

TEST_CASE("inverter") {
  const auto v = gen_inverter();
  REQUIRE(v.instance.size() == 5);
  for (int j = 0; j < 5; ++j) CHECK(v.instance.labels[j].anchor.x() == doctest::Approx(j * 3 * kS2 / 4));
  CHECK(v.instance.labels[4].anchor.x() - v.instance.labels[0].anchor.x() == doctest::Approx(3 * kS2));
  CHECK(check_instance(v.instance).ok());

  const auto g = build_conflict_graph(v.instance);
  const auto phi = solve_exact(v.instance, g, v.core);
  CHECK(validate_assignment(v.instance, g, phi).empty());
  for (int j = 1; j + 1 < 4; ++j) {
    REQUIRE(phi[j].has_value());
    REQUIRE(phi[j + 1].has_value());
    CHECK(circular_gap(phi[j]->midpoint(), phi[j + 1]->midpoint()) > kPi / 2);
  }
}

TEST_CASE("turn geometry") {
  const auto t = gen_turn();
  REQUIRE(t.core.size() == 4);
  const auto& l = t.instance.labels;
  CHECK(l[0].anchor.isApprox(Point(0, 0)));
  CHECK(l[1].anchor.isApprox(Point(kS2, 0)));
  CHECK((l[2].anchor - l[1].anchor).norm() == doctest::Approx(kS2));
  CHECK((l[3].anchor - l[1].anchor).norm() == doctest::Approx(kS2));
  CHECK((l[2].anchor - l[3].anchor).norm() == doctest::Approx(kS2));
  CHECK(l[2].anchor.y() == doctest::Approx(-l[3].anchor.y()));
  CHECK(check_instance(t.instance).ok());
  CHECK(check_instance(t.instance).warnings.empty());
}

TEST_CASE("clause core geometry") {
  const auto c = gen_clause_core();
  CHECK(check_instance(c.instance).ok());
  CHECK(check_instance(c.instance).warnings.empty());
  const auto g = build_conflict_graph(c.instance);
  const auto hard = g.hard_of(0);
  REQUIRE(hard.size() == 3);
  const auto free = subtract(CircularInterval::full(), hard);
  REQUIRE(free.size() == 3);
  for (const auto& f : free) CHECK(f.length() == doctest::Approx(2 * kPi / 3).epsilon(1e-9));

  const auto bare = gen_clause_core_bare();
  CHECK(bare.instance.size() == 4);
  const auto gb = build_conflict_graph(bare.instance);
  const auto phi = solve_exact(bare.instance, gb, bare.core);
  MESSAGE("bare clause inner length " << (phi[0] ? phi[0]->length() : 0.0));
}

TEST_CASE("random generator") {
  CHECK(gen_random({0, 10.0, 1, false}).empty());
  const Instance a = gen_random({100, 1000.0, 7, true});
  const Instance b = gen_random({100, 1000.0, 7, true});
  REQUIRE(a.size() == 100);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a.labels[i].anchor == b.labels[i].anchor);
    CHECK(a.labels[i].extents == b.labels[i].extents);
  }
  CHECK(check_instance(a).warnings.empty());
  CHECK_THROWS_AS(gen_random({1000, 10.0, 1, false}), std::runtime_error);
  CHECK_THROWS_AS(gen_random({1, 0.0, 1, false}), std::invalid_argument);

  // Density 0.1: one unit of label area per ten square units.
  int non_empty = 0;
  for (std::uint64_t s = 1; s <= 20; ++s) non_empty += !build_conflict_graph(gen_random({10, 100.0, s, false})).soft.empty();
  CHECK(non_empty >= 10);
}
