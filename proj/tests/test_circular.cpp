#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include <random>

#include "rotlabel/circular.hpp"

using namespace rotlabel;

namespace {
constexpr double kTol = 1e-9;
}

TEST_CASE("normalize") {
  CHECK(normalize(0.0) == 0.0);
  CHECK(normalize(2.5 * kPi) == doctest::Approx(0.5 * kPi).epsilon(kTol));
  CHECK(normalize(-0.25 * kPi) == doctest::Approx(1.75 * kPi).epsilon(kTol));
  CHECK(normalize(kTwoPi) == 0.0);
  CHECK_THROWS_AS(normalize(std::nan("")), std::invalid_argument);
  CHECK_THROWS_AS(normalize(INFINITY), std::invalid_argument);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  for (int i = 0; i < 1000; ++i) {
    const double a = u(rng);
    const double n = normalize(a);
    CHECK(n >= 0.0);
    CHECK(n < kTwoPi);
    CHECK(angles_equal(normalize(a + kTwoPi), n, 1e-9));
  }
}

TEST_CASE("length") {
  CHECK(CircularInterval::closed(0, kPi).length() == doctest::Approx(kPi));
  CHECK(CircularInterval::empty().length() == 0.0);
  CHECK(CircularInterval::full().length() == doctest::Approx(kTwoPi));
  CHECK(CircularInterval::between(1.75 * kPi, 0.25 * kPi).length() == doctest::Approx(0.5 * kPi));
}

TEST_CASE("contains and endpoints") {
  const auto c = CircularInterval::closed(1.0, 2.0);
  CHECK(c.contains(1.0));
  CHECK(c.contains(3.0));
  CHECK_FALSE(c.interior().contains(1.0, 0.0));
  CHECK_FALSE(c.interior().contains(3.0, 0.0));
  CHECK(c.contains(c.midpoint()));
  CHECK_FALSE(CircularInterval::empty().contains(0.0));

  const auto w = CircularInterval::between(1.75 * kPi, 0.25 * kPi);
  CHECK(w.contains(0.0));
  CHECK(w.contains(0.1));
  CHECK(w.contains(6.2));
  CHECK_FALSE(w.contains(kPi));
  CHECK(w.contains(w.midpoint()));

  // Open full arc: the circle minus its start.
  const auto f = CircularInterval::closed(0.5, kTwoPi).interior();
  CHECK_FALSE(f.contains(0.5, 0.0));
  CHECK(f.contains(0.5 + 1e-6, 0.0));
  CHECK(f.contains(0.5 - 1e-6, 0.0));
}

TEST_CASE("intersect") {
  auto r = intersect(CircularInterval::closed(0, kPi), CircularInterval::closed(0.5 * kPi, kPi));
  REQUIRE(r.size() == 1);
  CHECK(r[0].start() == doctest::Approx(0.5 * kPi));
  CHECK(r[0].length() == doctest::Approx(0.5 * kPi));

  r = intersect(CircularInterval::between(1.5 * kPi, 0.5 * kPi), CircularInterval::closed(0, kPi));
  REQUIRE(r.size() == 1);
  CHECK(r[0].start() == doctest::Approx(0.0).epsilon(kTol));
  CHECK(r[0].length() == doctest::Approx(0.5 * kPi));

  const auto a = CircularInterval::closed(2.0, 1.5);
  r = intersect(CircularInterval::full(), a);
  REQUIRE(r.size() == 1);
  CHECK(r[0].start() == doctest::Approx(2.0));
  CHECK(r[0].length() == doctest::Approx(1.5));

  // Two pieces when a long arc wraps over both ends of another.
  r = intersect(CircularInterval::closed(0, 4.0), CircularInterval::closed(3.0, 4.0));
  CHECK(r.size() == 2);
  CHECK(total_length(r) == doctest::Approx(1.0 + (4.0 - (kTwoPi - 3.0))));

  CHECK(intersect(CircularInterval::closed(0, 1), CircularInterval::closed(2, 1)).empty());
  // Touching closed arcs share one angle; open ones do not.
  r = intersect(CircularInterval::closed(0, 1), CircularInterval::closed(1, 1));
  REQUIRE(r.size() == 1);
  CHECK(r[0].is_point());
  CHECK_FALSE(intersects(CircularInterval::closed(0, 1).interior(), CircularInterval::closed(1, 1)));
}

TEST_CASE("subtract") {
  std::vector<CircularInterval> cuts{CircularInterval::point(kPi)};
  auto r = subtract(CircularInterval::full(), cuts);
  REQUIRE(r.size() == 1);
  CHECK(r[0].length() == doctest::Approx(kTwoPi));
  CHECK_FALSE(r[0].contains(kPi, 0.0));
  CHECK(r[0].contains(kPi + 1e-6, 0.0));

  cuts = {CircularInterval::closed(0.25 * kPi, 0.25 * kPi)};
  r = subtract(CircularInterval::closed(0, kPi), cuts);
  REQUIRE(r.size() == 2);
  CHECK(r[0].length() == doctest::Approx(0.25 * kPi));
  CHECK(r[1].length() == doctest::Approx(0.5 * kPi));
  CHECK(r[0].contains(0.0));
  CHECK_FALSE(r[0].contains(0.25 * kPi, 0.0));
  CHECK_FALSE(r[1].contains(0.5 * kPi, 0.0));
  CHECK(r[1].contains(kPi));

  cuts = {CircularInterval::point(0), CircularInterval::point(kPi)};
  r = subtract(CircularInterval::full(), cuts);
  REQUIRE(r.size() == 2);
  CHECK(r[0].length() == doctest::Approx(kPi));
  CHECK(r[1].length() == doctest::Approx(kPi));
  for (const auto& x : r) {
    CHECK_FALSE(x.contains(0.0, 0.0));
    CHECK_FALSE(x.contains(kPi, 0.0));
  }
}

TEST_CASE("random arcs: measure identities and shift invariance") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ang(0.0, kTwoPi), ext(0.0, kTwoPi);
  std::uniform_int_distribution<int> k(-3, 3);
  for (int i = 0; i < 2000; ++i) {
    const auto a = CircularInterval::closed(ang(rng), ext(rng));
    const auto b = CircularInterval::closed(ang(rng), ext(rng));
    const std::vector<CircularInterval> cut{b};
    const auto inter = intersect(a, b);
    const auto rest = subtract(a, cut);
    CHECK(a.length() == doctest::Approx(total_length(inter) + total_length(rest)).epsilon(1e-9));
    for (std::size_t x = 0; x < rest.size(); ++x) {
      for (std::size_t y = x + 1; y < rest.size(); ++y) CHECK_FALSE(intersects(rest[x].interior(), rest[y].interior()));
      CHECK_FALSE(intersects(rest[x].interior(), b.interior()));
    }

    const double shift = k(rng) * kTwoPi;
    const auto a2 = CircularInterval::closed(a.start() + shift, a.extent());
    const auto b2 = CircularInterval::closed(b.start() + shift, b.extent());
    CHECK(total_length(intersect(a2, b2)) == doctest::Approx(total_length(inter)).epsilon(1e-9));

    // Membership agrees with a direct ccw test away from endpoints.
    const double t = ang(rng);
    const double off = ccw_distance(a.start(), t);
    if (std::abs(off) > 1e-6 && std::abs(off - a.extent()) > 1e-6) CHECK(a.contains(t) == (off < a.extent()));
  }
}
