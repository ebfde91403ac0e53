#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "rotlabel/gadgets.hpp"
#include "rotlabel/labeling.hpp"

using namespace rotlabel;

TEST_CASE("assignment basics") {
  ActiveRangeAssignment phi(3);
  CHECK(max_total(phi) == 0.0);
  CHECK(max_min(phi) == 0.0);
  phi.set(0, CircularInterval::full());
  phi.set(1, CircularInterval::closed(1.0, 2.0));
  phi.set(2, CircularInterval::point(1.0));
  CHECK_FALSE(phi[2].has_value());
  CHECK(max_total(phi) == doctest::Approx(kTwoPi + 2.0));
  CHECK(max_min(phi) == 0.0);
  phi.set(2, CircularInterval::closed(0, 0.5));
  CHECK(max_min(phi) == doctest::Approx(0.5));
  CHECK(active_at(phi, 1.5) == std::vector<std::size_t>{0, 1});
  CHECK(active_at(phi, 1.0) == std::vector<std::size_t>{0});
}

TEST_CASE("validate: empty and isolated") {
  const Instance inst{{unit_square("a", Point(0, 0))}};
  const auto g = build_conflict_graph(inst);
  ActiveRangeAssignment phi(1);
  CHECK(validate_assignment(inst, g, phi).empty());
  phi.set(0, CircularInterval::full());
  CHECK(validate_assignment(inst, g, phi).empty());
  CHECK(max_total(phi) == doctest::Approx(kTwoPi));
}

TEST_CASE("validate: chain alternation") {
  const auto chain = gen_chain(6);
  const auto& inst = chain.instance;
  const auto g = build_conflict_graph(inst);
  // Free arcs of the inner labels run between the hard angles 3π/4 and 7π/4.
  ActiveRangeAssignment phi(inst.size());
  phi.set(2, CircularInterval::closed(3 * kPi / 4, kPi));
  phi.set(3, CircularInterval::closed(7 * kPi / 4, kPi));
  CHECK(validate_assignment(inst, g, phi).empty());
  CHECK(max_total(phi) == doctest::Approx(kTwoPi));

  // Same phase for both neighbours clashes at the shared touch angle.
  phi.set(3, CircularInterval::closed(3 * kPi / 4, kPi));
  const auto v = validate_assignment(inst, g, phi);
  REQUIRE_FALSE(v.empty());
  CHECK(v[0].kind == Violation::Kind::SoftOverlap);

  // Crossing a hard angle is never allowed.
  ActiveRangeAssignment hard(inst.size());
  hard.set(2, CircularInterval::closed(0, kPi));
  const auto vh = validate_assignment(inst, g, hard);
  REQUIRE(vh.size() == 1);
  CHECK(vh[0].kind == Violation::Kind::HardOverlap);
}

TEST_CASE("validate: full ranges on a d = 1.2 pair") {
  Instance inst;
  inst.labels = {unit_square("a", Point(0, 0)), unit_square("b", Point(1.2, 0))};
  const auto g = build_conflict_graph(inst);
  ActiveRangeAssignment phi(2);
  phi.set(0, CircularInterval::full());
  phi.set(1, CircularInterval::full());
  const auto v = validate_assignment(inst, g, phi);
  int soft = 0, hard = 0;
  for (const auto& x : v) (x.kind == Violation::Kind::SoftOverlap ? soft : hard) += 1;
  CHECK(soft == 4);
  CHECK(hard == 2);
}

TEST_CASE("records") {
  const auto chain = gen_chain(4);
  const auto& inst = chain.instance;
  std::vector<Violation> problems;
  auto phi = assignment_from_records(inst, {{"c1", 1.0, 2.0}, {"c2", 0.0, std::nullopt}}, problems);
  CHECK(problems.empty());
  REQUIRE(phi[1].has_value());
  CHECK(phi[1]->start() == 1.0);
  CHECK_FALSE(phi[2].has_value());

  const auto recs = assignment_to_records(inst, phi);
  CHECK(recs.size() == 4);
  CHECK(recs[1].extent.value() == 2.0);
  CHECK_FALSE(recs[0].extent.has_value());

  assignment_from_records(inst, {{"zz", 0, 1.0}, {"c0", 0, 1.0}, {"c0", 1, 1.0}, {"c1", 0, 9.0}}, problems);
  CHECK(problems.size() == 3);
  for (const auto& p : problems) CHECK(p.kind == Violation::Kind::Malformed);
}
