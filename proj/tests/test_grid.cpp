#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include <cmath>
#include <set>

#include "rotlabel/gadgets.hpp"
#include "rotlabel/grid.hpp"

using namespace rotlabel;

TEST_CASE("grid of the chain") {
  CHECK(build_grid(Instance{}, 1.0).cells.empty());
  const auto chain = gen_chain(6);
  const double s = approximation_cell_size(chain.instance);
  CHECK(s == doctest::Approx(2 * std::sqrt(2.0)));
  const auto grid = build_grid(chain.instance, s);
  REQUIRE(grid.cells.size() == 3);
  std::int64_t col = 0;
  for (const auto& [key, members] : grid.cells) {
    CHECK(key.first == 0);
    CHECK(key.second == col++);
    CHECK(members.size() == 2);
  }
  CHECK_THROWS_AS(build_grid(chain.instance, 0.0), std::invalid_argument);
}

TEST_CASE("half-open cells and negative coordinates") {
  GridIndex g;
  g.cell_size = 2.0;
  CHECK(g.cell_of(Point(2.0, 0.0)) == CellKey{0, 1});
  CHECK(g.cell_of(Point(1.999, -0.001)) == CellKey{-1, 0});
  CHECK(g.cell_of(Point(-2.0, -4.0)) == CellKey{-2, -1});
  CHECK(floor_mod(-1, 3) == 2);
  CHECK(floor_div(-1, 3) == -1);
  CHECK(floor_div(3, 3) == 1);
}

TEST_CASE("large random index") {
  const Instance inst = gen_random({100000, 1e6, 9, false});
  const double s = approximation_cell_size(inst);
  const auto grid = build_grid(inst, s);
  CHECK(grid.label_count() == inst.size());
  std::vector<int> seen(inst.size(), 0);
  std::size_t worst = 0;
  for (const auto& [key, members] : grid.cells) {
    worst = std::max(worst, members.size());
    for (std::size_t i : members) {
      ++seen[i];
      CHECK(grid.cell_of(inst.labels[i].anchor) == key);
    }
  }
  for (int c : seen) REQUIRE(c == 1);
  CHECK(worst <= packing_bound(s, s, 1.0, 1.0, 1.0));
}

TEST_CASE("candidate pairs") {
  const Instance inst = gen_random({300, 900.0, 4, true});
  const auto grid = build_grid(inst, 3.0);
  const auto pairs = grid.candidate_pairs(inst, 3.0);
  std::set<std::pair<std::size_t, std::size_t>> got(pairs.begin(), pairs.end());
  std::size_t expect = 0;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    for (std::size_t j = i + 1; j < inst.size(); ++j) {
      if ((inst.labels[i].anchor - inst.labels[j].anchor).norm() <= 3.0) {
        ++expect;
        CHECK(got.count({i, j}) == 1);
      }
    }
  }
  CHECK(got.size() == expect);
}
