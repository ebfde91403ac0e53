#include "rotlabel/gadgets.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "rotlabel/circular.hpp"
#include "rotlabel/grid.hpp"

namespace rotlabel {

namespace {

const double kSqrt2 = std::sqrt(2.0);

Point polar(const Point& origin, double radius, double angle) {
  return origin + radius * Point(std::cos(angle), std::sin(angle));
}

std::vector<std::size_t> first_n(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

GadgetInstance gen_chain(int m) {
  if (m < 4) throw std::invalid_argument("gen_chain: a chain needs at least four labels");
  GadgetInstance g;
  for (int i = 0; i < m; ++i) g.instance.labels.push_back(unit_square("c" + std::to_string(i), Point(i * kSqrt2, 0.0)));
  g.core = first_n(g.instance.size());
  return g;
}

GadgetInstance gen_inverter() {
  GadgetInstance g;
  const double spacing = 0.75 * kSqrt2;
  for (int i = 0; i < 5; ++i) g.instance.labels.push_back(unit_square("v" + std::to_string(i), Point(i * spacing, 0.0)));
  g.core = first_n(g.instance.size());
  return g;
}

GadgetInstance gen_turn() {
  GadgetInstance g;
  auto& l = g.instance.labels;
  const Point pa(0.0, 0.0);
  const Point pb(kSqrt2, 0.0);
  const Point pc = polar(pb, kSqrt2, kPi / 6.0);
  const Point pd = polar(pb, kSqrt2, -kPi / 6.0);
  l.push_back(unit_square("a", pa));
  l.push_back(unit_square("b", pb));
  l.push_back(unit_square("c", pc));
  l.push_back(unit_square("d", pd));
  g.core = first_n(4);
  l.push_back(unit_square("a_in", polar(pa, kSqrt2, kPi)));
  l.push_back(unit_square("c_out", polar(pc, kSqrt2, kPi / 6.0)));
  l.push_back(unit_square("d_out", polar(pd, kSqrt2, -kPi / 6.0)));
  return g;
}

namespace {

// Direction of the first outer anchor. Chosen off the diagonals so that no two
// labels touch at rotation 0; the conflict structure only depends on it
// through a common rotation.
constexpr double kClauseBase = 5.0 * kPi / 8.0;

GadgetInstance clause(bool connectors) {
  GadgetInstance g;
  auto& l = g.instance.labels;
  const Point inner(0.0, 0.0);
  l.push_back(unit_square("inner", inner));
  std::vector<Point> outer;
  for (int i = 0; i < 3; ++i) {
    outer.push_back(polar(inner, kSqrt2, kClauseBase + i * 2.0 * kPi / 3.0));
    l.push_back(unit_square("o" + std::to_string(i), outer.back()));
  }
  g.core = first_n(4);
  if (connectors) {
    for (int i = 0; i < 3; ++i) {
      const double back = kClauseBase + i * 2.0 * kPi / 3.0 + kPi;
      l.push_back(unit_square("o" + std::to_string(i) + "_pipe", polar(outer[i], kSqrt2, back + 0.75 * kPi)));
      l.push_back(unit_square("o" + std::to_string(i) + "_term", polar(outer[i], kSqrt2, back - 0.75 * kPi)));
    }
  }
  return g;
}

}  // namespace

GadgetInstance gen_clause_core() { return clause(true); }

GadgetInstance gen_clause_core_bare() { return clause(false); }

Instance gen_random(const RandomSpec& spec) {
  if (spec.n < 0) throw std::invalid_argument("gen_random: n must be non-negative");
  if (!(spec.area > 0.0)) throw std::invalid_argument("gen_random: area must be positive");
  Instance inst;
  if (spec.n == 0) return inst;

  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double side = std::sqrt(spec.area);

  // Every label fits in a 2×2 box around its anchor, so overlaps at rotation
  // 0 only happen between anchors less than 4 apart.
  const double bucket = 4.0;
  std::unordered_map<std::int64_t, std::vector<std::size_t>> buckets;
  const auto key = [](std::int64_t r, std::int64_t c) { return r * 4'000'037 + c; };

  const std::uint64_t max_attempts = 1000ULL * static_cast<std::uint64_t>(spec.n) + 10000;
  std::uint64_t attempts = 0;
  while (inst.labels.size() < static_cast<std::size_t>(spec.n)) {
    if (++attempts > max_attempts) throw std::runtime_error("gen_random: area too small to place disjoint labels");
    Label cand;
    cand.id = "r" + std::to_string(inst.labels.size());
    cand.anchor = Point(side * unit(rng), side * unit(rng));
    if (spec.general) {
      const double w = 1.0 + unit(rng);
      const double h = 0.5 + 0.5 * unit(rng);
      const double fx = unit(rng), fy = unit(rng);
      cand.extents = Extents{fx * w, (1.0 - fx) * w, fy * h, (1.0 - fy) * h};
    } else {
      cand.extents = Extents{0.0, 1.0, 0.0, 1.0};
    }
    const auto r = static_cast<std::int64_t>(std::floor(cand.anchor.y() / bucket));
    const auto c = static_cast<std::int64_t>(std::floor(cand.anchor.x() / bucket));
    bool clash = false;
    for (std::int64_t dr = -1; dr <= 1 && !clash; ++dr) {
      for (std::int64_t dc = -1; dc <= 1 && !clash; ++dc) {
        const auto it = buckets.find(key(r + dr, c + dc));
        if (it == buckets.end()) continue;
        for (std::size_t j : it->second) {
          if (labels_intersect(cand, inst.labels[j], 0.0)) {
            clash = true;
            break;
          }
        }
      }
    }
    if (clash) continue;
    buckets[key(r, c)].push_back(inst.labels.size());
    inst.labels.push_back(std::move(cand));
  }
  return inst;
}

}  // namespace rotlabel
