#include "rotlabel/labeling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <unordered_map>

namespace rotlabel {

void ActiveRangeAssignment::set(std::size_t i, const CircularInterval& range) {
  if (range.is_empty() || range.length() <= kAngleTol) {
    ranges_[i].reset();
  } else {
    ranges_[i] = range;
  }
}

std::string to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::SoftOverlap:
      return "soft-overlap";
    case Violation::Kind::HardOverlap:
      return "hard-overlap";
    case Violation::Kind::Malformed:
      return "malformed";
  }
  return "unknown";
}

std::vector<Violation> validate_assignment(const Instance& inst, const ConflictGraph& graph,
                                           const ActiveRangeAssignment& phi) {
  std::vector<Violation> out;
  if (phi.size() != inst.size() || graph.label_count() != inst.size()) {
    out.push_back({Violation::Kind::Malformed, 0, 0, 0.0, "assignment size does not match the instance"});
    return out;
  }
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const auto& r = phi[i];
    if (r && (!std::isfinite(r->start()) || !std::isfinite(r->extent()) || r->extent() < 0 || r->extent() > kTwoPi)) {
      out.push_back({Violation::Kind::Malformed, i, i, 0.0, "range of '" + inst.labels[i].id + "' is not an arc"});
    }
  }

  for (const auto& c : graph.soft) {
    const auto& ra = phi[c.label];
    const auto& rb = phi[c.other];
    if (!ra || !rb) continue;
    for (const auto& both : intersect(ra->interior(), rb->interior())) {
      const auto hit = intersect(both, c.interval);
      if (hit.empty()) continue;
      out.push_back({Violation::Kind::SoftOverlap, c.label, c.other, hit.front().midpoint(),
                     "'" + inst.labels[c.label].id + "' and '" + inst.labels[c.other].id + "' are both active while intersecting"});
      break;
    }
  }
  for (const auto& c : graph.hard) {
    const auto& ra = phi[c.label];
    if (!ra) continue;
    const auto hit = intersect(ra->interior(), c.interval);
    if (hit.empty()) continue;
    out.push_back({Violation::Kind::HardOverlap, c.label, c.other, hit.front().midpoint(),
                   "'" + inst.labels[c.label].id + "' covers the anchor of '" + inst.labels[c.other].id + "'"});
  }
  return out;
}

ActiveRangeAssignment assignment_from_records(const Instance& inst, const std::vector<RangeRecord>& records,
                                              std::vector<Violation>& problems) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < inst.labels.size(); ++i) index.emplace(inst.labels[i].id, i);

  ActiveRangeAssignment phi(inst.size());
  std::vector<char> seen(inst.size(), 0);
  for (const auto& rec : records) {
    const auto it = index.find(rec.id);
    if (it == index.end()) {
      problems.push_back({Violation::Kind::Malformed, 0, 0, 0.0, "unknown label id '" + rec.id + "'"});
      continue;
    }
    const std::size_t i = it->second;
    if (seen[i]) {
      problems.push_back({Violation::Kind::Malformed, i, i, 0.0, "duplicate record for '" + rec.id + "'"});
      continue;
    }
    seen[i] = 1;
    if (!rec.extent) continue;
    if (!std::isfinite(rec.start) || !std::isfinite(*rec.extent) || *rec.extent < 0.0 || *rec.extent > kTwoPi + kAngleTol) {
      problems.push_back({Violation::Kind::Malformed, i, i, 0.0, "range of '" + rec.id + "' is not an arc"});
      continue;
    }
    phi.set(i, CircularInterval::closed(rec.start, *rec.extent));
  }
  return phi;
}

std::vector<RangeRecord> assignment_to_records(const Instance& inst, const ActiveRangeAssignment& phi) {
  std::vector<RangeRecord> out;
  out.reserve(inst.size());
  for (std::size_t i = 0; i < inst.size(); ++i) {
    RangeRecord rec{inst.labels[i].id, 0.0, std::nullopt};
    if (i < phi.size() && phi[i]) {
      rec.start = phi[i]->start();
      rec.extent = phi[i]->extent();
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<std::size_t> active_at(const ActiveRangeAssignment& phi, double alpha) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (phi[i] && phi[i]->interior().contains(alpha, 0.0)) out.push_back(i);
  }
  return out;
}

double max_total(const ActiveRangeAssignment& phi) {
  double s = 0.0;
  for (const auto& r : phi.ranges()) {
    if (r) s += r->length();
  }
  return s;
}

double max_min(const ActiveRangeAssignment& phi) {
  if (phi.size() == 0) return 0.0;
  double m = std::numeric_limits<double>::infinity();
  for (const auto& r : phi.ranges()) m = std::min(m, r ? r->length() : 0.0);
  return m;
}

}  // namespace rotlabel
