#include "rotlabel/geom.hpp"

#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "rotlabel/grid.hpp"

namespace rotlabel {

double max_diagonal(const Instance& inst) {
  double d = 0.0;
  for (const auto& l : inst.labels) d = std::max(d, l.diagonal());
  return d;
}

double max_outer_radius(const Instance& inst) {
  double r = 0.0;
  for (const auto& l : inst.labels) r = std::max(r, l.outer_radius());
  return r;
}

InstanceDiagnostics check_instance(const Instance& inst) {
  InstanceDiagnostics diag;
  std::set<std::string> ids;
  double wmin = std::numeric_limits<double>::infinity(), wmax = 0.0;
  double hmin = wmin, hmax = 0.0;
  bool all_well_formed = true;

  for (std::size_t i = 0; i < inst.labels.size(); ++i) {
    const Label& l = inst.labels[i];
    if (!ids.insert(l.id).second) diag.errors.push_back("duplicate label id '" + l.id + "'");
    if (!l.well_formed()) {
      diag.errors.push_back("label '" + l.id + "' has negative extents, zero size or a non-finite anchor");
      all_well_formed = false;
      continue;
    }
    wmin = std::min(wmin, l.width());
    wmax = std::max(wmax, l.width());
    hmin = std::min(hmin, l.height());
    hmax = std::max(hmax, l.height());
    diag.max_aspect = std::max(diag.max_aspect, std::max(l.width() / l.height(), l.height() / l.width()));
  }
  if (!inst.labels.empty() && all_well_formed) {
    diag.width_ratio = wmax / wmin;
    diag.height_ratio = hmax / hmin;
  }
  if (!all_well_formed || inst.labels.empty()) return diag;

  const double reach = 2.0 * max_outer_radius(inst);
  const GridIndex grid = build_grid(inst, reach);
  for (const auto& [i, j] : grid.candidate_pairs(inst, reach)) {
    const Label& a = inst.labels[i];
    const Label& b = inst.labels[j];
    if (a.anchor == b.anchor) {
      diag.errors.push_back("labels '" + a.id + "' and '" + b.id + "' share an anchor");
    } else if (labels_intersect(a, b, 0.0)) {
      diag.warnings.push_back("labels '" + a.id + "' and '" + b.id + "' overlap at rotation 0");
    }
  }
  constexpr double kRatioWarn = 1e3;
  if (diag.width_ratio > kRatioWarn || diag.height_ratio > kRatioWarn || diag.max_aspect > kRatioWarn) {
    std::ostringstream os;
    os << "size ratios are large (width " << diag.width_ratio << ", height " << diag.height_ratio << ", aspect "
       << diag.max_aspect << "); grid cells may hold many labels";
    diag.warnings.push_back(os.str());
  }
  return diag;
}

}  // namespace rotlabel
