#include "rotlabel/render.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace rotlabel {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const Instance& inst, const ActiveRangeAssignment* phi, double alpha,
                       const RenderOptions& options) {
  if (!std::isfinite(alpha)) throw std::invalid_argument("render_svg: angle must be finite");
  if (phi && phi->size() != inst.size()) throw std::invalid_argument("render_svg: assignment does not match instance");

  double x0 = 0.0, y0 = 0.0, x1 = 1.0, y1 = 1.0;
  if (!inst.empty()) {
    x0 = y0 = std::numeric_limits<double>::infinity();
    x1 = y1 = -x0;
    for (const auto& l : inst.labels) {
      const double r = l.outer_radius();
      x0 = std::min(x0, l.anchor.x() - r);
      x1 = std::max(x1, l.anchor.x() + r);
      y0 = std::min(y0, l.anchor.y() - r);
      y1 = std::max(y1, l.anchor.y() + r);
    }
    x0 -= options.margin;
    y0 -= options.margin;
    x1 += options.margin;
    y1 += options.margin;
  }
  const double w = x1 - x0, h = y1 - y0;
  const double deg = alpha * 180.0 / kPi;
  const double stroke = 1.5 / options.pixels_per_unit;

  std::ostringstream os;
  os.precision(17);
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w * options.pixels_per_unit << "\" height=\""
     << h * options.pixels_per_unit << "\" viewBox=\"" << x0 << ' ' << -y1 << ' ' << w << ' ' << h << "\">\n";
  os << "<title>rotation " << deg << " deg</title>\n";
  os << "<g transform=\"scale(1,-1)\" stroke-width=\"" << stroke << "\">\n";

  std::vector<char> active(inst.size(), phi ? 0 : 1);
  if (phi) {
    for (std::size_t i : active_at(*phi, alpha)) active[i] = 1;
  }
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const Label& l = inst.labels[i];
    const double ax = l.anchor.x(), ay = l.anchor.y();
    if (options.draw_outer_circles) {
      os << "<circle cx=\"" << ax << "\" cy=\"" << ay << "\" r=\"" << l.outer_radius()
         << "\" fill=\"none\" stroke=\"#bbbbbb\"/>\n";
    }
    os << "<rect id=\"" << escape(l.id) << "\" class=\"" << (active[i] ? "active" : "inactive") << "\" x=\""
       << ax - l.extents.left << "\" y=\"" << ay - l.extents.bottom << "\" width=\"" << l.width() << "\" height=\""
       << l.height() << "\" transform=\"rotate(" << deg << ' ' << ax << ' ' << ay << ")\"";
    if (active[i]) {
      os << " fill=\"#f5c542\" fill-opacity=\"0.8\" stroke=\"#333333\"/>\n";
    } else {
      os << " fill=\"none\" stroke=\"#888888\" stroke-dasharray=\"" << 4 * stroke << ' ' << 3 * stroke << "\"/>\n";
    }
  }
  for (const auto& l : inst.labels) {
    os << "<circle cx=\"" << l.anchor.x() << "\" cy=\"" << l.anchor.y() << "\" r=\"" << 3 * stroke
       << "\" fill=\"#c0392b\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace rotlabel
