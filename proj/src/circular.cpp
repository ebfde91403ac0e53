#include "rotlabel/circular.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rotlabel {

double normalize(double radians) {
  if (!std::isfinite(radians)) {
    throw std::invalid_argument("normalize: angle is not finite");
  }
  double r = std::fmod(radians, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double ccw_distance(double from, double to) { return normalize(to - from); }

bool angles_equal(double a, double b, double tol) {
  const double d = ccw_distance(a, b);
  return d <= tol || d >= kTwoPi - tol;
}

CircularInterval CircularInterval::empty() { return {}; }

CircularInterval CircularInterval::full() { return make(0.0, kTwoPi, false, false); }

CircularInterval CircularInterval::point(double at) { return make(at, 0.0, false, false); }

CircularInterval CircularInterval::closed(double start, double extent) {
  return make(start, extent, false, false);
}

CircularInterval CircularInterval::open(double start, double extent) {
  return make(start, extent, true, true);
}

CircularInterval CircularInterval::between(double from, double to) {
  return closed(from, ccw_distance(from, to));
}

CircularInterval CircularInterval::make(double start, double extent, bool start_open, bool end_open) {
  if (!std::isfinite(extent)) throw std::invalid_argument("CircularInterval: extent is not finite");
  CircularInterval r;
  extent = std::clamp(extent, 0.0, kTwoPi);
  if (extent <= kAngleTol) {
    if (start_open || end_open) return r;
    extent = 0.0;
  } else if (extent >= kTwoPi - kAngleTol) {
    extent = kTwoPi;
  }
  r.start_ = normalize(start);
  r.extent_ = extent;
  r.start_open_ = start_open;
  r.end_open_ = end_open;
  r.empty_ = false;
  return r;
}

bool CircularInterval::contains(double angle, double tol) const {
  if (empty_) return false;
  const double off = ccw_distance(start_, angle);
  const bool at_start = off <= tol || off >= kTwoPi - tol;
  if (extent_ >= kTwoPi) {
    return at_start ? (!start_open_ || !end_open_) : true;
  }
  if (at_start) return !start_open_;
  if (std::abs(off - extent_) <= tol) return !end_open_;
  return off < extent_;
}

CircularInterval CircularInterval::interior() const {
  if (empty_) return *this;
  return make(start_, extent_, true, true);
}

CircularInterval CircularInterval::rotated(double offset) const {
  if (empty_) return *this;
  return make(start_ + offset, extent_, start_open_, end_open_);
}

std::string CircularInterval::to_string() const {
  if (empty_) return "EMPTY";
  std::ostringstream os;
  os.precision(17);
  os << (start_open_ ? '(' : '[') << start_ << ", +" << extent_ << (end_open_ ? ')' : ']');
  return os.str();
}

double length(const CircularInterval& a) { return a.length(); }

double total_length(std::span<const CircularInterval> arcs) {
  double s = 0.0;
  for (const auto& a : arcs) s += a.length();
  return s;
}

namespace {

// A closed/open interval on the real line, used after unrolling arcs into the
// frame of a reference arc starting at 0.
struct Span {
  double lo, hi;
  bool lo_open, hi_open;

  bool valid() const {
    if (hi - lo > kAngleTol) return true;
    return std::abs(hi - lo) <= kAngleTol && !lo_open && !hi_open;
  }
};

Span overlap(const Span& x, const Span& y) {
  Span r{};
  if (std::abs(x.lo - y.lo) <= kAngleTol) {
    r.lo = std::max(x.lo, y.lo);
    r.lo_open = x.lo_open || y.lo_open;
  } else if (x.lo > y.lo) {
    r.lo = x.lo;
    r.lo_open = x.lo_open;
  } else {
    r.lo = y.lo;
    r.lo_open = y.lo_open;
  }
  if (std::abs(x.hi - y.hi) <= kAngleTol) {
    r.hi = std::min(x.hi, y.hi);
    r.hi_open = x.hi_open || y.hi_open;
  } else if (x.hi < y.hi) {
    r.hi = x.hi;
    r.hi_open = x.hi_open;
  } else {
    r.hi = y.hi;
    r.hi_open = y.hi_open;
  }
  return r;
}

Span frame_of(const CircularInterval& a) { return {0.0, a.extent(), a.start_open(), a.end_open()}; }

// `b` unrolled into the frame of `origin`, at the three 2π-shifts that can
// meet [0, 2π].
std::vector<Span> unroll(double origin, const CircularInterval& b) {
  std::vector<Span> out;
  if (b.is_empty()) return out;
  double s = ccw_distance(origin, b.start());
  if (s >= kTwoPi - kAngleTol) s = 0.0;
  for (int k = -1; k <= 1; ++k) {
    const double lo = s + k * kTwoPi;
    out.push_back({lo, lo + b.extent(), b.start_open(), b.end_open()});
  }
  return out;
}

std::vector<Span> merge(std::vector<Span> spans) {
  std::sort(spans.begin(), spans.end(), [](const Span& x, const Span& y) {
    if (x.lo != y.lo) return x.lo < y.lo;
    return !x.lo_open && y.lo_open;
  });
  std::vector<Span> out;
  for (const auto& s : spans) {
    if (!out.empty()) {
      Span& p = out.back();
      const bool overlapping = s.lo < p.hi - kAngleTol;
      const bool touching = std::abs(s.lo - p.hi) <= kAngleTol && (!s.lo_open || !p.hi_open);
      if (overlapping || touching) {
        if (std::abs(s.hi - p.hi) <= kAngleTol) {
          p.hi_open = p.hi_open && s.hi_open;
        } else if (s.hi > p.hi) {
          p.hi = s.hi;
          p.hi_open = s.hi_open;
        }
        continue;
      }
    }
    out.push_back(s);
  }
  return out;
}

// Converts spans in the frame of `ref` back to arcs, joining the pieces that
// meet at 0 ≡ 2π when `ref` is a whole turn.
std::vector<CircularInterval> to_arcs(const CircularInterval& ref, std::vector<Span> spans) {
  spans = merge(std::move(spans));
  if (ref.extent() >= kTwoPi && spans.size() >= 2) {
    const Span& first = spans.front();
    const Span& last = spans.back();
    if (first.lo <= kAngleTol && last.hi >= kTwoPi - kAngleTol && (!first.lo_open || !last.hi_open)) {
      Span joined{last.lo, first.hi + kTwoPi, last.lo_open, first.hi_open};
      spans.pop_back();
      spans.erase(spans.begin());
      spans.push_back(joined);
    }
  }
  std::vector<CircularInterval> out;
  for (const auto& s : spans) {
    if (!s.valid()) continue;
    const double extent = std::max(0.0, s.hi - s.lo);
    if (extent >= kTwoPi - kAngleTol && (!s.lo_open || !s.hi_open)) {
      out.push_back(CircularInterval::full());
      continue;
    }
    auto arc = CircularInterval::make(ref.start() + s.lo, extent, s.lo_open, s.hi_open);
    if (!arc.is_empty()) out.push_back(arc);
  }
  std::sort(out.begin(), out.end(),
            [](const CircularInterval& x, const CircularInterval& y) { return x.start() < y.start(); });
  return out;
}

}  // namespace

std::vector<CircularInterval> intersect(const CircularInterval& a, const CircularInterval& b) {
  if (a.is_empty() || b.is_empty()) return {};
  const Span base = frame_of(a);
  std::vector<Span> pieces;
  for (const auto& s : unroll(a.start(), b)) {
    Span o = overlap(base, s);
    if (o.valid()) pieces.push_back(o);
  }
  return to_arcs(a, std::move(pieces));
}

bool intersects(const CircularInterval& a, const CircularInterval& b) { return !intersect(a, b).empty(); }

std::vector<CircularInterval> subtract(const CircularInterval& a, std::span<const CircularInterval> cuts) {
  if (a.is_empty()) return {};
  std::vector<Span> remaining{frame_of(a)};
  for (const auto& cut : cuts) {
    for (const auto& c : unroll(a.start(), cut)) {
      std::vector<Span> next;
      for (const auto& r : remaining) {
        if (!overlap(r, c).valid()) {
          next.push_back(r);
          continue;
        }
        Span left{r.lo, c.lo, r.lo_open, !c.lo_open};
        Span right{c.hi, r.hi, !c.hi_open, r.hi_open};
        if (left.valid()) next.push_back(left);
        if (right.valid()) next.push_back(right);
      }
      remaining = std::move(next);
    }
  }
  return to_arcs(a, std::move(remaining));
}

}  // namespace rotlabel
