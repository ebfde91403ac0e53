#pragma once

#include <numbers>
#include <span>
#include <string>
#include <vector>

namespace rotlabel {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Angles closer than this are the same event.
inline constexpr double kAngleTol = 1e-9;

/// Maps any finite angle to [0, 2π). Throws std::invalid_argument on NaN/inf.
double normalize(double radians);

/// Counterclockwise distance from `from` to `to`, in [0, 2π).
double ccw_distance(double from, double to);

bool angles_equal(double a, double b, double tol = kAngleTol);

/// An arc of rotation angles modulo 2π, running counterclockwise from `start`
/// over `extent` radians. Each endpoint is open or closed; openness only
/// affects membership, never measure.
///
/// An arc with extent 2π and both endpoints closed is the full circle. With
/// either endpoint open it is the circle minus the single point `start`.
class CircularInterval {
 public:
  CircularInterval() = default;

  static CircularInterval empty();
  static CircularInterval full();
  static CircularInterval point(double at);
  static CircularInterval closed(double start, double extent);
  static CircularInterval open(double start, double extent);
  static CircularInterval make(double start, double extent, bool start_open, bool end_open);
  /// Closed arc running ccw from `from` to `to`; [α, β] with α > β wraps through 0.
  static CircularInterval between(double from, double to);

  bool is_empty() const { return empty_; }
  bool is_full() const { return !empty_ && extent_ >= kTwoPi - kAngleTol && !start_open_ && !end_open_; }
  bool is_point() const { return !empty_ && extent_ <= kAngleTol; }

  double start() const { return start_; }
  double extent() const { return empty_ ? 0.0 : extent_; }
  double end() const { return normalize(start_ + extent_); }
  double midpoint() const { return normalize(start_ + 0.5 * extent_); }
  bool start_open() const { return start_open_; }
  bool end_open() const { return end_open_; }

  double length() const { return extent(); }
  bool contains(double angle, double tol = kAngleTol) const;

  /// Same arc with both endpoints open (the topological interior for
  /// extent < 2π; the circle minus `start` for extent 2π).
  CircularInterval interior() const;
  CircularInterval rotated(double offset) const;

  std::string to_string() const;

  friend bool operator==(const CircularInterval&, const CircularInterval&) = default;

 private:
  double start_ = 0.0;
  double extent_ = 0.0;
  bool start_open_ = false;
  bool end_open_ = false;
  bool empty_ = true;
};

double length(const CircularInterval& a);

/// Maximal arcs of a ∩ b (0, 1 or 2 of them), sorted by start.
std::vector<CircularInterval> intersect(const CircularInterval& a, const CircularInterval& b);

/// True iff a ∩ b contains at least one angle.
bool intersects(const CircularInterval& a, const CircularInterval& b);

/// Maximal arcs of `a` minus the union of `cuts`; pairwise disjoint, sorted by start.
std::vector<CircularInterval> subtract(const CircularInterval& a, std::span<const CircularInterval> cuts);

/// Sum of lengths.
double total_length(std::span<const CircularInterval> arcs);

}  // namespace rotlabel
