#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace rotlabel {

template <typename Scalar>
using Point2 = Eigen::Matrix<Scalar, 2, 1>;

using Point = Point2<double>;

/// Extents of a rectangle measured from its anchor to each side.
template <typename Scalar>
struct BasicExtents {
  Scalar left = 0;
  Scalar right = 0;
  Scalar bottom = 0;
  Scalar top = 0;

  Scalar width() const { return left + right; }
  Scalar height() const { return bottom + top; }

  friend bool operator==(const BasicExtents&, const BasicExtents&) = default;
};

/// An axis-parallel closed rectangle attached to a map point. As the map
/// rotates, the rectangle turns counterclockwise about its anchor while all
/// points stay fixed.
template <typename Scalar>
struct BasicLabel {
  std::string id;
  Point2<Scalar> anchor = Point2<Scalar>::Zero();
  BasicExtents<Scalar> extents;

  Scalar width() const { return extents.width(); }
  Scalar height() const { return extents.height(); }
  Scalar diagonal() const { return std::hypot(width(), height()); }

  /// Distance from the anchor to the farthest corner.
  Scalar outer_radius() const {
    using std::max;
    const Scalar dx = max(extents.left, extents.right);
    const Scalar dy = max(extents.bottom, extents.top);
    return std::hypot(dx, dy);
  }

  bool well_formed() const {
    return std::isfinite(anchor.x()) && std::isfinite(anchor.y()) && extents.left >= 0 && extents.right >= 0 &&
           extents.bottom >= 0 && extents.top >= 0 && width() > 0 && height() > 0;
  }
};

using Extents = BasicExtents<double>;
using Label = BasicLabel<double>;

/// Unit square whose anchor is its lower-left corner.
inline Label unit_square(std::string id, const Point& anchor) {
  return Label{std::move(id), anchor, Extents{0.0, 1.0, 0.0, 1.0}};
}

/// Box that `anchor(b) - anchor(a)`, expressed in the labels' common rotated
/// frame, must lie in for the two rectangles to meet. Order: xmin, xmax, ymin, ymax.
template <typename Scalar>
Eigen::Matrix<Scalar, 4, 1> contact_box(const BasicExtents<Scalar>& a, const BasicExtents<Scalar>& b) {
  Eigen::Matrix<Scalar, 4, 1> box;
  box << -(a.left + b.right), a.right + b.left, -(a.bottom + b.top), a.top + b.bottom;
  return box;
}

namespace detail {

// Relative slack for the closed-box test. Contacts that are exact in real
// arithmetic (corner touches at anchor distance √2) land within a few ulps.
inline constexpr double kContactRelTol = 1e-12;

template <typename Scalar>
bool in_rotated_box(const Point2<Scalar>& offset, const Eigen::Matrix<Scalar, 4, 1>& box, Scalar alpha) {
  const Point2<Scalar> rel = Eigen::Rotation2D<Scalar>(-alpha) * offset;
  const Scalar scale = offset.norm() + box.cwiseAbs().maxCoeff();
  const Scalar tol = Scalar(kContactRelTol) * scale;
  return rel.x() >= box(0) - tol && rel.x() <= box(1) + tol && rel.y() >= box(2) - tol && rel.y() <= box(3) + tol;
}

}  // namespace detail

/// True iff the closed rectangles of `a` and `b`, each turned by `alpha` about
/// its own anchor, share a point.
template <typename Scalar>
bool labels_intersect(const BasicLabel<Scalar>& a, const BasicLabel<Scalar>& b, Scalar alpha) {
  return detail::in_rotated_box<Scalar>(b.anchor - a.anchor, contact_box(a.extents, b.extents), alpha);
}

/// True iff `q` lies in the closed rectangle of `a` turned by `alpha`.
template <typename Scalar>
bool point_in_label(const BasicLabel<Scalar>& a, const Point2<Scalar>& q, Scalar alpha) {
  return detail::in_rotated_box<Scalar>(q - a.anchor, contact_box(a.extents, BasicExtents<Scalar>{}), alpha);
}

/// Conflict-candidacy filter: the outer circles overlap or touch.
template <typename Scalar>
bool outer_circles_overlap(const BasicLabel<Scalar>& a, const BasicLabel<Scalar>& b) {
  const Scalar reach = a.outer_radius() + b.outer_radius();
  return (b.anchor - a.anchor).squaredNorm() <= reach * reach * (1 + 1e-12);
}

/// Corners of the rotated rectangle, counterclockwise from the lower-left one.
template <typename Scalar>
std::vector<Point2<Scalar>> rotated_corners(const BasicLabel<Scalar>& a, Scalar alpha) {
  const Eigen::Rotation2D<Scalar> rot(alpha);
  const auto& e = a.extents;
  const std::vector<Point2<Scalar>> local{Point2<Scalar>(-e.left, -e.bottom), Point2<Scalar>(e.right, -e.bottom),
                                          Point2<Scalar>(e.right, e.top), Point2<Scalar>(-e.left, e.top)};
  std::vector<Point2<Scalar>> out;
  out.reserve(4);
  for (const auto& c : local) out.push_back(a.anchor + rot * c);
  return out;
}

/// A set of labels; each anchor is also one of the map points.
struct Instance {
  std::vector<Label> labels;

  std::size_t size() const { return labels.size(); }
  bool empty() const { return labels.empty(); }
};

struct InstanceDiagnostics {
  std::vector<std::string> errors;    // malformed labels, duplicate ids, coincident anchors
  std::vector<std::string> warnings;  // overlap at rotation 0, unbounded size ratios
  double width_ratio = 1.0;
  double height_ratio = 1.0;
  double max_aspect = 1.0;

  bool ok() const { return errors.empty(); }
};

/// Structural checks. Overlap at rotation 0 is reported as a warning only.
InstanceDiagnostics check_instance(const Instance& inst);

/// Largest label diagonal over the instance (0 for an empty instance).
double max_diagonal(const Instance& inst);
double max_outer_radius(const Instance& inst);

}  // namespace rotlabel
