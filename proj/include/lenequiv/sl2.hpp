#pragma once

// Double-precision hyperbolic geometry of SL(2,R) acting on the upper
// half-plane: classification, axes, translation lengths, axis crossings and
// their signs, and the hyperbolic law of cosines.

#include <span>
#include <string>

#include "lenequiv/word.hpp"

namespace lenequiv {

inline constexpr double kTraceTolerance = 1e-9;
inline constexpr double kBoundarySeparation = 1e-9;

struct Mat2 {
  double a = 1, b = 0, c = 0, d = 1;

  static constexpr Mat2 identity() { return {1, 0, 0, 1}; }

  constexpr double det() const { return a * d - b * c; }
  constexpr double trace() const { return a + d; }
  constexpr Mat2 inverse() const { return {d, -b, -c, a}; }  // unit determinant assumed
  constexpr Mat2 operator-() const { return {-a, -b, -c, -d}; }

  // Divides by sqrt(det) when det > 0.
  Mat2 normalized() const;
  // Representative with nonnegative larger-magnitude diagonal entry (PSL form).
  Mat2 projective_form() const;

  friend constexpr Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
  }
  bool operator==(const Mat2&) const = default;
};

// Divides by sqrt(det) only while the largest entry is at most
// kRenormalizeScale. Small entries of a product carry absolute error of order
// eps * max|entry|, so beyond that the computed det is noise and dividing by it
// would add error rather than remove drift.
inline constexpr double kRenormalizeScale = 100;
Mat2 renormalize(const Mat2& m);

// Max entrywise distance to +I or -I.
double distance_from_identity(const Mat2& m);

// A point of the real line or the point at infinity.
struct BoundaryPoint {
  double x = 0;
  bool infinite = false;

  static constexpr BoundaryPoint at(double v) { return {v, false}; }
  static constexpr BoundaryPoint infinity() { return {0, true}; }

  // Angle of the point on the boundary circle: 2*atan(x), infinity -> pi.
  double angle() const;
  std::string str() const;
  bool operator==(const BoundaryPoint&) const = default;
};

struct HPoint {
  double x = 0;
  double y = 1;
};

BoundaryPoint apply(const Mat2& m, const BoundaryPoint& p);
HPoint apply(const Mat2& m, const HPoint& p);
double hyperbolic_distance(const HPoint& p, const HPoint& q);

enum class IsometryType { hyperbolic, parabolic, elliptic };
const char* to_string(IsometryType t);

IsometryType classify(const Mat2& m);

// 2*acosh(|tr m|/2). Throws ClassificationError unless m is hyperbolic.
double translation_length(const Mat2& m);

// Oriented geodesic from repelling to attracting endpoint.
struct Axis {
  BoundaryPoint attracting;
  BoundaryPoint repelling;
  double translation_length = 0;

  Axis reversed() const { return {repelling, attracting, translation_length}; }
};

Axis axis(const Mat2& m);
Axis apply(const Mat2& g, const Axis& ax);

// Orientation-preserving map sending the repelling endpoint to 0 and the
// attracting endpoint to infinity.
Mat2 normalizing_map(const Axis& ax);

// Throws DegeneracyError when an endpoint of one axis lies within
// kBoundarySeparation (boundary angle) of an endpoint of the other.
bool axes_cross(const Axis& a1, const Axis& a2);

struct Crossing {
  HPoint point;
  // Orientation of (tangent of a1, tangent of a2); +1 counterclockwise.
  int sign = 0;
  // Angle between the positive directions of the two axes, in [0, pi].
  double angle = 0;
};

// Throws HypothesisError when the axes do not cross.
Crossing crossing_point_and_sign(const Axis& a1, const Axis& a2);

// Signed distance along the axis from the base point normalizing_map(ax)^-1(i)
// to the orthogonal projection of p, positive towards the attracting end.
double axis_coordinate(const Axis& ax, const HPoint& p);

// c with cosh c = cosh a cosh b - sinh a sinh b cos gamma.
double hyperbolic_cosine_rule(double side_a, double side_b, double angle_gamma);

// Product of generator matrices (inverse letters use the inverse matrix),
// passed through renormalize() at every step. Throws AlphabetError when
// the word uses a generator beyond gens.size().
Mat2 evaluate(const Word& w, std::span<const Mat2> gens);

}  // namespace lenequiv
