#include "lenequiv/sl2.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "lenequiv/errors.hpp"

namespace lenequiv {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_2pi(double t) {
  t = std::fmod(t, 2 * kPi);
  return t < 0 ? t + 2 * kPi : t;
}

double angular_gap(double s, double t) {
  const double d = wrap_2pi(s - t);
  return std::min(d, 2 * kPi - d);
}

void check_separated(const Axis& a1, const Axis& a2) {
  for (const auto* p : {&a1.repelling, &a1.attracting}) {
    for (const auto* q : {&a2.repelling, &a2.attracting}) {
      if (angular_gap(p->angle(), q->angle()) < kBoundarySeparation)
        throw DegeneracyError("axis endpoints " + p->str() + " and " + q->str() +
                              " are too close to decide crossing");
    }
  }
}

}  // namespace

Mat2 Mat2::normalized() const {
  const double dt = det();
  if (!(dt > 0)) return *this;
  const double s = std::sqrt(dt);
  return {a / s, b / s, c / s, d / s};
}

Mat2 renormalize(const Mat2& m) {
  if (std::max({std::abs(m.a), std::abs(m.b), std::abs(m.c), std::abs(m.d)}) > kRenormalizeScale) return m;
  return m.normalized();
}

Mat2 Mat2::projective_form() const {
  const double lead = std::abs(a) >= std::abs(d) ? a : d;
  return lead < 0 ? -*this : *this;
}

double distance_from_identity(const Mat2& m) {
  auto dist = [&](double s) {
    return std::max({std::abs(m.a - s), std::abs(m.b), std::abs(m.c), std::abs(m.d - s)});
  };
  return std::min(dist(1.0), dist(-1.0));
}

double BoundaryPoint::angle() const { return infinite ? kPi : 2 * std::atan(x); }

std::string BoundaryPoint::str() const {
  if (infinite) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

BoundaryPoint apply(const Mat2& m, const BoundaryPoint& p) {
  if (p.infinite) return m.c == 0 ? BoundaryPoint::infinity() : BoundaryPoint::at(m.a / m.c);
  const double den = m.c * p.x + m.d;
  if (den == 0) return BoundaryPoint::infinity();
  return BoundaryPoint::at((m.a * p.x + m.b) / den);
}

HPoint apply(const Mat2& m, const HPoint& p) {
  // (a z + b)/(c z + d) with z = x + iy; unit determinant keeps y > 0.
  const double ux = m.a * p.x + m.b, uy = m.a * p.y;
  const double vx = m.c * p.x + m.d, vy = m.c * p.y;
  const double den = vx * vx + vy * vy;
  return {(ux * vx + uy * vy) / den, (uy * vx - ux * vy) / den};
}

double hyperbolic_distance(const HPoint& p, const HPoint& q) {
  const double dx = p.x - q.x, dy = p.y - q.y;
  return std::acosh(1 + (dx * dx + dy * dy) / (2 * p.y * q.y));
}

const char* to_string(IsometryType t) {
  switch (t) {
    case IsometryType::hyperbolic: return "hyperbolic";
    case IsometryType::parabolic: return "parabolic";
    case IsometryType::elliptic: return "elliptic";
  }
  return "?";
}

IsometryType classify(const Mat2& m) {
  const double t = std::abs(m.trace());
  if (std::abs(t - 2) <= kTraceTolerance) return IsometryType::parabolic;
  return t > 2 ? IsometryType::hyperbolic : IsometryType::elliptic;
}

double translation_length(const Mat2& m) {
  if (classify(m) != IsometryType::hyperbolic)
    throw ClassificationError(std::string("translation length of a ") + to_string(classify(m)) +
                              " element");
  return 2 * std::acosh(std::abs(m.trace()) / 2);
}

Axis axis(const Mat2& m) {
  const double tl = translation_length(m);
  const double tr = m.trace();
  const double disc = std::sqrt(tr * tr - 4);
  const double big = (tr + std::copysign(disc, tr)) / 2;
  const double small = 1 / big;

  auto fixed_point = [&](double lambda) {
    // Eigenvector (v0, v1) of lambda; the fixed point is v0 / v1.
    double v0 = m.b, v1 = lambda - m.a;
    const double w0 = lambda - m.d, w1 = m.c;
    if (std::hypot(w0, w1) > std::hypot(v0, v1)) {
      v0 = w0;
      v1 = w1;
    }
    return v1 == 0 ? BoundaryPoint::infinity() : BoundaryPoint::at(v0 / v1);
  };
  return {fixed_point(big), fixed_point(small), tl};
}

Axis apply(const Mat2& g, const Axis& ax) {
  return {apply(g, ax.attracting), apply(g, ax.repelling), ax.translation_length};
}

Mat2 normalizing_map(const Axis& ax) {
  // Work with boundary angles so that endpoints near 0 or infinity stay well
  // conditioned. The rotation sends the repelling end to angle 0, then a
  // lower-triangular map fixing 0 pushes the attracting end to infinity.
  const double theta_r = ax.repelling.angle();
  const double delta = wrap_2pi(ax.attracting.angle() - theta_r);
  const double c = std::cos(-theta_r / 2), s = std::sin(-theta_r / 2);
  const Mat2 rotate{c, s, -s, c};
  const Mat2 shear{1, 0, -std::cos(delta / 2) / std::sin(delta / 2), 1};
  return shear * rotate;
}

bool axes_cross(const Axis& a1, const Axis& a2) {
  check_separated(a1, a2);
  const double base = a1.repelling.angle();
  const double top = wrap_2pi(a1.attracting.angle() - base);
  const bool r_in = wrap_2pi(a2.repelling.angle() - base) < top;
  const bool a_in = wrap_2pi(a2.attracting.angle() - base) < top;
  return r_in != a_in;
}

Crossing crossing_point_and_sign(const Axis& a1, const Axis& a2) {
  if (!axes_cross(a1, a2)) throw HypothesisError("axes do not cross");
  const double base = a1.repelling.angle();
  const double top = wrap_2pi(a1.attracting.angle() - base);
  const bool r2_first = wrap_2pi(a2.repelling.angle() - base) < top;

  Crossing out;
  // Counterclockwise order (r1, r2, a1, a2) is a positive crossing.
  out.sign = r2_first ? 1 : -1;

  const Mat2 s = normalizing_map(a1);
  const BoundaryPoint u = apply(s, a2.repelling), v = apply(s, a2.attracting);
  if (u.infinite || v.infinite) throw DegeneracyError("crossing axis shares an endpoint");
  const double h = std::sqrt(-u.x * v.x);
  out.point = apply(s.inverse(), HPoint{0, h});
  const double centre = (u.x + v.x) / 2, radius = std::abs(v.x - u.x) / 2;
  const double cos_angle = std::copysign(1.0, v.x - u.x) * centre / radius;
  out.angle = std::acos(std::clamp(cos_angle, -1.0, 1.0));
  return out;
}

double axis_coordinate(const Axis& ax, const HPoint& p) {
  const HPoint q = apply(normalizing_map(ax), p);
  return 0.5 * std::log(q.x * q.x + q.y * q.y);
}

double hyperbolic_cosine_rule(double side_a, double side_b, double angle_gamma) {
  if (!(side_a > 0) || !(side_b > 0))
    throw DegenerateInputError("cosine rule needs positive side lengths");
  if (!(angle_gamma > 0) || !(angle_gamma < kPi))
    throw DegenerateInputError("cosine rule angle must lie in (0, pi)");
  // cosh(a-b) + 2 sinh a sinh b sin^2(gamma/2) avoids cancellation for small gamma.
  const double s = std::sin(angle_gamma / 2);
  const double ch = std::cosh(side_a - side_b) + 2 * std::sinh(side_a) * std::sinh(side_b) * s * s;
  return std::acosh(std::max(1.0, ch));
}

Mat2 evaluate(const Word& w, std::span<const Mat2> gens) {
  Mat2 m = Mat2::identity();
  for (Letter l : w.letters()) {
    const auto g = static_cast<std::size_t>(std::abs(l));
    if (g > gens.size())
      throw AlphabetError("word uses generator " + std::to_string(g) + " beyond representation rank " +
                          std::to_string(gens.size()));
    m = renormalize(m * (l > 0 ? gens[g - 1] : gens[g - 1].inverse()));
  }
  return m;
}

}  // namespace lenequiv
