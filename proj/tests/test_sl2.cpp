#include <cmath>
#include <random>

#include "doctest.h"
#include "lenequiv/errors.hpp"
#include "lenequiv/sl2.hpp"

using namespace lenequiv;

TEST_CASE("classification by trace") {
  CHECK(classify(Mat2{2, 0, 0, 0.5}) == IsometryType::hyperbolic);
  CHECK(classify(Mat2{1, 1, 0, 1}) == IsometryType::parabolic);
  CHECK(classify(Mat2{0, -1, 1, 0}) == IsometryType::elliptic);
  CHECK_THROWS_AS(translation_length(Mat2{1, 1, 0, 1}), ClassificationError);
}

TEST_CASE("translation length of a diagonal matrix") {
  const double t = 3;
  CHECK(translation_length(Mat2{t, 0, 0, 1 / t}) == doctest::Approx(2 * std::log(t)));
}

TEST_CASE("axis endpoints and normalizing map") {
  const Mat2 m{2, 1, 1, 1};
  const Axis ax = axis(m);
  CHECK(apply(m, ax.attracting).x == doctest::Approx(ax.attracting.x));
  CHECK(apply(m, ax.repelling).x == doctest::Approx(ax.repelling.x));
  const Mat2 n = normalizing_map(ax);
  CHECK(std::abs(apply(n, ax.repelling).x) < 1e-12);
  const BoundaryPoint top = apply(n, ax.attracting);
  CHECK((top.infinite || std::abs(top.x) > 1e12));
  CHECK(n.det() == doctest::Approx(1));
}

TEST_CASE("perpendicular axes cross at i") {
  const Axis vertical{BoundaryPoint::infinity(), BoundaryPoint::at(0), 1};
  const Axis unit{BoundaryPoint::at(1), BoundaryPoint::at(-1), 1};
  CHECK(axes_cross(vertical, unit));
  const Crossing c = crossing_point_and_sign(vertical, unit);
  CHECK(c.point.x == doctest::Approx(0).epsilon(1e-12));
  CHECK(c.point.y == doctest::Approx(1));
  CHECK(c.angle == doctest::Approx(M_PI / 2));
  CHECK(crossing_point_and_sign(unit, vertical).sign == -c.sign);
  CHECK(crossing_point_and_sign(vertical, unit.reversed()).sign == -c.sign);
}

TEST_CASE("disjoint axes do not cross") {
  const Axis a{BoundaryPoint::at(1), BoundaryPoint::at(0), 1};
  const Axis b{BoundaryPoint::at(3), BoundaryPoint::at(2), 1};
  CHECK_FALSE(axes_cross(a, b));
  CHECK_THROWS_AS(crossing_point_and_sign(a, b), HypothesisError);
}

TEST_CASE("shared endpoints are a degeneracy") {
  const Axis a{BoundaryPoint::at(1), BoundaryPoint::at(0), 1};
  const Axis b{BoundaryPoint::at(2), BoundaryPoint::at(0), 1};
  CHECK_THROWS_AS(axes_cross(a, b), DegeneracyError);
}

TEST_CASE("law of cosines") {
  // Right angle: cosh c = cosh a cosh b.
  const double c = hyperbolic_cosine_rule(1.0, 2.0, M_PI / 2);
  CHECK(std::cosh(c) == doctest::Approx(std::cosh(1.0) * std::cosh(2.0)));
  const double g = M_PI / 3;
  const double expected = std::acosh(std::cosh(1.0) * std::cosh(2.0) - std::sinh(1.0) * std::sinh(2.0) * std::cos(g));
  CHECK(hyperbolic_cosine_rule(1.0, 2.0, g) == doctest::Approx(expected));
  CHECK_THROWS(hyperbolic_cosine_rule(1.0, 2.0, M_PI));
}

TEST_CASE("distance and axis coordinate along the imaginary axis") {
  CHECK(hyperbolic_distance({0, 1}, {0, std::exp(2.0)}) == doctest::Approx(2.0));
  const Axis vertical{BoundaryPoint::infinity(), BoundaryPoint::at(0), 1};
  CHECK(axis_coordinate(vertical, {0, std::exp(1.5)}) == doctest::Approx(1.5));
}

TEST_CASE("renormalization keeps unit determinant over long bounded products") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> angle(0, 2 * M_PI);
  Mat2 m = Mat2::identity();
  for (int k = 0; k < 200; ++k) {
    const double t = angle(rng);
    m = renormalize(m * Mat2{std::cos(t), -std::sin(t), std::sin(t), std::cos(t)});
    CHECK(std::abs(m.det() - 1) <= 1e-12);
  }
}

TEST_CASE("evaluate uses inverse matrices for inverse letters") {
  const std::vector<Mat2> gens{{2, 1, 1, 1}, {1, 1, 0, 1}};
  CHECK(distance_from_identity(evaluate(Word::parse("aA"), gens)) < 1e-12);
  const Mat2 m = evaluate(Word::parse("ab"), gens);
  CHECK(m.a == doctest::Approx(2));
  CHECK(m.b == doctest::Approx(3));
  CHECK_THROWS_AS(evaluate(Word::parse("c"), gens), AlphabetError);
}
