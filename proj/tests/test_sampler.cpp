#include "doctest.h"
#include "lenequiv/errors.hpp"
#include "lenequiv/sampler.hpp"

using namespace lenequiv;

namespace {
const SurfaceSpec kTorus{1, 1, 0};
const SurfaceSpec kPants{0, 3, 0};
const SurfaceSpec kGenus2{2, 1, 0};

std::string arrangement_text(const Representation& rep) {
  std::string s;
  for (Letter l : rep.certificate->arrangement) s += letter_char(l);
  return s;
}
}  // namespace

TEST_CASE("surface specs") {
  CHECK(kTorus.rank() == 2);
  CHECK(kPants.rank() == 2);
  CHECK(kGenus2.rank() == 4);
  CHECK(kPants.euler_characteristic() == -1);
  CHECK_THROWS_AS((SurfaceSpec{1, 0, 0}.validate()), ConfigError);
  CHECK_THROWS_AS((SurfaceSpec{0, 2, 0}.validate()), ConfigError);
}

TEST_CASE("arrangements encode the topology") {
  CHECK(arrangement_text(sample_representation(kTorus, 0, 3)) == "aBAb");
  CHECK(arrangement_text(sample_representation(kPants, 0, 3)) == "aABb");
  CHECK(arrangement_text(sample_representation(kGenus2, 0, 3)) == "aBAbcDCd");
}

TEST_CASE("boundary words") {
  const auto torus = boundary_words(surface_arrangement(kTorus));
  REQUIRE(torus.size() == 1);
  CHECK(are_conjugate(torus[0], Word::parse("BabA")));
  const auto pants = boundary_words(surface_arrangement(kPants));
  CHECK(pants.size() == 3);
  CHECK(is_peripheral(Word::parse("aa"), pants));
  CHECK(is_peripheral(Word::parse("bA"), pants));
  CHECK_FALSE(is_peripheral(Word::parse("ab"), pants));
  CHECK(boundary_words(surface_arrangement(SurfaceSpec{1, 2, 0})).size() == 2);
}

TEST_CASE("sampling is deterministic in the seed") {
  for (std::uint64_t seed : {0ULL, 5ULL, 42ULL}) {
    const auto r1 = sample_representation(kGenus2, seed, 3);
    const auto r2 = sample_representation(kGenus2, seed, 3);
    CHECK(r1.generators == r2.generators);
  }
  CHECK(sample_representation(kTorus, 1, 3).generators != sample_representation(kTorus, 2, 3).generators);
}

TEST_CASE("seed 0 on the torus is the symmetric layout") {
  const auto rep = sample_representation(kTorus, 0, 3);
  CHECK(rep.generators[0].a == doctest::Approx(3));
  CHECK(rep.generators[0].b == doctest::Approx(0));
  const Axis b = axis(rep.generators[1]);
  CHECK(std::abs(std::abs(b.attracting.x) - 1) < 1e-12);
  CHECK(std::abs(std::abs(b.repelling.x) - 1) < 1e-12);
}

TEST_CASE("certified representations are unit determinant ping-pong groups") {
  for (const auto& s : {kTorus, kPants, kGenus2, SurfaceSpec{0, 4, 0}, SurfaceSpec{1, 1, 1}}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto rep = sample_representation(s, seed, 3);
      REQUIRE(rep.certificate);
      CHECK(rep.rank() == s.rank());
      for (const Mat2& m : rep.generators) CHECK(std::abs(m.det() - 1) < 1e-12);
      CHECK(rep.certificate->min_gap > 0);
      CHECK_NOTHROW(certify_ping_pong(rep));
    }
  }
}

TEST_CASE("spread below the minimum is rejected") {
  CHECK_THROWS_AS(sample_representation(kTorus, 0, 1.0), ConfigError);
}

TEST_CASE("perturbation keeps the certificate and records itself") {
  const auto base = sample_representation(kPants, 3, 3);
  const auto moved = perturb(base, 11, 0.05);
  CHECK(moved.generators != base.generators);
  CHECK(moved.certificate->arrangement == base.certificate->arrangement);
  REQUIRE(moved.perturbations.size() == 1);
  CHECK(moved.perturbations[0].seed == 11);
  CHECK(perturb(base, 11, 0).generators == base.generators);
}

TEST_CASE("geodesic length ignores conjugation") {
  const auto rep = sample_representation(kPants, 4, 3);
  const Word w = Word::parse("aab");
  const double t = geodesic_length(w, rep);
  CHECK(geodesic_length(conjugate(w, Word::parse("bAbbA")), rep) == doctest::Approx(t).epsilon(1e-12));
  CHECK(geodesic_length(invert(w), rep) == doctest::Approx(t).epsilon(1e-12));
}
