#include <cmath>

#include "doctest.h"
#include "lenequiv/bracket.hpp"
#include "lenequiv/errors.hpp"
#include "lenequiv/pipeline.hpp"

using namespace lenequiv;

namespace {
const SurfaceSpec kTorus{1, 1, 0};
const SurfaceSpec kPants{0, 3, 0};
Word W(const char* s) { return Word::parse(s); }

std::vector<Representation> pants_reps(int count) {
  std::vector<Representation> reps;
  for (int s = 0; s < count; ++s) reps.push_back(sample_representation(kPants, static_cast<std::uint64_t>(s), 3));
  return reps;
}
}  // namespace

TEST_CASE("self pair words") {
  const auto p = build_pair_self(W("ab"), W("a"), 2);
  CHECK(p.left == compose(W("abab"), conjugate(W("ab"), W("a"))));
  CHECK(p.right == compose(power(conjugate(W("ab"), W("a")), 2), W("ab")));
  CHECK_THROWS_AS(build_pair_self(W("ab"), W("a"), 0), DegenerateInputError);
}

TEST_CASE("figure eight pairs have equal length") {
  const auto reps = pants_reps(20);
  for (int n = 1; n <= 10; ++n) {
    const auto check = check_equal_length(build_pair_self(W("ab"), W("a"), n), reps);
    CHECK(check.numeric);
    CHECK(check.symbolic);
    CHECK(check.max_deviation <= 1e-9);
  }
}

TEST_CASE("a generic pair of words does not have equal length") {
  CurvePair p = build_pair_self(W("ab"), W("a"), 2);
  p.right = W("aab");
  CHECK_FALSE(check_equal_length(p, pants_reps(3)).numeric);
}

TEST_CASE("non-conjugacy threshold for the figure eight") {
  const auto scan = find_min_N(W("ab"), W("a"), 50);
  REQUIRE(scan.N);
  CHECK(*scan.N == 1);
  CHECK(scan.table.size() == 50);
  CHECK_FALSE(scan.table[0].check.nonconjugate);
  for (int n = 2; n <= 50; ++n) CHECK(scan.table[static_cast<std::size_t>(n - 1)].check.nonconjugate);
  CHECK_FALSE(find_min_N(W("ab"), W("a"), 1).N);
}

TEST_CASE("cosine rule reproduces the measured length") {
  for (const auto& rep : pants_reps(5))
    for (int n = 1; n <= 6; ++n) CHECK(cosine_rule_check(W("ab"), W("a"), n, rep).relative_error <= 1e-8);
  CHECK_THROWS_AS(cosine_rule_check(W("ab"), W(""), 1, pants_reps(1)[0]), HypothesisError);
}

TEST_CASE("filling verdicts") {
  const auto torus = sample_representation(kTorus, 0, 3);
  const auto pants = sample_representation(kPants, 0, 3);
  const auto ab = is_filling(W("ab"), pants, 4);
  CHECK(ab.verdict == Filling::yes);
  CHECK(ab.exact);
  CHECK(is_filling(W("aa"), pants, 4).verdict == Filling::no);

  const auto a = is_filling(W("a"), torus, 4);
  CHECK(a.verdict == Filling::no);
  REQUIRE(a.witness);
  CHECK(*a.witness == W("a"));
  CHECK(is_filling(W("abAB"), torus, 4).verdict == Filling::no);
  CHECK(is_filling(W("aabAb"), torus, 4).verdict == Filling::yes);
  const auto not_filling = is_filling(W("aabAB"), torus, 4);
  CHECK(not_filling.verdict == Filling::no);
  CHECK(not_filling.witness);
}

TEST_CASE("simple candidates on the torus") {
  const auto torus = sample_representation(kTorus, 0, 3);
  const auto c = simple_candidates(torus, 2);
  CHECK(c.size() == 4);  // a, b, ab, aB up to inversion
  CHECK(simple_candidates(sample_representation(kPants, 0, 3), 4).empty());
}

TEST_CASE("filling propagates to the constructed pairs") {
  const auto t = verify_filling_pairs(W("ab"), W("a"), 2, 6, sample_representation(kPants, 0, 3), 4);
  CHECK(t.rows.size() == 5);
  for (const auto& row : t.rows) {
    CHECK(row.left.verdict == Filling::yes);
    CHECK(row.right.verdict == Filling::yes);
  }
  CHECK_THROWS_AS(verify_filling_pairs(W("a"), W("b"), 2, 3, sample_representation(kTorus, 0, 3), 4),
                  HypothesisError);
}

TEST_CASE("general pairs") {
  const Word alpha = W("aaBB");
  const auto pairs = equal_term_pairs(alpha, alpha, sample_representation(kTorus, 0, 3), 5);
  REQUIRE_FALSE(pairs.empty());
  const auto [g, h] = pairs.front();
  std::vector<Representation> reps;
  for (std::uint64_t s = 0; s < 10; ++s) reps.push_back(sample_representation(kTorus, s, 3));
  for (int n = 2; n <= 4; ++n) {
    const auto v = evaluate_pair(build_pair_general(alpha, alpha, g, h, n), reps, 1e-9, std::nullopt);
    CHECK(v.length.numeric);
    CHECK(v.length.symbolic);
  }
  CHECK_THROWS_AS(build_pair_general(alpha, alpha, g, g, 2), HypothesisError);
  CHECK_THROWS_AS(build_pair_general(W("ab"), W("aB"), W(""), W("a"), 2), HypothesisError);
}

TEST_CASE("equivalence verdict for the figure eight") {
  const auto v = evaluate_pair(build_pair_self(W("ab"), W("a"), 3), pants_reps(4), 1e-9, 4);
  CHECK(v.length_equivalent());
  REQUIRE(v.filling_left);
  CHECK(v.filling_left->verdict == Filling::yes);
  CHECK_FALSE(evaluate_pair(build_pair_self(W("ab"), W("a"), 1), pants_reps(2), 1e-9, std::nullopt)
                  .length_equivalent());
}
