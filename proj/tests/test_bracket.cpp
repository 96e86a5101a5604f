#include <map>

#include "doctest.h"
#include "lenequiv/bracket.hpp"
#include "lenequiv/errors.hpp"

using namespace lenequiv;

namespace {
const SurfaceSpec kTorus{1, 1, 0};
const SurfaceSpec kPants{0, 3, 0};
Word W(const char* s) { return Word::parse(s); }
}  // namespace

TEST_CASE("formal sums cancel and print canonically") {
  FormalSum s;
  CHECK(s.str() == "0");
  s.add(cyclic_normal_form(W("ba")), 2);
  s.add(cyclic_normal_form(W("aB")), -1);
  CHECK(s.str() == "2<ab> - <aB>");
  CHECK(s.term_count() == 3);
  s.add(s.negated());
  CHECK(s.is_zero());
}

TEST_CASE("loop product") { CHECK(loop_product(W("a"), W("b"), W("a")) == W("aabA")); }

TEST_CASE("torus generators") {
  const auto rep = sample_representation(kTorus, 0, 3);
  CHECK(bracket(W("a"), W("b"), rep, 6).str() == "-<ab>");
  CHECK(bracket(W("b"), W("a"), rep, 6).str() == "<ab>");
}

TEST_CASE("bracket of a curve with itself vanishes") {
  const auto rep = sample_representation(kPants, 0, 3);
  const char* words[] = {"ab", "aab", "aabb", "abbb", "aaab", "aabAb", "aBab", "abAAB", "aaBBab", "abbAAB", "aabaB"};
  for (const char* w : words) {
    CAPTURE(w);
    const auto r = bracket_self_terms(W(w), rep, 6);
    CHECK(r.sum.is_zero());
    CHECK(r.raw_terms.size() == 2 * r.records.size());
    for (std::size_t i = 0; i + 1 < r.raw_terms.size(); i += 2) {
      CHECK(r.raw_terms[i].sign == -r.raw_terms[i + 1].sign);
      CHECK(r.raw_terms[i].cls == r.raw_terms[i + 1].cls);
    }
    CHECK(bracket(W(w), W(w), rep, 6).is_zero());
  }
}

TEST_CASE("figure eight self bracket has two cancelling terms") {
  const auto r = bracket_self_terms(W("ab"), sample_representation(kPants, 0, 3), 6);
  CHECK(r.raw_terms.size() == 2);
  CHECK(r.sum.is_zero());
}

TEST_CASE("bracket is antisymmetric") {
  const auto rep = sample_representation(kTorus, 2, 3);
  const char* pairs[][2] = {{"a", "b"},    {"aab", "abb"}, {"ab", "aB"},   {"aaB", "b"},    {"aabAb", "ab"},
                            {"abAB", "a"}, {"aaBB", "ab"}, {"abb", "aBB"}, {"aB", "aaab"}, {"aabb", "aaBB"}};
  for (const auto& p : pairs) {
    CAPTURE(p[0]);
    CAPTURE(p[1]);
    CHECK(bracket(W(p[0]), W(p[1]), rep, 6) == bracket(W(p[1]), W(p[0]), rep, 6).negated());
  }
}

TEST_CASE("bracket does not depend on the metric") {
  const auto reference = bracket(W("aab"), W("abb"), sample_representation(kTorus, 0, 3), 6);
  for (std::uint64_t seed = 1; seed <= 10; ++seed)
    CHECK(bracket(W("aab"), W("abb"), sample_representation(kTorus, seed, 3), 6) == reference);
}

TEST_CASE("equal term pairs have conjugate loop products") {
  const auto rep = sample_representation(kTorus, 0, 3);
  const Word alpha = W("aaBB");
  const auto pairs = equal_term_pairs(alpha, alpha, rep, 5);
  REQUIRE_FALSE(pairs.empty());
  for (const auto& [g, h] : pairs) {
    CHECK(g != h);
    CHECK(are_conjugate(loop_product(alpha, alpha, g), loop_product(alpha, alpha, h)));
  }
}
