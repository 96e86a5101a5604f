#pragma once

// Length-equivalent pairs of closed curves built from intersection points:
//   self:    alpha^n alpha^g   versus (alpha^g)^n alpha
//   general: alpha^n beta^g    versus alpha^n beta^h
// with checks for equal length, non-conjugacy and filling.

#include <optional>
#include <string>
#include <vector>

#include "lenequiv/intersections.hpp"
#include "lenequiv/sampler.hpp"
#include "lenequiv/word.hpp"

namespace lenequiv {

enum class PairKind { self, general };

struct CurvePair {
  PairKind kind = PairKind::self;
  Word left;
  Word right;
  int n = 1;
  Word alpha;
  Word beta;  // equals alpha in the self case
  Word g;
  Word h;     // empty in the self case
};

// Throws DegenerateInputError for n < 1.
CurvePair build_pair_self(const Word& alpha, const IntersectionRecord& record, int n);
CurvePair build_pair_self(const Word& alpha, const Word& g, int n);

// Throws HypothesisError unless <alpha beta^g> and <alpha beta^h> are
// conjugate and g, h name different intersection points (different double
// cosets); DegenerateInputError for n < 1.
CurvePair build_pair_general(const Word& alpha, const Word& beta, const Word& g, const Word& h,
                             int n);

inline constexpr double kLengthTolerance = 1e-9;

struct LengthCheck {
  bool numeric = false;
  double max_deviation = 0;  // relative, over all representations
  bool symbolic = false;
  std::vector<double> tau_left;  // one per representation
  std::vector<double> tau_right;
};

// Numeric: translation lengths over every representation. Symbolic, self
// case: the exact identity tr(A^n B) = tr(B^n A) with A = alpha, B = alpha^g.
// Symbolic, general case: <beta^g> = <beta^h> and <alpha beta^g> =
// <alpha beta^h> exactly, which fixes all three trace coordinates of the
// pairs (alpha, beta^g) and (alpha, beta^h); the general case numeric check
// additionally compares those traces per representation.
LengthCheck check_equal_length(const CurvePair& pair, const std::vector<Representation>& reps,
                               double tol = kLengthTolerance);

struct ConjugacyCheck {
  bool nonconjugate = false;
  bool not_conjugate_to_inverse = false;
  bool operator==(const ConjugacyCheck&) const = default;
};

ConjugacyCheck check_nonconjugate(const CurvePair& pair);

struct ThresholdRow {
  int n = 0;
  ConjugacyCheck check;
};

struct ThresholdScan {
  // Least N < n_max with every n in (N, n_max] passing; empty if none.
  std::optional<int> N;
  int n_max = 0;
  std::vector<ThresholdRow> table;  // n = 1..n_max, raw
};

ThresholdScan find_min_N(const Word& alpha, const Word& g, int n_max);

enum class Filling { yes, no, inconclusive };
const char* to_string(Filling f);

struct FillingCandidate {
  Word z;
  int intersection = 0;  // stabilized i(z, w)
};

struct FillingVerdict {
  Filling verdict = Filling::inconclusive;
  int bound = 0;
  // A simple, essential, non-peripheral class disjoint from w.
  std::optional<Word> witness;
  std::vector<FillingCandidate> candidates;
  // True when the answer does not depend on the enumeration bound.
  bool exact = false;
  std::string basis;
};

// Candidates are primitive, non-peripheral, simple classes of length <=
// scc_word_bound, one per class up to inversion. "no" when one of them is
// disjoint from w (or w itself is peripheral); "yes" when every candidate
// meets w and candidates exist at scc_word_bound - 1 and scc_word_bound. On a
// pair of pants there are no candidates, and every non-peripheral curve
// fills, so that case is decided exactly.
FillingVerdict is_filling(const Word& w, const Representation& rep, int scc_word_bound);

// Simple, primitive, non-peripheral classes of length <= bound.
std::vector<Word> simple_candidates(const Representation& rep, int bound);

struct FillingRow {
  int n = 0;
  FillingVerdict left;
  FillingVerdict right;
};

struct FillingTable {
  FillingVerdict alpha;
  // For each candidate z: (z, 2 i(z, alpha)).
  std::vector<FillingCandidate> context;
  std::vector<FillingRow> rows;
};

// Throws HypothesisError unless is_filling(alpha) is "yes".
FillingTable verify_filling_pairs(const Word& alpha, const Word& g, int n_lo, int n_hi,
                                  const Representation& rep, int scc_word_bound);

struct CosineRuleCheck {
  double predicted_half_length = 0;
  double measured_half_length = 0;
  double angle = 0;  // interior angle used, measured on rep
  double relative_error = 0;
};

// The axes of alpha^n and alpha^g meet at the self-intersection point; the
// triangle with sides n*tau/2 and tau/2 and interior angle pi - (angle
// between the axes' positive directions) has third side tau(alpha^n alpha^g)/2.
// The angle is measured on rep. Throws HypothesisError if g * A_alpha misses
// A_alpha.
CosineRuleCheck cosine_rule_check(const Word& alpha, const Word& g, int n, const Representation& rep);

struct EquivalenceVerdict {
  CurvePair pair;
  LengthCheck length;
  ConjugacyCheck conjugacy;
  std::optional<FillingVerdict> filling_left;
  std::optional<FillingVerdict> filling_right;

  bool length_equivalent() const {
    return length.numeric && length.symbolic && conjugacy.nonconjugate &&
           conjugacy.not_conjugate_to_inverse;
  }
};

EquivalenceVerdict evaluate_pair(const CurvePair& pair, const std::vector<Representation>& reps,
                                 double tol, std::optional<int> filling_bound);

}  // namespace lenequiv
