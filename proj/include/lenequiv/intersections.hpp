#pragma once

// Intersection points of closed geodesics, found as crossings between the
// axis of alpha and translates h * axis(beta) in the upper half-plane.
//
// A crossing of A_alpha with h A_beta depends only on the double coset
// <alpha> h <beta>; each double coset is one intersection point of the two
// curves on the surface. For self-intersections the cosets of g and g^-1 are
// the two branches through the same point and are merged into one record.

#include <optional>
#include <string>
#include <vector>

#include "lenequiv/sampler.hpp"
#include "lenequiv/sl2.hpp"
#include "lenequiv/word.hpp"

namespace lenequiv {

struct IntersectionRecord {
  // Shortlex-least element of the double coset.
  Word witness;
  // Crossing point, translated along A_alpha into one period [0, tau_alpha).
  HPoint point;
  // Sign of the frame (tangent of A_alpha, tangent of witness * A_beta).
  int sign = 0;
  std::string coset_key;
  double axis_coordinate = 0;
  // Angle between the positive directions of the two axes at the crossing.
  double angle = 0;
};

enum class Execution { serial, parallel };

// Every reduced word of length <= max_len over rank generators, shortlex
// ordered, starting with the identity.
std::vector<Word> reduced_words_up_to(int rank, int max_len);

// Shortlex-least element of <left> h <right>, searched over left^i h right^j
// with a window grown until the minimum is stable.
Word double_coset_representative(const Word& h, const Word& left, const Word& right);

// Candidates are p * s * q^-1 with p a prefix of alpha, q a prefix of beta and
// s any reduced word of length <= word_bound; this includes every word of
// length <= word_bound. Records are sorted by coset_key.
//
// Throws DegenerateInputError unless both words are nonempty and cyclically
// reduced, SamplerError for an uncertified representation, and
// DegeneracyError when a candidate translate is numerically tangent to
// A_alpha's endpoints.
std::vector<IntersectionRecord> mutual_intersections(const Word& alpha, const Word& beta,
                                                     const Representation& rep, int word_bound,
                                                     Execution exec = Execution::parallel);

// One record per self-intersection point of the closed geodesic alpha.
// alpha must be cyclically reduced and not a proper power.
std::vector<IntersectionRecord> self_intersections(const Word& alpha, const Representation& rep,
                                                   int word_bound,
                                                   Execution exec = Execution::parallel);

// Crossing of A_alpha with h A_beta, if any.
std::optional<IntersectionRecord> crossing_for(const Word& alpha, const Word& beta, const Word& h,
                                               const Representation& rep);

inline constexpr int kStabilizationStart = 3;
inline constexpr int kStabilizationCap = 9;

struct StabilizedCount {
  int count = 0;
  // Smallest bound W with count(W) == count(W + 1).
  int bound = 0;
  int hard_cap = 0;
  std::vector<int> history;  // count at start, start + 1, ...
};

// Runs mutual_intersections at increasing bounds until two successive bounds
// agree. Throws InconclusiveError if that does not happen by hard_cap.
StabilizedCount stabilized_count(const Word& alpha, const Word& beta, const Representation& rep,
                                 int start_bound = kStabilizationStart,
                                 int hard_cap = kStabilizationCap);

}  // namespace lenequiv
