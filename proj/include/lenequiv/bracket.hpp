#pragma once

// Goldman bracket of two closed curves as a signed formal sum of conjugacy
// classes, one term per intersection point.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lenequiv/intersections.hpp"
#include "lenequiv/word.hpp"

namespace lenequiv {

// Integer combination of conjugacy classes with zero coefficients dropped.
class FormalSum {
 public:
  void add(const CyclicWord& c, long coefficient);
  void add(const FormalSum& other);
  FormalSum negated() const;

  const std::map<CyclicWord, long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Sum of absolute coefficients.
  long term_count() const;
  // "2<ab> - <aB>" style, classes in shortlex order; "0" when empty.
  std::string str() const;

  bool operator==(const FormalSum&) const = default;

 private:
  std::map<CyclicWord, long> terms_;
};

// One signed loop product before combination.
struct BracketTerm {
  Word witness;
  CyclicWord cls;
  int sign = 0;
};

struct BracketResult {
  std::vector<IntersectionRecord> records;
  std::vector<BracketTerm> raw_terms;
  FormalSum sum;
};

// alpha * (h beta h^-1) at the point witnessed by h.
Word loop_product(const Word& alpha, const Word& beta, const Word& h);

// Sum over mutual intersection records of sign * <alpha h beta h^-1>. When
// beta is conjugate to alpha^(+-1) the records are the two branches of every
// self-intersection point and the result is zero.
BracketResult bracket_terms(const Word& alpha, const Word& beta, const Representation& rep,
                            int word_bound);
FormalSum bracket(const Word& alpha, const Word& beta, const Representation& rep, int word_bound);

// For each self-intersection (g, sign): sign * <alpha alpha^g> and
// -sign * <alpha^g alpha>. The two classes are conjugate, so the sum is zero.
BracketResult bracket_self_terms(const Word& alpha, const Representation& rep, int word_bound);
FormalSum bracket_self(const Word& alpha, const Representation& rep, int word_bound);

// Unordered pairs of distinct records whose loop products are conjugate.
std::vector<std::pair<Word, Word>> equal_term_pairs(const Word& alpha, const Word& beta,
                                                    const Representation& rep, int word_bound);

}  // namespace lenequiv
