#include "lenequiv/bracket.hpp"

#include <cstdlib>
#include <sstream>

namespace lenequiv {

void FormalSum::add(const CyclicWord& c, long coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(c, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

void FormalSum::add(const FormalSum& other) {
  for (const auto& [c, k] : other.terms_) add(c, k);
}

FormalSum FormalSum::negated() const {
  FormalSum out;
  for (const auto& [c, k] : terms_) out.terms_.emplace(c, -k);
  return out;
}

long FormalSum::term_count() const {
  long n = 0;
  for (const auto& [c, k] : terms_) n += std::labs(k);
  return n;
}

std::string FormalSum::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [c, k] : terms_) {
    if (first)
      out << (k < 0 ? "-" : "");
    else
      out << (k < 0 ? " - " : " + ");
    first = false;
    if (std::labs(k) != 1) out << std::labs(k);
    out << '<' << c.str() << '>';
  }
  return out.str();
}

Word loop_product(const Word& alpha, const Word& beta, const Word& h) {
  return compose(alpha, conjugate(beta, h));
}

BracketResult bracket_terms(const Word& alpha, const Word& beta, const Representation& rep,
                            int word_bound) {
  BracketResult out;
  out.records = mutual_intersections(alpha, beta, rep, word_bound);
  for (const auto& r : out.records) {
    BracketTerm t{r.witness, cyclic_normal_form(loop_product(alpha, beta, r.witness)), r.sign};
    out.sum.add(t.cls, t.sign);
    out.raw_terms.push_back(std::move(t));
  }
  return out;
}

FormalSum bracket(const Word& alpha, const Word& beta, const Representation& rep, int word_bound) {
  return bracket_terms(alpha, beta, rep, word_bound).sum;
}

BracketResult bracket_self_terms(const Word& alpha, const Representation& rep, int word_bound) {
  BracketResult out;
  out.records = self_intersections(alpha, rep, word_bound);
  for (const auto& r : out.records) {
    const Word ag = conjugate(alpha, r.witness);
    BracketTerm first{r.witness, cyclic_normal_form(compose(alpha, ag)), r.sign};
    BracketTerm second{r.witness, cyclic_normal_form(compose(ag, alpha)), -r.sign};
    out.sum.add(first.cls, first.sign);
    out.sum.add(second.cls, second.sign);
    out.raw_terms.push_back(std::move(first));
    out.raw_terms.push_back(std::move(second));
  }
  return out;
}

FormalSum bracket_self(const Word& alpha, const Representation& rep, int word_bound) {
  return bracket_self_terms(alpha, rep, word_bound).sum;
}

std::vector<std::pair<Word, Word>> equal_term_pairs(const Word& alpha, const Word& beta,
                                                    const Representation& rep, int word_bound) {
  const BracketResult b = bracket_terms(alpha, beta, rep, word_bound);
  std::vector<std::pair<Word, Word>> out;
  for (std::size_t i = 0; i < b.raw_terms.size(); ++i) {
    for (std::size_t j = i + 1; j < b.raw_terms.size(); ++j) {
      if (b.raw_terms[i].cls == b.raw_terms[j].cls)
        out.emplace_back(b.raw_terms[i].witness, b.raw_terms[j].witness);
    }
  }
  return out;
}

}  // namespace lenequiv
