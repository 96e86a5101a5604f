#include "lenequiv/trace_poly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <vector>

#include "lenequiv/errors.hpp"

namespace lenequiv {

TracePolynomial TracePolynomial::constant(long c) {
  TracePolynomial p;
  p.add_term({0, 0, 0}, BigInt(c));
  return p;
}

TracePolynomial TracePolynomial::variable(int index) {
  TracePolynomial p;
  Exponents e{0, 0, 0};
  e.at(static_cast<std::size_t>(index)) = 1;
  p.add_term(e, BigInt(1));
  return p;
}

BigInt TracePolynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void TracePolynomial::add_term(const Exponents& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TracePolynomial& TracePolynomial::operator+=(const TracePolynomial& p) {
  for (const auto& [e, c] : p.terms_) add_term(e, c);
  return *this;
}

TracePolynomial& TracePolynomial::operator-=(const TracePolynomial& p) {
  for (const auto& [e, c] : p.terms_) add_term(e, -c);
  return *this;
}

TracePolynomial operator*(const TracePolynomial& p, const TracePolynomial& q) {
  TracePolynomial out;
  for (const auto& [e1, c1] : p.terms_) {
    for (const auto& [e2, c2] : q.terms_)
      out.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
  }
  return out;
}

double TracePolynomial::evaluate(double x, double y, double z) const {
  double sum = 0;
  for (const auto& [e, c] : terms_)
    sum += c.convert_to<double>() * std::pow(x, e[0]) * std::pow(y, e[1]) * std::pow(z, e[2]);
  return sum;
}

TracePolynomial TracePolynomial::with_y_equal_x() const {
  TracePolynomial out;
  for (const auto& [e, c] : terms_) out.add_term({e[0] + e[1], 0, e[2]}, c);
  return out;
}

std::string TracePolynomial::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, BigInt>> sorted(terms_.begin(), terms_.end());
  // Graded lex: higher total degree first, then lexicographically larger exponents.
  std::sort(sorted.begin(), sorted.end(), [](const auto& u, const auto& v) {
    const int du = u.first[0] + u.first[1] + u.first[2];
    const int dv = v.first[0] + v.first[1] + v.first[2];
    if (du != dv) return du > dv;
    return u.first > v.first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;

    std::string mono;
    static constexpr char kNames[3] = {'x', 'y', 'z'};
    for (std::size_t i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += kNames[i];
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    if (mono.empty())
      out << mag;
    else if (mag == 1)
      out << mono;
    else
      out << mag << '*' << mono;
  }
  return out.str();
}

namespace {

TracePolynomial chebyshev(int n, int var) {
  TracePolynomial prev = TracePolynomial::constant(2);
  if (n == 0) return prev;
  const TracePolynomial t = TracePolynomial::variable(var);
  TracePolynomial cur = t;
  for (int k = 1; k < n; ++k) {
    TracePolynomial next = t * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Word rotated_slice(std::span<const Letter> s, std::size_t from, std::size_t count) {
  std::vector<Letter> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(s[(from + k) % s.size()]);
  return Word(std::span<const Letter>(out));
}

}  // namespace

TracePolynomial chebyshev_power(int n) {
  if (n < 0) throw DegenerateInputError("Chebyshev index must be nonnegative");
  return chebyshev(n, 0);
}

const TracePolynomial& TraceReducer::trace(const Word& w) {
  if (w.max_generator() > 2) throw UnsupportedRankError("trace reduction supports words in a and b only: " + w.str());
  return reduce(cyclic_normal_form(w));
}

const TracePolynomial& TraceReducer::reduce(const CyclicWord& c_in) {
  // tr(w) = tr(w^-1), so both orientations share one memo entry.
  const CyclicWord c_inv = cyclic_normal_form(invert(c_in.as_word()));
  const CyclicWord& c = c_inv < c_in ? c_inv : c_in;
  const std::string key = c.str();
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  auto s = c.letters();
  const std::size_t n = s.size();
  TracePolynomial result;

  const auto inverse_at = std::find_if(s.begin(), s.end(), [](Letter l) { return l < 0; });
  if (n == 0) {
    result = TracePolynomial::constant(2);
  } else if (inverse_at != s.end()) {
    // w = U X with X = x^-1:  tr(U X) = tr(U) tr(x) - tr(U x).
    const auto i = static_cast<std::size_t>(inverse_at - s.begin());
    const Letter x = -s[i];
    const Word u = rotated_slice(s, i + 1, n - 1);
    const TracePolynomial tr_u = reduce(cyclic_normal_form(u));
    const TracePolynomial tr_ux = reduce(cyclic_normal_form(compose(u, Word{x})));
    result = tr_u * TracePolynomial::variable(x - 1) - tr_ux;
  } else {
    const auto count_a = std::count(s.begin(), s.end(), 1);
    const auto count_b = static_cast<long>(n) - count_a;
    if (count_b == 0) {
      result = chebyshev(static_cast<int>(n), 0);
    } else if (count_a == 0) {
      result = chebyshev(static_cast<int>(n), 1);
    } else if (n == 2) {
      result = TracePolynomial::variable(2);
    } else {
      // Positive word with a repeated letter l: w = l U l V and
      // tr(lU lV) = tr(lU) tr(lV) - tr(U V^-1).
      const Letter l = count_a >= count_b ? 1 : 2;
      std::vector<std::size_t> at;
      for (std::size_t k = 0; k < n; ++k)
        if (s[k] == l) at.push_back(k);
      std::size_t best_i = at[0], best_j = at[1];
      double best = 1e300;
      for (std::size_t p = 0; p < at.size(); ++p) {
        for (std::size_t q = p + 1; q < at.size(); ++q) {
          const double gap = std::abs(static_cast<double>(at[q] - at[p]) - static_cast<double>(n) / 2);
          if (gap < best) {
            best = gap;
            best_i = at[p];
            best_j = at[q];
          }
        }
      }
      const std::size_t len_lu = best_j - best_i;
      const Word lu = rotated_slice(s, best_i, len_lu);
      const Word lv = rotated_slice(s, best_j, n - len_lu);
      const Word u = rotated_slice(s, best_i + 1, len_lu - 1);
      const Word v = rotated_slice(s, best_j + 1, n - len_lu - 1);
      const TracePolynomial t1 = reduce(cyclic_normal_form(lu));
      const TracePolynomial t2 = reduce(cyclic_normal_form(lv));
      const TracePolynomial t3 = reduce(cyclic_normal_form(compose(u, invert(v))));
      result = t1 * t2 - t3;
    }
  }
  return memo_.emplace(key, std::move(result)).first->second;
}

TracePolynomial trace_polynomial(const Word& w) {
  TraceReducer reducer;
  return reducer.trace(w);
}

bool verify_trace_identity(int n) {
  if (n < 1) throw DegenerateInputError("trace identity needs n >= 1");
  TraceReducer reducer;
  const Word an_b = compose(power(Word{1}, n), Word{2});
  const Word bn_a = compose(power(Word{2}, n), Word{1});
  return reducer.trace(an_b).with_y_equal_x() == reducer.trace(bn_a).with_y_equal_x();
}

}  // namespace lenequiv
