#pragma once

// Exact trace identities in SL(2): the trace of any word in two unit-
// determinant matrices A, B is a unique integer polynomial in
//   x = tr A, y = tr B, z = tr AB.

#include <array>
#include <map>
#include <string>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

#include "lenequiv/word.hpp"

namespace lenequiv {

using BigInt = boost::multiprecision::cpp_int;

class TracePolynomial {
 public:
  using Exponents = std::array<int, 3>;  // powers of (x, y, z)

  TracePolynomial() = default;
  static TracePolynomial constant(long c);
  static TracePolynomial variable(int index);  // 0 -> x, 1 -> y, 2 -> z

  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, BigInt>& terms() const { return terms_; }
  BigInt coefficient(const Exponents& e) const;

  TracePolynomial& operator+=(const TracePolynomial& p);
  TracePolynomial& operator-=(const TracePolynomial& p);
  friend TracePolynomial operator+(TracePolynomial p, const TracePolynomial& q) { return p += q; }
  friend TracePolynomial operator-(TracePolynomial p, const TracePolynomial& q) { return p -= q; }
  friend TracePolynomial operator*(const TracePolynomial& p, const TracePolynomial& q);
  bool operator==(const TracePolynomial&) const = default;

  double evaluate(double x, double y, double z) const;

  // Identifies y with x (the setting where tr A = tr B).
  TracePolynomial with_y_equal_x() const;

  // Canonical text in graded lex order, e.g. "-x*y*z + x^2 + y^2 + z^2 - 2".
  std::string str() const;

 private:
  void add_term(const Exponents& e, const BigInt& c);
  std::map<Exponents, BigInt> terms_;
};

// Memoizing reducer. Not thread-safe; use one instance per thread.
class TraceReducer {
 public:
  // Throws UnsupportedRankError for words using a generator beyond b.
  const TracePolynomial& trace(const Word& w);
  std::size_t memo_size() const { return memo_.size(); }

 private:
  const TracePolynomial& reduce(const CyclicWord& c);
  std::unordered_map<std::string, TracePolynomial> memo_;
};

TracePolynomial trace_polynomial(const Word& w);

// p_0 = 2, p_1 = x, p_{n+1} = x p_n - p_{n-1}: the trace of A^n.
TracePolynomial chebyshev_power(int n);

// tr(A^n B) == tr(B^n A) as polynomials once tr A = tr B. Throws
// DegenerateInputError for n < 1.
bool verify_trace_identity(int n);

}  // namespace lenequiv
