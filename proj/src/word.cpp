#include "lenequiv/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "lenequiv/errors.hpp"

namespace lenequiv {

char letter_char(Letter l) {
  const int g = std::abs(l);
  if (g < 1 || g > kMaxRank) throw AlphabetError("letter index out of range: " + std::to_string(l));
  return static_cast<char>(l > 0 ? 'a' + g - 1 : 'A' + g - 1);
}

Letter letter_from_char(char c) {
  if (c >= 'a' && c <= 'z') return c - 'a' + 1;
  if (c >= 'A' && c <= 'Z') return -(c - 'A' + 1);
  throw AlphabetError(std::string("not a generator letter: '") + c + "'");
}

std::strong_ordering lex_compare(std::span<const Letter> u, std::span<const Letter> v) {
  const std::size_t n = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = letter_key(u[i]) <=> letter_key(v[i]); c != 0) return c;
  }
  return u.size() <=> v.size();
}

Word::Word(std::span<const Letter> raw) : letters_(free_reduce(raw).letters_) {}

Word::Word(std::initializer_list<Letter> raw)
    : Word(std::span<const Letter>(raw.begin(), raw.size())) {}

Word Word::parse(std::string_view text, int rank) {
  std::vector<Letter> raw;
  raw.reserve(text.size());
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    raw.push_back(letter_from_char(c));
  }
  return free_reduce(raw, rank);
}

int Word::max_generator() const {
  int m = 0;
  for (Letter l : letters_) m = std::max(m, std::abs(l));
  return m;
}

std::string Word::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter l : letters_) s.push_back(letter_char(l));
  return s;
}

std::strong_ordering Word::operator<=>(const Word& other) const {
  if (auto c = size() <=> other.size(); c != 0) return c;
  return lex_compare(letters_, other.letters_);
}

Word free_reduce(std::span<const Letter> raw, int rank) {
  Word w;
  auto& out = w.letters_;
  out.reserve(raw.size());
  for (Letter l : raw) {
    if (l == 0 || (rank > 0 && std::abs(l) > rank) || std::abs(l) > kMaxRank)
      throw AlphabetError("letter index out of range: " + std::to_string(l));
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return w;
}

Word compose(const Word& u, const Word& v) {
  std::vector<Letter> raw(u.letters().begin(), u.letters().end());
  raw.insert(raw.end(), v.letters().begin(), v.letters().end());
  return free_reduce(raw);
}

Word invert(const Word& u) {
  std::vector<Letter> raw(u.letters().rbegin(), u.letters().rend());
  for (Letter& l : raw) l = -l;
  return free_reduce(raw);
}

Word power(const Word& u, long n) {
  if (n < 0) return power(invert(u), -n);
  std::vector<Letter> raw;
  raw.reserve(u.size() * static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) raw.insert(raw.end(), u.letters().begin(), u.letters().end());
  return free_reduce(raw);
}

Word conjugate(const Word& u, const Word& g) { return compose(compose(g, u), invert(g)); }

CyclicReduction cyclic_reduction(const Word& u) {
  auto s = u.letters();
  std::size_t lo = 0, hi = s.size();
  while (hi - lo >= 2 && s[lo] == -s[hi - 1]) {
    ++lo;
    --hi;
  }
  return {Word(s.subspan(lo, hi - lo)), Word(s.subspan(0, lo))};
}

// Booth's algorithm on the letter_key order.
std::size_t least_rotation(std::span<const Letter> s) {
  const std::size_t n = s.size();
  if (n == 0) return 0;
  std::vector<long> fail(2 * n, -1);
  std::size_t k = 0;
  auto at = [&](std::size_t i) { return letter_key(s[i % n]); };
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const int sj = at(j);
    long i = fail[j - k - 1];
    while (i != -1 && sj != at(k + static_cast<std::size_t>(i) + 1)) {
      if (sj < at(k + static_cast<std::size_t>(i) + 1)) k = j - static_cast<std::size_t>(i) - 1;
      i = fail[static_cast<std::size_t>(i)];
    }
    if (sj != at(k + static_cast<std::size_t>(i) + 1)) {
      if (sj < at(k)) k = j;
      fail[j - k] = -1;
    } else {
      fail[j - k] = i + 1;
    }
  }
  return k % n;
}

std::string CyclicWord::str() const {
  std::string s;
  for (Letter l : letters_) s.push_back(letter_char(l));
  return s;
}

std::strong_ordering CyclicWord::operator<=>(const CyclicWord& other) const {
  if (auto c = size() <=> other.size(); c != 0) return c;
  return lex_compare(letters_, other.letters_);
}

CyclicWord cyclic_normal_form(const Word& u) {
  const Word core = cyclic_reduction(u).core;
  auto s = core.letters();
  CyclicWord cw;
  const std::size_t k = least_rotation(s);
  cw.letters_.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) cw.letters_.push_back(s[(k + i) % s.size()]);
  return cw;
}

bool are_conjugate(const Word& u, const Word& v) {
  return cyclic_normal_form(u) == cyclic_normal_form(v);
}

bool is_conjugate_to_inverse(const Word& u, const Word& v) { return are_conjugate(u, invert(v)); }

ProperPower is_proper_power(const Word& u) {
  if (u.empty()) throw DegenerateInputError("identity word has no root");
  const auto [core, conj] = cyclic_reduction(u);
  auto s = core.letters();
  const std::size_t n = s.size();
  for (std::size_t period = 1; period <= n; ++period) {
    if (n % period != 0) continue;
    bool periodic = true;
    for (std::size_t i = period; i < n && periodic; ++i) periodic = s[i] == s[i - period];
    if (!periodic) continue;
    ProperPower out;
    out.exponent = static_cast<long>(n / period);
    out.is_power = out.exponent > 1;
    out.root = conjugate(Word(s.subspan(0, period)), conj);
    return out;
  }
  return {false, u, 1};  // unreachable: period n always matches
}

}  // namespace lenequiv
