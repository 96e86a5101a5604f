#pragma once

// Exact combinatorics of free groups: free reduction, cyclic normal forms and
// conjugacy decisions.
//
// Letters are signed generator indices: +i is generator i (1-based), -i its
// inverse. Text form uses 'a'..'z' for generators and 'A'..'Z' for inverses,
// so "aB" is a * b^-1 and the empty string is the identity.

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lenequiv {

using Letter = int;

inline constexpr int kMaxRank = 26;

// Position of a letter in the fixed total order a < A < b < B < ...
constexpr int letter_key(Letter l) { return 2 * ((l < 0 ? -l : l) - 1) + (l < 0 ? 1 : 0); }

char letter_char(Letter l);
Letter letter_from_char(char c);

// Lexicographic on letter_key, shorter prefix first.
std::strong_ordering lex_compare(std::span<const Letter> u, std::span<const Letter> v);

// A freely reduced word. Constructing from raw letters reduces them.
class Word {
 public:
  Word() = default;
  explicit Word(std::span<const Letter> raw);
  Word(std::initializer_list<Letter> raw);

  // Parses text such as "aB". Whitespace is ignored. Throws AlphabetError for
  // letters outside the first `rank` generators (rank <= 0 means no limit).
  static Word parse(std::string_view text, int rank = 0);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  // Largest generator index used (0 for the identity).
  int max_generator() const;

  std::string str() const;

  bool operator==(const Word&) const = default;
  // Shortlex: length first, then letter_key order.
  std::strong_ordering operator<=>(const Word& other) const;

 private:
  friend Word free_reduce(std::span<const Letter> raw, int rank);
  std::vector<Letter> letters_;
};

// Reduces raw letters. Throws AlphabetError when an index is 0 or exceeds
// `rank` (rank <= 0 skips the range check).
Word free_reduce(std::span<const Letter> raw, int rank = 0);

Word compose(const Word& u, const Word& v);
Word invert(const Word& u);
Word power(const Word& u, long n);
// g * u * g^-1
Word conjugate(const Word& u, const Word& g);

// Strips matching first/last letter pairs: u = c * core * c^-1.
struct CyclicReduction {
  Word core;
  Word conjugator;
};
CyclicReduction cyclic_reduction(const Word& u);

// Conjugacy class of a word: its cyclic reduction rotated to the
// lexicographically least rotation. Two words are conjugate iff their
// CyclicWords are identical.
class CyclicWord {
 public:
  CyclicWord() = default;

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::string str() const;
  Word as_word() const { return Word(std::span<const Letter>(letters_)); }

  bool operator==(const CyclicWord&) const = default;
  std::strong_ordering operator<=>(const CyclicWord& other) const;

 private:
  friend CyclicWord cyclic_normal_form(const Word& u);
  std::vector<Letter> letters_;
};

CyclicWord cyclic_normal_form(const Word& u);

bool are_conjugate(const Word& u, const Word& v);
bool is_conjugate_to_inverse(const Word& u, const Word& v);

struct ProperPower {
  bool is_power = false;
  Word root;
  long exponent = 1;
};

// Least root r and maximal k with u = r^k. The root is returned conjugated
// back by the cyclic-reduction conjugator so that power(root, k) == u.
// Throws DegenerateInputError for the identity.
ProperPower is_proper_power(const Word& u);

// Index of the least rotation of a cyclic sequence under letter_key order.
std::size_t least_rotation(std::span<const Letter> s);

}  // namespace lenequiv
