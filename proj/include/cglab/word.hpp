#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace cglab {

using Letter = std::int16_t;

// Finite symmetric alphabet. Letters are indices 0..size()-1; the index order
// is the lexicographic order used everywhere. `inverse` is an involution.
struct Alphabet {
  std::vector<std::string> tokens;
  std::vector<Letter> inverse;

  int size() const { return static_cast<int>(tokens.size()); }
  Letter inv(Letter x) const { return inverse[static_cast<std::size_t>(x)]; }

  // Generators a < a^-1 < b < b^-1 < ... with tokens a,A,b,B,... for rank <= 13
  // and x1,X1,x2,X2,... beyond.
  static Alphabet free_group(int rank);
  // All nontrivial factor elements of Z/m * Z/n, first factor then second,
  // each factor in power order. Tokens a,a2,..,b,b2,..
  static Alphabet free_product_cyclic(int m, int n);

  bool operator==(const Alphabet&) const = default;
};

// Immutable letter sequence. Comparison is lexicographic by letter index,
// which matches the alphabet order; shorter prefixes compare smaller.
struct Word {
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

  int length() const { return static_cast<int>(letters.size()); }
  bool empty() const { return letters.empty(); }
  auto operator<=>(const Word&) const = default;
};

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (Letter x : w.letters) {
      h ^= static_cast<std::size_t>(static_cast<std::uint16_t>(x));
      h *= 1099511628211ull;
    }
    return h;
  }
};

Word inverse_word(const Alphabet& a, const Word& w);
Word concat(const Word& u, const Word& v);

// Cancels adjacent x x^-1 pairs until none remain.
Word free_reduce(const Alphabet& a, const Word& w);
// Free reduction followed by stripping matching first/last inverse pairs.
Word cyclic_reduce(const Alphabet& a, const Word& w);

// All cyclic shifts of w; a single element (w itself) when w is empty.
std::vector<Word> rotations(const Word& w);
// Lexicographically least rotation.
Word lex_min_rotation(const Word& w);
// cyclic_reduce + lex_min_rotation: canonical conjugacy key in a free group.
Word cyclic_normal_form(const Alphabet& a, const Word& w);

// Smallest d dividing length(w) with rotate(w, d) == w. 0 for the empty word.
int smallest_cyclic_period(const Word& w);

std::string format_word(const Alphabet& a, const Word& w);
Word parse_word(const Alphabet& a, const std::string& text);  // throws ParseError

}  // namespace cglab
