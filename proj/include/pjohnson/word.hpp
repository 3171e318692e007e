#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pjohnson {

// Upper bound on the number of syllables a word may carry before operations
// that can blow up (substitution, powers, iterates) give up.
inline constexpr std::size_t kDefaultWordGuard = 100000;

// Exponents are kept strictly below this magnitude.
inline constexpr std::int64_t kExponentBound = std::int64_t{1} << 31;

// One syllable x_gen^exp of a reduced word.
struct Letter {
  int gen = 0;
  std::int64_t exp = 0;

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// Freely reduced word in the free group on x_1, x_2, .... Adjacent syllables
// never share a generator and no exponent is zero; the empty word is 1.
class Word {
 public:
  Word() = default;

  static Word generator(int gen, std::int64_t exp = 1);
  // Reduces the given syllables.
  static Word from_letters(std::span<const Letter> letters);

  const std::vector<Letter>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  // Number of syllables.
  std::size_t size() const { return letters_.size(); }
  // Sum of |exponents|, i.e. length over the alphabet x_i^{+-1}.
  std::int64_t length() const;
  int max_generator() const;

  Word inverse() const;
  // w^k; throws ResourceError when the result exceeds `guard` syllables.
  Word pow(std::int64_t k, std::size_t guard = kDefaultWordGuard) const;

  // In-place right multiplication by a syllable, with free reduction.
  void append(Letter l);
  void append(const Word& w);

  friend Word operator*(Word a, const Word& b) {
    a.append(b);
    return a;
  }
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) { return a.letters_ <=> b.letters_; }

 private:
  std::vector<Letter> letters_;
};

// Free-group word grammar (whitespace ignored):
//   word := term ('*'? term)*
//   term := atom ('^' int)?
//   atom := 'x' int | '[' word ',' word ']' | '(' word ')' | '1'
// Generator indices must lie in 1..max_gen.
Word parse_word(std::string_view text, int max_gen);

// Canonical form: syllables left to right joined by '*', '^k' for k != 1,
// and "1" for the identity. parse_word(to_string(w)) == w.
std::string to_string(const Word& w);

Word word_product(std::span<const std::pair<Word, std::int64_t>> factors);

// [u, v] = u v u^-1 v^-1
Word word_commutator(const Word& u, const Word& v);

// Replaces every x_j by images[j-1]. Throws ResourceError past `guard` syllables.
Word substitute(const Word& w, std::span<const Word> images,
                std::size_t guard = kDefaultWordGuard);

}  // namespace pjohnson
