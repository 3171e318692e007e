#include "pjohnson/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "pjohnson/errors.hpp"

namespace pjohnson {

namespace {

std::int64_t checked_exponent(std::int64_t e) {
  if (e >= kExponentBound || e <= -kExponentBound) {
    throw ResourceError("exponent overflow: |" + std::to_string(e) + "| >= 2^31");
  }
  return e;
}

void check_guard(const Word& w, std::size_t guard) {
  if (w.size() > guard) {
    throw ResourceError("word length guard tripped: " + std::to_string(w.size()) +
                        " syllables > " + std::to_string(guard));
  }
}

}  // namespace

Word Word::generator(int gen, std::int64_t exp) {
  Word w;
  w.append(Letter{gen, exp});
  return w;
}

Word Word::from_letters(std::span<const Letter> letters) {
  Word w;
  for (const Letter& l : letters) w.append(l);
  return w;
}

std::int64_t Word::length() const {
  std::int64_t n = 0;
  for (const Letter& l : letters_) n += std::llabs(l.exp);
  return n;
}

int Word::max_generator() const {
  int m = 0;
  for (const Letter& l : letters_) m = std::max(m, l.gen);
  return m;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    w.letters_.push_back(Letter{it->gen, -it->exp});
  }
  return w;
}

void Word::append(Letter l) {
  if (l.exp == 0) return;
  checked_exponent(l.exp);
  if (!letters_.empty() && letters_.back().gen == l.gen) {
    std::int64_t e = checked_exponent(letters_.back().exp + l.exp);
    if (e == 0) {
      letters_.pop_back();
    } else {
      letters_.back().exp = e;
    }
    return;
  }
  letters_.push_back(l);
}

void Word::append(const Word& w) {
  // Cancellation can only cascade at the junction; once a syllable survives
  // the remainder of the reduced word w is copied verbatim.
  std::size_t i = 0;
  while (i < w.letters_.size()) {
    const Letter l = w.letters_[i++];
    if (letters_.empty() || letters_.back().gen != l.gen) {
      letters_.push_back(l);
      break;
    }
    std::int64_t e = checked_exponent(letters_.back().exp + l.exp);
    if (e != 0) {
      letters_.back().exp = e;
      break;
    }
    letters_.pop_back();
  }
  letters_.insert(letters_.end(), w.letters_.begin() + static_cast<std::ptrdiff_t>(i),
                  w.letters_.end());
}

Word Word::pow(std::int64_t k, std::size_t guard) const {
  if (k == 0 || is_identity()) return Word{};
  if (k < 0) return inverse().pow(-k, guard);
  if (letters_.size() == 1) {
    return Word::generator(letters_[0].gen, checked_exponent(letters_[0].exp * k));
  }
  Word result;
  Word base = *this;
  while (k > 0) {
    if (k & 1) {
      result.append(base);
      check_guard(result, guard);
    }
    k >>= 1;
    if (k > 0) {
      base.append(Word(base));
      check_guard(base, guard);
    }
  }
  return result;
}

Word word_product(std::span<const std::pair<Word, std::int64_t>> factors) {
  Word w;
  for (const auto& [factor, e] : factors) w.append(factor.pow(e));
  return w;
}

Word word_commutator(const Word& u, const Word& v) {
  Word w = u;
  w.append(v);
  w.append(u.inverse());
  w.append(v.inverse());
  return w;
}

Word substitute(const Word& w, std::span<const Word> images, std::size_t guard) {
  Word out;
  for (const Letter& l : w.letters()) {
    if (l.gen < 1 || static_cast<std::size_t>(l.gen) > images.size()) {
      throw UsageError("generator x" + std::to_string(l.gen) + " has no image");
    }
    out.append(images[static_cast<std::size_t>(l.gen - 1)].pow(l.exp, guard));
    check_guard(out, guard);
  }
  return out;
}

std::string to_string(const Word& w) {
  if (w.is_identity()) return "1";
  std::string s;
  bool first = true;
  for (const Letter& l : w.letters()) {
    if (!first) s += '*';
    first = false;
    s += 'x';
    s += std::to_string(l.gen);
    if (l.exp != 1) {
      s += '^';
      s += std::to_string(l.exp);
    }
  }
  return s;
}

namespace {

class WordParser {
 public:
  WordParser(std::string_view text, int max_gen) : max_gen_(max_gen) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        chars_.push_back(text[i]);
        positions_.push_back(i);
      }
    }
    end_position_ = text.size();
  }

  Word parse() {
    Word w = word();
    if (pos_ != chars_.size()) fail("unexpected '" + std::string(1, peek()) + "'");
    return w;
  }

 private:
  char peek() const { return pos_ < chars_.size() ? chars_[pos_] : '\0'; }
  std::size_t position() const {
    return pos_ < positions_.size() ? positions_[pos_] : end_position_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("syntax error: " + what, position());
  }
  void expect(char c) {
    if (peek() != c) {
      fail(std::string("expected '") + c + "'" +
           (peek() ? std::string(", found '") + peek() + "'" : std::string(", found end")));
    }
    ++pos_;
  }
  bool at_atom_start() const {
    char c = peek();
    return c == 'x' || c == '[' || c == '(' || c == '1';
  }

  Word word() {
    Word w = term();
    while (true) {
      if (peek() == '*') {
        ++pos_;
        w.append(term());
      } else if (at_atom_start()) {
        w.append(term());
      } else {
        return w;
      }
    }
  }

  Word term() {
    Word a = atom();
    if (peek() == '^') {
      ++pos_;
      std::int64_t k = integer(true);
      return a.pow(k);
    }
    return a;
  }

  Word atom() {
    switch (peek()) {
      case 'x': {
        ++pos_;
        std::size_t at = position();
        std::int64_t idx = integer(false);
        if (idx < 1 || idx > max_gen_) {
          throw ParseError("generator index " + std::to_string(idx) + " out of range 1.." +
                               std::to_string(max_gen_),
                           at);
        }
        return Word::generator(static_cast<int>(idx));
      }
      case '[': {
        ++pos_;
        Word u = word();
        expect(',');
        Word v = word();
        expect(']');
        return word_commutator(u, v);
      }
      case '(': {
        ++pos_;
        Word u = word();
        expect(')');
        return u;
      }
      case '1':
        ++pos_;
        return Word{};
      case '\0':
        fail("unexpected end of input");
      default:
        fail("unexpected '" + std::string(1, peek()) + "'");
    }
  }

  std::int64_t integer(bool exponent) {
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digit");
    std::int64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v >= kExponentBound) {
        if (!exponent) fail("integer too large");
        throw ResourceError("exponent magnitude reaches 2^31 at position " + std::to_string(position()));
      }
      ++pos_;
    }
    return negative ? -v : v;
  }

  std::vector<char> chars_;
  std::vector<std::size_t> positions_;
  std::size_t end_position_ = 0;
  std::size_t pos_ = 0;
  int max_gen_;
};

}  // namespace

Word parse_word(std::string_view text, int max_gen) {
  return WordParser(text, max_gen).parse();
}

}  // namespace pjohnson
