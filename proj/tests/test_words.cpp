#include <gtest/gtest.h>

#include "gen.hpp"
#include "pjohnson/context.hpp"
#include "pjohnson/endo.hpp"
#include "pjohnson/errors.hpp"
#include "pjohnson/autom.hpp"
#include "pjohnson/word.hpp"

using namespace pjohnson;

namespace {

std::vector<Letter> L(std::initializer_list<std::pair<int, std::int64_t>> xs) {
  std::vector<Letter> v;
  for (auto [g, e] : xs) v.push_back(Letter{g, e});
  return v;
}

}  // namespace

TEST(Context, RejectsBadParameters) {
  EXPECT_THROW(GroupContext(4, 2, 6), UsageError);
  EXPECT_THROW(GroupContext(1, 2, 6), UsageError);
  EXPECT_THROW(GroupContext(3, 0, 6), UsageError);
  EXPECT_THROW(GroupContext(3, 8, 6), UsageError);
  EXPECT_THROW(GroupContext(3, 2, 1), UsageError);
  EXPECT_THROW(GroupContext(3, 2, 17), UsageError);
  EXPECT_NO_THROW(GroupContext(2, 2, 6));
  EXPECT_THROW(GroupContext(2, 2, 6).require_odd_prime("x"), UsageError);
  EXPECT_EQ(GroupContext(5, 3, 4).describe(), "p=5 r=3 N=4");
}

TEST(Field, Arithmetic) {
  PrimeField f(7);
  EXPECT_EQ(f.reduce(-1), 6u);
  EXPECT_EQ(f.mul(3, f.inv(3)), 1u);
  EXPECT_EQ(f.pow(3, 6), 1u);
  EXPECT_EQ(f.sign(3), 6u);
  EXPECT_THROW(f.inv(0), UsageError);
}

TEST(Words, ParseCancellation) { EXPECT_TRUE(parse_word("x1*x1^-1", 2).is_identity()); }

TEST(Words, ParseCommutator) {
  EXPECT_EQ(parse_word("[x1,x2]", 2).letters(), L({{1, 1}, {2, 1}, {1, -1}, {2, -1}}));
}

TEST(Words, ParseLiteral) { EXPECT_EQ(parse_word("x1^3*x2", 2).letters(), L({{1, 3}, {2, 1}})); }

TEST(Words, ParseVariants) {
  EXPECT_EQ(parse_word(" x1 x2 ", 2), parse_word("x1*x2", 2));
  EXPECT_EQ(parse_word("(x1x2)^2", 2).letters(), L({{1, 1}, {2, 1}, {1, 1}, {2, 1}}));
  EXPECT_EQ(parse_word("(x1x2)^-1", 2).letters(), L({{2, -1}, {1, -1}}));
  EXPECT_EQ(parse_word("x1^0", 2), Word());
  EXPECT_EQ(parse_word("1", 2), Word());
  EXPECT_EQ(parse_word("[[x1,x2],x1]", 2),
            word_commutator(word_commutator(Word::generator(1), Word::generator(2)),
                            Word::generator(1)));
}

TEST(Words, ParseErrors) {
  try {
    parse_word("x1*x3", 2);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(parse_word("", 2), ParseError);
  EXPECT_THROW(parse_word("x1*", 2), ParseError);
  EXPECT_THROW(parse_word("[x1 x2]", 2), ParseError);
  EXPECT_THROW(parse_word("x0", 2), ParseError);
  EXPECT_THROW(parse_word("x1^", 2), ParseError);
  EXPECT_THROW(parse_word("(x1", 2), ParseError);
  EXPECT_THROW(parse_word("y1", 2), ParseError);
}

TEST(Words, ExponentOverflow) {
  EXPECT_THROW(parse_word("x1^3000000000", 2), ResourceError);
  Word big = Word::generator(1, (std::int64_t{1} << 30));
  EXPECT_THROW(big * big, ResourceError);
}

TEST(Words, ProductExamples) {
  Word w = parse_word("x1x2^-1x1", 2);
  std::vector<std::pair<Word, std::int64_t>> f1 = {{w, 1}, {w, -1}};
  EXPECT_TRUE(word_product(f1).is_identity());
  std::vector<std::pair<Word, std::int64_t>> f2 = {{Word::generator(1), 1}, {Word::generator(2), 1}};
  EXPECT_EQ(to_string(word_product(f2)), "x1*x2");
  std::vector<std::pair<Word, std::int64_t>> f3 = {{Word::generator(1), 3}};
  EXPECT_EQ(word_product(f3).letters(), L({{1, 3}}));
}

TEST(Words, CommutatorExamples) {
  Word x1 = Word::generator(1), x2 = Word::generator(2);
  EXPECT_TRUE(word_commutator(x1, x1).is_identity());
  EXPECT_TRUE(word_commutator(x1, Word()).is_identity());
  EXPECT_EQ(to_string(word_commutator(x1, x2)), "x1*x2*x1^-1*x2^-1");
}

TEST(Words, ApplyEndoExamples) {
  GroupContext ctx(3, 2, 6);
  Word w = parse_word("x1^2x2^-1[x1,x2]", 2);
  EXPECT_EQ(apply_endo(GroupEndo::identity(ctx), w), w);
  GroupEndo phi = GroupEndo::from_images(ctx, {parse_word("x1[x1,x2]", 2), Word::generator(2)});
  EXPECT_EQ(apply_endo(phi, Word::generator(1)), parse_word("x1[x1,x2]", 2));
  GroupEndo inn = GroupEndo::inner(ctx, Word::generator(1));
  EXPECT_EQ(apply_endo(inn, Word::generator(2)), parse_word("x1x2x1^-1", 2));
}

TEST(Words, Guard) {
  Word w = parse_word("x1x2", 2);
  EXPECT_THROW(w.pow(1000, 100), ResourceError);
  EXPECT_EQ(w.pow(50, 100).size(), 100u);
  EXPECT_EQ(Word::generator(1).pow(1000, 1), Word::generator(1, 1000));
}

TEST(WordsProperty, PrintParseRoundTrip) {
  testgen::Rng rng(11);
  for (int t = 0; t < 300; ++t) {
    Word w = testgen::random_word(rng, 3, 14);
    if (t % 3 == 0) w = w.pow(rng.uniform(-3, 3));
    EXPECT_EQ(parse_word(to_string(w), 3), w) << to_string(w);
  }
}

TEST(WordsProperty, GroupLaws) {
  testgen::Rng rng(12);
  for (int t = 0; t < 300; ++t) {
    Word a = testgen::random_word(rng, 3, 8);
    Word b = testgen::random_word(rng, 3, 8);
    Word c = testgen::random_word(rng, 3, 8);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a * a.inverse()).is_identity());
    EXPECT_TRUE((a.inverse() * a).is_identity());
    EXPECT_EQ(a * Word(), a);
    EXPECT_EQ(Word() * a, a);
    EXPECT_EQ((a * b).inverse(), b.inverse() * a.inverse());
    // reducedness
    const auto& ls = (a * b * c).letters();
    for (std::size_t k = 0; k < ls.size(); ++k) {
      EXPECT_NE(ls[k].exp, 0);
      if (k + 1 < ls.size()) {
        EXPECT_NE(ls[k].gen, ls[k + 1].gen);
      }
    }
  }
}

TEST(WordsProperty, PowerLaws) {
  testgen::Rng rng(13);
  for (int t = 0; t < 200; ++t) {
    Word a = testgen::random_word(rng, 2, 6);
    int m = rng.uniform(-4, 4), n = rng.uniform(-4, 4);
    EXPECT_EQ(a.pow(m) * a.pow(n), a.pow(m + n));
    EXPECT_EQ(a.pow(m).pow(n), a.pow(m * n));
  }
}

TEST(WordsProperty, SubstitutionComposes) {
  testgen::Rng rng(14);
  GroupContext ctx(3, 3, 6);
  for (int t = 0; t < 100; ++t) {
    auto a = testgen::random_automorphism(rng, ctx, 4);
    auto b = testgen::random_automorphism(rng, ctx, 4);
    Word w = testgen::random_word(rng, 3, 10);
    EXPECT_EQ(apply_endo(compose(a.phi, b.phi), w), apply_endo(a.phi, apply_endo(b.phi, w)));
  }
}
