#include <gtest/gtest.h>

#include "gen.hpp"
#include "oracle.hpp"
#include "pjohnson/errors.hpp"
#include "pjohnson/magnus.hpp"

using namespace pjohnson;

namespace {

Monomial M(const char* s) { return Monomial::parse(s, 7); }

TruncSeries bracket(const TruncSeries& a, const TruncSeries& b) { return a * b - b * a; }

}  // namespace

TEST(Magnus, EmbedExamples) {
  GroupContext ctx(3, 2, 2);
  EXPECT_EQ(to_string(magnus_embed(Word::generator(1), ctx)), "1 + 1*X1");
  EXPECT_EQ(magnus_embed(Word(), ctx), TruncSeries::one(ctx));
  EXPECT_EQ(to_string(magnus_embed(parse_word("[x1,x2]", 2), ctx)), "1 + 1*X1X2 + 2*X2X1");
  GroupContext c5(5, 1, 6);
  EXPECT_EQ(to_string(magnus_embed(Word::generator(1, 5), c5)), "1 + 1*X1X1X1X1X1");
  EXPECT_THROW(magnus_embed(Word::generator(3), ctx), UsageError);
}

TEST(Magnus, CoefficientExamples) {
  GroupContext ctx(3, 2, 6);
  EXPECT_EQ(magnus_coefficient(M("1"), Word::generator(1), ctx), 1u);
  EXPECT_EQ(magnus_coefficient(M("2"), Word::generator(1), ctx), 0u);
  Word c = parse_word("[x1,x2]", 2);
  EXPECT_EQ(magnus_coefficient(M("12"), c, ctx), 1u);
  EXPECT_EQ(magnus_coefficient(M("21"), c, ctx), 2u);
  EXPECT_EQ(magnus_coefficient(M("11"), Word::generator(1, 3), ctx), 0u);
  EXPECT_THROW(magnus_coefficient(M("1111111"), c, ctx), UsageError);
}

TEST(Magnus, ZassenhausExamples) {
  GroupContext ctx(3, 2, 6);
  EXPECT_EQ(zassenhaus_degree(Word::generator(1), ctx), ZassenhausDegree::finite(1));
  EXPECT_EQ(zassenhaus_degree(parse_word("[x1,x2]", 2), ctx), ZassenhausDegree::finite(2));
  EXPECT_EQ(zassenhaus_degree(Word::generator(1, 3), ctx), ZassenhausDegree::finite(3));
  EXPECT_EQ(zassenhaus_degree(Word(), ctx), ZassenhausDegree::identity());
  EXPECT_EQ(zassenhaus_degree(Word::generator(1, 9), ctx).to_string(6), "exceeds 6");
  EXPECT_EQ(zassenhaus_degree(Word(), ctx).to_string(6), "identity");
}

TEST(Magnus, GradedComponentExamples) {
  GroupContext ctx(3, 2, 6);
  auto g1 = graded_component(parse_word("x1x2", 2), 1, ctx);
  EXPECT_EQ(to_string(g1.value), "1*X1 + 1*X2");
  auto g2 = graded_component(parse_word("[x1,x2]", 2), 2, ctx);
  EXPECT_EQ(to_string(g2.value), "1*X1X2 + 2*X2X1");
  auto g3 = graded_component(Word::generator(1, 3), 3, ctx);
  EXPECT_EQ(to_string(g3.value), "1*X1X1X1");
  EXPECT_THROW(graded_component(Word::generator(1), 2, ctx), PreconditionError);
}

TEST(MagnusProperty, AgreesWithLetterOracle) {
  testgen::Rng rng(31);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int r : {1, 2, 3}) {
      GroupContext ctx(p, r, 6);
      for (int t = 0; t < 40; ++t) {
        Word w = testgen::random_word(rng, r, 12);
        if (t % 4 == 0) w = w.pow(rng.uniform(2, 4));
        EXPECT_TRUE(oracle::same(oracle::magnus(w, p, 6), magnus_embed(w, ctx))) << to_string(w);
      }
    }
  }
}

TEST(MagnusProperty, Multiplicative) {
  testgen::Rng rng(32);
  GroupContext ctx(3, 3, 7);
  for (int t = 0; t < 150; ++t) {
    Word u = testgen::random_word(rng, 3, 10), v = testgen::random_word(rng, 3, 10);
    EXPECT_EQ(magnus_embed(u * v, ctx), magnus_embed(u, ctx) * magnus_embed(v, ctx));
    EXPECT_EQ(magnus_embed(u.inverse(), ctx), series_invert(magnus_embed(u, ctx)));
  }
}

TEST(MagnusProperty, FiltrationBounds) {
  testgen::Rng rng(33);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    GroupContext ctx(p, 2, 8);
    for (int t = 0; t < 60; ++t) {
      int i = rng.uniform(1, 3), j = rng.uniform(1, 3);
      Word u = testgen::random_filtered_word(rng, 2, p, i);
      Word v = testgen::random_filtered_word(rng, 2, p, j);
      EXPECT_TRUE(zassenhaus_degree(u, ctx).at_least(i)) << to_string(u);
      ZassenhausDegree du = zassenhaus_degree(u, ctx), dv = zassenhaus_degree(v, ctx);
      if (du.is_finite() && dv.is_finite()) {
        EXPECT_TRUE(zassenhaus_degree(word_commutator(u, v), ctx).at_least(du.value + dv.value));
      }
      if (du.is_finite() && du.value * static_cast<int>(p) <= ctx.trunc) {
        EXPECT_TRUE(zassenhaus_degree(u.pow(p), ctx).at_least(static_cast<int>(p) * du.value));
      }
    }
  }
}

TEST(MagnusProperty, GradedLieHomomorphism) {
  testgen::Rng rng(34);
  GroupContext ctx(3, 3, 8);
  for (int t = 0; t < 80; ++t) {
    Word u = testgen::random_filtered_word(rng, 3, 3, rng.uniform(1, 3));
    Word v = testgen::random_filtered_word(rng, 3, 3, rng.uniform(1, 3));
    ZassenhausDegree du = zassenhaus_degree(u, ctx), dv = zassenhaus_degree(v, ctx);
    if (!du.is_finite() || !dv.is_finite() || du.value + dv.value > ctx.trunc) continue;
    int i = du.value, j = dv.value;
    TruncSeries lhs = graded_component(word_commutator(u, v), i + j, ctx).value;
    TruncSeries rhs = bracket(graded_component(u, i, ctx).value, graded_component(v, j, ctx).value);
    EXPECT_EQ(lhs, rhs);
  }
}
