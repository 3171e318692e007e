#include <gtest/gtest.h>

#include "gen.hpp"
#include "oracle.hpp"
#include "pjohnson/fox.hpp"
#include "pjohnson/magnus.hpp"

using namespace pjohnson;

TEST(Fox, DerivativeExamples) {
  GroupContext ctx(5, 2, 4);
  Word x1 = Word::generator(1);
  EXPECT_EQ(fox_derivative(x1, 1, ctx), TruncSeries::one(ctx));
  EXPECT_EQ(fox_derivative(x1.inverse(), 1, ctx), -magnus_embed(x1.inverse(), ctx));
  EXPECT_EQ(fox_derivative(parse_word("x1x2", 2), 2, ctx), magnus_embed(x1, ctx));
  EXPECT_TRUE(fox_derivative(x1, 2, ctx).is_zero());
}

TEST(Fox, EpsilonExamples) {
  GroupContext ctx(3, 2, 6);
  Word c = parse_word("[x1,x2]", 2);
  EXPECT_EQ(epsilon_via_fox(Monomial::parse("1", 2), Word::generator(1), ctx), 1u);
  EXPECT_EQ(epsilon_via_fox(Monomial::parse("2", 2), Word::generator(1), ctx), 0u);
  EXPECT_EQ(epsilon_via_fox(Monomial::parse("12", 2), c, ctx), 1u);
  EXPECT_EQ(epsilon_via_fox(Monomial::parse("21", 2), c, ctx), 2u);
}

TEST(Fox, RingDerivativeProductRule) {
  PrimeField f(5);
  Word u = parse_word("x1^2x2", 2), v = parse_word("x2^-1x1", 2);
  GroupRingElement du = fox_derivative(GroupRingElement::of(f, u), 1);
  GroupRingElement duv = fox_derivative(GroupRingElement::of(f, u * v), 1);
  // d(uv) = du + u dv
  GroupRingElement expect = du;
  GroupRingElement dv = fox_derivative(GroupRingElement::of(f, v), 1);
  for (const auto& [w, c] : dv.terms()) expect.add(u * w, c);
  EXPECT_EQ(duv.terms(), expect.terms());
}

TEST(FoxProperty, FundamentalIdentity) {
  testgen::Rng rng(41);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    GroupContext ctx(p, 3, 6);
    for (int t = 0; t < 50; ++t) {
      Word w = testgen::random_word(rng, 3, 12);
      TruncSeries sum(ctx);
      for (int j = 1; j <= 3; ++j) sum += fox_derivative(w, j, ctx) * TruncSeries::variable(ctx, j);
      EXPECT_EQ(magnus_embed(w, ctx) - TruncSeries::one(ctx), sum) << to_string(w);
    }
  }
}

TEST(FoxProperty, AgreesWithDenseMagnusOracle) {
  testgen::Rng rng(42);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int r : {2, 3}) {
      GroupContext ctx(p, r, 6);
      for (int t = 0; t < 40; ++t) {
        Word w = testgen::random_word(rng, r, 12);
        oracle::Poly dense = oracle::magnus(w, p, 6);
        int deg = rng.uniform(1, 5);
        std::vector<int> idx;
        for (int k = 0; k < deg; ++k) idx.push_back(rng.uniform(1, r));
        Monomial m = Monomial::from_indices(idx);
        EXPECT_EQ(static_cast<std::int64_t>(epsilon_via_fox(m, w, ctx)), oracle::coefficient(dense, idx))
            << to_string(w) << " " << m.digits();
      }
    }
  }
}
