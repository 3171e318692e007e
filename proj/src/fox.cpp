#include "pjohnson/fox.hpp"

#include <cstdlib>

#include "pjohnson/errors.hpp"

namespace pjohnson {

GroupRingElement GroupRingElement::of(const PrimeField& field, const Word& w) {
  GroupRingElement a(field);
  a.add(w, 1);
  return a;
}

void GroupRingElement::add(const Word& w, Scalar c) {
  c %= field_.p();
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second = field_.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

Scalar GroupRingElement::augmentation() const {
  Scalar s = 0;
  for (const auto& [w, c] : terms_) s = field_.add(s, c);
  return s;
}

GroupRingElement fox_derivative(const GroupRingElement& a, int j) {
  const PrimeField& f = a.field();
  GroupRingElement out(f);
  for (const auto& [w, c] : a.terms()) {
    Word prefix;
    for (const Letter& l : w.letters()) {
      if (l.gen == j) {
        // d(x^e) = 1 + x + .. + x^{e-1} for e > 0, -(x^-1 + .. + x^e) for e < 0.
        if (l.exp > 0) {
          for (std::int64_t k = 0; k < l.exp; ++k) {
            out.add(prefix * Word::generator(j, k), c);
          }
        } else {
          for (std::int64_t k = 1; k <= -l.exp; ++k) {
            out.add(prefix * Word::generator(j, -k), f.neg(c));
          }
        }
      }
      prefix.append(l);
    }
  }
  return out;
}

TruncSeries fox_derivative(const Word& w, int j, const GroupContext& ctx) {
  if (j < 1 || j > ctx.rank) {
    throw UsageError("derivative index " + std::to_string(j) + " outside 1.." +
                     std::to_string(ctx.rank));
  }
  TruncSeries result(ctx);
  TruncSeries prefix = TruncSeries::one(ctx);
  for (const Letter& l : w.letters()) {
    if (l.gen < 1 || l.gen > ctx.rank) {
      throw UsageError("generator x" + std::to_string(l.gen) + " outside 1.." +
                       std::to_string(ctx.rank));
    }
    std::vector<Scalar> binom = binomial_series(ctx.field, l.exp, ctx.trunc + 1);
    if (l.gen == j) {
      // theta(d x^e / dx) = ((1 + X)^e - 1) / X
      std::vector<Scalar> quotient(binom.begin() + 1, binom.end());
      result += prefix.times_univariate(j, quotient);
    }
    binom.pop_back();
    prefix = prefix.times_univariate(l.gen, binom);
  }
  return result;
}

Scalar epsilon_via_fox(Monomial mono, const Word& w, const GroupContext& ctx) {
  if (mono.degree() > ctx.trunc) {
    throw UsageError("monomial degree " + std::to_string(mono.degree()) +
                     " exceeds truncation order " + std::to_string(ctx.trunc));
  }
  const PrimeField& f = ctx.field;
  if (mono.degree() == 0) return 1;

  GroupRingElement a = GroupRingElement::of(f, w);
  for (int k = mono.degree() - 1; k >= 1; --k) {
    a = fox_derivative(a, mono[k]);
    if (a.is_zero()) return 0;
  }
  // augmentation(d u / dx_i) is the exponent sum of x_i in u.
  const int last = mono[0];
  Scalar total = 0;
  for (const auto& [u, c] : a.terms()) {
    std::int64_t expsum = 0;
    for (const Letter& l : u.letters()) {
      if (l.gen == last) expsum += l.exp;
    }
    total = f.add(total, f.mul(c, f.reduce(expsum)));
  }
  return total;
}

}  // namespace pjohnson
