#pragma once

#include <map>

#include "pjohnson/context.hpp"
#include "pjohnson/series.hpp"
#include "pjohnson/word.hpp"

namespace pjohnson {

// Finite F_p-linear combination of free-group words: an element of F_p[F].
class GroupRingElement {
 public:
  explicit GroupRingElement(const PrimeField& field) : field_(field) {}
  static GroupRingElement of(const PrimeField& field, const Word& w);

  void add(const Word& w, Scalar c);
  const std::map<Word, Scalar>& terms() const { return terms_; }
  const PrimeField& field() const { return field_; }
  bool is_zero() const { return terms_.empty(); }
  // epsilon: F_p[F] -> F_p, sum of coefficients.
  Scalar augmentation() const;

 private:
  PrimeField field_;
  std::map<Word, Scalar> terms_;
};

// Fox free derivative d/dx_j on F_p[F], extended linearly from
// d(uv) = du + u dv, dx_i = delta_ij.
GroupRingElement fox_derivative(const GroupRingElement& a, int j);

// theta(dw/dx_j), accumulated letter by letter with the product rule.
TruncSeries fox_derivative(const Word& w, int j, const GroupContext& ctx);

// augmentation(d^m w / dx_{i_1} .. dx_{i_m}), the innermost derivative being
// d/dx_{i_m}. Works in F_p[F] directly and never touches power series.
Scalar epsilon_via_fox(Monomial mono, const Word& w, const GroupContext& ctx);

}  // namespace pjohnson
