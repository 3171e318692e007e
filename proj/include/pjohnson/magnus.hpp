#pragma once

#include <string>

#include "pjohnson/context.hpp"
#include "pjohnson/series.hpp"
#include "pjohnson/word.hpp"

namespace pjohnson {

// theta(w) with theta(x_j) = 1 + X_j, truncated at ctx.trunc.
TruncSeries magnus_embed(const Word& w, const GroupContext& ctx);

// epsilon(i_1..i_m; w): coefficient of X_{i_1}..X_{i_m} in theta(w).
Scalar magnus_coefficient(Monomial mono, const Word& w, const GroupContext& ctx);

// Depth of w in the Zassenhaus filtration, as far as the truncation can see.
struct ZassenhausDegree {
  enum class Kind { Finite, Identity, ExceedsHorizon };

  Kind kind = Kind::Identity;
  int value = 0;  // meaningful for Finite only

  static ZassenhausDegree finite(int n) { return {Kind::Finite, n}; }
  static ZassenhausDegree identity() { return {Kind::Identity, 0}; }
  static ZassenhausDegree exceeds() { return {Kind::ExceedsHorizon, 0}; }

  bool is_finite() const { return kind == Kind::Finite; }
  // w in F_n? Identity and beyond-horizon elements lie in every F_n with n <= N.
  bool at_least(int n) const { return kind != Kind::Finite || value >= n; }
  std::string to_string(int trunc) const;

  friend bool operator==(const ZassenhausDegree&, const ZassenhausDegree&) = default;
};

// Depth read off the series theta(w) - 1; `is_identity` distinguishes a
// reduced-to-1 word from one whose expansion merely vanishes through degree N.
ZassenhausDegree zassenhaus_degree_of_series(const TruncSeries& theta, bool is_identity);
ZassenhausDegree zassenhaus_degree(const Word& w, const GroupContext& ctx);

// theta_m(w): the image of w in gr_m, a homogeneous element of H^{(x)m}.
struct GradedComponent {
  int degree;
  TruncSeries value;
};

// Throws PreconditionError unless w lies in F_m.
GradedComponent graded_component(const Word& w, int m, const GroupContext& ctx);

}  // namespace pjohnson
