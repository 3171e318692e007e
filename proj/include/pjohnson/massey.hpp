#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "pjohnson/autom.hpp"
#include "pjohnson/context.hpp"
#include "pjohnson/endo.hpp"
#include "pjohnson/series.hpp"
#include "pjohnson/word.hpp"

namespace pjohnson {

// Values a_{kl}(g_i) of a defining system for an m-fold Massey product on the
// generators g_1..g_s of a presentation. Positions satisfy 1 <= k < l <= m+1 and
// (k, l) != (1, m+1); absent entries read as zero. The classes themselves sit
// at the positions (k, k+1).
class DefiningSystem {
 public:
  DefiningSystem(const PrimeField& field, int m, int generator_count);

  const PrimeField& field() const { return field_; }
  int length() const { return m_; }
  int generator_count() const { return s_; }

  void set(int k, int l, int i, Scalar value);
  Scalar value(int k, int l, int i) const;
  const std::map<std::tuple<int, int, int>, Scalar>& values() const { return values_; }

  // a_{k,k+1} = g_{i_k}^*, everything else zero.
  static DefiningSystem dual_basis_chain(const PrimeField& field, Monomial indices,
                                         int generator_count);

 private:
  PrimeField field_;
  int m_;
  int s_;
  std::map<std::tuple<int, int, int>, Scalar> values_;
};

// Massey value on the class of a relator f:
//   sum over compositions c_1+..+c_j = m, j >= 2, of
//   (-1)^{j+1} sum_{i_1..i_j} a_{1,1+c_1}(g_{i_1}) .. a_{m+1-c_j,m+1}(g_{i_j}) eps(i_1..i_j; f).
Scalar massey_eval(const DefiningSystem& ds, const Word& relator);
// Same, from theta(f) given in a context of rank generator_count and order >= m.
Scalar massey_eval(const DefiningSystem& ds, const TruncSeries& relator_theta);

// Relators R_{j,d} = phi^{p^d}(x_j) (x_{r+1} x_j x_{r+1}^-1)^-1 over x_1..x_{r+1}
// and their reductions R'_{j,d} = phi^{p^d}(x_j) x_j^-1 over x_1..x_r.
struct RelatorSet {
  int d = 0;
  int rank = 0;
  // Words are present only when the iterate stayed under the word guard.
  std::optional<std::vector<Word>> relators;
  std::optional<std::vector<Word>> reduced;
  std::vector<TruncSeries> relator_series;  // theta(R_{j,d}), rank r+1
  std::vector<TruncSeries> reduced_series;  // theta(R'_{j,d}), rank r
};

// Requires odd p and an IA automorphism of rank <= 6.
RelatorSet build_relators(const GroupEndo& phi, int d);

struct RelatorCheckReport {
  int d = 0;
  int j = 0;
  Monomial mono;
  int depth = 0;    // m(d)
  Scalar lhs = 0;   // Johnson coefficient of the iterate
  Scalar rhs = 0;   // signed Magnus coefficient of the relator
  bool equal = false;
  Scalar massey = 0;  // massey_eval with the chain g_{i_1}^*, .., g_{i_{m+1}}^*
};

// Compares tau_{m(d)}(phi^{p^d})(mono; X_j) with the relator side.
// Throws PreconditionError unless deg(mono) = m(d)+1 <= N.
RelatorCheckReport relator_check(const GroupEndo& phi, int d, Monomial mono, int j);
// Every j and every monomial of degree m(d)+1; empty when m(d)+1 > N.
std::vector<RelatorCheckReport> relator_check_grid(const GroupEndo& phi, int d);

}  // namespace pjohnson
