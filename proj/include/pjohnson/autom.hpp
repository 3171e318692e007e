#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "pjohnson/context.hpp"
#include "pjohnson/endo.hpp"
#include "pjohnson/series.hpp"
#include "pjohnson/word.hpp"

namespace pjohnson {

// F_p-linear endomorphism of H = F/F_2 in the basis X_1..X_r; column j holds
// the coordinates of the image of X_j.
class LinearMapH {
 public:
  LinearMapH(const PrimeField& field, int rank);
  static LinearMapH identity(const PrimeField& field, int rank);

  int rank() const { return rank_; }
  const PrimeField& field() const { return field_; }
  // 1-based.
  Scalar at(int row, int col) const { return a_[index(row, col)]; }
  void set(int row, int col, Scalar v) { a_[index(row, col)] = v % field_.p(); }

  int matrix_rank() const;
  bool invertible() const { return matrix_rank() == rank_; }
  std::optional<LinearMapH> inverse() const;

  friend LinearMapH operator*(const LinearMapH& a, const LinearMapH& b);
  friend bool operator==(const LinearMapH&, const LinearMapH&) = default;

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>((row - 1) * rank_ + (col - 1));
  }

  PrimeField field_;
  int rank_;
  std::vector<Scalar> a_;
};

LinearMapH induced_matrix(const GroupEndo& phi);
// Invertibility of the induced map on H decides automorphy for free pro-p groups.
bool is_automorphism(const GroupEndo& phi);

// phi o psi
GroupEndo compose(const GroupEndo& phi, const GroupEndo& psi,
                  std::size_t guard = kDefaultWordGuard);
// Both composites are the identity, checked exactly on words.
bool verify_inverse(const GroupEndo& phi, const GroupEndo& claimed_inverse);
// phi^k by repeated squaring; throws ResourceError when images outgrow `guard`.
GroupEndo power_endo(const GroupEndo& phi, std::uint64_t k,
                     std::size_t guard = kDefaultWordGuard);

// Position of phi in the Andreadakis-Johnson filtration A(m), capped by the
// truncation horizon: `exceeds` means phi in A(N-1) and nothing finer is visible.
struct AjDepth {
  bool exceeds = false;
  int value = 0;

  bool at_least(int m) const { return exceeds || value >= m; }
  std::string to_string(int trunc) const;

  friend bool operator==(const AjDepth&, const AjDepth&) = default;
};

// theta(phi(x_j) x_j^-1) for j = 1..r.
std::vector<TruncSeries> displacement_series(const GroupEndo& phi);
AjDepth aj_depth_from_displacements(const std::vector<TruncSeries>& displacements,
                                    const GroupContext& ctx);
// Throws PreconditionError for non-automorphisms.
AjDepth aj_depth(const GroupEndo& phi);

// Coefficients tau(i_1..i_{m+1}; X_j): row j is a homogeneous element of degree m+1.
class JohnsonTable {
 public:
  struct Entry {
    int j;
    Monomial mono;
    Scalar value;
  };

  JohnsonTable(const GroupContext& ctx, int level);
  JohnsonTable(const GroupContext& ctx, int level, std::vector<TruncSeries> rows);

  const GroupContext& context() const { return ctx_; }
  int level() const { return level_; }
  // 1-based.
  const TruncSeries& row(int j) const { return rows_.at(static_cast<std::size_t>(j - 1)); }
  const std::vector<TruncSeries>& rows() const { return rows_; }
  Scalar coefficient(int j, Monomial mono) const { return row(j).coefficient(mono); }
  bool is_zero() const;
  // Generators ascending, monomials length-lex.
  std::vector<Entry> entries() const;

  friend JohnsonTable operator+(const JohnsonTable& a, const JohnsonTable& b);
  friend bool operator==(const JohnsonTable&, const JohnsonTable&) = default;

 private:
  GroupContext ctx_;
  int level_;
  std::vector<TruncSeries> rows_;
};

JohnsonTable johnson_from_displacements(const std::vector<TruncSeries>& displacements,
                                        const GroupContext& ctx, int m);
// tau_m(phi)(X_j) = theta_{m+1}(phi(x_j) x_j^-1); requires phi in A(m), 1 <= m <= N-1.
JohnsonTable johnson_hom(const GroupEndo& phi, int m);

// F_p-algebra endomorphism of the truncated power series algebra determined by
// the images of X_1..X_r, each without constant term.
class AlgebraEndo {
 public:
  static AlgebraEndo identity(const GroupContext& ctx);
  static AlgebraEndo from_images(const GroupContext& ctx, std::vector<TruncSeries> images);

  const GroupContext& context() const { return ctx_; }
  // 1-based.
  const TruncSeries& image(int j) const { return images_.at(static_cast<std::size_t>(j - 1)); }
  const std::vector<TruncSeries>& images() const { return images_; }
  // Degree-1 part as a matrix.
  LinearMapH linear_part() const;

  friend bool operator==(const AlgebraEndo&, const AlgebraEndo&) = default;

 private:
  AlgebraEndo(const GroupContext& ctx, std::vector<TruncSeries> images)
      : ctx_(ctx), images_(std::move(images)) {}

  GroupContext ctx_;
  std::vector<TruncSeries> images_;
};

// theta o phi-hat o theta^-1: X_j -> theta(phi(x_j)) - 1.
AlgebraEndo algebra_endo_of(const GroupEndo& phi);
TruncSeries algebra_endo_apply(const AlgebraEndo& e, const TruncSeries& s);
// e o f
AlgebraEndo compose(const AlgebraEndo& e, const AlgebraEndo& f);
AlgebraEndo power(const AlgebraEndo& e, std::uint64_t k);
// The splitting s(P): X_{i_1}..X_{i_m} -> P(X_{i_1})..P(X_{i_m}).
AlgebraEndo linear_endo(const LinearMapH& p, const GroupContext& ctx);
// Degree-by-degree triangular solve; throws PreconditionError when the
// degree-1 part is singular.
AlgebraEndo algebra_endo_inverse(const AlgebraEndo& e);

// kappa(phi) = theta o phi-hat o theta^-1 o [phi]^-1
AlgebraEndo kappa_theta(const GroupEndo& phi);
// Degree-(m+1) part of kappa(X_j) - X_j.
JohnsonTable johnson_map_of(const AlgebraEndo& kappa, int m);
JohnsonTable johnson_map(const GroupEndo& phi, int m);

// Elements of Hom(H, U_2): the value on X_j for each j.
using HomTable = std::vector<TruncSeries>;

// E(e) = e|_H - id_H; requires the degree-1 part of e to be the identity.
HomTable ia_to_hom(const AlgebraEndo& e);
// The unique algebra endomorphism X_j -> X_j + t(X_j); every t(X_j) must
// live in degrees >= 2.
AlgebraEndo hom_to_ia(const HomTable& t, const GroupContext& ctx);

// psi . eta: h -> s(P)(eta(P^-1 h)) for a table eta of any level.
JohnsonTable transport(const LinearMapH& p, const JohnsonTable& eta);

// theta-side description of the iterate phi^k. When the word iterate stays
// under the guard the displacements are computed from words; otherwise the
// algebra endomorphism of phi is iterated instead (both agree through degree N).
inline constexpr std::size_t kIterateWordGuard = 4096;

struct Iterate {
  std::optional<GroupEndo> words;
  std::vector<TruncSeries> images;         // theta(phi^k(x_j))
  std::vector<TruncSeries> displacements;  // theta(phi^k(x_j) x_j^-1)
};
Iterate iterate(const GroupEndo& phi, std::uint64_t k, std::size_t guard = kIterateWordGuard);

// p^d, or ResourceError on 64-bit overflow.
std::uint64_t prime_power(std::uint32_t p, int d);

}  // namespace pjohnson
