#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pjohnson/context.hpp"

namespace pjohnson {

// A word X_{i_1} ... X_{i_m} in the non-commuting variables, packed into 64 bits:
// the degree sits in bits 48..52 and index k occupies the 3-bit slot starting at
// bit 45 - 3k. Numeric order of the packed key is length-lex order.
class Monomial {
 public:
  static constexpr int kMaxDegree = 16;
  static constexpr int kMaxIndex = 7;

  Monomial() = default;
  static Monomial from_indices(std::span<const int> indices);
  static Monomial from_key(std::uint64_t key) { return Monomial(key); }
  static Monomial generator(int j);
  // Accepts "12" (one digit per index) or "1,2".
  static Monomial parse(std::string_view text, int max_index);

  int degree() const { return static_cast<int>(key_ >> kDegreeShift); }
  // 0-based position.
  int operator[](int k) const {
    return static_cast<int>((key_ >> (kTopShift - kBits * k)) & kSlotMask);
  }
  std::vector<int> indices() const;
  std::uint64_t key() const { return key_; }

  // Concatenation.
  Monomial operator*(Monomial other) const;
  // Positions [from, from+count).
  Monomial slice(int from, int count) const;

  // "12" style: indices concatenated.
  std::string digits() const;
  // "X1X2" style; empty for the unit monomial.
  std::string variables() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  static constexpr int kBits = 3;
  static constexpr int kDegreeShift = 48;
  static constexpr int kTopShift = 45;
  static constexpr std::uint64_t kSlotMask = 7;
  static constexpr std::uint64_t kBodyMask = (std::uint64_t{1} << kDegreeShift) - 1;

  explicit Monomial(std::uint64_t key) : key_(key) {}

  std::uint64_t key_ = 0;
};

// Element of F_p<<X_1..X_r>> truncated above total degree N. Stored sparsely:
// no zero coefficients, no monomial of degree > N.
class TruncSeries {
 public:
  using Term = std::pair<Monomial, Scalar>;

  explicit TruncSeries(const GroupContext& ctx) : ctx_(ctx) {}

  static TruncSeries constant(const GroupContext& ctx, Scalar c);
  static TruncSeries one(const GroupContext& ctx) { return constant(ctx, 1); }
  // X_j
  static TruncSeries variable(const GroupContext& ctx, int j);
  static TruncSeries monomial(const GroupContext& ctx, Monomial m, Scalar c = 1);

  const GroupContext& context() const { return ctx_; }
  const PrimeField& field() const { return ctx_.field; }
  int trunc() const { return ctx_.trunc; }

  Scalar coefficient(Monomial m) const;
  Scalar constant_term() const { return coefficient(Monomial{}); }
  // Adds c * m; silently drops terms beyond the truncation order.
  void add_term(Monomial m, Scalar c);

  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }
  // Sorted length-lex.
  std::vector<Term> terms() const;

  template <typename F>
  void for_each_term(F&& f) const {
    for (const auto& [k, c] : coeffs_) f(Monomial::from_key(k), c);
  }

  // Degree-m part.
  TruncSeries homogeneous_part(int m) const;
  // Drops everything of degree > max_degree.
  TruncSeries truncated(int max_degree) const;
  // Lowest degree carrying a nonzero coefficient; nullopt for 0.
  std::optional<int> lowest_degree() const;
  // Same coefficients viewed in a context with more generators or a
  // different truncation order (terms above the new order are dropped).
  TruncSeries recontext(const GroupContext& other) const;

  TruncSeries& operator+=(const TruncSeries& b);
  TruncSeries& operator-=(const TruncSeries& b);
  TruncSeries scaled(Scalar c) const;
  TruncSeries operator-() const { return scaled(ctx_.field.neg(1)); }

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  // Product with everything above max_degree discarded.
  friend TruncSeries multiply_upto(const TruncSeries& a, const TruncSeries& b, int max_degree);
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.ctx_ == b.ctx_ && a.coeffs_ == b.coeffs_;
  }

  // this * (c_0 + c_1 X_j + c_2 X_j^2 + ...); coeffs[k] is c_k.
  TruncSeries times_univariate(int j, std::span<const Scalar> coeffs) const;

 private:
  GroupContext ctx_;
  std::unordered_map<std::uint64_t, Scalar> coeffs_;
};

TruncSeries series_multiply(const TruncSeries& a, const TruncSeries& b);
TruncSeries multiply_upto(const TruncSeries& a, const TruncSeries& b, int max_degree);
// Throws PreconditionError when the constant term vanishes.
TruncSeries series_invert(const TruncSeries& a);

// Coefficients of (1 + X)^e in F_p[X]/(X^{trunc+1}), for any integer e.
std::vector<Scalar> binomial_series(const PrimeField& field, std::int64_t e, int trunc);

// "1 + 4*X1 + 1*X1X1": length-lex, constant term as a bare coefficient, "0" if empty.
std::string to_string(const TruncSeries& s);
// One "monomial<TAB>coefficient" row per term, length-lex.
std::string to_tsv(const TruncSeries& s);

}  // namespace pjohnson
