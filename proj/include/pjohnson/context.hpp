#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace pjohnson {

using Scalar = std::uint32_t;

bool is_prime(std::uint64_t n);

// Arithmetic in Z/pZ. Values are always canonical representatives in [0, p).
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }

  Scalar reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Scalar>(r < 0 ? r + p_ : r);
  }
  Scalar add(Scalar a, Scalar b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Scalar>(s >= p_ ? s - p_ : s);
  }
  Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + (p_ - b); }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const {
    return static_cast<Scalar>((std::uint64_t{a} * b) % p_);
  }
  Scalar pow(Scalar a, std::uint64_t e) const;
  // Throws PreconditionError on zero.
  Scalar inv(Scalar a) const;
  // (-1)^k
  Scalar sign(std::int64_t k) const { return (k % 2 == 0) ? 1 : p_ - 1; }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

// The ambient data of every computation: the prime p, the number r of free
// generators x_1..x_r, and the truncation order N of the power series algebra.
struct GroupContext {
  static constexpr int kMaxRank = 7;
  static constexpr int kMaxTrunc = 16;

  GroupContext(std::uint32_t p, int rank, int trunc);

  PrimeField field;
  int rank;
  int trunc;

  std::uint32_t p() const { return field.p(); }

  GroupContext with_rank(int r) const { return GroupContext(p(), r, trunc); }
  GroupContext with_trunc(int n) const { return GroupContext(p(), rank, n); }

  // Iwasawa dynamics and Massey evaluation are only defined for odd p.
  void require_odd_prime(std::string_view what) const;

  std::string describe() const;

  friend bool operator==(const GroupContext&, const GroupContext&) = default;
};

void require_same_context(const GroupContext& a, const GroupContext& b);

}  // namespace pjohnson
