#include "pjohnson/context.hpp"

#include "pjohnson/errors.hpp"

namespace pjohnson {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw UsageError("modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
}

Scalar PrimeField::pow(Scalar a, std::uint64_t e) const {
  Scalar result = 1 % p_;
  Scalar base = a % p_;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Scalar PrimeField::inv(Scalar a) const {
  if (a % p_ == 0) throw PreconditionError("zero is not invertible in F_p");
  return pow(a, p_ - 2);
}

GroupContext::GroupContext(std::uint32_t p, int rank_, int trunc_)
    : field(p), rank(rank_), trunc(trunc_) {
  if (rank < 1 || rank > kMaxRank) {
    throw UsageError("rank " + std::to_string(rank) + " outside 1.." +
                     std::to_string(kMaxRank));
  }
  if (trunc < 2 || trunc > kMaxTrunc) {
    throw UsageError("truncation order " + std::to_string(trunc) + " outside 2.." +
                     std::to_string(kMaxTrunc));
  }
}

void GroupContext::require_odd_prime(std::string_view what) const {
  if (p() == 2) {
    throw PreconditionError(std::string(what) + " requires an odd prime p");
  }
}

std::string GroupContext::describe() const {
  return "p=" + std::to_string(p()) + " r=" + std::to_string(rank) +
         " N=" + std::to_string(trunc);
}

void require_same_context(const GroupContext& a, const GroupContext& b) {
  if (!(a == b)) {
    throw UsageError("context mismatch: " + a.describe() + " vs " + b.describe());
  }
}

}  // namespace pjohnson
