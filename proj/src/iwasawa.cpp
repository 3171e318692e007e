#include "pjohnson/iwasawa.hpp"

#include <algorithm>

#include "pjohnson/errors.hpp"
#include "pjohnson/magnus.hpp"

namespace pjohnson {

namespace {

// a^p in F_p[X]/(X^n).
std::vector<Scalar> pow_truncated(const PrimeField& f, const std::vector<Scalar>& a,
                                  std::uint64_t e) {
  const std::size_t n = a.size();
  auto mul = [&](const std::vector<Scalar>& u, const std::vector<Scalar>& v) {
    std::vector<Scalar> w(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (u[i] == 0) continue;
      for (std::size_t j = 0; i + j < n; ++j) w[i + j] = f.add(w[i + j], f.mul(u[i], v[j]));
    }
    return w;
  };
  std::vector<Scalar> result(n, 0);
  result[0] = 1;
  std::vector<Scalar> base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

}  // namespace

void LambdaModuleDesc::validate() const {
  if (p < 3 || !is_prime(p)) throw UsageError("p=" + std::to_string(p) + " is not an odd prime");
  if (degrees.empty()) throw UsageError("empty degree list");
  for (int deg : degrees) {
    if (deg < 1) throw UsageError("degree " + std::to_string(deg) + " is not positive");
  }
}

int p_period(const LambdaModuleDesc& desc) {
  desc.validate();
  const std::uint64_t top = static_cast<std::uint64_t>(
      *std::max_element(desc.degrees.begin(), desc.degrees.end()));
  int d = 0;
  for (std::uint64_t q = 1; q < top; q *= desc.p) ++d;
  return d;
}

bool lambda_action_check(const LambdaModuleDesc& desc, int d) {
  desc.validate();
  if (d < 0) throw UsageError("negative exponent d=" + std::to_string(d));
  PrimeField f(desc.p);
  const int top = *std::max_element(desc.degrees.begin(), desc.degrees.end());
  std::vector<Scalar> poly(static_cast<std::size_t>(top), 0);
  poly[0] = 1;
  if (top > 1) poly[1] = 1;
  for (int i = 0; i < d; ++i) {
    std::vector<Scalar> next = pow_truncated(f, poly, desc.p);
    if (next == poly) break;
    poly = std::move(next);
  }
  poly[0] = f.sub(poly[0], 1);
  for (int deg : desc.degrees) {
    for (int k = 0; k < deg; ++k) {
      if (poly[static_cast<std::size_t>(k)] != 0) return false;
    }
  }
  return true;
}

MonodromySequences monodromy_sequences(const GroupEndo& phi, int m_max, int d_max) {
  const GroupContext& ctx = phi.context();
  ctx.require_odd_prime("monodromy sequences");
  if (!is_automorphism(phi)) {
    throw PreconditionError("not an automorphism: the induced map on H is singular mod " +
                            std::to_string(ctx.p()));
  }
  if (m_max < 1 || m_max > ctx.trunc - 1) {
    throw UsageError("mMax=" + std::to_string(m_max) + " outside 1.." +
                     std::to_string(ctx.trunc - 1));
  }
  if (d_max < 0) throw UsageError("negative dMax");

  MonodromySequences out;
  out.m_max = m_max;
  out.d_max = d_max;
  for (int d = 0; d <= d_max; ++d) {
    Iterate it = iterate(phi, prime_power(ctx.p(), d));
    out.m_of_d.push_back(aj_depth_from_displacements(it.displacements, ctx));
  }
  for (int m = 1; m <= m_max; ++m) {
    std::optional<int> found;
    for (int d = 0; d <= d_max; ++d) {
      if (out.m_at(d).at_least(m)) {
        found = d;
        break;
      }
    }
    out.d_of_m.push_back(found);
  }
  return out;
}

bool lift_independence_check(const GroupEndo& phi, const Word& x, std::uint64_t e) {
  const GroupContext& ctx = phi.context();
  if (!is_automorphism(phi)) {
    throw PreconditionError("not an automorphism: the induced map on H is singular mod " +
                            std::to_string(ctx.p()));
  }
  ZassenhausDegree k = zassenhaus_degree(x, ctx);
  const int top = k.is_finite() ? std::min(k.value, ctx.trunc - 1) : ctx.trunc - 1;

  GroupEndo lifted = compose(GroupEndo::inner(ctx, x), phi);
  Iterate a = iterate(lifted, e);
  Iterate b = iterate(phi, e);
  AjDepth da = aj_depth_from_displacements(a.displacements, ctx);
  AjDepth db = aj_depth_from_displacements(b.displacements, ctx);
  for (int m = 1; m <= top; ++m) {
    if (da.at_least(m) != db.at_least(m)) return false;
    if (k.at_least(m + 1) && db.at_least(m)) {
      if (!(johnson_from_displacements(a.displacements, ctx, m) ==
            johnson_from_displacements(b.displacements, ctx, m))) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace pjohnson
