#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pjohnson/autom.hpp"
#include "pjohnson/endo.hpp"
#include "pjohnson/word.hpp"

namespace pjohnson {

// A torsion module over F_p[[X]] up to pseudo-isomorphism, recorded only by the
// degrees of its elementary divisors: sum_i F_p[X]/(X^{deg_i}).
struct LambdaModuleDesc {
  std::uint32_t p = 3;
  std::vector<int> degrees;

  // Throws UsageError for even or composite p, an empty list or a degree < 1.
  void validate() const;
};

// Smallest d >= 0 with p^d >= max degree.
int p_period(const LambdaModuleDesc& desc);
// Does (1+X)^{p^d} - 1 kill every summand F_p[X]/(X^{deg_i})?
bool lambda_action_check(const LambdaModuleDesc& desc, int d);

inline constexpr int kDefaultMonodromyDMax = 4;

struct MonodromySequences {
  int m_max = 0;
  int d_max = 0;
  // d(m) for m = 1..m_max; nullopt when no d <= d_max works.
  std::vector<std::optional<int>> d_of_m;
  // m(d) for d = 0..d_max.
  std::vector<AjDepth> m_of_d;

  std::optional<int> d_at(int m) const { return d_of_m.at(static_cast<std::size_t>(m - 1)); }
  const AjDepth& m_at(int d) const { return m_of_d.at(static_cast<std::size_t>(d)); }
};

// Requires odd p, an automorphism and 1 <= m_max <= N-1.
MonodromySequences monodromy_sequences(const GroupEndo& phi, int m_max,
                                       int d_max = kDefaultMonodromyDMax);

// Changing the lift by x in F_k does not move (Inn(x) phi)^e across A(m) for
// m <= min(k, N-1), and leaves tau_m unchanged once x lies in F_{m+1}.
bool lift_independence_check(const GroupEndo& phi, const Word& x, std::uint64_t e);

}  // namespace pjohnson
