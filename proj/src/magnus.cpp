#include "pjohnson/magnus.hpp"

#include "pjohnson/errors.hpp"

namespace pjohnson {

TruncSeries magnus_embed(const Word& w, const GroupContext& ctx) {
  TruncSeries s = TruncSeries::one(ctx);
  for (const Letter& l : w.letters()) {
    if (l.gen < 1 || l.gen > ctx.rank) {
      throw UsageError("generator x" + std::to_string(l.gen) + " outside 1.." +
                       std::to_string(ctx.rank));
    }
    s = s.times_univariate(l.gen, binomial_series(ctx.field, l.exp, ctx.trunc));
  }
  return s;
}

Scalar magnus_coefficient(Monomial mono, const Word& w, const GroupContext& ctx) {
  if (mono.degree() > ctx.trunc) {
    throw UsageError("monomial degree " + std::to_string(mono.degree()) +
                     " exceeds truncation order " + std::to_string(ctx.trunc));
  }
  return magnus_embed(w, ctx).coefficient(mono);
}

std::string ZassenhausDegree::to_string(int trunc) const {
  switch (kind) {
    case Kind::Finite:
      return std::to_string(value);
    case Kind::Identity:
      return "identity";
    case Kind::ExceedsHorizon:
      break;
  }
  return "exceeds " + std::to_string(trunc);
}

ZassenhausDegree zassenhaus_degree_of_series(const TruncSeries& theta, bool is_identity) {
  if (is_identity) return ZassenhausDegree::identity();
  TruncSeries reduced = theta - TruncSeries::one(theta.context());
  auto low = reduced.lowest_degree();
  if (!low) return ZassenhausDegree::exceeds();
  return ZassenhausDegree::finite(*low);
}

ZassenhausDegree zassenhaus_degree(const Word& w, const GroupContext& ctx) {
  if (w.is_identity()) return ZassenhausDegree::identity();
  return zassenhaus_degree_of_series(magnus_embed(w, ctx), false);
}

GradedComponent graded_component(const Word& w, int m, const GroupContext& ctx) {
  if (m < 1 || m > ctx.trunc) {
    throw UsageError("graded degree " + std::to_string(m) + " outside 1.." +
                     std::to_string(ctx.trunc));
  }
  TruncSeries theta = magnus_embed(w, ctx);
  ZassenhausDegree deg = zassenhaus_degree_of_series(theta, w.is_identity());
  if (!deg.at_least(m)) {
    throw PreconditionError("word not in filtration level " + std::to_string(m) +
                            " (Zassenhaus degree " + deg.to_string(ctx.trunc) + ")");
  }
  return GradedComponent{m, theta.homogeneous_part(m)};
}

}  // namespace pjohnson
