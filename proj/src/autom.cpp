#include "pjohnson/autom.hpp"

#include <algorithm>
#include <limits>

#include "pjohnson/errors.hpp"
#include "pjohnson/magnus.hpp"

namespace pjohnson {

namespace {

void require_level(const GroupContext& ctx, int m) {
  if (m < 1 || m > ctx.trunc - 1) {
    throw UsageError("level m=" + std::to_string(m) + " outside 1.." +
                     std::to_string(ctx.trunc - 1) + " for N=" + std::to_string(ctx.trunc));
  }
}

void require_automorphism(const GroupEndo& phi) {
  if (!is_automorphism(phi)) {
    throw PreconditionError("not an automorphism: the induced map on H is singular mod " +
                            std::to_string(phi.context().p()));
  }
}

using TermList = std::vector<TruncSeries::Term>;

// e(s) through degree `limit`, peeling the leftmost variable off every monomial.
TruncSeries apply_upto(const AlgebraEndo& e, const TermList& terms, int limit) {
  const GroupContext& ctx = e.context();
  TruncSeries out(ctx);
  if (limit < 0) return out;
  std::vector<TermList> buckets(static_cast<std::size_t>(ctx.rank + 1));
  for (const auto& [m, c] : terms) {
    int deg = m.degree();
    if (deg == 0) {
      out.add_term(m, c);
    } else if (deg <= limit) {
      buckets[static_cast<std::size_t>(m[0])].emplace_back(m.slice(1, deg - 1), c);
    }
  }
  for (int i = 1; i <= ctx.rank; ++i) {
    const TermList& tail = buckets[static_cast<std::size_t>(i)];
    if (tail.empty()) continue;
    TruncSeries rest = apply_upto(e, tail, limit - 1);
    out += multiply_upto(e.image(i), rest, limit);
  }
  return out;
}

}  // namespace

LinearMapH::LinearMapH(const PrimeField& field, int rank)
    : field_(field), rank_(rank), a_(static_cast<std::size_t>(rank * rank), 0) {}

LinearMapH LinearMapH::identity(const PrimeField& field, int rank) {
  LinearMapH m(field, rank);
  for (int i = 1; i <= rank; ++i) m.set(i, i, 1);
  return m;
}

int LinearMapH::matrix_rank() const {
  std::vector<Scalar> a = a_;
  const int n = rank_;
  auto at = [&](int r, int c) -> Scalar& { return a[static_cast<std::size_t>(r * n + c)]; };
  int rk = 0;
  for (int col = 0; col < n && rk < n; ++col) {
    int pivot = -1;
    for (int r = rk; r < n; ++r) {
      if (at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    for (int c = 0; c < n; ++c) std::swap(at(rk, c), at(pivot, c));
    Scalar inv = field_.inv(at(rk, col));
    for (int r = rk + 1; r < n; ++r) {
      Scalar factor = field_.mul(at(r, col), inv);
      if (factor == 0) continue;
      for (int c = col; c < n; ++c) at(r, c) = field_.sub(at(r, c), field_.mul(factor, at(rk, c)));
    }
    ++rk;
  }
  return rk;
}

std::optional<LinearMapH> LinearMapH::inverse() const {
  const int n = rank_;
  std::vector<Scalar> a = a_;
  LinearMapH out = identity(field_, n);
  auto lhs = [&](int r, int c) -> Scalar& { return a[static_cast<std::size_t>(r * n + c)]; };
  auto rhs = [&](int r, int c) -> Scalar& { return out.a_[static_cast<std::size_t>(r * n + c)]; };
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (lhs(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    for (int c = 0; c < n; ++c) {
      std::swap(lhs(col, c), lhs(pivot, c));
      std::swap(rhs(col, c), rhs(pivot, c));
    }
    Scalar inv = field_.inv(lhs(col, col));
    for (int c = 0; c < n; ++c) {
      lhs(col, c) = field_.mul(lhs(col, c), inv);
      rhs(col, c) = field_.mul(rhs(col, c), inv);
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || lhs(r, col) == 0) continue;
      Scalar factor = lhs(r, col);
      for (int c = 0; c < n; ++c) {
        lhs(r, c) = field_.sub(lhs(r, c), field_.mul(factor, lhs(col, c)));
        rhs(r, c) = field_.sub(rhs(r, c), field_.mul(factor, rhs(col, c)));
      }
    }
  }
  return out;
}

LinearMapH operator*(const LinearMapH& a, const LinearMapH& b) {
  if (a.rank_ != b.rank_ || !(a.field_ == b.field_)) throw UsageError("matrix shape mismatch");
  const PrimeField& f = a.field_;
  LinearMapH out(f, a.rank_);
  for (int i = 1; i <= a.rank_; ++i) {
    for (int j = 1; j <= a.rank_; ++j) {
      Scalar s = 0;
      for (int k = 1; k <= a.rank_; ++k) s = f.add(s, f.mul(a.at(i, k), b.at(k, j)));
      out.set(i, j, s);
    }
  }
  return out;
}

LinearMapH induced_matrix(const GroupEndo& phi) {
  const GroupContext& ctx = phi.context();
  LinearMapH m(ctx.field, ctx.rank);
  for (int j = 1; j <= ctx.rank; ++j) {
    std::vector<std::int64_t> sums(static_cast<std::size_t>(ctx.rank + 1), 0);
    for (const Letter& l : phi.image(j).letters()) {
      sums[static_cast<std::size_t>(l.gen)] += l.exp;
    }
    for (int i = 1; i <= ctx.rank; ++i) m.set(i, j, ctx.field.reduce(sums[static_cast<std::size_t>(i)]));
  }
  return m;
}

bool is_automorphism(const GroupEndo& phi) { return induced_matrix(phi).invertible(); }

GroupEndo compose(const GroupEndo& phi, const GroupEndo& psi, std::size_t guard) {
  require_same_context(phi.context(), psi.context());
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(phi.rank()));
  for (int j = 1; j <= phi.rank(); ++j) images.push_back(apply_endo(phi, psi.image(j), guard));
  return GroupEndo::from_images(phi.context(), std::move(images));
}

bool verify_inverse(const GroupEndo& phi, const GroupEndo& claimed_inverse) {
  GroupEndo id = GroupEndo::identity(phi.context());
  return compose(phi, claimed_inverse) == id && compose(claimed_inverse, phi) == id;
}

GroupEndo power_endo(const GroupEndo& phi, std::uint64_t k, std::size_t guard) {
  GroupEndo result = GroupEndo::identity(phi.context());
  GroupEndo base = phi;
  while (k > 0) {
    if (k & 1) result = compose(result, base, guard);
    k >>= 1;
    if (k > 0) base = compose(base, base, guard);
  }
  return result;
}

std::string AjDepth::to_string(int trunc) const {
  if (exceeds) return "exceeds " + std::to_string(trunc - 1);
  return std::to_string(value);
}

std::vector<TruncSeries> displacement_series(const GroupEndo& phi) {
  std::vector<TruncSeries> out;
  for (int j = 1; j <= phi.rank(); ++j) {
    out.push_back(magnus_embed(phi.image(j) * Word::generator(j, -1), phi.context()));
  }
  return out;
}

AjDepth aj_depth_from_displacements(const std::vector<TruncSeries>& displacements,
                                    const GroupContext& ctx) {
  std::optional<int> lowest;
  for (const TruncSeries& s : displacements) {
    auto low = (s - TruncSeries::one(ctx)).lowest_degree();
    if (low && (!lowest || *low < *lowest)) lowest = low;
  }
  if (!lowest) return AjDepth{true, 0};
  return AjDepth{false, *lowest - 1};
}

AjDepth aj_depth(const GroupEndo& phi) {
  require_automorphism(phi);
  return aj_depth_from_displacements(displacement_series(phi), phi.context());
}

JohnsonTable::JohnsonTable(const GroupContext& ctx, int level)
    : ctx_(ctx), level_(level), rows_(static_cast<std::size_t>(ctx.rank), TruncSeries(ctx)) {}

JohnsonTable::JohnsonTable(const GroupContext& ctx, int level, std::vector<TruncSeries> rows)
    : ctx_(ctx), level_(level), rows_(std::move(rows)) {
  if (rows_.size() != static_cast<std::size_t>(ctx.rank)) {
    throw UsageError("Johnson table needs one row per generator");
  }
  for (const TruncSeries& r : rows_) {
    require_same_context(ctx, r.context());
    if (!(r.homogeneous_part(level + 1) == r)) {
      throw UsageError("Johnson table row is not homogeneous of degree " +
                       std::to_string(level + 1));
    }
  }
}

bool JohnsonTable::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const TruncSeries& r) { return r.is_zero(); });
}

std::vector<JohnsonTable::Entry> JohnsonTable::entries() const {
  std::vector<Entry> out;
  for (int j = 1; j <= ctx_.rank; ++j) {
    for (const auto& [m, c] : row(j).terms()) out.push_back(Entry{j, m, c});
  }
  return out;
}

JohnsonTable operator+(const JohnsonTable& a, const JohnsonTable& b) {
  require_same_context(a.ctx_, b.ctx_);
  if (a.level_ != b.level_) throw UsageError("Johnson tables of different levels");
  std::vector<TruncSeries> rows;
  for (std::size_t j = 0; j < a.rows_.size(); ++j) rows.push_back(a.rows_[j] + b.rows_[j]);
  return JohnsonTable(a.ctx_, a.level_, std::move(rows));
}

JohnsonTable johnson_from_displacements(const std::vector<TruncSeries>& displacements,
                                        const GroupContext& ctx, int m) {
  require_level(ctx, m);
  AjDepth depth = aj_depth_from_displacements(displacements, ctx);
  if (!depth.at_least(m)) {
    throw PreconditionError("automorphism not in filtration level " + std::to_string(m) +
                            " (depth " + depth.to_string(ctx.trunc) + ")");
  }
  std::vector<TruncSeries> rows;
  for (const TruncSeries& s : displacements) rows.push_back(s.homogeneous_part(m + 1));
  return JohnsonTable(ctx, m, std::move(rows));
}

JohnsonTable johnson_hom(const GroupEndo& phi, int m) {
  require_level(phi.context(), m);
  require_automorphism(phi);
  return johnson_from_displacements(displacement_series(phi), phi.context(), m);
}

AlgebraEndo AlgebraEndo::identity(const GroupContext& ctx) {
  std::vector<TruncSeries> images;
  for (int j = 1; j <= ctx.rank; ++j) images.push_back(TruncSeries::variable(ctx, j));
  return AlgebraEndo(ctx, std::move(images));
}

AlgebraEndo AlgebraEndo::from_images(const GroupContext& ctx, std::vector<TruncSeries> images) {
  if (images.size() != static_cast<std::size_t>(ctx.rank)) {
    throw UsageError("expected " + std::to_string(ctx.rank) + " variable images, got " +
                     std::to_string(images.size()));
  }
  for (const TruncSeries& s : images) {
    require_same_context(ctx, s.context());
    if (s.constant_term() != 0) throw UsageError("algebra endomorphism image has a constant term");
  }
  return AlgebraEndo(ctx, std::move(images));
}

LinearMapH AlgebraEndo::linear_part() const {
  LinearMapH m(ctx_.field, ctx_.rank);
  for (int j = 1; j <= ctx_.rank; ++j) {
    for (int i = 1; i <= ctx_.rank; ++i) m.set(i, j, image(j).coefficient(Monomial::generator(i)));
  }
  return m;
}

AlgebraEndo algebra_endo_of(const GroupEndo& phi) {
  const GroupContext& ctx = phi.context();
  std::vector<TruncSeries> images;
  for (int j = 1; j <= ctx.rank; ++j) {
    images.push_back(magnus_embed(phi.image(j), ctx) - TruncSeries::one(ctx));
  }
  return AlgebraEndo::from_images(ctx, std::move(images));
}

TruncSeries algebra_endo_apply(const AlgebraEndo& e, const TruncSeries& s) {
  require_same_context(e.context(), s.context());
  return apply_upto(e, s.terms(), e.context().trunc);
}

AlgebraEndo compose(const AlgebraEndo& e, const AlgebraEndo& f) {
  require_same_context(e.context(), f.context());
  std::vector<TruncSeries> images;
  for (const TruncSeries& s : f.images()) images.push_back(algebra_endo_apply(e, s));
  return AlgebraEndo::from_images(e.context(), std::move(images));
}

AlgebraEndo power(const AlgebraEndo& e, std::uint64_t k) {
  AlgebraEndo result = AlgebraEndo::identity(e.context());
  AlgebraEndo base = e;
  while (k > 0) {
    if (k & 1) result = compose(result, base);
    k >>= 1;
    if (k > 0) base = compose(base, base);
  }
  return result;
}

AlgebraEndo linear_endo(const LinearMapH& p, const GroupContext& ctx) {
  if (p.rank() != ctx.rank || !(p.field() == ctx.field)) throw UsageError("matrix shape mismatch");
  std::vector<TruncSeries> images;
  for (int j = 1; j <= ctx.rank; ++j) {
    TruncSeries s(ctx);
    for (int i = 1; i <= ctx.rank; ++i) s.add_term(Monomial::generator(i), p.at(i, j));
    images.push_back(std::move(s));
  }
  return AlgebraEndo::from_images(ctx, std::move(images));
}

AlgebraEndo algebra_endo_inverse(const AlgebraEndo& e) {
  const GroupContext& ctx = e.context();
  auto pinv = e.linear_part().inverse();
  if (!pinv) throw PreconditionError("algebra endomorphism has a singular linear part");
  AlgebraEndo s_inv = linear_endo(*pinv, ctx);
  std::vector<TruncSeries> images;
  for (int j = 1; j <= ctx.rank; ++j) {
    TruncSeries target = TruncSeries::variable(ctx, j);
    TruncSeries y(ctx);
    for (int m = 1; m <= ctx.trunc; ++m) {
      TruncSeries residual = (target - algebra_endo_apply(e, y)).homogeneous_part(m);
      if (!residual.is_zero()) y += algebra_endo_apply(s_inv, residual);
    }
    images.push_back(std::move(y));
  }
  return AlgebraEndo::from_images(ctx, std::move(images));
}

AlgebraEndo kappa_theta(const GroupEndo& phi) {
  require_automorphism(phi);
  LinearMapH pinv = *induced_matrix(phi).inverse();
  return compose(algebra_endo_of(phi), linear_endo(pinv, phi.context()));
}

JohnsonTable johnson_map_of(const AlgebraEndo& kappa, int m) {
  const GroupContext& ctx = kappa.context();
  require_level(ctx, m);
  std::vector<TruncSeries> rows;
  for (const TruncSeries& s : kappa.images()) rows.push_back(s.homogeneous_part(m + 1));
  return JohnsonTable(ctx, m, std::move(rows));
}

JohnsonTable johnson_map(const GroupEndo& phi, int m) {
  require_level(phi.context(), m);
  return johnson_map_of(kappa_theta(phi), m);
}

HomTable ia_to_hom(const AlgebraEndo& e) {
  const GroupContext& ctx = e.context();
  if (!(e.linear_part() == LinearMapH::identity(ctx.field, ctx.rank))) {
    throw PreconditionError("algebra endomorphism is not the identity modulo degree 2");
  }
  HomTable out;
  for (int j = 1; j <= ctx.rank; ++j) out.push_back(e.image(j) - TruncSeries::variable(ctx, j));
  return out;
}

AlgebraEndo hom_to_ia(const HomTable& t, const GroupContext& ctx) {
  if (t.size() != static_cast<std::size_t>(ctx.rank)) {
    throw UsageError("expected " + std::to_string(ctx.rank) + " values, got " +
                     std::to_string(t.size()));
  }
  std::vector<TruncSeries> images;
  for (int j = 1; j <= ctx.rank; ++j) {
    const TruncSeries& v = t[static_cast<std::size_t>(j - 1)];
    require_same_context(ctx, v.context());
    auto low = v.lowest_degree();
    if (low && *low < 2) throw UsageError("homomorphism value has terms below degree 2");
    images.push_back(TruncSeries::variable(ctx, j) + v);
  }
  return AlgebraEndo::from_images(ctx, std::move(images));
}

JohnsonTable transport(const LinearMapH& p, const JohnsonTable& eta) {
  const GroupContext& ctx = eta.context();
  auto pinv = p.inverse();
  if (!pinv) throw PreconditionError("transport by a singular matrix");
  AlgebraEndo s = linear_endo(p, ctx);
  std::vector<TruncSeries> rows;
  for (int j = 1; j <= ctx.rank; ++j) {
    TruncSeries pulled(ctx);
    for (int i = 1; i <= ctx.rank; ++i) pulled += eta.row(i).scaled(pinv->at(i, j));
    rows.push_back(algebra_endo_apply(s, pulled));
  }
  return JohnsonTable(ctx, eta.level(), std::move(rows));
}

Iterate iterate(const GroupEndo& phi, std::uint64_t k, std::size_t guard) {
  const GroupContext& ctx = phi.context();
  Iterate out;
  try {
    GroupEndo w = power_endo(phi, k, guard);
    for (int j = 1; j <= ctx.rank; ++j) out.images.push_back(magnus_embed(w.image(j), ctx));
    out.displacements = displacement_series(w);
    out.words = std::move(w);
    return out;
  } catch (const ResourceError&) {
    out.images.clear();
    out.displacements.clear();
  }
  AlgebraEndo e = power(algebra_endo_of(phi), k);
  for (int j = 1; j <= ctx.rank; ++j) {
    TruncSeries image = TruncSeries::one(ctx) + e.image(j);
    out.displacements.push_back(image * magnus_embed(Word::generator(j, -1), ctx));
    out.images.push_back(std::move(image));
  }
  return out;
}

std::uint64_t prime_power(std::uint32_t p, int d) {
  if (d < 0) throw UsageError("negative exponent d=" + std::to_string(d));
  std::uint64_t v = 1;
  for (int i = 0; i < d; ++i) {
    if (v > std::numeric_limits<std::uint64_t>::max() / p) {
      throw ResourceError("p^d overflows 64 bits for p=" + std::to_string(p) +
                          " d=" + std::to_string(d));
    }
    v *= p;
  }
  return v;
}

}  // namespace pjohnson
