#include "pjohnson/massey.hpp"

#include <algorithm>
#include <functional>

#include "pjohnson/errors.hpp"
#include "pjohnson/magnus.hpp"

namespace pjohnson {

namespace {

// All compositions of m with at least two parts.
std::vector<std::vector<int>> compositions(int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      if (cur.size() >= 2) out.push_back(cur);
      return;
    }
    for (int c = 1; c <= left; ++c) {
      cur.push_back(c);
      rec(left - c);
      cur.pop_back();
    }
  };
  rec(m);
  return out;
}

// All monomials of the given degree in X_1..X_r, length-lex.
std::vector<Monomial> monomials_of_degree(int r, int degree) {
  std::vector<Monomial> out;
  std::vector<int> idx(static_cast<std::size_t>(degree), 1);
  while (true) {
    out.push_back(Monomial::from_indices(idx));
    int k = degree - 1;
    while (k >= 0 && idx[static_cast<std::size_t>(k)] == r) {
      idx[static_cast<std::size_t>(k)] = 1;
      --k;
    }
    if (k < 0) break;
    ++idx[static_cast<std::size_t>(k)];
  }
  return out;
}

struct IterateData {
  GroupContext ctx;
  RelatorSet relators;
  AjDepth depth;
};

IterateData prepare(const GroupEndo& phi, int d) {
  RelatorSet rs = build_relators(phi, d);
  AjDepth depth = aj_depth_from_displacements(rs.reduced_series, phi.context());
  return IterateData{phi.context(), std::move(rs), depth};
}

RelatorCheckReport check_one(const IterateData& data, const JohnsonTable& table, Monomial mono,
                           int j) {
  const GroupContext& ctx = data.ctx;
  const PrimeField& f = ctx.field;
  const int m = data.depth.value;
  const TruncSeries& relator = data.relators.relator_series.at(static_cast<std::size_t>(j - 1));

  RelatorCheckReport rep;
  rep.d = data.relators.d;
  rep.j = j;
  rep.mono = mono;
  rep.depth = m;
  rep.lhs = table.coefficient(j, mono);
  Scalar sign = f.mul(f.sign(m + 1), f.sign(m + 1));
  rep.rhs = f.mul(sign, relator.coefficient(mono));
  rep.equal = rep.lhs == rep.rhs;
  rep.massey = massey_eval(DefiningSystem::dual_basis_chain(f, mono, ctx.rank + 1), relator);
  return rep;
}

void require_index(int j, int r) {
  if (j < 1 || j > r) {
    throw UsageError("relator index " + std::to_string(j) + " outside 1.." + std::to_string(r));
  }
}

}  // namespace

DefiningSystem::DefiningSystem(const PrimeField& field, int m, int generator_count)
    : field_(field), m_(m), s_(generator_count) {
  if (m < 2) throw UsageError("Massey product length must be at least 2");
  if (generator_count < 1 || generator_count > GroupContext::kMaxRank) {
    throw UsageError("defining system generator count outside 1.." +
                     std::to_string(GroupContext::kMaxRank));
  }
}

void DefiningSystem::set(int k, int l, int i, Scalar value) {
  if (k < 1 || k >= l || l > m_ + 1) {
    throw UsageError("defining system position (" + std::to_string(k) + "," + std::to_string(l) +
                     ") outside 1 <= k < l <= " + std::to_string(m_ + 1));
  }
  if (k == 1 && l == m_ + 1) {
    throw UsageError("defining system may not carry the corner position (1," +
                     std::to_string(m_ + 1) + ")");
  }
  if (i < 1 || i > s_) {
    throw UsageError("defining system generator index " + std::to_string(i) + " outside 1.." +
                     std::to_string(s_));
  }
  Scalar v = value % field_.p();
  if (v == 0) {
    values_.erase({k, l, i});
  } else {
    values_[{k, l, i}] = v;
  }
}

Scalar DefiningSystem::value(int k, int l, int i) const {
  auto it = values_.find({k, l, i});
  return it == values_.end() ? 0 : it->second;
}

DefiningSystem DefiningSystem::dual_basis_chain(const PrimeField& field, Monomial indices,
                                                int generator_count) {
  DefiningSystem ds(field, indices.degree(), generator_count);
  for (int k = 0; k < indices.degree(); ++k) ds.set(k + 1, k + 2, indices[k], 1);
  return ds;
}

Scalar massey_eval(const DefiningSystem& ds, const TruncSeries& relator_theta) {
  const GroupContext& ctx = relator_theta.context();
  const PrimeField& f = ds.field();
  if (!(ctx.field == f)) throw UsageError("defining system and relator over different primes");
  if (ctx.rank != ds.generator_count()) {
    throw UsageError("relator lives on " + std::to_string(ctx.rank) +
                     " generators, defining system on " + std::to_string(ds.generator_count()));
  }
  const int m = ds.length();
  if (ctx.trunc < m) throw UsageError("relator expansion truncated below the Massey length");

  std::vector<std::vector<TruncSeries::Term>> by_degree(static_cast<std::size_t>(m + 1));
  relator_theta.for_each_term([&](Monomial mono, Scalar c) {
    if (mono.degree() >= 2 && mono.degree() <= m) {
      by_degree[static_cast<std::size_t>(mono.degree())].emplace_back(mono, c);
    }
  });

  Scalar total = 0;
  for (const auto& comp : compositions(m)) {
    const int parts = static_cast<int>(comp.size());
    Scalar partial = 0;
    for (const auto& [mono, c] : by_degree[static_cast<std::size_t>(parts)]) {
      Scalar prod = c;
      int start = 1;
      for (int t = 0; t < parts && prod != 0; ++t) {
        int end = start + comp[static_cast<std::size_t>(t)];
        prod = f.mul(prod, ds.value(start, end, mono[t]));
        start = end;
      }
      partial = f.add(partial, prod);
    }
    total = f.add(total, f.mul(f.sign(parts + 1), partial));
  }
  return total;
}

Scalar massey_eval(const DefiningSystem& ds, const Word& relator) {
  if (relator.max_generator() > ds.generator_count()) {
    throw UsageError("relator uses a generator beyond x" + std::to_string(ds.generator_count()));
  }
  GroupContext ctx(ds.field().p(), ds.generator_count(), std::max(ds.length(), 2));
  return massey_eval(ds, magnus_embed(relator, ctx));
}

RelatorSet build_relators(const GroupEndo& phi, int d) {
  const GroupContext& ctx = phi.context();
  ctx.require_odd_prime("relator construction");
  if (ctx.rank + 1 > GroupContext::kMaxRank) {
    throw UsageError("relators need rank r+1 <= " + std::to_string(GroupContext::kMaxRank));
  }
  if (!aj_depth(phi).at_least(1)) {
    throw PreconditionError("automorphism is not IA: it acts nontrivially on H");
  }
  GroupContext big = ctx.with_rank(ctx.rank + 1);
  const int t = ctx.rank + 1;

  Iterate it = iterate(phi, prime_power(ctx.p(), d));
  RelatorSet rs;
  rs.d = d;
  rs.rank = ctx.rank;
  rs.reduced_series = it.displacements;
  if (it.words) {
    std::vector<Word> rel;
    std::vector<Word> red;
    for (int j = 1; j <= ctx.rank; ++j) {
      const Word& img = it.words->image(j);
      red.push_back(img * Word::generator(j, -1));
      rel.push_back(img * Word::generator(t) * Word::generator(j, -1) * Word::generator(t, -1));
      rs.relator_series.push_back(magnus_embed(rel.back(), big));
    }
    rs.relators = std::move(rel);
    rs.reduced = std::move(red);
  } else {
    for (int j = 1; j <= ctx.rank; ++j) {
      Word tail = Word::generator(t) * Word::generator(j, -1) * Word::generator(t, -1);
      rs.relator_series.push_back(it.images[static_cast<std::size_t>(j - 1)].recontext(big) *
                                  magnus_embed(tail, big));
    }
  }
  return rs;
}

RelatorCheckReport relator_check(const GroupEndo& phi, int d, Monomial mono, int j) {
  const GroupContext& ctx = phi.context();
  require_index(j, ctx.rank);
  for (int k = 0; k < mono.degree(); ++k) require_index(mono[k], ctx.rank);
  IterateData data = prepare(phi, d);
  if (data.depth.exceeds) {
    throw PreconditionError("depth of the iterate exceeds " + std::to_string(ctx.trunc - 1) +
                            "; no monomial of degree m(d)+1 fits in N=" +
                            std::to_string(ctx.trunc));
  }
  if (mono.degree() != data.depth.value + 1) {
    throw PreconditionError("monomial degree " + std::to_string(mono.degree()) +
                            " differs from m(d)+1 = " + std::to_string(data.depth.value + 1));
  }
  JohnsonTable table = johnson_from_displacements(data.relators.reduced_series, ctx,
                                                  data.depth.value);
  return check_one(data, table, mono, j);
}

std::vector<RelatorCheckReport> relator_check_grid(const GroupEndo& phi, int d) {
  const GroupContext& ctx = phi.context();
  IterateData data = prepare(phi, d);
  std::vector<RelatorCheckReport> out;
  if (data.depth.exceeds) return out;
  const int m = data.depth.value;
  JohnsonTable table = johnson_from_displacements(data.relators.reduced_series, ctx, m);
  std::vector<Monomial> monos = monomials_of_degree(ctx.rank, m + 1);
  for (int j = 1; j <= ctx.rank; ++j) {
    for (Monomial mono : monos) out.push_back(check_one(data, table, mono, j));
  }
  return out;
}

}  // namespace pjohnson
