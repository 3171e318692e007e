#include "gen.hpp"

#include <algorithm>

namespace testgen {

namespace {

GroupEndo move_on(const GroupContext& ctx, int j, const Word& image) {
  std::vector<Word> images;
  for (int i = 1; i <= ctx.rank; ++i) images.push_back(i == j ? image : Word::generator(i));
  return GroupEndo::from_images(ctx, std::move(images));
}

std::vector<int> others(int rank, int j) {
  std::vector<int> v;
  for (int i = 1; i <= rank; ++i) {
    if (i != j) v.push_back(i);
  }
  return v;
}

// Element of F_n (n >= 1) using only generators in `allowed`.
Word filtered_on(Rng& rng, const std::vector<int>& allowed, std::uint32_t p, int n, int budget) {
  if (n <= 1 || budget <= 0) {
    Word w = random_word_on(rng, allowed, 3);
    if (n <= 1) return w;
    // Fall back to a p-power tower that is deep enough.
    Word base = allowed.size() > 0 ? Word::generator(rng.pick(allowed), rng.coin() ? 1 : -1) : Word();
    int depth = 1;
    while (depth < n) {
      base = base.pow(static_cast<std::int64_t>(p));
      depth *= static_cast<int>(p);
    }
    return base;
  }
  switch (rng.uniform(0, 3)) {
    case 0:
    case 1: {
      int i = rng.uniform(1, n - 1);
      Word u = filtered_on(rng, allowed, p, i, budget - 1);
      Word v = filtered_on(rng, allowed, p, n - i, budget - 1);
      return word_commutator(u, v);
    }
    case 2: {
      int q = (n + static_cast<int>(p) - 1) / static_cast<int>(p);
      return filtered_on(rng, allowed, p, q, budget - 1).pow(static_cast<std::int64_t>(p));
    }
    default: {
      Word a = filtered_on(rng, allowed, p, n, budget - 2);
      Word b = filtered_on(rng, allowed, p, n, budget - 2);
      Word g = random_word_on(rng, allowed, 2);
      return a * g * b * g.inverse();
    }
  }
}

}  // namespace

Word random_word_on(Rng& rng, const std::vector<int>& allowed, int max_letters) {
  Word w;
  if (allowed.empty()) return w;
  int n = rng.uniform(0, max_letters);
  for (int k = 0; k < n; ++k) w.append(Letter{rng.pick(allowed), rng.coin() ? 1 : -1});
  return w;
}

Word random_word(Rng& rng, int rank, int max_letters) {
  std::vector<int> all;
  for (int i = 1; i <= rank; ++i) all.push_back(i);
  return random_word_on(rng, all, max_letters);
}

Word random_filtered_word(Rng& rng, int rank, std::uint32_t p, int n) {
  std::vector<int> all;
  for (int i = 1; i <= rank; ++i) all.push_back(i);
  return filtered_on(rng, all, p, n, 3);
}

AutPair random_automorphism(Rng& rng, const GroupContext& ctx, int moves) {
  GroupEndo phi = GroupEndo::identity(ctx);
  GroupEndo inv = GroupEndo::identity(ctx);
  const int r = ctx.rank;
  for (int t = 0; t < moves; ++t) {
    int i = rng.uniform(1, r);
    int kind = r == 1 ? 1 : rng.uniform(0, 4);
    int k = r == 1 ? i : rng.pick(others(r, i));
    GroupEndo e = phi, ei = inv;
    Word xi = Word::generator(i);
    Word xk = Word::generator(k);
    switch (kind) {
      case 0: {  // swap x_i and x_k
        std::vector<Word> im;
        for (int a = 1; a <= r; ++a) im.push_back(Word::generator(a == i ? k : a == k ? i : a));
        e = GroupEndo::from_images(ctx, im);
        ei = e;
        break;
      }
      case 1:
        e = move_on(ctx, i, xi.inverse());
        ei = e;
        break;
      case 2:
        e = move_on(ctx, i, xi * xk);
        ei = move_on(ctx, i, xi * xk.inverse());
        break;
      case 3:
        e = move_on(ctx, i, xk * xi);
        ei = move_on(ctx, i, xk.inverse() * xi);
        break;
      default:
        e = move_on(ctx, i, xk * xi * xk.inverse());
        ei = move_on(ctx, i, xk.inverse() * xi * xk);
        break;
    }
    phi = compose(phi, e);
    inv = compose(ei, inv);
  }
  return {phi, inv};
}

AutPair random_filtered_automorphism(Rng& rng, const GroupContext& ctx, int level, int moves) {
  GroupEndo phi = GroupEndo::identity(ctx);
  GroupEndo inv = GroupEndo::identity(ctx);
  const int r = ctx.rank;
  for (int t = 0; t < moves; ++t) {
    GroupEndo e = phi, ei = inv;
    int j = rng.uniform(1, r);
    if (r == 1 || rng.uniform(0, 2) == 0) {
      Word x = random_filtered_word(rng, r, ctx.p(), level);
      e = GroupEndo::inner(ctx, x);
      ei = GroupEndo::inner(ctx, x.inverse());
    } else {
      Word c = filtered_on(rng, others(r, j), ctx.p(), level + 1, 2);
      Word xj = Word::generator(j);
      if (rng.coin()) {
        e = move_on(ctx, j, xj * c);
        ei = move_on(ctx, j, xj * c.inverse());
      } else {
        e = move_on(ctx, j, c * xj);
        ei = move_on(ctx, j, c.inverse() * xj);
      }
    }
    phi = compose(phi, e);
    inv = compose(ei, inv);
  }
  return {phi, inv};
}

GroupEndo random_ia_automorphism(Rng& rng, const GroupContext& ctx, int level) {
  std::vector<Word> images;
  for (int j = 1; j <= ctx.rank; ++j) {
    images.push_back(Word::generator(j) * random_filtered_word(rng, ctx.rank, ctx.p(), level + 1));
  }
  return GroupEndo::from_images(ctx, std::move(images));
}

AlgebraEndo random_filtered_algebra_endo(Rng& rng, const GroupContext& ctx, int max_terms) {
  const int r = ctx.rank;
  const int p = static_cast<int>(ctx.p());
  while (true) {
    LinearMapH m(ctx.field, r);
    for (int a = 1; a <= r; ++a) {
      for (int b = 1; b <= r; ++b) m.set(a, b, static_cast<Scalar>(rng.uniform(0, p - 1)));
    }
    if (!m.invertible()) continue;
    std::vector<TruncSeries> images;
    for (int j = 1; j <= r; ++j) {
      TruncSeries s(ctx);
      for (int i = 1; i <= r; ++i) s.add_term(Monomial::generator(i), m.at(i, j));
      int terms = rng.uniform(0, max_terms);
      for (int t = 0; t < terms; ++t) {
        int deg = rng.uniform(2, ctx.trunc);
        std::vector<int> idx;
        for (int k = 0; k < deg; ++k) idx.push_back(rng.uniform(1, r));
        s.add_term(Monomial::from_indices(idx), static_cast<Scalar>(rng.uniform(1, p - 1)));
      }
      images.push_back(std::move(s));
    }
    return AlgebraEndo::from_images(ctx, std::move(images));
  }
}

}  // namespace testgen
