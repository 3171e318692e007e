#include "oracle.hpp"

#include <functional>

#include "pjohnson/magnus.hpp"

namespace oracle {

namespace {

std::int64_t mod(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return r < 0 ? r + p : r;
}

Poly times_letter(const Poly& s, int gen, int sign, std::uint32_t p, int trunc) {
  Poly out;
  for (const auto& [key, c] : s) {
    out[key] = mod(out[key] + c, p);
    std::vector<int> k = key;
    std::int64_t coef = c;
    while (static_cast<int>(k.size()) < trunc) {
      k.push_back(gen);
      coef = sign > 0 ? coef : -coef;
      out[k] = mod(out[k] + coef, p);
      if (sign > 0) break;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

}  // namespace

Poly magnus(const Word& w, std::uint32_t p, int trunc) {
  Poly s{{{}, 1}};
  for (const Letter& l : w.letters()) {
    std::int64_t n = l.exp < 0 ? -l.exp : l.exp;
    for (std::int64_t k = 0; k < n; ++k) s = times_letter(s, l.gen, l.exp > 0 ? 1 : -1, p, trunc);
  }
  return s;
}

std::int64_t coefficient(const Poly& s, const std::vector<int>& mono) {
  auto it = s.find(mono);
  return it == s.end() ? 0 : it->second;
}

Poly from_series(const TruncSeries& s) {
  Poly out;
  s.for_each_term([&](Monomial m, Scalar c) { out[m.indices()] = c; });
  return out;
}

bool same(const Poly& a, const TruncSeries& b) { return a == from_series(b); }

std::int64_t cup_product_eval(const DefiningSystem& ds, const Word& w) {
  const std::uint32_t p = ds.field().p();
  auto a1 = [&](int gen, int sign) { return mod(sign * static_cast<std::int64_t>(ds.value(1, 2, gen)), p); };
  auto a2 = [&](int gen, int sign) { return mod(sign * static_cast<std::int64_t>(ds.value(2, 3, gen)), p); };
  // Running values of the 1-cochain a_12 on the prefix and of the 2-cochain b.
  std::int64_t prefix_a1 = 0;
  std::int64_t b = 0;
  for (const Letter& l : w.letters()) {
    int sign = l.exp > 0 ? 1 : -1;
    std::int64_t n = l.exp < 0 ? -l.exp : l.exp;
    for (std::int64_t k = 0; k < n; ++k) {
      // b(gx) = b(g) + b(x) - a_12(g) a_23(x), with b(x) = 0 and b(x^-1) = -a_12(x) a_23(x).
      std::int64_t bx = sign > 0 ? 0 : mod(-a1(l.gen, 1) * a2(l.gen, 1), p);
      b = mod(b + bx - prefix_a1 * a2(l.gen, sign), p);
      prefix_a1 = mod(prefix_a1 + a1(l.gen, sign), p);
    }
  }
  return b;
}

TruncSeries inner_johnson_closed_form(const Word& f, int h, int m, const GroupContext& ctx) {
  TruncSeries theta = magnus_embed(f, ctx);
  auto part = [&](int q) { return theta.homogeneous_part(q); };
  TruncSeries hx = TruncSeries::variable(ctx, h);
  TruncSeries total = part(m) * hx;
  const PrimeField& field = ctx.field;
  // q_0 + q_1 + .. + q_j = m with q_0 >= 0 and the rest >= 1.
  std::vector<int> q;
  for (int q0 = 0; q0 < m; ++q0) {
    q.clear();
    std::function<void(int)> rec = [&](int left) {
      if (left == 0) {
        TruncSeries term = part(q0) * hx;
        for (int v : q) term = term * part(v);
        total += term.scaled(field.sign(static_cast<std::int64_t>(q.size())));
        return;
      }
      for (int v = 1; v <= left; ++v) {
        q.push_back(v);
        rec(left - v);
        q.pop_back();
      }
    };
    rec(m - q0);
  }
  return total;
}

TruncSeries tensor_derivation(const JohnsonTable& t, const TruncSeries& degree_two) {
  const GroupContext& ctx = degree_two.context();
  TruncSeries out(ctx);
  degree_two.for_each_term([&](Monomial mono, Scalar c) {
    TruncSeries xa = TruncSeries::variable(ctx, mono[0]);
    TruncSeries xb = TruncSeries::variable(ctx, mono[1]);
    out += (t.row(mono[0]) * xb + xa * t.row(mono[1])).scaled(c);
  });
  return out;
}

}  // namespace oracle
