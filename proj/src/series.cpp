#include "pjohnson/series.hpp"

#include <algorithm>
#include <cctype>

#include "pjohnson/errors.hpp"

namespace pjohnson {

Monomial Monomial::from_indices(std::span<const int> indices) {
  if (indices.size() > static_cast<std::size_t>(kMaxDegree)) {
    throw UsageError("monomial degree " + std::to_string(indices.size()) + " exceeds " +
                     std::to_string(kMaxDegree));
  }
  std::uint64_t key = std::uint64_t{indices.size()} << kDegreeShift;
  int k = 0;
  for (int i : indices) {
    if (i < 1 || i > kMaxIndex) {
      throw UsageError("monomial index " + std::to_string(i) + " outside 1.." +
                       std::to_string(kMaxIndex));
    }
    key |= std::uint64_t(i) << (kTopShift - kBits * k);
    ++k;
  }
  return Monomial(key);
}

Monomial Monomial::generator(int j) {
  int idx[1] = {j};
  return from_indices(idx);
}

Monomial Monomial::parse(std::string_view text, int max_index) {
  std::vector<int> idx;
  if (text.empty()) throw ParseError("empty monomial", 0);
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view tok = text.substr(start, end - start);
      if (tok.empty()) throw ParseError("empty monomial index", start);
      int v = 0;
      for (char c : tok) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          throw ParseError("monomial index must be a positive integer", start);
        }
        v = v * 10 + (c - '0');
        if (v > kMaxIndex) break;
      }
      idx.push_back(v);
      start = end + 1;
    }
  } else {
    for (std::size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw ParseError("monomial must be a string of generator indices", i);
      }
      idx.push_back(c - '0');
    }
  }
  for (int i : idx) {
    if (i < 1 || i > max_index) {
      throw UsageError("monomial index " + std::to_string(i) + " out of range 1.." +
                       std::to_string(max_index));
    }
  }
  return from_indices(idx);
}

std::vector<int> Monomial::indices() const {
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(degree()));
  for (int k = 0; k < degree(); ++k) v.push_back((*this)[k]);
  return v;
}

Monomial Monomial::operator*(Monomial other) const {
  int da = degree();
  int db = other.degree();
  if (da + db > kMaxDegree) throw UsageError("monomial degree overflow");
  std::uint64_t body = (key_ & kBodyMask) | ((other.key_ & kBodyMask) >> (kBits * da));
  return Monomial((std::uint64_t(da + db) << kDegreeShift) | body);
}

Monomial Monomial::slice(int from, int count) const {
  std::uint64_t body = ((key_ & kBodyMask) << (kBits * from)) & kBodyMask;
  if (count < kMaxDegree) {
    std::uint64_t keep = kBodyMask & ~((std::uint64_t{1} << (kDegreeShift - kBits * count)) - 1);
    body &= keep;
  }
  return Monomial((std::uint64_t(count) << kDegreeShift) | body);
}

std::string Monomial::digits() const {
  std::string s;
  for (int k = 0; k < degree(); ++k) s += std::to_string((*this)[k]);
  return s;
}

std::string Monomial::variables() const {
  std::string s;
  for (int k = 0; k < degree(); ++k) {
    s += 'X';
    s += std::to_string((*this)[k]);
  }
  return s;
}

TruncSeries TruncSeries::constant(const GroupContext& ctx, Scalar c) {
  TruncSeries s(ctx);
  s.add_term(Monomial{}, c);
  return s;
}

TruncSeries TruncSeries::variable(const GroupContext& ctx, int j) {
  if (j < 1 || j > ctx.rank) {
    throw UsageError("variable X" + std::to_string(j) + " outside 1.." + std::to_string(ctx.rank));
  }
  return monomial(ctx, Monomial::generator(j));
}

TruncSeries TruncSeries::monomial(const GroupContext& ctx, Monomial m, Scalar c) {
  TruncSeries s(ctx);
  s.add_term(m, c);
  return s;
}

Scalar TruncSeries::coefficient(Monomial m) const {
  auto it = coeffs_.find(m.key());
  return it == coeffs_.end() ? 0 : it->second;
}

void TruncSeries::add_term(Monomial m, Scalar c) {
  c %= ctx_.p();
  if (c == 0 || m.degree() > ctx_.trunc) return;
  auto [it, inserted] = coeffs_.try_emplace(m.key(), c);
  if (!inserted) {
    it->second = ctx_.field.add(it->second, c);
    if (it->second == 0) coeffs_.erase(it);
  }
}

std::vector<TruncSeries::Term> TruncSeries::terms() const {
  std::vector<Term> out;
  out.reserve(coeffs_.size());
  for (const auto& [k, c] : coeffs_) out.emplace_back(Monomial::from_key(k), c);
  std::sort(out.begin(), out.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  return out;
}

TruncSeries TruncSeries::homogeneous_part(int m) const {
  TruncSeries s(ctx_);
  for (const auto& [k, c] : coeffs_) {
    if (Monomial::from_key(k).degree() == m) s.coeffs_.emplace(k, c);
  }
  return s;
}

TruncSeries TruncSeries::truncated(int max_degree) const {
  TruncSeries s(ctx_);
  for (const auto& [k, c] : coeffs_) {
    if (Monomial::from_key(k).degree() <= max_degree) s.coeffs_.emplace(k, c);
  }
  return s;
}

std::optional<int> TruncSeries::lowest_degree() const {
  std::optional<int> low;
  for (const auto& [k, c] : coeffs_) {
    int d = Monomial::from_key(k).degree();
    if (!low || d < *low) low = d;
  }
  return low;
}

TruncSeries TruncSeries::recontext(const GroupContext& other) const {
  if (other.p() != ctx_.p()) throw UsageError("cannot change the prime of a series");
  TruncSeries s(other);
  for (const auto& [k, c] : coeffs_) {
    Monomial m = Monomial::from_key(k);
    for (int i : m.indices()) {
      if (i > other.rank) {
        throw UsageError("series uses X" + std::to_string(i) + " beyond rank " +
                         std::to_string(other.rank));
      }
    }
    if (m.degree() <= other.trunc) s.coeffs_.emplace(k, c);
  }
  return s;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& b) {
  require_same_context(ctx_, b.ctx_);
  for (const auto& [k, c] : b.coeffs_) add_term(Monomial::from_key(k), c);
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& b) {
  require_same_context(ctx_, b.ctx_);
  for (const auto& [k, c] : b.coeffs_) add_term(Monomial::from_key(k), ctx_.field.neg(c));
  return *this;
}

TruncSeries TruncSeries::scaled(Scalar c) const {
  TruncSeries s(ctx_);
  c %= ctx_.p();
  if (c == 0) return s;
  for (const auto& [k, v] : coeffs_) s.coeffs_.emplace(k, ctx_.field.mul(v, c));
  return s;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  return multiply_upto(a, b, a.ctx_.trunc);
}

TruncSeries multiply_upto(const TruncSeries& a, const TruncSeries& b, int max_degree) {
  require_same_context(a.ctx_, b.ctx_);
  const GroupContext& ctx = a.ctx_;
  const PrimeField& f = ctx.field;
  const int n = std::min(ctx.trunc, max_degree);
  if (n < 0) return TruncSeries(ctx);

  std::vector<std::vector<TruncSeries::Term>> by_degree(static_cast<std::size_t>(n + 1));
  for (const auto& [k, c] : b.coeffs_) {
    Monomial m = Monomial::from_key(k);
    if (m.degree() <= n) by_degree[static_cast<std::size_t>(m.degree())].emplace_back(m, c);
  }

  std::unordered_map<std::uint64_t, std::uint64_t> acc;
  // Partial sums stay below 2^63 for p < 2^31 as long as we reduce occasionally.
  for (const auto& [ka, ca] : a.coeffs_) {
    Monomial ma = Monomial::from_key(ka);
    int room = n - ma.degree();
    if (room < 0) continue;
    for (int d = 0; d <= room; ++d) {
      for (const auto& [mb, cb] : by_degree[static_cast<std::size_t>(d)]) {
        std::uint64_t& slot = acc[(ma * mb).key()];
        slot = (slot + std::uint64_t{ca} * cb) % f.p();
      }
    }
  }
  TruncSeries out(ctx);
  for (const auto& [k, v] : acc) {
    if (v != 0) out.coeffs_.emplace(k, static_cast<Scalar>(v));
  }
  return out;
}

TruncSeries TruncSeries::times_univariate(int j, std::span<const Scalar> coeffs) const {
  Monomial x = Monomial::generator(j);
  TruncSeries out(ctx_);
  for (const auto& [k, c] : coeffs_) {
    Monomial m = Monomial::from_key(k);
    Monomial cur = m;
    for (std::size_t t = 0; t < coeffs.size(); ++t) {
      if (cur.degree() > ctx_.trunc) break;
      if (coeffs[t] != 0) out.add_term(cur, ctx_.field.mul(c, coeffs[t]));
      if (cur.degree() == ctx_.trunc) break;
      cur = cur * x;
    }
  }
  return out;
}

TruncSeries series_multiply(const TruncSeries& a, const TruncSeries& b) { return a * b; }

TruncSeries series_invert(const TruncSeries& a) {
  const PrimeField& f = a.field();
  Scalar c0 = a.constant_term();
  if (c0 == 0) throw PreconditionError("series with zero constant term is not a unit");
  // a = c0 (1 - u) with u in the augmentation ideal; a^-1 = c0^-1 sum_k u^k.
  Scalar c0inv = f.inv(c0);
  TruncSeries u = a.scaled(c0inv);
  u -= TruncSeries::one(a.context());
  u = -u;
  TruncSeries sum = TruncSeries::one(a.context());
  TruncSeries power = TruncSeries::one(a.context());
  for (int k = 1; k <= a.trunc(); ++k) {
    power = power * u;
    if (power.is_zero()) break;
    sum += power;
  }
  return sum.scaled(c0inv);
}

std::vector<Scalar> binomial_series(const PrimeField& field, std::int64_t e, int trunc) {
  const std::size_t len = static_cast<std::size_t>(trunc + 1);
  auto mul = [&](const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    std::vector<Scalar> c(len, 0);
    for (std::size_t i = 0; i < len; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; i + j < len; ++j) {
        c[i + j] = field.add(c[i + j], field.mul(a[i], b[j]));
      }
    }
    return c;
  };
  std::vector<Scalar> base(len, 0);
  base[0] = 1;
  if (e >= 0) {
    if (len > 1) base[1] = 1;
  } else {
    for (std::size_t k = 0; k < len; ++k) base[k] = field.sign(static_cast<std::int64_t>(k));
    e = -e;
  }
  std::vector<Scalar> result(len, 0);
  result[0] = 1;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

std::string to_string(const TruncSeries& s) {
  if (s.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : s.terms()) {
    if (!first) out += " + ";
    first = false;
    out += std::to_string(c);
    if (m.degree() > 0) {
      out += '*';
      out += m.variables();
    }
  }
  return out;
}

std::string to_tsv(const TruncSeries& s) {
  std::string out;
  for (const auto& [m, c] : s.terms()) {
    out += m.degree() == 0 ? std::string("()") : m.digits();
    out += '\t';
    out += std::to_string(c);
    out += '\n';
  }
  return out;
}

}  // namespace pjohnson
