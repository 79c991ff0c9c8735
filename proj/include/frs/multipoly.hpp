// Copyright 2026 The folded-rs Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FRS_MULTIPOLY_HPP
#define FRS_MULTIPOLY_HPP

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "frs/error.hpp"
#include "frs/prime_field.hpp"
#include "frs/unipoly.hpp"

namespace frs {

/// Exponent vector (i, j_1, ..., j_s) of the monomial X^i Y_1^j_1 ... Y_s^j_s.
struct Monomial {
  std::vector<std::uint32_t> exps;

  std::size_t num_y() const { return exps.size() - 1; }
  std::uint32_t x_degree() const { return exps[0]; }
  std::uint32_t y_degree() const {
    std::uint32_t d = 0;
    for (std::size_t t = 1; t < exps.size(); ++t) d += exps[t];
    return d;
  }
  std::uint32_t total_degree() const { return exps[0] + y_degree(); }
  /// (1, k, ..., k)-weighted degree.
  std::uint64_t weighted_degree(std::uint32_t k) const {
    return exps[0] + static_cast<std::uint64_t>(k) * y_degree();
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Graded order used for interpolation columns: weighted degree first, then
/// lexicographic on (j_s, ..., j_1, i), so monomials heavy in the later
/// Y-variables come last within a degree.
struct GradedOrder {
  std::uint32_t k;
  bool operator()(const Monomial& a, const Monomial& b) const {
    const auto wa = a.weighted_degree(k), wb = b.weighted_degree(k);
    if (wa != wb) return wa < wb;
    return std::lexicographical_compare(a.exps.rbegin(), a.exps.rend(), b.exps.rbegin(), b.exps.rend());
  }
};

/// All monomials in X, Y_1..Y_s of (1,k,..,k)-weighted degree at most D, in
/// GradedOrder.
inline std::vector<Monomial> enumerate_weighted_monomials(std::uint32_t k, std::uint32_t D, std::size_t s) {
  if (k < 1 || s < 1) throw DomainError("monomial enumeration needs k >= 1 and s >= 1");
  std::vector<Monomial> out;
  std::vector<std::uint32_t> ys(s, 0);
  // Walk all Y-exponent vectors with k * |j| <= D.
  std::function<void(std::size_t, std::uint32_t)> walk = [&](std::size_t t, std::uint32_t budget) {
    if (t == s) {
      for (std::uint32_t i = 0; i <= budget; ++i) {
        Monomial m{std::vector<std::uint32_t>(s + 1)};
        m.exps[0] = i;
        std::copy(ys.begin(), ys.end(), m.exps.begin() + 1);
        out.push_back(std::move(m));
      }
      return;
    }
    for (std::uint32_t j = 0; static_cast<std::uint64_t>(j) * k <= budget; ++j) {
      ys[t] = j;
      walk(t + 1, budget - j * k);
    }
    ys[t] = 0;
  };
  walk(0, D);
  std::sort(out.begin(), out.end(), GradedOrder{k});
  return out;
}

/// C(n, r) as an exact integer; throws on overflow of 64 bits.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > UINT64_MAX) throw CapacityError("binomial coefficient overflows 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

/// Number of monomials with i + k*(j_1+..+j_s) <= D, by summing over the
/// Y-degree J: C(J+s-1, s-1) Y-vectors, each with D-kJ+1 choices of i.
inline std::uint64_t count_weighted_monomials(std::uint32_t k, std::uint32_t D, std::size_t s) {
  if (k < 1 || s < 1) throw DomainError("monomial count needs k >= 1 and s >= 1");
  std::uint64_t total = 0;
  for (std::uint64_t J = 0; J * k <= D; ++J) total += binomial(J + s - 1, s - 1) * (D - J * k + 1);
  return total;
}

/// Closed form for s = 2: k*C(a+2,3) + (D-ak+1)*C(a+2,2) with a = floor(D/k).
inline std::uint64_t trivariate_monomial_count(std::uint32_t k, std::uint32_t D) {
  const std::uint64_t a = D / k;
  return k * binomial(a + 2, 3) + (D - a * k + 1) * binomial(a + 2, 2);
}

/// Pascal's triangle reduced mod q, rows 0..max_n.
class BinomialTable {
 public:
  BinomialTable(const PrimeField& field, std::uint32_t max_n) : q_(field.q()), n_(max_n + 1) {
    table_.assign(static_cast<std::size_t>(n_) * n_, 0);
    for (std::uint32_t n = 0; n < n_; ++n) {
      at(n, 0) = 1 % q_;
      for (std::uint32_t r = 1; r <= n; ++r) {
        std::uint32_t v = at(n - 1, r - 1) + (r < n ? at(n - 1, r) : 0);
        at(n, r) = v >= q_ ? v - q_ : v;
      }
    }
  }

  std::uint32_t max_n() const { return n_ - 1; }
  /// C(n, r) mod q, zero for r > n.
  FieldElem operator()(std::uint32_t n, std::uint32_t r) const {
    if (n >= n_) throw DomainError("binomial table too small");
    return {r > n ? 0u : table_[static_cast<std::size_t>(n) * n_ + r]};
  }

 private:
  std::uint32_t& at(std::uint32_t n, std::uint32_t r) { return table_[static_cast<std::size_t>(n) * n_ + r]; }

  std::uint32_t q_;
  std::uint32_t n_;
  std::vector<std::uint32_t> table_;
};

/// Sparse polynomial over F_q in X, Y_1, ..., Y_s. Stored coefficients are
/// always nonzero.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, FieldElem>;

  MultiPoly(const PrimeField& field, std::size_t s) : field_(&field), s_(s) {
    if (s < 1) throw DomainError("a multivariate polynomial needs at least one Y variable");
  }

  const PrimeField& field() const { return *field_; }
  std::size_t num_y() const { return s_; }
  const Terms& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * m to the polynomial.
  void add_term(const Monomial& m, FieldElem c) {
    if (m.exps.size() != s_ + 1) throw DomainError("monomial arity does not match polynomial");
    if (field_->is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second = field_->add(it->second, c);
    if (field_->is_zero(it->second)) terms_.erase(it);
  }

  FieldElem coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? field_->zero() : it->second;
  }

  /// -1 for the zero polynomial.
  std::int64_t weighted_degree(std::uint32_t k) const {
    std::int64_t d = -1;
    for (const auto& [m, c] : terms_) d = std::max<std::int64_t>(d, static_cast<std::int64_t>(m.weighted_degree(k)));
    return d;
  }
  std::uint32_t max_total_degree() const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
  }
  std::uint32_t max_y_degree() const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.y_degree());
    return d;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    assert(a.s_ == b.s_);
    MultiPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    assert(a.s_ == b.s_);
    MultiPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, a.field_->neg(c));
    return r;
  }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.s_ == b.s_ && a.terms_ == b.terms_; }

  /// Value at (x, y_1, ..., y_s).
  FieldElem evaluate(std::span<const FieldElem> point) const {
    if (point.size() != s_ + 1) throw DomainError("point dimension does not match polynomial");
    const PrimeField& f = *field_;
    FieldElem acc = f.zero();
    for (const auto& [m, c] : terms_) {
      FieldElem v = c;
      for (std::size_t t = 0; t <= s_; ++t) v = f.mul(v, f.pow(point[t], m.exps[t]));
      acc = f.add(acc, v);
    }
    return acc;
  }

  /// Q(X, g_1(X), ..., g_s(X)) as a univariate polynomial.
  UniPoly<PrimeField> compose(std::span<const UniPoly<PrimeField>> ys) const {
    if (ys.size() != s_) throw DomainError("substitution count does not match polynomial");
    const PrimeField& f = *field_;
    using P = UniPoly<PrimeField>;
    std::vector<std::vector<P>> powers(s_);
    std::vector<std::uint32_t> max_exp(s_, 0);
    std::uint32_t max_x = 0;
    for (const auto& [m, c] : terms_) {
      max_x = std::max(max_x, m.exps[0]);
      for (std::size_t t = 0; t < s_; ++t) max_exp[t] = std::max(max_exp[t], m.exps[t + 1]);
    }
    for (std::size_t t = 0; t < s_; ++t) {
      powers[t].push_back(P::constant(f, f.one()));
      for (std::uint32_t e = 1; e <= max_exp[t]; ++e) powers[t].push_back(powers[t].back() * ys[t]);
    }
    std::vector<FieldElem> acc(1, f.zero());
    for (const auto& [m, c] : terms_) {
      P term = P::monomial(f, c, m.exps[0]);
      for (std::size_t t = 0; t < s_; ++t)
        if (m.exps[t + 1] > 0) term = term * powers[t][m.exps[t + 1]];
      if (acc.size() < term.size()) acc.resize(term.size(), f.zero());
      for (std::size_t i = 0; i < term.size(); ++i) f.add_assign(acc[i], term.coeffs()[i]);
    }
    return P(f, std::move(acc));
  }

 private:
  const PrimeField* field_;
  std::size_t s_;
  Terms terms_;
};

/// Coefficient of X^b_0 Y_1^b_1 ... in Q(X + p_0, Y_1 + p_1, ...):
/// sum over terms c_e of prod_t C(e_t, b_t) p_t^(e_t - b_t).
inline FieldElem hasse_coefficient(const MultiPoly& Q, std::span<const FieldElem> point, const Monomial& target,
                                   const BinomialTable& binom) {
  const std::size_t dims = Q.num_y() + 1;
  if (point.size() != dims || target.exps.size() != dims)
    throw DomainError("point or target dimension does not match polynomial");
  const PrimeField& f = Q.field();
  FieldElem acc = f.zero();
  for (const auto& [m, c] : Q.terms()) {
    FieldElem v = c;
    for (std::size_t t = 0; t < dims && !f.is_zero(v); ++t) {
      const auto e = m.exps[t], b = target.exps[t];
      if (e < b) {
        v = f.zero();
        break;
      }
      v = f.mul(v, f.mul(binom(e, b), f.pow(point[t], e - b)));
    }
    acc = f.add(acc, v);
  }
  return acc;
}

inline FieldElem hasse_coefficient(const MultiPoly& Q, std::span<const FieldElem> point, const Monomial& target) {
  std::uint32_t max_n = 0;
  for (const auto& [m, c] : Q.terms())
    for (auto e : m.exps) max_n = std::max(max_n, e);
  return hasse_coefficient(Q, point, target, BinomialTable(Q.field(), max_n));
}

/// All exponent vectors of length `dims` with total degree < r.
inline std::vector<Monomial> monomials_below_total_degree(std::size_t dims, std::uint32_t r) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> e(dims, 0);
  std::function<void(std::size_t, std::uint32_t)> walk = [&](std::size_t t, std::uint32_t left) {
    if (t == dims) {
      out.push_back(Monomial{e});
      return;
    }
    for (std::uint32_t v = 0; v < left; ++v) {
      e[t] = v;
      walk(t + 1, left - v);
    }
    e[t] = 0;
  };
  if (r > 0) walk(0, r);
  return out;
}

}  // namespace frs

#endif  // FRS_MULTIPOLY_HPP
