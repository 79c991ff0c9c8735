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

#ifndef FRS_ROOTS_HPP
#define FRS_ROOTS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "frs/error.hpp"
#include "frs/unipoly.hpp"

namespace frs {

/// The q-th power map P -> P^q on F[Y]/(g) for monic g, where q is the field
/// characteristic. It is semilinear: (sum a_i Y^i)^q = sum a_i^q Y^(qi), so
/// it is stored as the columns Y^(qi) mod g.
template <FiniteField F>
class FrobeniusMap {
 public:
  using Elem = typename F::Elem;
  using Poly = UniPoly<F>;

  explicit FrobeniusMap(const Poly& monic_modulus) : modulus_(monic_modulus) {
    const F& f = monic_modulus.field();
    if (monic_modulus.degree() < 1 || !(monic_modulus.leading() == f.one()))
      throw DomainError("Frobenius map needs a monic modulus of positive degree");
    const std::size_t d = static_cast<std::size_t>(monic_modulus.degree());
    const std::uint64_t q = f.characteristic();
    const auto& g = monic_modulus.coeffs();
    columns_.reserve(d);
    // Y^j mod g for j = 0, 1, ..., q(d-1), keeping every q-th.
    std::vector<Elem> cur(d, f.zero());
    cur[0] = f.one();
    columns_.push_back(cur);
    std::vector<Elem> next(d, f.zero());
    for (std::uint64_t j = 1; columns_.size() < d; ++j) {
      Elem top = cur[d - 1];
      next[0] = f.zero();
      for (std::size_t i = 1; i < d; ++i) next[i] = std::move(cur[i - 1]);
      if (!f.is_zero(top))
        for (std::size_t i = 0; i < d; ++i) f.sub_mul_assign(next[i], top, g[i]);
      std::swap(cur, next);
      if (j % q == 0) columns_.push_back(cur);
    }
  }

  std::size_t dimension() const { return columns_.size(); }

  /// p^q mod g for p already reduced mod g.
  Poly apply(const Poly& p) const {
    const F& f = modulus_.field();
    const std::size_t d = columns_.size();
    std::vector<Elem> out(d, f.zero());
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (f.is_zero(p.coeffs()[i])) continue;
      const Elem c = f.neg(f.frobenius(p.coeffs()[i]));
      const auto& col = columns_[i];
      for (std::size_t j = 0; j < d; ++j) f.sub_mul_assign(out[j], c, col[j]);
    }
    return Poly(f, std::move(out));
  }

 private:
  Poly modulus_;
  std::vector<std::vector<Elem>> columns_;
};

struct RootFindingOptions {
  /// Fields at most this large are searched by evaluating at every element.
  std::uint64_t exhaustive_limit = std::uint64_t{1} << 16;
};

namespace detail {

// Splits a monic product of distinct linear factors into its roots.
template <FiniteField F>
void split_linear_factors(const UniPoly<F>& h, std::mt19937_64& rng, std::vector<typename F::Elem>& roots) {
  using Poly = UniPoly<F>;
  const F& f = h.field();
  if (h.degree() < 1) return;
  if (h.degree() == 1) {
    roots.push_back(f.neg(h.coeffs()[0]));
    return;
  }
  const FrobeniusMap<F> frob(h);
  const std::uint64_t half = (f.characteristic() - 1) / 2;
  const std::uint32_t ext_degree = f.degree();
  const Poly one = Poly::constant(f, f.one());
  for (;;) {
    Poly probe(f, {f.random(rng), f.one()});
    // probe^((|F|-1)/2) = prod_j (probe^((q-1)/2))^(q^j), |F| = q^ext_degree.
    Poly u = powmod(probe, half, h);
    Poly w = u;
    for (std::uint32_t j = 1; j < ext_degree; ++j) {
      u = frob.apply(u);
      w = (w * u) % h;
    }
    Poly factor = gcd(h, w - one);
    if (factor.degree() > 0 && factor.degree() < h.degree()) {
      split_linear_factors(factor, rng, roots);
      split_linear_factors(h / factor, rng, roots);
      return;
    }
  }
}

}  // namespace detail

/// Roots of `poly` in its coefficient field, each reported once, sorted.
///
/// Small fields are searched exhaustively. Otherwise the split part
/// gcd(poly, Y^|F| - Y) is extracted with iterated Frobenius maps and
/// factored by random equal-degree splitting; `rng` makes the run
/// reproducible.
template <FiniteField F>
std::vector<typename F::Elem> roots_in_field(const UniPoly<F>& poly, std::mt19937_64& rng,
                                             const RootFindingOptions& options = {}) {
  using Poly = UniPoly<F>;
  using Elem = typename F::Elem;
  const F& f = poly.field();
  if (poly.is_zero()) throw DomainError("the zero polynomial has every element as a root");
  std::vector<Elem> roots;
  if (poly.degree() == 0) return roots;

  if (auto size = f.small_size(); size && *size <= options.exhaustive_limit) {
    for (std::uint64_t i = 0; i < *size; ++i) {
      Elem a = f.element(i);
      if (f.is_zero(evaluate(poly, a))) roots.push_back(std::move(a));
    }
    std::sort(roots.begin(), roots.end());
    return roots;
  }

  const Poly g = make_monic(poly);
  const Poly y = Poly::identity(f) % g;
  const FrobeniusMap<F> frob(g);
  Poly power = y;
  for (std::uint32_t j = 0; j < f.degree(); ++j) power = frob.apply(power);
  const Poly split_part = gcd(g, power - y);
  detail::split_linear_factors(split_part, rng, roots);
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace frs

#endif  // FRS_ROOTS_HPP
