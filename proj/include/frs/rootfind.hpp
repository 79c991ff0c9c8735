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

#ifndef FRS_ROOTFIND_HPP
#define FRS_ROOTFIND_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "frs/code.hpp"
#include "frs/error.hpp"
#include "frs/ext_field.hpp"
#include "frs/multipoly.hpp"
#include "frs/roots.hpp"
#include "frs/unipoly.hpp"

namespace frs {

/// Q = E^b * Q0 with E not dividing Q0, where Q is viewed as a polynomial in
/// the Y variables with coefficients in F_q[X].
inline std::pair<MultiPoly, std::uint32_t> strip_E_power(const MultiPoly& Q, const UniPoly<PrimeField>& E) {
  if (Q.is_zero()) throw DomainError("cannot strip factors from the zero polynomial");
  if (E.degree() < 1) throw DomainError("E must have positive degree");
  const PrimeField& f = Q.field();
  using P = UniPoly<PrimeField>;
  // Y-exponents -> coefficient polynomial in X
  std::map<std::vector<std::uint32_t>, P> groups;
  for (const auto& [m, c] : Q.terms()) {
    std::vector<std::uint32_t> ys(m.exps.begin() + 1, m.exps.end());
    auto it = groups.try_emplace(std::move(ys), P(f)).first;
    it->second = it->second + P::monomial(f, c, m.x_degree());
  }
  std::uint32_t b = 0;
  for (;;) {
    std::map<std::vector<std::uint32_t>, P> divided;
    bool divisible = true;
    for (const auto& [ys, poly] : groups) {
      auto [quot, rem] = divmod(poly, E);
      if (!rem.is_zero()) {
        divisible = false;
        break;
      }
      divided.emplace(ys, std::move(quot));
    }
    if (!divisible) break;
    groups = std::move(divided);
    ++b;
  }
  MultiPoly Q0(f, Q.num_y());
  for (const auto& [ys, poly] : groups) {
    Monomial m{std::vector<std::uint32_t>(ys.size() + 1)};
    std::copy(ys.begin(), ys.end(), m.exps.begin() + 1);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      m.exps[0] = static_cast<std::uint32_t>(i);
      Q0.add_term(m, poly.coeffs()[i]);
    }
  }
  return {std::move(Q0), b};
}

/// Q0(X, g(X), g(gamma X), ..., g(gamma^(s-1) X)) as a polynomial in X.
inline UniPoly<PrimeField> substitute_shifts(const MultiPoly& Q0, const UniPoly<PrimeField>& g, FieldElem gamma) {
  const PrimeField& f = Q0.field();
  std::vector<UniPoly<PrimeField>> ys;
  FieldElem c = f.one();
  for (std::size_t t = 0; t < Q0.num_y(); ++t) {
    ys.push_back(scale_compose(g, c));
    c = f.mul(c, gamma);
  }
  return Q0.compose(ys);
}

/// True iff Q0(X, g(X), g(gamma X), ...) is identically zero.
inline bool satisfies_identity(const MultiPoly& Q0, const UniPoly<PrimeField>& g, FieldElem gamma) {
  return substitute_shifts(Q0, g, gamma).is_zero();
}

/// Coefficients of Q0 reduced modulo E: a polynomial in Y_1..Y_s over the
/// extension field, keyed by Y-exponent vector. Zero entries are dropped.
inline std::map<std::vector<std::uint32_t>, ExtFieldElem> reduce_mod_E(const MultiPoly& Q0, const ExtField& ext) {
  using P = UniPoly<PrimeField>;
  const PrimeField& f = Q0.field();
  std::map<std::vector<std::uint32_t>, P> groups;
  for (const auto& [m, c] : Q0.terms()) {
    std::vector<std::uint32_t> ys(m.exps.begin() + 1, m.exps.end());
    auto it = groups.try_emplace(std::move(ys), P(f)).first;
    it->second = it->second + P::monomial(f, c, m.x_degree());
  }
  std::map<std::vector<std::uint32_t>, ExtFieldElem> T;
  for (const auto& [ys, poly] : groups) {
    auto e = ext.from_poly(poly);
    if (!ext.is_zero(e)) T.emplace(ys, std::move(e));
  }
  return T;
}

/// R(Y) = T(Y, Y^q, ..., Y^(q^(s-1))). Distinct Y-exponent vectors land on
/// distinct powers of Y as long as every exponent is below q.
inline UniPoly<ExtField> substitute_frobenius_powers(const std::map<std::vector<std::uint32_t>, ExtFieldElem>& T,
                                                     const ExtField& ext) {
  const std::uint64_t q = ext.characteristic();
  std::uint64_t max_degree = 0;
  std::vector<std::pair<std::uint64_t, const ExtFieldElem*>> placed;
  for (const auto& [ys, c] : T) {
    std::uint64_t deg = 0, weight = 1;
    for (auto j : ys) {
      if (j >= q) throw DomainError("Y-degree must stay below q for the substitution to be injective");
      deg += j * weight;
      weight *= q;
    }
    max_degree = std::max(max_degree, deg);
    placed.emplace_back(deg, &c);
  }
  if (placed.empty()) return UniPoly<ExtField>(ext);
  std::vector<ExtFieldElem> coeffs(max_degree + 1, ext.zero());
  for (const auto& [deg, c] : placed) ext.add_assign(coeffs[deg], *c);
  return UniPoly<ExtField>(ext, std::move(coeffs));
}

enum class RootStrategy {
  /// Pick by estimated cost.
  automatic,
  /// Roots of R over the extension field.
  extension_field,
  /// Test the identity for every polynomial of degree <= k.
  exhaustive,
};

inline std::string to_string(RootStrategy s) {
  switch (s) {
    case RootStrategy::automatic: return "automatic";
    case RootStrategy::extension_field: return "extension_field";
    case RootStrategy::exhaustive: return "exhaustive";
  }
  return "?";
}

struct CandidateOptions {
  std::uint64_t seed = 1;
  std::size_t max_candidates = std::size_t{1} << 16;
  RootStrategy strategy = RootStrategy::automatic;
  /// Estimated base-field multiply-adds above which the automatic strategy
  /// prefers the exhaustive scan (when the scan is small enough).
  double extension_work_limit = 4e9;
  /// Largest message space the exhaustive scan accepts.
  std::uint64_t exhaustive_limit = std::uint64_t{1} << 20;
};

struct CandidateList {
  std::vector<Message> candidates;  ///< sorted by coefficient vector, no duplicates
  RootStrategy strategy = RootStrategy::automatic;
  long R_degree = -1;  ///< degree of R when it was built
  std::size_t roots = 0;  ///< roots of R (extension path) or identity hits (scan)
};

namespace detail {

inline void sort_messages(std::vector<Message>& v) {
  std::sort(v.begin(), v.end(), [](const Message& a, const Message& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.coeffs().rbegin(), a.coeffs().rend(), b.coeffs().rbegin(),
                                        b.coeffs().rend());
  });
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// q^e, saturating at limit+1.
inline std::uint64_t bounded_power(std::uint64_t q, std::uint64_t e, std::uint64_t limit) {
  std::uint64_t v = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (v > limit / q) return limit + 1;
    v *= q;
  }
  return v;
}

/// Flat evaluator for a MultiPoly at many points.
class PointEvaluator {
 public:
  explicit PointEvaluator(const MultiPoly& Q) : field_(&Q.field()), dims_(Q.num_y() + 1) {
    for (const auto& [m, c] : Q.terms()) {
      coeffs_.push_back(c.value);
      for (auto e : m.exps) {
        exps_.push_back(e);
        max_exp_ = std::max(max_exp_, e);
      }
    }
    powers_.resize(dims_ * (max_exp_ + 1));
  }

  /// point has dims_ entries
  std::uint32_t operator()(const std::uint32_t* point) {
    const std::uint64_t q = field_->q();
    for (std::size_t t = 0; t < dims_; ++t) {
      std::uint32_t* row = powers_.data() + t * (max_exp_ + 1);
      row[0] = 1;
      for (std::uint32_t e = 1; e <= max_exp_; ++e) row[e] = static_cast<std::uint32_t>(std::uint64_t{row[e - 1]} * point[t] % q);
    }
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      std::uint64_t v = coeffs_[i];
      const std::uint32_t* e = exps_.data() + i * dims_;
      for (std::size_t t = 0; t < dims_; ++t) v = v * powers_[t * (max_exp_ + 1) + e[t]] % q;
      acc += v;
    }
    return static_cast<std::uint32_t>(acc % q);
  }

 private:
  const PrimeField* field_;
  std::size_t dims_;
  std::uint32_t max_exp_ = 0;
  std::vector<std::uint32_t> coeffs_;
  std::vector<std::uint32_t> exps_;
  std::vector<std::uint32_t> powers_;
};

}  // namespace detail

/// Every g of degree <= k with Q0(X, g(X), ..., g(gamma^(s-1) X)) = 0, by
/// enumerating all q^(k+1) polynomials.
///
/// Each g is first tested at (gamma^i, g(gamma^i), ..., g(gamma^(i+s-1)));
/// survivors are confirmed symbolically.
inline std::vector<Message> exhaustive_candidates(const MultiPoly& Q0, const FRSParams& params,
                                                  std::uint64_t limit = std::uint64_t{1} << 20) {
  const std::uint32_t q = params.q(), k = params.k(), s = static_cast<std::uint32_t>(Q0.num_y());
  const std::uint64_t total = detail::bounded_power(q, k + 1, limit);
  if (total > limit) throw CapacityError("message space too large for exhaustive search");
  detail::PointEvaluator eval(Q0);
  const std::uint32_t order = q - 1;
  std::vector<std::uint32_t> values(order), point(s + 1), digits(k + 1, 0);
  std::vector<Message> out;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    // g(gamma^i) for every i by Horner.
    for (std::uint32_t i = 0; i < order; ++i) {
      const std::uint64_t x = params.eval_point(i).value;
      std::uint64_t acc = 0;
      for (std::uint32_t d = k + 1; d-- > 0;) acc = (acc * x + digits[d]) % q;
      values[i] = static_cast<std::uint32_t>(acc);
    }
    bool vanishes = true;
    for (std::uint32_t i = 0; i < order && vanishes; ++i) {
      point[0] = params.eval_point(i).value;
      for (std::uint32_t t = 0; t < s; ++t) point[t + 1] = values[(i + t) % order];
      vanishes = eval(point.data()) == 0;
    }
    if (vanishes) {
      Message g = make_message(params, digits);
      if (satisfies_identity(Q0, g, params.gamma())) out.push_back(std::move(g));
    }
    for (std::uint32_t d = 0; d <= k; ++d) {
      if (++digits[d] < q) break;
      digits[d] = 0;
    }
  }
  detail::sort_messages(out);
  return out;
}

/// Estimated base-field multiply-adds for extension-field root finding on a
/// degree-d polynomial: building the Frobenius matrix and applying it q-1
/// times, each extension product costing (q-1)^2.
inline double extension_root_work(std::uint32_t q, long degree) {
  const double d = static_cast<double>(std::max(degree, 1L));
  const double dim = q - 1;
  return (2.0 * q - 1) * d * d * dim * dim;
}

/// All g of degree <= k with Q0(X, g(X), g(gamma X), ...) = 0.
///
/// Extension route: reduce Q0 mod E to T over F_q[X]/(E), form
/// R(Y) = T(Y, Y^q, ..., Y^(q^(s-1))), find its roots, keep those of degree
/// <= k that satisfy the identity when substituted back over F_q. Requires
/// that E does not divide Q0.
inline CandidateList candidates_from_Q(const MultiPoly& Q0, const FRSParams& params,
                                       const CandidateOptions& options = {}) {
  if (Q0.num_y() != params.s()) throw DomainError("interpolation polynomial has the wrong number of Y variables");
  const ExtField& ext = params.ext_field();
  CandidateList result;

  const auto T = reduce_mod_E(Q0, ext);
  if (T.empty()) throw DomainError("E divides the polynomial; strip E first");
  const UniPoly<ExtField> R = substitute_frobenius_powers(T, ext);
  if (R.is_zero()) throw Error("internal error: R vanished although T is nonzero");
  result.R_degree = R.degree();

  RootStrategy strategy = options.strategy;
  if (strategy == RootStrategy::automatic) {
    const bool scan_ok = detail::bounded_power(params.q(), params.k() + 1, options.exhaustive_limit) <=
                         options.exhaustive_limit;
    strategy = scan_ok && extension_root_work(params.q(), R.degree()) > options.extension_work_limit
                   ? RootStrategy::exhaustive
                   : RootStrategy::extension_field;
  }
  result.strategy = strategy;

  if (strategy == RootStrategy::exhaustive) {
    result.candidates = exhaustive_candidates(Q0, params, options.exhaustive_limit);
    result.roots = result.candidates.size();
  } else {
    std::mt19937_64 rng(options.seed);
    const auto roots = roots_in_field(R, rng);
    result.roots = roots.size();
    if (roots.size() > options.max_candidates)
      throw CapacityError("root count " + std::to_string(roots.size()) + " exceeds the candidate cap");
    for (const auto& root : roots) {
      Message g = ext.to_poly(root);
      if (g.degree() > static_cast<int>(params.k())) continue;
      if (satisfies_identity(Q0, g, params.gamma())) result.candidates.push_back(std::move(g));
    }
    detail::sort_messages(result.candidates);
  }
  if (result.candidates.size() > options.max_candidates)
    throw CapacityError("candidate count exceeds the cap of " + std::to_string(options.max_candidates));
  return result;
}

}  // namespace frs

#endif  // FRS_ROOTFIND_HPP
