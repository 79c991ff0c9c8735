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

#ifndef FRS_INTERP_HPP
#define FRS_INTERP_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "frs/error.hpp"
#include "frs/multipoly.hpp"
#include "frs/prime_field.hpp"

namespace frs {

/// floor(value^(1/degree)) by binary search over integers.
inline std::uint64_t integer_root(unsigned __int128 value, std::uint32_t degree) {
  if (degree == 0) throw DomainError("root degree must be positive");
  auto pow_le = [&](std::uint64_t x) {
    unsigned __int128 acc = 1;
    for (std::uint32_t i = 0; i < degree; ++i) {
      if (x != 0 && acc > value / x) return false;
      acc *= x;
    }
    return acc <= value;
  };
  std::uint64_t lo = 0, hi = 1;
  while (pow_le(hi)) {
    lo = hi;
    if (hi >= (std::uint64_t{1} << 63)) {
      if (pow_le(UINT64_MAX)) return UINT64_MAX;
      hi = UINT64_MAX;
      break;
    }
    hi *= 2;
  }
  // invariant: lo^degree <= value < hi^degree
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    (pow_le(mid) ? lo : hi) = mid;
  }
  return lo;
}

/// Number of homogeneous conditions for a zero of multiplicity r in s+1
/// variables: C(r+s, s+1).
inline std::uint64_t conditions_per_point(std::uint32_t r, std::uint32_t s) { return binomial(r + s, s + 1); }

/// floor((k^s n0 r(r+1)...(r+s))^(1/(s+1))) + 1.
inline std::uint32_t degree_bound_formula(std::uint32_t k, std::uint64_t n0, std::uint32_t r, std::uint32_t s) {
  if (k < 1 || n0 < 1 || r < 1 || s < 1) throw DomainError("degree bound needs k, n0, r, s >= 1");
  constexpr unsigned __int128 kLimit = static_cast<unsigned __int128>(1) << 120;
  unsigned __int128 v = n0;
  auto times = [&](std::uint64_t x) {
    if (v > kLimit / x) throw CapacityError("degree bound computation overflows");
    v *= x;
  };
  for (std::uint32_t i = 0; i < s; ++i) times(k);
  for (std::uint32_t j = 0; j <= s; ++j) times(r + j);
  return static_cast<std::uint32_t>(integer_root(v, s + 1) + 1);
}

/// Smallest weighted-degree bound D with more monomials than interpolation
/// conditions, starting from the closed-form value and stepping down with the
/// exact monomial count.
inline std::uint32_t choose_D(std::uint32_t k, std::uint64_t n0, std::uint32_t r, std::uint32_t s) {
  std::uint32_t D = degree_bound_formula(k, n0, r, s);
  const std::uint64_t equations = n0 * conditions_per_point(r, s);
  while (D > 1 && count_weighted_monomials(k, D - 1, s) > equations) --D;
  return D;
}

struct InterpolationProblem {
  std::vector<std::vector<FieldElem>> points;  ///< each of length s+1
  std::uint32_t r = 1;
  std::uint32_t k = 1;
  std::uint32_t s = 1;
  std::uint32_t D = 1;
};

struct InterpolationStats {
  std::size_t equations = 0;
  std::size_t unknowns = 0;
  std::size_t rank = 0;
};

/// Throws ParameterError unless every monomial of weighted degree <= D has
/// degree < q in each Y variable, which root finding needs.
inline void check_y_degree(std::uint32_t k, std::uint32_t D, std::uint32_t q) {
  if (D / k >= q)
    throw ParameterError("Y-degree bound floor(D/k)=" + std::to_string(D / k) + " must be below q=" + std::to_string(q));
}

/// Dense matrix over F_q, row major.
class ModMatrix {
 public:
  ModMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  std::uint32_t* row(std::size_t i) { return a_.data() + i * cols_; }

 private:
  std::size_t rows_, cols_;
  std::vector<std::uint32_t> a_;
};

/// A nonzero kernel vector of `m`, or nullopt if the kernel is trivial.
///
/// Reduces to row echelon form with the first nonzero entry of each column
/// as pivot, then sets the first free variable to 1 and the others to 0.
inline std::optional<std::vector<FieldElem>> kernel_vector(const PrimeField& field, ModMatrix m,
                                                           std::size_t* rank_out = nullptr) {
  const std::uint64_t q = field.q();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  std::optional<std::size_t> first_free;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t p = rank;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) {
      first_free = c;
      break;  // columns after the first free one do not affect the chosen vector
    }
    if (p != rank)
      for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(rank, j));
    std::uint32_t* prow = m.row(rank);
    const std::uint64_t inv = field.inv({prow[c]}).value;
    for (std::size_t j = c; j < cols; ++j) prow[j] = static_cast<std::uint32_t>(prow[j] * inv % q);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || m(i, c) == 0) continue;
      std::uint32_t* row = m.row(i);
      const std::uint64_t factor = q - row[c];
      for (std::size_t j = c; j < cols; ++j)
        if (prow[j] != 0) row[j] = static_cast<std::uint32_t>((row[j] + factor * prow[j]) % q);
    }
    pivot_col.push_back(c);
    ++rank;
  }
  if (rank_out) *rank_out = rank;
  if (!first_free) return std::nullopt;
  std::vector<FieldElem> x(cols, field.zero());
  x[*first_free] = field.one();
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = field.neg({m(i, *first_free)});
  return x;
}

/// A nonzero Q of (1,k,..,k)-weighted degree <= D vanishing with
/// multiplicity r at every point of the problem.
///
/// One linear condition per (point, monomial of total degree < r): the Hasse
/// coefficient of that monomial at the point must be zero. One unknown per
/// monomial of weighted degree <= D, in GradedOrder.
inline MultiPoly interpolate(const PrimeField& field, const InterpolationProblem& problem,
                             InterpolationStats* stats = nullptr) {
  const std::size_t dims = problem.s + 1;
  for (const auto& p : problem.points)
    if (p.size() != dims) throw DomainError("interpolation point has wrong dimension");
  if (problem.r < 1 || problem.k < 1 || problem.s < 1) throw DomainError("interpolation needs r, k, s >= 1");
  check_y_degree(problem.k, problem.D, field.q());

  const auto columns = enumerate_weighted_monomials(problem.k, problem.D, problem.s);
  const auto shifts = monomials_below_total_degree(dims, problem.r);
  const std::size_t equations = problem.points.size() * shifts.size();
  if (columns.size() <= equations)
    throw ParameterError("interpolation is infeasible: " + std::to_string(columns.size()) + " unknowns for " +
                         std::to_string(equations) + " conditions");

  const BinomialTable binom(field, problem.D);
  ModMatrix matrix(equations, columns.size());
  std::size_t row = 0;
  std::vector<std::vector<FieldElem>> powers(dims);
  for (const auto& point : problem.points) {
    for (std::size_t t = 0; t < dims; ++t) {
      powers[t].assign(problem.D + 1, field.one());
      for (std::uint32_t e = 1; e <= problem.D; ++e) powers[t][e] = field.mul(powers[t][e - 1], point[t]);
    }
    for (const auto& b : shifts) {
      for (std::size_t c = 0; c < columns.size(); ++c) {
        const auto& e = columns[c].exps;
        FieldElem v = field.one();
        for (std::size_t t = 0; t < dims; ++t) {
          if (e[t] < b.exps[t]) {
            v = field.zero();
            break;
          }
          v = field.mul(v, field.mul(binom(e[t], b.exps[t]), powers[t][e[t] - b.exps[t]]));
        }
        matrix(row, c) = v.value;
      }
      ++row;
    }
  }

  std::size_t rank = 0;
  auto x = kernel_vector(field, std::move(matrix), &rank);
  // More unknowns than equations always leaves a nontrivial kernel.
  if (!x) throw Error("internal error: interpolation system has trivial kernel");
  MultiPoly Q(field, problem.s);
  for (std::size_t c = 0; c < columns.size(); ++c) Q.add_term(columns[c], (*x)[c]);
  if (stats) *stats = {equations, columns.size(), rank};
  return Q;
}

}  // namespace frs

#endif  // FRS_INTERP_HPP
