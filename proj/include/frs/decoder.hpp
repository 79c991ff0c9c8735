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

#ifndef FRS_DECODER_HPP
#define FRS_DECODER_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frs/code.hpp"
#include "frs/error.hpp"
#include "frs/interp.hpp"
#include "frs/rootfind.hpp"

namespace frs {

/// Smallest integer t with t > D / ((m-s+1) r).
inline std::uint32_t agreement_threshold(std::uint32_t D, std::uint32_t m, std::uint32_t s, std::uint32_t r) {
  if (s < 1 || s > m) throw DomainError("agreement threshold needs 1 <= s <= m");
  if (r < 1) throw DomainError("agreement threshold needs r >= 1");
  return D / ((m - s + 1) * r) + 1;
}

/// Largest error count e with n0 - e(m+1) > D/r for the shifted variant, where
/// each wrong folded symbol spoils at most m+1 consecutive pairs; nullopt when
/// even e = 0 fails.
inline std::optional<std::uint32_t> shifted_max_errors(std::uint32_t D, std::uint32_t r, std::uint32_t n0,
                                                       std::uint32_t m) {
  const std::uint32_t needed = D / r + 1;
  if (n0 < needed) return std::nullopt;
  return (n0 - needed) / (m + 1);
}

/// Sufficient agreement in closed form:
/// ((N k/(m-s+1))^s prod_{j=1..s}(1+j/r))^(1/(s+1)) + 2.
inline double closed_form_agreement(std::uint32_t N, std::uint32_t k, std::uint32_t m, std::uint32_t s,
                                    std::uint32_t r) {
  double prod = 1.0;
  for (std::uint32_t j = 1; j <= s; ++j) prod *= 1.0 + static_cast<double>(j) / r;
  const double base = static_cast<double>(N) * k / (m - s + 1);
  return std::pow(std::pow(base, s) * prod, 1.0 / (s + 1)) + 2.0;
}

/// Error count guaranteed by the trivariate decoder (s = 2, m >= 2):
/// N - floor(N ((mk/((m-1)n))^2 (1+1/r)(1+2/r))^(1/3)) - 2.
inline long trivariate_error_bound(std::uint32_t N, std::uint32_t m, std::uint32_t k, std::uint32_t n,
                                   std::uint32_t r) {
  if (m < 2) throw DomainError("trivariate bound needs m >= 2");
  const double ratio = static_cast<double>(m) * k / ((m - 1.0) * n);
  const double root = std::cbrt(ratio * ratio * (1.0 + 1.0 / r) * (1.0 + 2.0 / r));
  return static_cast<long>(N) - static_cast<long>(std::floor(N * root)) - 2;
}

/// The shifted variant decodes any error count strictly below
/// floor((m/(m+1)) N (1 - ((k/n)^2 (1+1/r)(1+2/r))^(1/3))) - 1.
inline long shifted_error_bound(std::uint32_t N, std::uint32_t m, std::uint32_t k, std::uint32_t n,
                                std::uint32_t r) {
  const double ratio = static_cast<double>(k) / n;
  const double root = std::cbrt(ratio * ratio * (1.0 + 1.0 / r) * (1.0 + 2.0 / r));
  return static_cast<long>(std::floor(static_cast<double>(m) / (m + 1) * N * (1.0 - root))) - 1;
}

/// What the decoder guarantees for a parameter set before seeing any input.
struct DecodingGuarantee {
  std::uint32_t n0 = 0;  ///< interpolation points
  std::uint32_t D = 0;
  std::uint32_t t = 0;   ///< folded agreement that guarantees listing
  long max_errors = -1;  ///< N - t, or -1 when nothing is guaranteed
};

/// Folded agreement threshold for a decoder run with degree bound D on n0
/// points.
inline std::uint32_t decoder_threshold(const FRSParams& params, std::uint32_t D, std::uint32_t n0) {
  if (params.variant() == Variant::shifted) {
    const auto e = shifted_max_errors(D, params.r(), n0, params.m());
    return e ? params.N() - std::min(*e, params.N()) : params.N() + 1;
  }
  return agreement_threshold(D, params.m(), params.s(), params.r());
}

inline DecodingGuarantee decoding_guarantee(const FRSParams& params) {
  DecodingGuarantee g;
  g.n0 = static_cast<std::uint32_t>(interpolation_indices(params).size());
  g.D = choose_D(params.k(), g.n0, params.r(), params.s());
  g.t = decoder_threshold(params, g.D, g.n0);
  g.max_errors = static_cast<long>(params.N()) - static_cast<long>(g.t);
  if (g.max_errors < 0) g.max_errors = -1;
  return g;
}

struct DecodeStats {
  std::uint32_t D = 0;
  std::uint32_t D_formula = 0;
  std::size_t points = 0;
  std::size_t equations = 0;
  std::size_t unknowns = 0;
  std::size_t rank = 0;
  std::uint32_t E_power = 0;
  long R_degree = -1;
  std::size_t roots = 0;
  std::size_t candidates = 0;  ///< before agreement pruning
  std::size_t listed = 0;      ///< after agreement pruning
  RootStrategy strategy = RootStrategy::automatic;
  double closed_form_t = 0;
};

struct DecodeResult {
  std::vector<Message> messages;
  /// Agreement threshold: every message with agreement >= t is listed and
  /// nothing below it.
  std::uint32_t t = 0;
  DecodeStats stats;
};

namespace detail {

struct Interpolated {
  MultiPoly Q0;
  CandidateList candidates;
  DecodeStats stats;
};

inline Interpolated interpolate_and_solve(const FRSParams& params, std::vector<InterpolationPoint> points,
                                          const CandidateOptions& options) {
  const std::uint64_t n0 = std::max<std::size_t>(points.size(), 1);
  DecodeStats stats;
  stats.points = points.size();
  stats.D_formula = degree_bound_formula(params.k(), n0, params.r(), params.s());
  stats.D = choose_D(params.k(), n0, params.r(), params.s());
  check_y_degree(params.k(), stats.D, params.q());

  InterpolationProblem problem{std::move(points), params.r(), params.k(), params.s(), stats.D};
  InterpolationStats istats;
  MultiPoly Q = interpolate(params.field(), problem, &istats);
  stats.equations = istats.equations;
  stats.unknowns = istats.unknowns;
  stats.rank = istats.rank;

  auto [Q0, b] = strip_E_power(Q, params.ext_field().modulus());
  stats.E_power = b;
  CandidateList cands = candidates_from_Q(Q0, params, options);
  stats.R_degree = cands.R_degree;
  stats.roots = cands.roots;
  stats.candidates = cands.candidates.size();
  stats.strategy = cands.strategy;
  return {std::move(Q0), std::move(cands), stats};
}

}  // namespace detail

/// List decoding: unfold, build interpolation points, interpolate, strip E,
/// find candidate polynomials, keep those agreeing with `received` on at
/// least t folded positions.
inline DecodeResult list_decode(const FRSParams& params, const ReceivedWord& received,
                                const CandidateOptions& options = {}) {
  const auto y = unfold(params, received);
  auto points = interpolation_points(params, y);
  const std::uint32_t n0 = static_cast<std::uint32_t>(points.size());
  auto solved = detail::interpolate_and_solve(params, std::move(points), options);

  DecodeResult result;
  result.stats = solved.stats;
  result.t = decoder_threshold(params, result.stats.D, n0);
  result.stats.closed_form_t = closed_form_agreement(params.N(), params.k(), params.m(), params.s(), params.r());
  for (auto& g : solved.candidates.candidates)
    if (agreement(encode(params, g), received) >= result.t) result.messages.push_back(std::move(g));
  result.stats.listed = result.messages.size();
  return result;
}

/// Interpolation points for list recovery: every symbol of every set
/// contributes its m-s+1 in-block windows; duplicates are merged.
inline std::vector<InterpolationPoint> recovery_points(const FRSParams& params, const RecoverySets& sets) {
  if (params.variant() != Variant::standard) throw ParameterError("list recovery supports the standard variant only");
  if (sets.sets.size() != params.N())
    throw DomainError("expected " + std::to_string(params.N()) + " recovery sets, got " +
                      std::to_string(sets.sets.size()));
  std::vector<InterpolationPoint> pts;
  const std::uint32_t m = params.m(), s = params.s();
  for (std::uint32_t j = 0; j < params.N(); ++j) {
    for (const auto& sym : sets.sets[j]) {
      if (sym.size() != m) throw DomainError("recovery symbol width does not match m");
      for (auto x : sym)
        if (!params.field().contains(x)) throw DomainError("recovery symbol entry out of range");
      for (std::uint32_t l = 0; l + s <= m; ++l) {
        InterpolationPoint p;
        p.push_back(params.eval_point(j * m + l));
        p.insert(p.end(), sym.begin() + l, sym.begin() + l + s);
        pts.push_back(std::move(p));
      }
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

/// List recovery: all messages whose codeword symbol lies in S_j for at
/// least t positions j. `max_set_size`, when given, is enforced.
inline DecodeResult list_recover(const FRSParams& params, const RecoverySets& sets,
                                 std::optional<std::size_t> max_set_size = std::nullopt,
                                 const CandidateOptions& options = {}) {
  if (max_set_size && sets.max_set_size() > *max_set_size)
    throw DomainError("a recovery set exceeds the size bound l=" + std::to_string(*max_set_size));
  auto points = recovery_points(params, sets);
  auto solved = detail::interpolate_and_solve(params, std::move(points), options);

  DecodeResult result;
  result.stats = solved.stats;
  result.t = agreement_threshold(result.stats.D, params.m(), params.s(), params.r());
  result.stats.closed_form_t = closed_form_agreement(params.N(), params.k(), params.m(), params.s(), params.r());
  for (auto& g : solved.candidates.candidates)
    if (set_agreement(encode(params, g), sets) >= result.t) result.messages.push_back(std::move(g));
  result.stats.listed = result.messages.size();
  return result;
}

/// Right-hand side of the list-recovery agreement condition:
/// ((k/(m-s+1))^s (n l / m) prod_{j=1..s}(1+j/r))^(1/(s+1)) + 2.
inline double list_recovery_agreement_bound(std::uint32_t n, std::uint32_t m, std::uint32_t k, std::uint32_t s,
                                            std::uint32_t r, std::uint32_t l) {
  double prod = 1.0;
  for (std::uint32_t j = 1; j <= s; ++j) prod *= 1.0 + static_cast<double>(j) / r;
  const double ratio = static_cast<double>(k) / (m - s + 1);
  return std::pow(std::pow(ratio, s) * (static_cast<double>(n) * l / m) * prod, 1.0 / (s + 1)) + 2.0;
}

/// Decoding radii (fractions of errors) at rate R.
struct BoundsRow {
  double R = 0;
  double rho_gs = 0;     ///< 1 - sqrt(R)
  double rho_a = 0;      ///< 1 - (mR/(m-1))^(2/3)
  double rho_b = 0;      ///< m/(m+1) (1 - R^(2/3))
  double rho_max = 0;    ///< max(rho_a, rho_b)
  double rho_svar = 0;   ///< 1 - ((mR/(m-s+1))^s prod(1+j/r))^(1/(s+1))
  double limit_23 = 0;   ///< 1 - R^(2/3)
  double capacity = 0;   ///< 1 - R
  std::vector<std::string> vacuous;  ///< columns clamped to 0 (or undefined)
};

inline BoundsRow decoding_bounds(double R, std::uint32_t m, std::uint32_t s, std::uint32_t r) {
  if (!(R > 0.0 && R < 1.0)) throw DomainError("rate must lie strictly between 0 and 1");
  if (m < 1 || s < 1 || s > m || r < 1) throw DomainError("bounds need 1 <= s <= m and r >= 1");
  BoundsRow row;
  row.R = R;
  auto clamp = [&row](double v, const char* name) {
    if (std::isnan(v) || v < 0.0) {
      row.vacuous.emplace_back(name);
      return 0.0;
    }
    return v;
  };
  const double r23 = std::cbrt(R * R);
  row.rho_gs = clamp(1.0 - std::sqrt(R), "rho_gs");
  if (m >= 2) {
    const double x = m * R / (m - 1.0);
    row.rho_a = clamp(1.0 - std::cbrt(x * x), "rho_a");
  } else {
    row.vacuous.emplace_back("rho_a");
  }
  row.rho_b = clamp(static_cast<double>(m) / (m + 1.0) * (1.0 - r23), "rho_b");
  row.rho_max = std::max(row.rho_a, row.rho_b);
  double prod = 1.0;
  for (std::uint32_t j = 1; j <= s; ++j) prod *= 1.0 + static_cast<double>(j) / r;
  const double base = m * R / (m - s + 1.0);
  row.rho_svar = clamp(1.0 - std::pow(std::pow(base, s) * prod, 1.0 / (s + 1)), "rho_svar");
  row.limit_23 = clamp(1.0 - r23, "limit_23");
  row.capacity = 1.0 - R;
  return row;
}

/// Parameters reaching radius 1 - R - eps.
struct SuggestedParams {
  std::uint32_t s = 1;
  double delta = 0;
  std::uint32_t m = 1;
  std::uint32_t r = 1;
  double radius = 0;  ///< 1 - (1+delta) R^(s/(s+1))
  double target = 0;  ///< 1 - R - eps
};

/// s = ceil(log(1/R)/log(1+eps)), delta = eps(1-R)/(R(1+eps)),
/// r = ceil(3s/delta), m = ceil((s-1)(3+delta)/delta) (at least s).
inline SuggestedParams suggest_params(double R, double eps) {
  if (!(R > 0.0 && R < 1.0)) throw DomainError("rate must lie strictly between 0 and 1");
  if (!(eps > 0.0)) throw DomainError("eps must be positive");
  // Values within 1e-9 of an integer are treated as that integer.
  auto ceil_tol = [](double x) { return static_cast<std::uint32_t>(std::ceil(x - 1e-9)); };
  SuggestedParams p;
  p.s = std::max<std::uint32_t>(1, ceil_tol(std::log(1.0 / R) / std::log1p(eps)));
  p.delta = eps * (1.0 - R) / (R * (1.0 + eps));
  p.r = std::max<std::uint32_t>(1, ceil_tol(3.0 * p.s / p.delta));
  p.m = std::max(p.s, ceil_tol((p.s - 1.0) * (3.0 + p.delta) / p.delta));
  p.radius = 1.0 - (1.0 + p.delta) * std::pow(R, static_cast<double>(p.s) / (p.s + 1));
  p.target = 1.0 - R - eps;
  return p;
}

}  // namespace frs

#endif  // FRS_DECODER_HPP
