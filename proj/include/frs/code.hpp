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

#ifndef FRS_CODE_HPP
#define FRS_CODE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "frs/error.hpp"
#include "frs/ext_field.hpp"
#include "frs/prime_field.hpp"
#include "frs/unipoly.hpp"

namespace frs {

/// Which unfolded indices feed the interpolation step.
enum class Variant {
  /// Windows that stay inside one folded block.
  standard,
  /// Every consecutive pair (y_i, y_(i+1)), i = 0..n-2; trivariate only.
  shifted,
};

inline std::string to_string(Variant v) { return v == Variant::standard ? "standard" : "shifted"; }

inline Variant parse_variant(const std::string& name) {
  if (name == "standard") return Variant::standard;
  if (name == "shifted") return Variant::shifted;
  throw ParameterError("unknown variant '" + name + "'");
}

struct BlockStructure {
  std::uint32_t n;  ///< unfolded length, a multiple of m
  std::uint32_t N;  ///< folded length n / m
};

/// n = m * floor((q-1)/m), N = n/m. The last (q-1) - n powers of gamma are
/// not used.
inline BlockStructure derive_block_structure(std::uint32_t q, std::uint32_t m) {
  if (m < 1 || m > q - 1)
    throw ParameterError("folding parameter m=" + std::to_string(m) + " must lie in [1, q-1]");
  const std::uint32_t n = m * ((q - 1) / m);
  return {n, n / m};
}

using Message = UniPoly<PrimeField>;
/// One folded symbol: an m-tuple over F_q.
using Symbol = std::vector<FieldElem>;

/// A length-N sequence of folded symbols (codeword or received word).
struct FoldedWord {
  std::vector<Symbol> symbols;
  friend bool operator==(const FoldedWord&, const FoldedWord&) = default;
};
using Codeword = FoldedWord;
using ReceivedWord = FoldedWord;

/// Candidate symbol sets for list recovery, one per folded position.
struct RecoverySets {
  std::vector<std::vector<Symbol>> sets;

  std::size_t max_set_size() const {
    std::size_t l = 0;
    for (const auto& s : sets) l = std::max(l, s.size());
    return l;
  }
};

/// Validated description of an m-folded Reed-Solomon code over F_q together
/// with the decoder parameters s (interpolation order) and r (multiplicity).
///
/// Messages are polynomials of degree at most k, so the rate is (k+1)/n.
/// Copies share the same field objects.
class FRSParams {
 public:
  FRSParams(std::uint32_t q, std::uint32_t m, std::uint32_t k, std::uint32_t s = 1, std::uint32_t r = 1,
            Variant variant = Variant::standard)
      : field_(std::make_shared<const PrimeField>(q)), m_(m), k_(k), s_(s), r_(r), variant_(variant) {
    const auto blocks = derive_block_structure(q, m);
    n_ = blocks.n;
    N_ = blocks.N;
    if (k < 1 || k >= n_)
      throw ParameterError("message degree bound k=" + std::to_string(k) + " must satisfy 1 <= k < n=" +
                           std::to_string(n_));
    if (s < 1 || s > m)
      throw ParameterError("interpolation order s=" + std::to_string(s) + " must satisfy 1 <= s <= m");
    if (r < 1) throw ParameterError("multiplicity r must be at least 1");
    if (variant == Variant::shifted && s != 2)
      throw ParameterError("the shifted variant is only defined for s = 2");
    gamma_ = find_primitive_element(*field_);
    ext_ = std::make_shared<const ExtField>(*field_, gamma_);
    powers_.resize(q - 1);
    FieldElem p = field_->one();
    for (auto& x : powers_) {
      x = p;
      p = field_->mul(p, gamma_);
    }
  }

  const PrimeField& field() const { return *field_; }
  const ExtField& ext_field() const { return *ext_; }
  std::uint32_t q() const { return field_->q(); }
  FieldElem gamma() const { return gamma_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t s() const { return s_; }
  std::uint32_t r() const { return r_; }
  Variant variant() const { return variant_; }
  std::uint32_t n() const { return n_; }
  std::uint32_t N() const { return N_; }
  double rate() const { return static_cast<double>(k_ + 1) / n_; }

  /// gamma^i for 0 <= i < q-1.
  FieldElem eval_point(std::uint32_t i) const { return powers_[i % powers_.size()]; }

  FRSParams with_decoder(std::uint32_t s, std::uint32_t r, Variant variant) const {
    FRSParams p = *this;
    if (s < 1 || s > m_) throw ParameterError("interpolation order s must satisfy 1 <= s <= m");
    if (r < 1) throw ParameterError("multiplicity r must be at least 1");
    if (variant == Variant::shifted && s != 2) throw ParameterError("the shifted variant is only defined for s = 2");
    p.s_ = s;
    p.r_ = r;
    p.variant_ = variant;
    return p;
  }

 private:
  std::shared_ptr<const PrimeField> field_;
  std::shared_ptr<const ExtField> ext_;
  FieldElem gamma_{};
  std::uint32_t m_, k_, s_, r_;
  Variant variant_;
  std::uint32_t n_ = 0, N_ = 0;
  std::vector<FieldElem> powers_;
};

/// Message from integer coefficients, low degree first.
inline Message make_message(const FRSParams& params, const std::vector<std::uint32_t>& coeffs) {
  std::vector<FieldElem> c;
  c.reserve(coeffs.size());
  for (auto v : coeffs) {
    if (v >= params.q()) throw DomainError("message coefficient out of range");
    c.push_back({v});
  }
  return Message(params.field(), std::move(c));
}

/// Symbol j is (f(gamma^(jm)), ..., f(gamma^(jm+m-1))).
inline Codeword encode(const FRSParams& params, const Message& msg) {
  if (msg.degree() > static_cast<int>(params.k()))
    throw DomainError("message degree " + std::to_string(msg.degree()) + " exceeds k=" + std::to_string(params.k()));
  Codeword cw;
  cw.symbols.resize(params.N());
  for (std::uint32_t j = 0; j < params.N(); ++j) {
    cw.symbols[j].reserve(params.m());
    for (std::uint32_t l = 0; l < params.m(); ++l) cw.symbols[j].push_back(evaluate(msg, params.eval_point(j * params.m() + l)));
  }
  return cw;
}

/// Throws unless `w` has N symbols of width m with entries in [0, q).
inline void check_shape(const FRSParams& params, const FoldedWord& w) {
  if (w.symbols.size() != params.N())
    throw DomainError("word has " + std::to_string(w.symbols.size()) + " symbols, expected " +
                      std::to_string(params.N()));
  for (const auto& sym : w.symbols) {
    if (sym.size() != params.m()) throw DomainError("symbol width does not match m");
    for (auto x : sym)
      if (!params.field().contains(x)) throw DomainError("symbol entry out of range");
  }
}

/// y_(jm+l) = z_(j,l).
inline std::vector<FieldElem> unfold(const FRSParams& params, const FoldedWord& w) {
  check_shape(params, w);
  std::vector<FieldElem> y;
  y.reserve(params.n());
  for (const auto& sym : w.symbols) y.insert(y.end(), sym.begin(), sym.end());
  return y;
}

inline FoldedWord fold(const FRSParams& params, const std::vector<FieldElem>& y) {
  if (y.size() != params.n()) throw DomainError("unfolded vector length does not match n");
  FoldedWord w;
  w.symbols.resize(params.N());
  for (std::uint32_t j = 0; j < params.N(); ++j)
    w.symbols[j].assign(y.begin() + j * params.m(), y.begin() + (j + 1) * params.m());
  return w;
}

/// Indices i whose window (y_i, ..., y_(i+s-1)) is used for interpolation.
///
/// standard: {0..n-1} minus {jm+m-s+1, ..., jm+m-1} for every block j, so
/// every window stays inside one block; shifted: {0, ..., n-2}.
inline std::vector<std::uint32_t> interpolation_indices(const FRSParams& params) {
  std::vector<std::uint32_t> idx;
  if (params.variant() == Variant::shifted) {
    if (params.s() != 2) throw ParameterError("the shifted variant is only defined for s = 2");
    for (std::uint32_t i = 0; i + 1 < params.n(); ++i) idx.push_back(i);
    return idx;
  }
  const std::uint32_t per_block = params.m() - params.s() + 1;
  for (std::uint32_t j = 0; j < params.N(); ++j)
    for (std::uint32_t l = 0; l < per_block; ++l) idx.push_back(j * params.m() + l);
  return idx;
}

/// A point (gamma^i, y_i, ..., y_(i+s-1)) in F_q^(s+1).
using InterpolationPoint = std::vector<FieldElem>;

inline std::vector<InterpolationPoint> interpolation_points(const FRSParams& params, const std::vector<FieldElem>& y) {
  if (y.size() != params.n()) throw DomainError("unfolded vector length does not match n");
  std::vector<InterpolationPoint> pts;
  for (auto i : interpolation_indices(params)) {
    InterpolationPoint p;
    p.reserve(params.s() + 1);
    p.push_back(params.eval_point(i));
    for (std::uint32_t t = 0; t < params.s(); ++t) p.push_back(y[i + t]);
    pts.push_back(std::move(p));
  }
  return pts;
}

/// Number of folded positions where the two words carry the same symbol.
inline std::uint32_t agreement(const FoldedWord& a, const FoldedWord& b) {
  if (a.symbols.size() != b.symbols.size()) throw DomainError("words of different length");
  std::uint32_t count = 0;
  for (std::size_t j = 0; j < a.symbols.size(); ++j) count += a.symbols[j] == b.symbols[j];
  return count;
}

inline std::uint32_t folded_distance(const FoldedWord& a, const FoldedWord& b) {
  return static_cast<std::uint32_t>(a.symbols.size()) - agreement(a, b);
}

/// Number of positions j with cw_j in sets_j.
inline std::uint32_t set_agreement(const Codeword& cw, const RecoverySets& sets) {
  if (cw.symbols.size() != sets.sets.size()) throw DomainError("recovery sets have the wrong length");
  std::uint32_t count = 0;
  for (std::size_t j = 0; j < cw.symbols.size(); ++j)
    count += std::find(sets.sets[j].begin(), sets.sets[j].end(), cw.symbols[j]) != sets.sets[j].end();
  return count;
}

}  // namespace frs

#endif  // FRS_CODE_HPP
