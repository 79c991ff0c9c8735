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

#ifndef FRS_EXT_FIELD_HPP
#define FRS_EXT_FIELD_HPP

#include <cassert>
#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "frs/error.hpp"
#include "frs/prime_field.hpp"
#include "frs/unipoly.hpp"

namespace frs {

/// Element of F_q[X]/(X^(q-1) - gamma): the dense coefficient vector of its
/// reduced representative, always exactly q-1 entries long.
struct ExtFieldElem {
  std::vector<std::uint32_t> coeffs;

  friend bool operator==(const ExtFieldElem&, const ExtFieldElem&) = default;
  friend auto operator<=>(const ExtFieldElem&, const ExtFieldElem&) = default;
};

/// The degree q-1 extension F_q[X]/(E(X)) with E(X) = X^(q-1) - gamma.
///
/// E is irreducible whenever gamma generates F_q^*, and on this field the
/// q-th power map is X -> gamma X, so frobenius() is a coefficient scaling.
class ExtField {
 public:
  using Elem = ExtFieldElem;

  /// Largest base prime accepted; keeps products of residues in 32 bits.
  static constexpr std::uint32_t kMaxBase = 1u << 15;

  ExtField(PrimeField base, FieldElem gamma) : base_(base), gamma_(gamma), dim_(base.q() - 1) {
    if (base.q() > kMaxBase) throw ParameterError("extension base field too large");
    if (!base.contains(gamma) || base.is_zero(gamma) ||
        multiplicative_order(base, gamma) != base.q() - 1)
      throw ParameterError("gamma must be a primitive element of F_" + std::to_string(base.q()));
    gamma_powers_.resize(dim_);
    FieldElem p = base.one();
    for (std::uint32_t i = 0; i < dim_; ++i) {
      gamma_powers_[i] = p.value;
      p = base.mul(p, gamma);
    }
  }

  const PrimeField& base() const { return base_; }
  FieldElem gamma() const { return gamma_; }
  /// Degree over F_q, which is q-1.
  std::uint32_t degree() const { return dim_; }
  std::uint32_t characteristic() const { return base_.q(); }

  std::optional<std::uint64_t> small_size() const {
    std::uint64_t size = 1;
    for (std::uint32_t i = 0; i < dim_; ++i) {
      if (size > (std::uint64_t{1} << 62) / base_.q()) return std::nullopt;
      size *= base_.q();
    }
    return size;
  }

  /// E(X) = X^(q-1) - gamma as a polynomial over the base field.
  UniPoly<PrimeField> modulus() const {
    std::vector<FieldElem> c(dim_ + 1, base_.zero());
    c[0] = base_.neg(gamma_);
    c[dim_] = base_.one();
    return UniPoly<PrimeField>(base_, std::move(c));
  }

  Elem zero() const { return {std::vector<std::uint32_t>(dim_, 0)}; }
  Elem one() const {
    Elem e = zero();
    e.coeffs[0] = 1;
    return e;
  }
  Elem embed(FieldElem a) const {
    Elem e = zero();
    e.coeffs[0] = a.value;
    return e;
  }
  /// The class of X.
  Elem generator() const {
    Elem e = zero();
    if (dim_ > 1) e.coeffs[1] = 1;
    else e.coeffs[0] = gamma_.value;
    return e;
  }

  /// Reduces a base-field polynomial modulo E.
  Elem from_poly(const UniPoly<PrimeField>& p) const {
    assert(p.field() == base_);
    std::vector<std::uint64_t> acc(dim_, 0);
    // X^(i + t*dim) = gamma^t X^i
    std::uint64_t twist = 1;
    for (std::size_t start = 0; start < p.size(); start += dim_) {
      for (std::size_t i = start; i < p.size() && i < start + dim_; ++i)
        acc[i - start] = (acc[i - start] + twist * p.coeffs()[i].value) % base_.q();
      twist = twist * gamma_.value % base_.q();
    }
    Elem e = zero();
    for (std::uint32_t i = 0; i < dim_; ++i) e.coeffs[i] = static_cast<std::uint32_t>(acc[i]);
    return e;
  }

  UniPoly<PrimeField> to_poly(const Elem& a) const {
    std::vector<FieldElem> c(dim_);
    for (std::uint32_t i = 0; i < dim_; ++i) c[i] = {a.coeffs[i]};
    return UniPoly<PrimeField>(base_, std::move(c));
  }

  bool is_zero(const Elem& a) const {
    for (auto c : a.coeffs)
      if (c != 0) return false;
    return true;
  }

  Elem add(const Elem& a, const Elem& b) const {
    Elem r = a;
    add_assign(r, b);
    return r;
  }
  void add_assign(Elem& acc, const Elem& b) const {
    assert(acc.coeffs.size() == dim_ && b.coeffs.size() == dim_);
    const std::uint32_t q = base_.q();
    for (std::uint32_t i = 0; i < dim_; ++i) {
      std::uint32_t s = acc.coeffs[i] + b.coeffs[i];
      acc.coeffs[i] = s >= q ? s - q : s;
    }
  }
  Elem sub(const Elem& a, const Elem& b) const {
    assert(a.coeffs.size() == dim_ && b.coeffs.size() == dim_);
    const std::uint32_t q = base_.q();
    Elem r = a;
    for (std::uint32_t i = 0; i < dim_; ++i)
      r.coeffs[i] = a.coeffs[i] >= b.coeffs[i] ? a.coeffs[i] - b.coeffs[i] : a.coeffs[i] + q - b.coeffs[i];
    return r;
  }
  Elem neg(const Elem& a) const {
    const std::uint32_t q = base_.q();
    Elem r = a;
    for (auto& c : r.coeffs) c = c == 0 ? 0 : q - c;
    return r;
  }

  Elem mul(const Elem& a, const Elem& b) const {
    std::vector<std::uint64_t>& prod = product(a, b);
    Elem r = zero();
    const std::uint64_t q = base_.q();
    for (std::uint32_t i = 0; i < dim_; ++i) r.coeffs[i] = static_cast<std::uint32_t>(prod[i] % q);
    return r;
  }

  /// acc -= a * b
  void sub_mul_assign(Elem& acc, const Elem& a, const Elem& b) const {
    std::vector<std::uint64_t>& prod = product(a, b);
    const std::uint64_t q = base_.q();
    for (std::uint32_t i = 0; i < dim_; ++i) {
      const auto p = static_cast<std::uint32_t>(prod[i] % q);
      acc.coeffs[i] = acc.coeffs[i] >= p ? acc.coeffs[i] - p : acc.coeffs[i] + static_cast<std::uint32_t>(q) - p;
    }
  }

  /// Inverse by the extended Euclidean algorithm against E.
  Elem inv(const Elem& a) const {
    if (is_zero(a)) throw DomainError("division by zero in extension field");
    using P = UniPoly<PrimeField>;
    P r0 = modulus(), r1 = to_poly(a);
    P s0(base_), s1 = P::constant(base_, base_.one());
    while (r1.degree() > 0) {
      auto [quot, rem] = divmod(r0, r1);
      P s2 = s0 - quot * s1;
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    // r1 is a nonzero constant since E is irreducible.
    assert(r1.degree() == 0);
    return from_poly(scale(s1, base_.inv(r1.leading())));
  }

  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

  Elem pow(Elem a, std::uint64_t e) const {
    Elem result = one();
    while (e > 0) {
      if (e & 1) result = mul(result, a);
      e >>= 1;
      if (e > 0) a = mul(a, a);
    }
    return result;
  }

  /// a^q, computed as a(gamma X).
  Elem frobenius(const Elem& a) const {
    Elem r = a;
    const std::uint64_t q = base_.q();
    for (std::uint32_t i = 0; i < dim_; ++i)
      r.coeffs[i] = static_cast<std::uint32_t>(std::uint64_t{a.coeffs[i]} * gamma_powers_[i] % q);
    return r;
  }

  /// Element whose coefficients are the base-q digits of index.
  Elem element(std::uint64_t index) const {
    Elem e = zero();
    for (std::uint32_t i = 0; i < dim_ && index > 0; ++i) {
      e.coeffs[i] = static_cast<std::uint32_t>(index % base_.q());
      index /= base_.q();
    }
    return e;
  }

  template <class Rng>
  Elem random(Rng& rng) const {
    std::uniform_int_distribution<std::uint32_t> dist(0, base_.q() - 1);
    Elem e = zero();
    for (auto& c : e.coeffs) c = dist(rng);
    return e;
  }

  friend bool operator==(const ExtField& a, const ExtField& b) {
    return a.base_ == b.base_ && a.gamma_ == b.gamma_;
  }

 private:
  // Unreduced product coefficients (before the final mod q), folded by the
  // relation X^(q-1) = gamma. Returns a per-thread scratch buffer.
  std::vector<std::uint64_t>& product(const Elem& a, const Elem& b) const {
    assert(a.coeffs.size() == dim_ && b.coeffs.size() == dim_);
    thread_local std::vector<std::uint64_t> scratch;
    scratch.assign(2 * dim_, 0);
    const std::uint32_t* bp = b.coeffs.data();
    for (std::uint32_t i = 0; i < dim_; ++i) {
      const std::uint64_t ai = a.coeffs[i];
      if (ai == 0) continue;
      std::uint64_t* out = scratch.data() + i;
      for (std::uint32_t j = 0; j < dim_; ++j) out[j] += ai * bp[j];
    }
    const std::uint64_t q = base_.q();
    const std::uint64_t g = gamma_.value;
    for (std::uint32_t i = 0; i < dim_; ++i) scratch[i] += (scratch[i + dim_] % q) * g;
    return scratch;
  }

  PrimeField base_;
  FieldElem gamma_;
  std::uint32_t dim_;
  std::vector<std::uint32_t> gamma_powers_;
};

inline ExtFieldElem ext_invert(const ExtField& field, const ExtFieldElem& a) { return field.inv(a); }

/// Irreducibility over F_q: gcd(X^(q^d) - X, p) = 1 for every d <= deg/2 and
/// X^(q^deg) = X mod p.
inline bool is_irreducible(const UniPoly<PrimeField>& p) {
  if (p.degree() < 1) throw DomainError("irreducibility is undefined for zero or constant polynomials");
  if (p.degree() == 1) return true;
  const PrimeField& f = p.field();
  const auto x = UniPoly<PrimeField>::identity(f);
  const auto monic = make_monic(p);
  auto h = x % monic;
  const auto half = static_cast<std::uint32_t>(p.degree()) / 2;
  for (std::uint32_t d = 1; d <= static_cast<std::uint32_t>(p.degree()); ++d) {
    h = powmod(h, f.q(), monic);
    if (d <= half && gcd(h - x, monic).degree() != 0) return false;
  }
  return h == x % monic;
}

}  // namespace frs

#endif  // FRS_EXT_FIELD_HPP
