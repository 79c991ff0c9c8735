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

#ifndef FRS_PRIME_FIELD_HPP
#define FRS_PRIME_FIELD_HPP

#include <cassert>
#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "frs/error.hpp"

namespace frs {

/// Returns true iff `n` is prime (trial division; fine for 32-bit moduli).
constexpr bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

/// Distinct prime factors of `n`, ascending.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Element of a prime field, stored as its canonical residue.
struct FieldElem {
  std::uint32_t value = 0;

  friend constexpr bool operator==(FieldElem, FieldElem) = default;
  friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

/// The prime field F_q for an odd prime q.
///
/// Elements are plain values; all arithmetic goes through the field object,
/// which owns the modulus.
class PrimeField {
 public:
  using Elem = FieldElem;

  explicit PrimeField(std::uint32_t q) : q_(q) {
    if (q < 3 || !is_prime(q))
      throw ParameterError("field modulus must be an odd prime, got " + std::to_string(q));
  }

  std::uint32_t q() const { return q_; }
  std::uint32_t characteristic() const { return q_; }
  /// Degree over the prime subfield.
  std::uint32_t degree() const { return 1; }
  /// Number of elements when it fits in 64 bits.
  std::optional<std::uint64_t> small_size() const { return q_; }

  Elem zero() const { return {0}; }
  Elem one() const { return {1}; }

  Elem from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(q_);
    if (r < 0) r += q_;
    return {static_cast<std::uint32_t>(r)};
  }

  bool contains(Elem a) const { return a.value < q_; }
  bool is_zero(Elem a) const { return a.value == 0; }

  Elem add(Elem a, Elem b) const {
    assert(contains(a) && contains(b));
    std::uint32_t s = a.value + b.value;
    return {s >= q_ ? s - q_ : s};
  }
  Elem sub(Elem a, Elem b) const {
    assert(contains(a) && contains(b));
    return {a.value >= b.value ? a.value - b.value : a.value + q_ - b.value};
  }
  Elem neg(Elem a) const { return {a.value == 0 ? 0 : q_ - a.value}; }
  Elem mul(Elem a, Elem b) const {
    assert(contains(a) && contains(b));
    return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.value) * b.value % q_)};
  }
  Elem pow(Elem a, std::uint64_t e) const {
    Elem result = one();
    while (e > 0) {
      if (e & 1) result = mul(result, a);
      a = mul(a, a);
      e >>= 1;
    }
    return result;
  }
  Elem inv(Elem a) const {
    if (a.value == 0) throw DomainError("division by zero in F_" + std::to_string(q_));
    return pow(a, q_ - 2);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  void add_assign(Elem& acc, Elem b) const { acc = add(acc, b); }
  /// acc -= a * b
  void sub_mul_assign(Elem& acc, Elem a, Elem b) const { acc = sub(acc, mul(a, b)); }

  /// The q-th power map, which is the identity on F_q.
  Elem frobenius(Elem a) const { return a; }

  /// The element with residue `index`; enumerates the field for index < q.
  Elem element(std::uint64_t index) const { return {static_cast<std::uint32_t>(index % q_)}; }

  template <class Rng>
  Elem random(Rng& rng) const {
    std::uniform_int_distribution<std::uint32_t> dist(0, q_ - 1);
    return {dist(rng)};
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t q_;
};

/// Smallest generator of the multiplicative group F_q^*.
///
/// A candidate g has order q-1 iff g^((q-1)/p) != 1 for every prime p | q-1.
inline FieldElem find_primitive_element(const PrimeField& field) {
  const std::uint64_t order = field.q() - 1;
  const auto factors = prime_factors(order);
  for (std::uint32_t g = 1; g < field.q(); ++g) {
    bool primitive = true;
    for (auto p : factors) {
      if (field.pow({g}, order / p) == field.one()) {
        primitive = false;
        break;
      }
    }
    if (primitive) return {g};
  }
  // Unreachable: F_q^* is cyclic.
  throw DomainError("no primitive element found");
}

/// Multiplicative order of a nonzero element.
inline std::uint64_t multiplicative_order(const PrimeField& field, FieldElem a) {
  if (field.is_zero(a)) throw DomainError("zero has no multiplicative order");
  std::uint64_t order = field.q() - 1;
  for (auto p : prime_factors(field.q() - 1)) {
    while (order % p == 0 && field.pow(a, order / p) == field.one()) order /= p;
  }
  return order;
}

}  // namespace frs

#endif  // FRS_PRIME_FIELD_HPP
