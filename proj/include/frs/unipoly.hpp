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

#ifndef FRS_UNIPOLY_HPP
#define FRS_UNIPOLY_HPP

#include <algorithm>
#include <cassert>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "frs/error.hpp"
#include "frs/prime_field.hpp"

namespace frs {

/// Arithmetic interface shared by PrimeField and ExtField.
template <class F>
concept FiniteField = requires(const F& f, typename F::Elem a, typename F::Elem& acc,
                               std::mt19937_64& rng, std::uint64_t i) {
  { f.zero() } -> std::same_as<typename F::Elem>;
  { f.one() } -> std::same_as<typename F::Elem>;
  { f.add(a, a) } -> std::same_as<typename F::Elem>;
  { f.sub(a, a) } -> std::same_as<typename F::Elem>;
  { f.neg(a) } -> std::same_as<typename F::Elem>;
  { f.mul(a, a) } -> std::same_as<typename F::Elem>;
  { f.inv(a) } -> std::same_as<typename F::Elem>;
  { f.frobenius(a) } -> std::same_as<typename F::Elem>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.add_assign(acc, a) };
  { f.sub_mul_assign(acc, a, a) };
  { f.characteristic() } -> std::convertible_to<std::uint32_t>;
  { f.degree() } -> std::convertible_to<std::uint32_t>;
  { f.small_size() } -> std::same_as<std::optional<std::uint64_t>>;
  { f.element(i) } -> std::same_as<typename F::Elem>;
  { f.random(rng) } -> std::same_as<typename F::Elem>;
  { a == a } -> std::convertible_to<bool>;
};

/// Dense univariate polynomial, lowest degree first, without trailing zeros.
///
/// The polynomial keeps a pointer to its field; the field must outlive it.
template <FiniteField F>
class UniPoly {
 public:
  using Field = F;
  using Elem = typename F::Elem;

  explicit UniPoly(const F& field) : field_(&field) {}
  UniPoly(const F& field, std::vector<Elem> coeffs) : field_(&field), c_(std::move(coeffs)) { trim(); }

  /// c * Y^degree
  static UniPoly monomial(const F& field, Elem c, std::size_t degree) {
    std::vector<Elem> v(degree + 1, field.zero());
    v[degree] = std::move(c);
    return UniPoly(field, std::move(v));
  }
  static UniPoly constant(const F& field, Elem c) { return UniPoly(field, {std::move(c)}); }
  /// The polynomial Y.
  static UniPoly identity(const F& field) { return monomial(field, field.one(), 1); }

  const F& field() const { return *field_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }
  const std::vector<Elem>& coeffs() const { return c_; }
  std::vector<Elem> take_coeffs() && { return std::move(c_); }

  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_->zero(); }
  const Elem& leading() const {
    assert(!c_.empty());
    return c_.back();
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    assert(*a.field_ == *b.field_);
    return a.c_ == b.c_;
  }

 private:
  void trim() {
    while (!c_.empty() && field_->is_zero(c_.back())) c_.pop_back();
  }

  const F* field_;
  std::vector<Elem> c_;
};

template <FiniteField F>
UniPoly<F> operator+(const UniPoly<F>& a, const UniPoly<F>& b) {
  const F& f = a.field();
  assert(f == b.field());
  std::vector<typename F::Elem> out(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a.coeffs()[i];
  for (std::size_t i = 0; i < b.size(); ++i) f.add_assign(out[i], b.coeffs()[i]);
  return UniPoly<F>(f, std::move(out));
}

template <FiniteField F>
UniPoly<F> operator-(const UniPoly<F>& a) {
  const F& f = a.field();
  std::vector<typename F::Elem> out;
  out.reserve(a.size());
  for (const auto& c : a.coeffs()) out.push_back(f.neg(c));
  return UniPoly<F>(f, std::move(out));
}

template <FiniteField F>
UniPoly<F> operator-(const UniPoly<F>& a, const UniPoly<F>& b) {
  return a + (-b);
}

template <FiniteField F>
UniPoly<F> operator*(const UniPoly<F>& a, const UniPoly<F>& b) {
  const F& f = a.field();
  assert(f == b.field());
  if (a.is_zero() || b.is_zero()) return UniPoly<F>(f);
  std::vector<typename F::Elem> out(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (f.is_zero(a.coeffs()[i])) continue;
    const auto neg_ai = f.neg(a.coeffs()[i]);
    for (std::size_t j = 0; j < b.size(); ++j) f.sub_mul_assign(out[i + j], neg_ai, b.coeffs()[j]);
  }
  return UniPoly<F>(f, std::move(out));
}

template <FiniteField F>
UniPoly<F> scale(const UniPoly<F>& a, const typename F::Elem& c) {
  const F& f = a.field();
  std::vector<typename F::Elem> out;
  out.reserve(a.size());
  for (const auto& x : a.coeffs()) out.push_back(f.mul(x, c));
  return UniPoly<F>(f, std::move(out));
}

/// Quotient and remainder of a / b.
template <FiniteField F>
std::pair<UniPoly<F>, UniPoly<F>> divmod(const UniPoly<F>& a, const UniPoly<F>& b) {
  const F& f = a.field();
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly<F>(f), a};
  const auto lead_inv = f.inv(b.leading());
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<typename F::Elem> r = a.coeffs();
  std::vector<typename F::Elem> quot(a.size() - db, f.zero());
  for (std::size_t i = quot.size(); i-- > 0;) {
    auto c = f.mul(r[i + db], lead_inv);
    if (f.is_zero(c)) continue;
    for (std::size_t j = 0; j <= db; ++j) f.sub_mul_assign(r[i + j], c, b.coeffs()[j]);
    quot[i] = std::move(c);
  }
  r.resize(db);
  return {UniPoly<F>(f, std::move(quot)), UniPoly<F>(f, std::move(r))};
}

template <FiniteField F>
UniPoly<F> operator%(const UniPoly<F>& a, const UniPoly<F>& b) {
  return divmod(a, b).second;
}

template <FiniteField F>
UniPoly<F> operator/(const UniPoly<F>& a, const UniPoly<F>& b) {
  return divmod(a, b).first;
}

template <FiniteField F>
UniPoly<F> make_monic(const UniPoly<F>& a) {
  if (a.is_zero()) return a;
  return scale(a, a.field().inv(a.leading()));
}

/// Monic greatest common divisor (zero iff both inputs are zero).
template <FiniteField F>
UniPoly<F> gcd(UniPoly<F> a, UniPoly<F> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

/// base^e mod modulus by square-and-multiply.
template <FiniteField F>
UniPoly<F> powmod(const UniPoly<F>& base, std::uint64_t e, const UniPoly<F>& modulus) {
  const F& f = base.field();
  if (modulus.degree() < 1) throw DomainError("modulus must have positive degree");
  UniPoly<F> result = UniPoly<F>::constant(f, f.one()) % modulus;
  UniPoly<F> b = base % modulus;
  while (e > 0) {
    if (e & 1) result = (result * b) % modulus;
    e >>= 1;
    if (e > 0) b = (b * b) % modulus;
  }
  return result;
}

/// Horner evaluation.
template <FiniteField F>
typename F::Elem evaluate(const UniPoly<F>& p, const typename F::Elem& x) {
  const F& f = p.field();
  auto acc = f.zero();
  for (std::size_t i = p.size(); i-- > 0;) acc = f.add(f.mul(acc, x), p.coeffs()[i]);
  return acc;
}

/// p(c * Y): coefficient i is multiplied by c^i.
template <FiniteField F>
UniPoly<F> scale_compose(const UniPoly<F>& p, const typename F::Elem& c) {
  const F& f = p.field();
  std::vector<typename F::Elem> out;
  out.reserve(p.size());
  auto power = f.one();
  for (const auto& a : p.coeffs()) {
    out.push_back(f.mul(a, power));
    power = f.mul(power, c);
  }
  return UniPoly<F>(f, std::move(out));
}

/// p^(q^j) mod modulus, where q is the field characteristic; computed as j
/// successive q-th powers.
template <FiniteField F>
UniPoly<F> frobenius_pow_mod(const UniPoly<F>& p, std::uint32_t j, const UniPoly<F>& modulus) {
  if (modulus.degree() < 1) throw DomainError("modulus must have positive degree");
  UniPoly<F> result = p % modulus;
  const std::uint32_t q = p.field().characteristic();
  for (std::uint32_t step = 0; step < j; ++step) result = powmod(result, q, modulus);
  return result;
}

/// Formal derivative.
template <FiniteField F>
UniPoly<F> derivative(const UniPoly<F>& p) {
  const F& f = p.field();
  if (p.size() <= 1) return UniPoly<F>(f);
  std::vector<typename F::Elem> out;
  out.reserve(p.size() - 1);
  auto k = f.zero();
  for (std::size_t i = 1; i < p.size(); ++i) {
    k = f.add(k, f.one());
    out.push_back(f.mul(p.coeffs()[i], k));
  }
  return UniPoly<F>(f, std::move(out));
}

/// Builds a polynomial over F_q from integer coefficients (low degree first).
inline UniPoly<PrimeField> make_poly(const PrimeField& field, std::initializer_list<std::int64_t> coeffs) {
  std::vector<FieldElem> v;
  v.reserve(coeffs.size());
  for (auto c : coeffs) v.push_back(field.from_int(c));
  return UniPoly<PrimeField>(field, std::move(v));
}

/// Coefficient list padded with zeros to `length` entries.
inline std::vector<std::uint32_t> coefficient_values(const UniPoly<PrimeField>& p, std::size_t length) {
  std::vector<std::uint32_t> out(std::max(length, p.size()), 0);
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = p.coeffs()[i].value;
  return out;
}

inline std::string to_string(const UniPoly<PrimeField>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    const auto c = p.coeffs()[i].value;
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (c != 1 || i == 0) os << c;
    if (i >= 1) os << "X";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

}  // namespace frs

#endif  // FRS_UNIPOLY_HPP
