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

#include <gtest/gtest.h>

#include <map>
#include <random>

#include "frs/galois.hpp"
#include "frs/multipoly.hpp"
#include "frs/roots.hpp"
#include "frs/unipoly.hpp"

namespace frs {
namespace {

using P = UniPoly<PrimeField>;

P random_poly(const PrimeField& f, int max_deg, std::mt19937_64& rng) {
  std::vector<FieldElem> c(max_deg + 1);
  for (auto& x : c) x = f.random(rng);
  return P(f, std::move(c));
}

TEST(UniPoly, EvaluateExamples) {
  const PrimeField f5(5), f7(7);
  EXPECT_EQ(evaluate(make_poly(f5, {1, 1}), FieldElem{2}), FieldElem{3});
  EXPECT_EQ(evaluate(P(f5), FieldElem{4}), FieldElem{0});
  EXPECT_EQ(evaluate(make_poly(f7, {0, 0, 0, 1}), FieldElem{3}), FieldElem{6});
}

TEST(UniPoly, ScaleComposeExamples) {
  const PrimeField f5(5), f7(7);
  EXPECT_EQ(scale_compose(make_poly(f5, {1, 0, 1}), FieldElem{2}), make_poly(f5, {1, 0, 4}));
  EXPECT_EQ(scale_compose(make_poly(f5, {3}), FieldElem{2}), make_poly(f5, {3}));
  EXPECT_EQ(scale_compose(make_poly(f7, {0, 1, 1}), FieldElem{3}), make_poly(f7, {0, 3, 2}));
}

TEST(UniPoly, FrobeniusPowModExamples) {
  const PrimeField f(5);
  const P E = make_poly(f, {-2, 0, 0, 0, 1});
  EXPECT_EQ(frobenius_pow_mod(make_poly(f, {0, 1}), 1, E), make_poly(f, {0, 2}));
  EXPECT_EQ(frobenius_pow_mod(make_poly(f, {0, 0, 1}), 1, E), make_poly(f, {0, 0, 4}));
  EXPECT_EQ(frobenius_pow_mod(make_poly(f, {1}), 3, E), make_poly(f, {1}));
  EXPECT_THROW(frobenius_pow_mod(make_poly(f, {0, 1}), 1, make_poly(f, {2})), DomainError);
}

TEST(UniPoly, FrobeniusPowerMatchesRepeatedScaling) {
  const PrimeField f(7);
  const FieldElem g{3};
  const P E = make_poly(f, {-3, 0, 0, 0, 0, 0, 1});
  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    const P a = random_poly(f, 5, rng);
    P expect = a;
    for (std::uint32_t j = 1; j <= 3; ++j) {
      expect = scale_compose(expect, g);
      EXPECT_EQ(frobenius_pow_mod(a, j, E), expect);
    }
  }
}

TEST(UniPoly, DivisionProperty) {
  const PrimeField f(13);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const P a = random_poly(f, 12, rng);
    P b = random_poly(f, 1 + i % 6, rng);
    if (b.is_zero()) continue;
    const auto [quot, rem] = divmod(a, b);
    EXPECT_EQ(quot * b + rem, a);
    EXPECT_LT(rem.degree(), b.degree());
  }
  EXPECT_THROW(divmod(make_poly(f, {1, 1}), P(f)), DomainError);
}

TEST(UniPoly, GcdDividesBothAndIsMonic) {
  const PrimeField f(11);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    const P c = random_poly(f, 3, rng);
    const P a = random_poly(f, 4, rng) * c, b = random_poly(f, 4, rng) * c;
    if (a.is_zero() || b.is_zero()) continue;
    const P g = gcd(a, b);
    EXPECT_TRUE((a % g).is_zero());
    EXPECT_TRUE((b % g).is_zero());
    EXPECT_EQ(g.leading(), f.one());
    if (!c.is_zero()) {
      EXPECT_TRUE((g % make_monic(c)).is_zero());
    }
  }
}

TEST(UniPoly, PowmodMatchesRepeatedMultiplication) {
  const PrimeField f(5);
  const P mod = make_poly(f, {1, 2, 0, 3, 1});
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    const P a = random_poly(f, 6, rng);
    P expect = make_poly(f, {1}) % mod;
    for (std::uint64_t e = 0; e < 20; ++e) {
      EXPECT_EQ(powmod(a, e, mod), expect) << e;
      expect = (expect * a) % mod;
    }
  }
}

TEST(UniPoly, DerivativeAndToString) {
  const PrimeField f(5);
  EXPECT_EQ(derivative(make_poly(f, {1, 2, 3, 4, 1, 1})), make_poly(f, {2, 1, 2, 4}));
  EXPECT_EQ(to_string(P(f)), "0");
  EXPECT_EQ(coefficient_values(make_poly(f, {0, 1}), 3), (std::vector<std::uint32_t>{0, 1, 0}));
}

TEST(Monomials, EnumerationExamples) {
  EXPECT_EQ(enumerate_weighted_monomials(1, 1, 1).size(), 3u);
  EXPECT_EQ(enumerate_weighted_monomials(2, 3, 2).size(), 8u);
  EXPECT_EQ(enumerate_weighted_monomials(2, 17, 2).size(), 330u);
  EXPECT_EQ(trivariate_monomial_count(2, 17), 330u);
  EXPECT_EQ(trivariate_monomial_count(2, 3), 8u);
}

TEST(Monomials, EnumerationIsExactSet) {
  // Brute force over a box.
  for (std::uint32_t k = 1; k <= 4; ++k)
    for (std::uint32_t D = 0; D <= 12; ++D) {
      const auto got = enumerate_weighted_monomials(k, D, 2);
      std::set<Monomial> expect;
      for (std::uint32_t i = 0; i <= D; ++i)
        for (std::uint32_t a = 0; a <= D; ++a)
          for (std::uint32_t b = 0; b <= D; ++b)
            if (i + k * (a + b) <= D) expect.insert(Monomial{{i, a, b}});
      EXPECT_EQ(std::set<Monomial>(got.begin(), got.end()), expect);
      EXPECT_EQ(got.size(), expect.size());
      EXPECT_EQ(count_weighted_monomials(k, D, 2), expect.size());
      for (std::size_t i = 1; i < got.size(); ++i)
        EXPECT_LE(got[i - 1].weighted_degree(k), got[i].weighted_degree(k));
    }
}

TEST(Monomials, CountMatchesEnumerationForManyVariables) {
  for (std::size_t s = 1; s <= 4; ++s)
    for (std::uint32_t k = 1; k <= 3; ++k)
      for (std::uint32_t D = 0; D <= 15; D += 3)
        EXPECT_EQ(count_weighted_monomials(k, D, s), enumerate_weighted_monomials(k, D, s).size());
}

TEST(Monomials, BelowTotalDegree) {
  EXPECT_EQ(monomials_below_total_degree(3, 3).size(), binomial(5, 3));
  EXPECT_EQ(monomials_below_total_degree(4, 2).size(), binomial(5, 4));
  EXPECT_TRUE(monomials_below_total_degree(3, 0).empty());
  for (const auto& m : monomials_below_total_degree(3, 4)) EXPECT_LT(m.total_degree(), 4u);
}

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(5, 2), 10u);
  EXPECT_EQ(binomial(3, 5), 0u);
  EXPECT_EQ(binomial(60, 30), 118264581564861424ull);
  EXPECT_THROW(binomial(200, 100), CapacityError);
}

// Dense shift Q(X+p0, Y1+p1, ...) by expanding powers term by term.
std::map<std::vector<std::uint32_t>, std::uint32_t> naive_shift(const MultiPoly& Q, const std::vector<FieldElem>& p) {
  const std::uint64_t q = Q.field().q();
  std::map<std::vector<std::uint32_t>, std::uint32_t> out;
  for (const auto& [m, c] : Q.terms()) {
    std::map<std::vector<std::uint32_t>, std::uint64_t> term{{std::vector<std::uint32_t>(m.exps.size(), 0), c.value}};
    for (std::size_t t = 0; t < m.exps.size(); ++t)
      for (std::uint32_t e = 0; e < m.exps[t]; ++e) {
        std::map<std::vector<std::uint32_t>, std::uint64_t> next;
        for (const auto& [v, a] : term) {
          auto up = v;
          up[t] += 1;
          next[up] = (next[up] + a) % q;
          next[v] = (next[v] + a * p[t].value) % q;
        }
        term = std::move(next);
      }
    for (const auto& [v, a] : term) out[v] = static_cast<std::uint32_t>((out[v] + a) % q);
  }
  return out;
}

TEST(Hasse, Examples) {
  const PrimeField f(7);
  MultiPoly Q(f, 1);
  Q.add_term(Monomial{{2, 0}}, f.one());
  const std::vector<FieldElem> pt{FieldElem{1}, FieldElem{5}};
  EXPECT_EQ(hasse_coefficient(Q, pt, Monomial{{1, 0}}), FieldElem{2});

  MultiPoly Q2(f, 2);
  Q2.add_term(Monomial{{0, 1, 1}}, f.one());
  const std::vector<FieldElem> pt2{FieldElem{4}, FieldElem{1}, FieldElem{1}};
  EXPECT_EQ(hasse_coefficient(Q2, pt2, Monomial{{0, 1, 0}}), FieldElem{1});
  EXPECT_EQ(hasse_coefficient(Q2, pt2, Monomial{{0, 0, 0}}), Q2.evaluate(pt2));
  EXPECT_THROW(hasse_coefficient(Q2, pt, Monomial{{0, 0, 0}}), DomainError);
}

TEST(Hasse, MatchesExpandedShift) {
  const PrimeField f(11);
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    MultiPoly Q(f, 2);
    for (int i = 0; i < 8; ++i) {
      std::uniform_int_distribution<std::uint32_t> e(0, 4);
      Q.add_term(Monomial{{e(rng), e(rng), e(rng)}}, f.random(rng));
    }
    std::vector<FieldElem> p{f.random(rng), f.random(rng), f.random(rng)};
    const auto shifted = naive_shift(Q, p);
    for (const auto& b : monomials_below_total_degree(3, 6)) {
      const auto it = shifted.find(b.exps);
      const std::uint32_t expect = it == shifted.end() ? 0 : it->second;
      EXPECT_EQ(hasse_coefficient(Q, p, b).value, expect);
    }
  }
}

TEST(MultiPoly, ComposeMatchesPointwiseEvaluation) {
  const PrimeField f(13);
  std::mt19937_64 rng(6);
  MultiPoly Q(f, 2);
  for (int i = 0; i < 10; ++i) {
    std::uniform_int_distribution<std::uint32_t> e(0, 3);
    Q.add_term(Monomial{{e(rng), e(rng), e(rng)}}, f.random(rng));
  }
  const std::vector<P> ys{random_poly(f, 2, rng), random_poly(f, 3, rng)};
  const P composed = Q.compose(ys);
  for (std::uint32_t x = 0; x < 13; ++x) {
    const std::vector<FieldElem> pt{FieldElem{x}, evaluate(ys[0], FieldElem{x}), evaluate(ys[1], FieldElem{x})};
    EXPECT_EQ(evaluate(composed, FieldElem{x}), Q.evaluate(pt));
  }
}

TEST(MultiPoly, TermBookkeeping) {
  const PrimeField f(5);
  MultiPoly Q(f, 1);
  Q.add_term(Monomial{{1, 2}}, FieldElem{3});
  Q.add_term(Monomial{{1, 2}}, FieldElem{2});
  EXPECT_TRUE(Q.is_zero());
  Q.add_term(Monomial{{3, 1}}, FieldElem{1});
  EXPECT_EQ(Q.weighted_degree(4), 7);
  EXPECT_THROW(Q.add_term(Monomial{{1, 1, 1}}, FieldElem{1}), DomainError);
  EXPECT_THROW(MultiPoly(f, 0), DomainError);
}

TEST(Roots, PrimeFieldExamples) {
  const PrimeField f5(5), f7(7);
  std::mt19937_64 rng(1);
  EXPECT_EQ(roots_in_field(make_poly(f5, {-1, 0, 1}), rng), (std::vector<FieldElem>{{1}, {4}}));
  EXPECT_TRUE(roots_in_field(make_poly(f7, {1, 0, 1}), rng).empty());
  EXPECT_THROW(roots_in_field(P(f5), rng), DomainError);
}

TEST(Roots, SplittingPathMatchesScanOverPrimeField) {
  const PrimeField f(101);
  std::mt19937_64 rng(7);
  RootFindingOptions split;
  split.exhaustive_limit = 0;
  for (int i = 0; i < 50; ++i) {
    const P p = random_poly(f, 1 + i % 9, rng);
    if (p.is_zero()) continue;
    std::vector<FieldElem> expect;
    for (std::uint32_t a = 0; a < 101; ++a)
      if (f.is_zero(evaluate(p, FieldElem{a}))) expect.push_back({a});
    if (p.degree() == 0) expect.clear();
    EXPECT_EQ(roots_in_field(p, rng, split), expect) << to_string(p);
  }
}

TEST(Roots, ExtensionFieldPlantedRoots) {
  const PrimeField f(7);
  const ExtField ext(f, FieldElem{3});
  using EP = UniPoly<ExtField>;
  std::mt19937_64 rng(8);
  RootFindingOptions split;
  split.exhaustive_limit = 0;
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<ExtFieldElem> planted;
    EP p = EP::constant(ext, ext.random(rng));
    if (ext.is_zero(p.coeffs()[0])) continue;
    for (int i = 0; i < 4; ++i) {
      const auto a = ext.random(rng);
      planted.push_back(a);
      p = p * EP(ext, {ext.neg(a), ext.one()});
    }
    // Y^2 - c with c a non-square contributes no roots.
    const std::uint64_t half = (117649 - 1) / 2;  // (7^6 - 1) / 2
    ExtFieldElem c = ext.random(rng);
    while (ext.is_zero(c) || ext.pow(c, half) == ext.one()) c = ext.random(rng);
    p = p * EP(ext, {ext.neg(c), ext.zero(), ext.one()});
    std::sort(planted.begin(), planted.end());
    planted.erase(std::unique(planted.begin(), planted.end()), planted.end());
    const auto got = roots_in_field(p, rng, split);
    EXPECT_EQ(got, planted);
  }
}

TEST(Roots, RepeatedRootReportedOnce) {
  const PrimeField f(5);
  const ExtField ext(f, FieldElem{2});
  using EP = UniPoly<ExtField>;
  const EP lin(ext, {ext.neg(ext.generator()), ext.one()});
  std::mt19937_64 rng(2);
  RootFindingOptions split;
  split.exhaustive_limit = 0;
  EXPECT_EQ(roots_in_field(lin * lin, rng, split), (std::vector<ExtFieldElem>{ext.generator()}));
  EXPECT_EQ(roots_in_field(lin * lin, rng), (std::vector<ExtFieldElem>{ext.generator()}));
}

TEST(FrobeniusMap, MatchesPowmod) {
  const PrimeField f(13);
  std::mt19937_64 rng(10);
  P g = random_poly(f, 7, rng);
  g = make_monic(g);
  const FrobeniusMap<PrimeField> frob(g);
  for (int i = 0; i < 20; ++i) {
    const P a = random_poly(f, 6, rng);
    EXPECT_EQ(frob.apply(a), powmod(a, 13, g));
  }
}

}  // namespace
}  // namespace frs
