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

#include <random>

#include "frs/code.hpp"
#include "frs/text_io.hpp"

namespace frs {
namespace {

Symbol sym(std::initializer_list<std::uint32_t> v) {
  Symbol s;
  for (auto x : v) s.push_back({x});
  return s;
}

TEST(BlockStructure, Examples) {
  EXPECT_EQ(derive_block_structure(5, 2).n, 4u);
  EXPECT_EQ(derive_block_structure(5, 2).N, 2u);
  EXPECT_EQ(derive_block_structure(13, 4).n, 12u);
  EXPECT_EQ(derive_block_structure(13, 4).N, 3u);
  EXPECT_EQ(derive_block_structure(31, 4).n, 28u);
  EXPECT_EQ(derive_block_structure(31, 4).N, 7u);
  EXPECT_THROW(derive_block_structure(5, 5), ParameterError);
  EXPECT_THROW(derive_block_structure(5, 0), ParameterError);
}

TEST(FRSParams, Validation) {
  EXPECT_THROW(FRSParams(4, 2, 1), ParameterError);
  EXPECT_THROW(FRSParams(5, 2, 0), ParameterError);
  EXPECT_THROW(FRSParams(5, 2, 4), ParameterError);
  EXPECT_THROW(FRSParams(13, 3, 2, 4), ParameterError);
  EXPECT_THROW(FRSParams(13, 3, 2, 2, 0), ParameterError);
  EXPECT_THROW(FRSParams(13, 3, 2, 3, 1, Variant::shifted), ParameterError);
  const FRSParams p(13, 3, 2, 2, 3);
  EXPECT_EQ(p.gamma(), FieldElem{2});
  EXPECT_DOUBLE_EQ(p.rate(), 3.0 / 12.0);
  EXPECT_EQ(parse_variant("shifted"), Variant::shifted);
  EXPECT_THROW(parse_variant("other"), ParameterError);
}

TEST(Encode, Examples) {
  const FRSParams p(5, 2, 1);
  const Codeword cw = encode(p, make_message(p, {0, 1}));
  EXPECT_EQ(cw.symbols, (std::vector<Symbol>{sym({1, 2}), sym({4, 3})}));
  EXPECT_EQ(encode(p, make_message(p, {0, 0})).symbols, (std::vector<Symbol>{sym({0, 0}), sym({0, 0})}));
  EXPECT_EQ(encode(p, make_message(p, {1, 0})).symbols, (std::vector<Symbol>{sym({1, 1}), sym({1, 1})}));
  EXPECT_THROW(encode(p, make_poly(p.field(), {0, 0, 1})), DomainError);
  EXPECT_THROW(make_message(p, {5}), DomainError);
}

TEST(Encode, Linear) {
  const FRSParams p(13, 3, 4);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    std::vector<FieldElem> a(5), b(5);
    for (auto& x : a) x = p.field().random(rng);
    for (auto& x : b) x = p.field().random(rng);
    const Message fa(p.field(), a), fb(p.field(), b);
    const auto ya = unfold(p, encode(p, fa)), yb = unfold(p, encode(p, fb)), ys = unfold(p, encode(p, fa + fb));
    for (std::uint32_t j = 0; j < p.n(); ++j) EXPECT_EQ(ys[j], p.field().add(ya[j], yb[j]));
  }
}

TEST(Unfold, RoundTripAndShape) {
  const FRSParams p(5, 2, 1);
  const Codeword cw{{sym({1, 2}), sym({4, 3})}};
  EXPECT_EQ(unfold(p, cw), (std::vector<FieldElem>{{1}, {2}, {4}, {3}}));
  EXPECT_EQ(fold(p, unfold(p, cw)), cw);
  EXPECT_THROW(unfold(p, Codeword{{sym({1, 2, 3}), sym({4, 3, 1})}}), DomainError);
  EXPECT_THROW(unfold(p, Codeword{{sym({1, 2})}}), DomainError);
  EXPECT_THROW(unfold(p, Codeword{{sym({1, 7}), sym({4, 3})}}), DomainError);
}

TEST(InterpolationIndices, Examples) {
  EXPECT_EQ(interpolation_indices(FRSParams(13, 3, 2, 2)),
            (std::vector<std::uint32_t>{0, 1, 3, 4, 6, 7, 9, 10}));
  const auto shifted = interpolation_indices(FRSParams(13, 3, 2, 2, 1, Variant::shifted));
  EXPECT_EQ(shifted.size(), 11u);
  EXPECT_EQ(shifted.back(), 10u);
  EXPECT_EQ(interpolation_indices(FRSParams(5, 2, 1, 2)), (std::vector<std::uint32_t>{0, 2}));
  // s = 1 uses every position.
  EXPECT_EQ(interpolation_indices(FRSParams(13, 4, 2, 1)).size(), 12u);
}

TEST(InterpolationPoints, WindowsStayInBlock) {
  const FRSParams p(13, 4, 2, 3);
  std::vector<FieldElem> y(p.n());
  for (std::uint32_t i = 0; i < p.n(); ++i) y[i] = {i};
  const auto pts = interpolation_points(p, y);
  ASSERT_EQ(pts.size(), p.n() * (p.m() - p.s() + 1) / p.m());
  for (const auto& pt : pts) {
    const std::uint32_t first = pt[1].value;
    EXPECT_EQ(pt[0], p.eval_point(first));
    EXPECT_EQ(first / p.m(), pt.back().value / p.m());
  }
}

TEST(Distance, AgreementAndSets) {
  const Codeword a{{sym({1, 2}), sym({4, 3})}}, b{{sym({1, 2}), sym({4, 4})}};
  EXPECT_EQ(agreement(a, b), 1u);
  EXPECT_EQ(folded_distance(a, b), 1u);
  const RecoverySets sets{{{sym({0, 0}), sym({1, 2})}, {}}};
  EXPECT_EQ(set_agreement(a, sets), 1u);
  EXPECT_EQ(sets.max_set_size(), 2u);
}

TEST(Distance, SmallCodeIsMds) {
  // Distinct codewords of q=5, m=2, k=1 differ in n-k = 3 unfolded places.
  const FRSParams p(5, 2, 1);
  for (std::uint32_t a = 0; a < 25; ++a)
    for (std::uint32_t b = a + 1; b < 25; ++b) {
      const auto ya = unfold(p, encode(p, make_message(p, {a % 5, a / 5})));
      const auto yb = unfold(p, encode(p, make_message(p, {b % 5, b / 5})));
      std::uint32_t d = 0;
      for (std::uint32_t i = 0; i < p.n(); ++i) d += ya[i] != yb[i];
      EXPECT_GE(d, p.n() - p.k());
    }
}

TEST(TextIo, MessageRoundTrip) {
  const FRSParams p(13, 3, 2);
  const Message msg = parse_message(p, "5 0\n11\n");
  EXPECT_EQ(msg, make_message(p, {5, 0, 11}));
  EXPECT_EQ(format_message(p, msg), "5 0 11\n");
  EXPECT_EQ(format_message(p, make_message(p, {0, 0, 0})), "0 0 0\n");
  EXPECT_THROW(parse_message(p, "1 2"), FormatError);
  EXPECT_THROW(parse_message(p, "1 2 13"), FormatError);
  EXPECT_THROW(parse_message(p, "1 x 3"), FormatError);
  EXPECT_THROW(parse_message(p, "1 -2 3"), FormatError);
}

TEST(TextIo, WordRoundTrip) {
  const FRSParams p(5, 2, 1);
  const FoldedWord w = parse_word(p, "1 2\r\n4 3\n\n");
  EXPECT_EQ(w, (FoldedWord{{sym({1, 2}), sym({4, 3})}}));
  EXPECT_EQ(format_word(w), "1 2\n4 3\n");
  EXPECT_THROW(parse_word(p, "1 2\n"), FormatError);
  EXPECT_THROW(parse_word(p, "1 2 3\n4 3\n"), FormatError);
}

TEST(TextIo, SetsRoundTrip) {
  const FRSParams p(5, 2, 1);
  const RecoverySets sets = parse_sets(p, "1 2; 0 0\n");
  ASSERT_EQ(sets.sets.size(), 2u);
  EXPECT_EQ(sets.sets[0], (std::vector<Symbol>{sym({1, 2}), sym({0, 0})}));
  EXPECT_TRUE(sets.sets[1].empty());
  EXPECT_EQ(format_sets(sets), "1 2; 0 0\n\n");
  EXPECT_THROW(parse_sets(p, "1 2 3\n"), FormatError);
  EXPECT_THROW(parse_sets(p, "1\n2\n3\n"), FormatError);
}

TEST(TextIo, MissingFile) {
  EXPECT_THROW(read_text_file("/nonexistent/dir/file.txt"), FormatError);
  EXPECT_THROW(write_text_file("/nonexistent/dir/file.txt", "x"), FormatError);
}

}  // namespace
}  // namespace frs
