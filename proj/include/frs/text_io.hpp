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

#ifndef FRS_TEXT_IO_HPP
#define FRS_TEXT_IO_HPP

// Plain-text formats:
//   message      k+1 whitespace-separated integers in [0, q), low degree first
//   folded word  N lines of m space-separated integers in [0, q)
//   sets         N lines; symbols on a line separated by ';', each symbol m
//                space-separated integers; an empty line is an empty set

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "frs/code.hpp"
#include "frs/error.hpp"

namespace frs {

namespace detail {

inline std::vector<std::uint32_t> parse_values(const std::string& text, std::uint32_t q, const char* what) {
  std::istringstream in(text);
  std::vector<std::uint32_t> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &used);
    } catch (const std::exception&) {
      throw FormatError(std::string("non-numeric token '") + tok + "' in " + what);
    }
    if (used != tok.size() || tok[0] == '-' || v >= q)
      throw FormatError(std::string("value '") + tok + "' in " + what + " is not in [0, q)");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

inline std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  // Tolerate trailing blank lines.
  while (!lines.empty() && lines.back().find_first_not_of(" \t") == std::string::npos) lines.pop_back();
  return lines;
}

inline Symbol to_symbol(const std::vector<std::uint32_t>& v) {
  Symbol s;
  s.reserve(v.size());
  for (auto x : v) s.push_back({x});
  return s;
}

}  // namespace detail

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw FormatError("failed writing '" + path + "'");
}

inline Message parse_message(const FRSParams& params, const std::string& text) {
  const auto v = detail::parse_values(text, params.q(), "message");
  if (v.size() != params.k() + 1)
    throw FormatError("message must have k+1=" + std::to_string(params.k() + 1) + " coefficients, got " +
                      std::to_string(v.size()));
  return make_message(params, v);
}

inline std::string format_message(const FRSParams& params, const Message& msg) {
  std::string out;
  const auto v = coefficient_values(msg, params.k() + 1);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  return out + "\n";
}

inline FoldedWord parse_word(const FRSParams& params, const std::string& text) {
  const auto lines = detail::split_lines(text);
  if (lines.size() != params.N())
    throw FormatError("word must have N=" + std::to_string(params.N()) + " lines, got " + std::to_string(lines.size()));
  FoldedWord w;
  for (const auto& line : lines) {
    const auto v = detail::parse_values(line, params.q(), "word");
    if (v.size() != params.m())
      throw FormatError("each word line must have m=" + std::to_string(params.m()) + " values");
    w.symbols.push_back(detail::to_symbol(v));
  }
  return w;
}

inline std::string format_word(const FoldedWord& w) {
  std::string out;
  for (const auto& sym : w.symbols) {
    for (std::size_t l = 0; l < sym.size(); ++l) {
      if (l) out += ' ';
      out += std::to_string(sym[l].value);
    }
    out += '\n';
  }
  return out;
}

inline RecoverySets parse_sets(const FRSParams& params, const std::string& text) {
  auto lines = detail::split_lines(text);
  if (lines.size() > params.N())
    throw FormatError("sets file has more than N=" + std::to_string(params.N()) + " lines");
  lines.resize(params.N());
  RecoverySets sets;
  for (const auto& line : lines) {
    std::vector<Symbol> set;
    std::istringstream in(line);
    std::string chunk;
    while (std::getline(in, chunk, ';')) {
      const auto v = detail::parse_values(chunk, params.q(), "sets");
      if (v.empty()) continue;
      if (v.size() != params.m())
        throw FormatError("each symbol in a set must have m=" + std::to_string(params.m()) + " values");
      set.push_back(detail::to_symbol(v));
    }
    sets.sets.push_back(std::move(set));
  }
  return sets;
}

inline std::string format_sets(const RecoverySets& sets) {
  std::string out;
  for (const auto& set : sets.sets) {
    for (std::size_t e = 0; e < set.size(); ++e) {
      if (e) out += "; ";
      for (std::size_t l = 0; l < set[e].size(); ++l) {
        if (l) out += ' ';
        out += std::to_string(set[e][l].value);
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace frs

#endif  // FRS_TEXT_IO_HPP
