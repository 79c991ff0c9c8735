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

#ifndef FRS_HARNESS_HPP
#define FRS_HARNESS_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "frs/code.hpp"
#include "frs/decoder.hpp"
#include "frs/error.hpp"

namespace frs {

enum class ChannelKind { uniform, burst, fixed_positions };

inline std::string to_string(ChannelKind k) {
  switch (k) {
    case ChannelKind::uniform: return "uniform";
    case ChannelKind::burst: return "burst";
    case ChannelKind::fixed_positions: return "fixed";
  }
  return "?";
}

inline ChannelKind parse_channel(const std::string& name) {
  if (name == "uniform") return ChannelKind::uniform;
  if (name == "burst") return ChannelKind::burst;
  if (name == "fixed" || name == "fixed-positions") return ChannelKind::fixed_positions;
  throw ParameterError("unknown channel '" + name + "'");
}

/// Corrupts exactly `e` folded symbols.
struct ChannelSpec {
  ChannelKind kind = ChannelKind::uniform;
  std::uint32_t e = 0;
  std::vector<std::uint32_t> positions;  ///< fixed_positions only; size e, distinct
};

/// Uniformly random m-tuple different from `sym`.
template <class Rng>
Symbol random_other_symbol(const FRSParams& params, const Symbol& sym, Rng& rng) {
  Symbol out(sym.size());
  do {
    for (auto& x : out) x = params.field().random(rng);
  } while (out == sym);
  return out;
}

template <class Rng>
Message random_message(const FRSParams& params, Rng& rng) {
  std::vector<FieldElem> c(params.k() + 1);
  for (auto& x : c) x = params.field().random(rng);
  return Message(params.field(), std::move(c));
}

/// Replaces the symbols at e distinct positions with different ones:
/// uniform picks a random position set, burst a cyclic run starting at a
/// random position, fixed_positions the given list.
template <class Rng>
ReceivedWord apply_channel(const FRSParams& params, const Codeword& cw, const ChannelSpec& spec, Rng& rng) {
  check_shape(params, cw);
  const std::uint32_t N = params.N();
  if (spec.e > N) throw DomainError("cannot corrupt " + std::to_string(spec.e) + " of " + std::to_string(N) + " symbols");
  std::vector<std::uint32_t> where;
  switch (spec.kind) {
    case ChannelKind::uniform: {
      std::vector<std::uint32_t> all(N);
      std::iota(all.begin(), all.end(), 0u);
      // Partial Fisher-Yates.
      for (std::uint32_t i = 0; i < spec.e; ++i) {
        std::uniform_int_distribution<std::uint32_t> pick(i, N - 1);
        std::swap(all[i], all[pick(rng)]);
      }
      where.assign(all.begin(), all.begin() + spec.e);
      break;
    }
    case ChannelKind::burst: {
      std::uniform_int_distribution<std::uint32_t> pick(0, N - 1);
      const std::uint32_t start = pick(rng);
      for (std::uint32_t i = 0; i < spec.e; ++i) where.push_back((start + i) % N);
      break;
    }
    case ChannelKind::fixed_positions: {
      where = spec.positions;
      if (where.size() != spec.e) throw DomainError("fixed channel needs exactly e positions");
      auto sorted = where;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw DomainError("fixed channel positions must be distinct");
      for (auto p : where)
        if (p >= N) throw DomainError("fixed channel position out of range");
      break;
    }
  }
  ReceivedWord out = cw;
  for (auto p : where) out.symbols[p] = random_other_symbol(params, cw.symbols[p], rng);
  return out;
}

/// Every message whose encoding agrees with `received` on at least t folded
/// positions, by enumerating all q^(k+1) messages.
inline std::vector<Message> oracle_decode(const FRSParams& params, const ReceivedWord& received, std::uint32_t t,
                                          std::uint64_t limit = std::uint64_t{1} << 20) {
  check_shape(params, received);
  const std::uint32_t q = params.q(), k = params.k();
  if (detail::bounded_power(q, k + 1, limit) > limit) throw CapacityError("message space too large for the oracle");
  std::vector<std::uint32_t> digits(k + 1, 0);
  std::vector<Message> out;
  for (;;) {
    Message g = make_message(params, digits);
    if (agreement(encode(params, g), received) >= t) out.push_back(std::move(g));
    std::uint32_t d = 0;
    for (; d <= k; ++d) {
      if (++digits[d] < q) break;
      digits[d] = 0;
    }
    if (d > k) break;
  }
  detail::sort_messages(out);
  return out;
}

/// Every message whose codeword symbol lies in S_j for at least t positions.
inline std::vector<Message> oracle_recover(const FRSParams& params, const RecoverySets& sets, std::uint32_t t,
                                           std::uint64_t limit = std::uint64_t{1} << 20) {
  const std::uint32_t q = params.q(), k = params.k();
  if (detail::bounded_power(q, k + 1, limit) > limit) throw CapacityError("message space too large for the oracle");
  std::vector<std::uint32_t> digits(k + 1, 0);
  std::vector<Message> out;
  for (;;) {
    Message g = make_message(params, digits);
    if (set_agreement(encode(params, g), sets) >= t) out.push_back(std::move(g));
    std::uint32_t d = 0;
    for (; d <= k; ++d) {
      if (++digits[d] < q) break;
      digits[d] = 0;
    }
    if (d > k) break;
  }
  detail::sort_messages(out);
  return out;
}

struct TrialRecord {
  std::uint32_t q = 0, m = 0, k = 0, s = 0, r = 0;
  Variant variant = Variant::standard;
  ChannelKind channel = ChannelKind::uniform;
  std::uint32_t e = 0;
  std::uint32_t trial = 0;
  bool success = false;
  std::size_t list_size = 0;
  double ms = 0;
};

/// Random stream for one trial, independent of how trials are scheduled.
inline std::mt19937_64 trial_rng(std::uint64_t seed, std::uint32_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), trial};
  return std::mt19937_64(seq);
}

/// Plants a random message, corrupts e symbols, decodes; one record per trial.
inline std::vector<TrialRecord> simulate(const FRSParams& params, ChannelKind channel, std::uint32_t e,
                                         std::uint32_t trials, std::uint64_t seed,
                                         const CandidateOptions& options = {}) {
  if (channel == ChannelKind::fixed_positions) throw ParameterError("simulate supports uniform and burst channels");
  std::vector<TrialRecord> records;
  for (std::uint32_t trial = 0; trial < trials; ++trial) {
    auto rng = trial_rng(seed, trial);
    const Message msg = random_message(params, rng);
    const Codeword cw = encode(params, msg);
    const ReceivedWord rx = apply_channel(params, cw, ChannelSpec{channel, e, {}}, rng);
    CandidateOptions opts = options;
    opts.seed = rng();
    const auto start = std::chrono::steady_clock::now();
    const DecodeResult res = list_decode(params, rx, opts);
    const auto stop = std::chrono::steady_clock::now();
    TrialRecord rec{params.q(), params.m(), params.k(), params.s(), params.r(), params.variant(), channel, e, trial};
    rec.success = std::find(res.messages.begin(), res.messages.end(), msg) != res.messages.end();
    rec.list_size = res.messages.size();
    rec.ms = std::chrono::duration<double, std::milli>(stop - start).count();
    records.push_back(rec);
  }
  return records;
}

/// Fixed-point with six decimals.
inline std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

inline const char* kSimulateHeader = "q,m,k,s,r,variant,channel,e,trial,success,list_size,ms";

inline std::string trials_csv(const std::vector<TrialRecord>& records) {
  std::string out = std::string(kSimulateHeader) + "\n";
  for (const auto& r : records) {
    out += std::to_string(r.q) + "," + std::to_string(r.m) + "," + std::to_string(r.k) + "," + std::to_string(r.s) +
           "," + std::to_string(r.r) + "," + to_string(r.variant) + "," + to_string(r.channel) + "," +
           std::to_string(r.e) + "," + std::to_string(r.trial) + "," + (r.success ? "1" : "0") + "," +
           std::to_string(r.list_size) + "," + fixed6(r.ms) + "\n";
  }
  return out;
}

inline const char* kBoundsColumns = "R,rho_gs,rho_a,rho_b,rho_max,rho_svar,limit_23,capacity,vacuous";

/// Bound curves on the grid R = step, 2 step, ... below 1. A single (m, s)
/// pair gives the plain column set; several pairs add leading m,s columns.
inline std::string emit_bound_curves(const std::vector<std::uint32_t>& m_list, const std::vector<std::uint32_t>& s_list,
                                     std::uint32_t r, double step) {
  if (!(step > 0.0) || step >= 1.0) throw DomainError("grid step must lie in (0, 1)");
  if (m_list.empty() || s_list.empty()) throw DomainError("need at least one m and one s");
  const bool tagged = m_list.size() * s_list.size() > 1;
  std::string out = (tagged ? std::string("m,s,") : std::string()) + kBoundsColumns + "\n";
  for (auto m : m_list) {
    for (auto s : s_list) {
      for (long i = 1;; ++i) {
        const double R = static_cast<double>(i) * step;
        if (R >= 1.0 - 1e-12) break;
        const BoundsRow row = decoding_bounds(R, m, s, r);
        std::string flags;
        for (const auto& v : row.vacuous) flags += (flags.empty() ? "" : "|") + v;
        if (tagged) out += std::to_string(m) + "," + std::to_string(s) + ",";
        out += fixed6(row.R) + "," + fixed6(row.rho_gs) + "," + fixed6(row.rho_a) + "," + fixed6(row.rho_b) + "," +
               fixed6(row.rho_max) + "," + fixed6(row.rho_svar) + "," + fixed6(row.limit_23) + "," +
               fixed6(row.capacity) + "," + flags + "\n";
      }
    }
  }
  return out;
}

}  // namespace frs

#endif  // FRS_HARNESS_HPP
