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

#ifndef FRS_CLI_HPP
#define FRS_CLI_HPP

#include <iostream>
#include <iterator>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "frs/code.hpp"
#include "frs/decoder.hpp"
#include "frs/error.hpp"
#include "frs/harness.hpp"
#include "frs/text_io.hpp"

namespace frs {

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRejected = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitUsage = 64;

namespace detail {

struct CliOptions {
  std::uint32_t q = 0, m = 0, k = 0, s = 1, r = 1;
  std::string variant = "standard";
  std::uint64_t seed = 1;
  std::optional<std::uint32_t> errors;
  std::uint32_t trials = 10;
  std::optional<std::uint32_t> l;
  std::optional<std::uint32_t> t;
  std::string channel = "uniform";
  std::vector<std::uint32_t> positions;
  std::vector<std::uint32_t> m_list;
  std::vector<std::uint32_t> s_list;
  double step = 0.01;
  std::string in, out;
};

inline void add_code_flags(CLI::App* cmd, CliOptions& o) {
  cmd->add_option("--q", o.q, "field size (odd prime)")->required();
  cmd->add_option("--m", o.m, "folding parameter")->required();
  cmd->add_option("--k", o.k, "message degree bound")->required();
}

inline void add_decoder_flags(CLI::App* cmd, CliOptions& o) {
  cmd->add_option("--s", o.s, "interpolation variables")->capture_default_str();
  cmd->add_option("--r", o.r, "multiplicity")->capture_default_str();
  cmd->add_option("--variant", o.variant, "standard or shifted")
      ->check(CLI::IsMember({"standard", "shifted"}))
      ->capture_default_str();
  cmd->add_option("--seed", o.seed, "random seed")->capture_default_str();
}

inline void add_io_flags(CLI::App* cmd, CliOptions& o) {
  cmd->add_option("--in", o.in, "input file (default stdin)");
  cmd->add_option("--out", o.out, "output file (default stdout)");
}

inline std::string read_input(const CliOptions& o) {
  if (!o.in.empty()) return read_text_file(o.in);
  return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
}

inline void write_output(const CliOptions& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
  } else {
    write_text_file(o.out, text);
  }
}

inline FRSParams cli_params(const CliOptions& o) {
  return FRSParams(o.q, o.m, o.k, o.s, o.r, parse_variant(o.variant));
}

inline std::string format_list(const FRSParams& params, const std::vector<Message>& msgs) {
  std::string text;
  for (const auto& g : msgs) text += format_message(params, g);
  return text;
}

}  // namespace detail

/// Command-line entry point; returns the process exit status.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  detail::CliOptions o;
  CLI::App app{"Folded Reed-Solomon list decoding"};
  app.name("frs");
  app.require_subcommand(1);

  auto* encode_cmd = app.add_subcommand("encode", "encode a message (k+1 coefficients)");
  detail::add_code_flags(encode_cmd, o);
  detail::add_io_flags(encode_cmd, o);

  auto* corrupt_cmd = app.add_subcommand("corrupt", "corrupt exactly e folded symbols of a word");
  detail::add_code_flags(corrupt_cmd, o);
  corrupt_cmd->add_option("--errors", o.errors, "number of corrupted symbols")->required();
  corrupt_cmd->add_option("--channel", o.channel, "uniform, burst or fixed")
      ->check(CLI::IsMember({"uniform", "burst", "fixed"}))
      ->capture_default_str();
  corrupt_cmd->add_option("--positions", o.positions, "positions for the fixed channel");
  corrupt_cmd->add_option("--seed", o.seed, "random seed")->capture_default_str();
  detail::add_io_flags(corrupt_cmd, o);

  auto* decode_cmd = app.add_subcommand("decode", "list decode a received word");
  detail::add_code_flags(decode_cmd, o);
  detail::add_decoder_flags(decode_cmd, o);
  detail::add_io_flags(decode_cmd, o);

  auto* recover_cmd = app.add_subcommand("recover", "list recovery from per-position symbol sets");
  detail::add_code_flags(recover_cmd, o);
  detail::add_decoder_flags(recover_cmd, o);
  recover_cmd->add_option("--l", o.l, "bound on the set sizes");
  detail::add_io_flags(recover_cmd, o);

  auto* simulate_cmd = app.add_subcommand("simulate", "planted-message decoding trials as CSV");
  detail::add_code_flags(simulate_cmd, o);
  detail::add_decoder_flags(simulate_cmd, o);
  simulate_cmd->add_option("--errors", o.errors, "errors per trial (default: the guaranteed radius)");
  simulate_cmd->add_option("--trials", o.trials, "number of trials")->capture_default_str();
  simulate_cmd->add_option("--channel", o.channel, "uniform or burst")
      ->check(CLI::IsMember({"uniform", "burst"}))
      ->capture_default_str();
  simulate_cmd->add_option("--out", o.out, "output file (default stdout)");

  auto* bounds_cmd = app.add_subcommand("bounds", "decoding radius curves as CSV");
  bounds_cmd->add_option("--m", o.m_list, "folding parameter(s)")->required();
  bounds_cmd->add_option("--s", o.s_list, "interpolation variables");
  bounds_cmd->add_option("--r", o.r, "multiplicity")->capture_default_str();
  bounds_cmd->add_option("--step", o.step, "rate grid step")->capture_default_str();
  bounds_cmd->add_option("--out", o.out, "output file (default stdout)");

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force list of messages with agreement >= t");
  detail::add_code_flags(oracle_cmd, o);
  detail::add_decoder_flags(oracle_cmd, o);
  oracle_cmd->add_option("--t", o.t, "agreement threshold (default: the decoder's)");
  detail::add_io_flags(oracle_cmd, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (encode_cmd->parsed()) {
      const FRSParams params(o.q, o.m, o.k);
      const Message msg = parse_message(params, detail::read_input(o));
      detail::write_output(o, format_word(encode(params, msg)), out);
    } else if (corrupt_cmd->parsed()) {
      const FRSParams params(o.q, o.m, o.k);
      const FoldedWord w = parse_word(params, detail::read_input(o));
      ChannelSpec spec{parse_channel(o.channel), *o.errors, o.positions};
      std::mt19937_64 rng(o.seed);
      detail::write_output(o, format_word(apply_channel(params, w, spec, rng)), out);
    } else if (decode_cmd->parsed()) {
      const FRSParams params = detail::cli_params(o);
      const FoldedWord w = parse_word(params, detail::read_input(o));
      CandidateOptions opts;
      opts.seed = o.seed;
      const DecodeResult res = list_decode(params, w, opts);
      err << "D=" << res.stats.D << " t=" << res.t << " listed=" << res.messages.size() << "\n";
      detail::write_output(o, detail::format_list(params, res.messages), out);
    } else if (recover_cmd->parsed()) {
      const FRSParams params = detail::cli_params(o);
      const RecoverySets sets = parse_sets(params, detail::read_input(o));
      CandidateOptions opts;
      opts.seed = o.seed;
      std::optional<std::size_t> l;
      if (o.l) l = *o.l;
      const DecodeResult res = list_recover(params, sets, l, opts);
      err << "D=" << res.stats.D << " t=" << res.t << " listed=" << res.messages.size() << "\n";
      detail::write_output(o, detail::format_list(params, res.messages), out);
    } else if (simulate_cmd->parsed()) {
      const FRSParams params = detail::cli_params(o);
      std::uint32_t e = 0;
      if (o.errors) {
        e = *o.errors;
      } else {
        const auto g = decoding_guarantee(params);
        if (g.max_errors < 0) throw ParameterError("these parameters guarantee no error correction");
        e = static_cast<std::uint32_t>(g.max_errors);
      }
      const auto records = simulate(params, parse_channel(o.channel), e, o.trials, o.seed);
      detail::write_output(o, trials_csv(records), out);
    } else if (bounds_cmd->parsed()) {
      if (o.s_list.empty()) o.s_list = {1};
      detail::write_output(o, emit_bound_curves(o.m_list, o.s_list, o.r, o.step), out);
    } else if (oracle_cmd->parsed()) {
      const FRSParams params = detail::cli_params(o);
      const FoldedWord w = parse_word(params, detail::read_input(o));
      const std::uint32_t t = o.t ? *o.t : decoding_guarantee(params).t;
      detail::write_output(o, detail::format_list(params, oracle_decode(params, w, t)), out);
    }
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitRejected;
  }
  return kExitOk;
}

}  // namespace frs

#endif  // FRS_CLI_HPP
