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

#include <filesystem>
#include <sstream>

#include "frs/cli.hpp"

namespace frs {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int status;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "frs");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("frs_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(Cli, EncodeExample) {
  write_text_file(path("msg.txt"), "0 1\n");
  const auto r = run({"encode", "--q", "5", "--m", "2", "--k", "1", "--in", path("msg.txt"), "--out", path("cw.txt")});
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(read_text_file(path("cw.txt")), "1 2\n4 3\n");
}

TEST_F(Cli, DecodeUncorrupted) {
  write_text_file(path("msg.txt"), "5 0 11\n");
  ASSERT_EQ(run({"encode", "--q", "13", "--m", "3", "--k", "2", "--in", path("msg.txt"), "--out", path("cw.txt")}).status, 0);
  const auto r = run({"decode", "--q", "13", "--m", "3", "--k", "2", "--s", "2", "--r", "3", "--in", path("cw.txt")});
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out, "5 0 11\n");
}

TEST_F(Cli, CorruptThenDecodeAndOracle) {
  write_text_file(path("msg.txt"), "1 2 3\n");
  ASSERT_EQ(run({"encode", "--q", "13", "--m", "3", "--k", "2", "--in", path("msg.txt"), "--out", path("cw.txt")}).status, 0);
  auto r = run({"corrupt", "--q", "13", "--m", "3", "--k", "2", "--errors", "2", "--seed", "9", "--in", path("cw.txt"),
                "--out", path("rx.txt")});
  ASSERT_EQ(r.status, 0) << r.err;
  const FRSParams p(13, 3, 2);
  EXPECT_EQ(folded_distance(parse_word(p, read_text_file(path("cw.txt"))), parse_word(p, read_text_file(path("rx.txt")))), 2u);
  const auto dec = run({"decode", "--q", "13", "--m", "3", "--k", "2", "--s", "2", "--r", "3", "--in", path("rx.txt")});
  EXPECT_EQ(dec.status, 0) << dec.err;
  EXPECT_NE(dec.out.find("1 2 3\n"), std::string::npos);
  const auto orc = run({"oracle", "--q", "13", "--m", "3", "--k", "2", "--s", "2", "--r", "3", "--in", path("rx.txt")});
  EXPECT_EQ(orc.status, 0) << orc.err;
  EXPECT_EQ(orc.out, dec.out);

  r = run({"corrupt", "--q", "13", "--m", "3", "--k", "2", "--errors", "1", "--channel", "fixed", "--positions", "2",
           "--in", path("cw.txt")});
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(folded_distance(parse_word(p, read_text_file(path("cw.txt"))), parse_word(p, r.out)), 1u);
}

TEST_F(Cli, Recover) {
  const FRSParams p(13, 3, 1, 2, 2);
  const auto c1 = encode(p, make_message(p, {2, 5})), c2 = encode(p, make_message(p, {7, 1}));
  RecoverySets sets;
  for (std::uint32_t j = 0; j < p.N(); ++j) sets.sets.push_back({c1.symbols[j], c2.symbols[j]});
  write_text_file(path("sets.txt"), format_sets(sets));
  const auto r = run({"recover", "--q", "13", "--m", "3", "--k", "1", "--s", "2", "--r", "2", "--l", "2", "--in",
                      path("sets.txt")});
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("2 5\n"), std::string::npos);
  EXPECT_NE(r.out.find("7 1\n"), std::string::npos);
  EXPECT_EQ(run({"recover", "--q", "13", "--m", "3", "--k", "1", "--s", "2", "--r", "2", "--l", "1", "--in",
                 path("sets.txt")})
                .status,
            1);
}

TEST_F(Cli, BoundsExample) {
  const auto r = run({"bounds", "--m", "4", "--s", "2", "--r", "1000", "--out", path("curves.csv")});
  EXPECT_EQ(r.status, 0) << r.err;
  const std::string csv = read_text_file(path("curves.csv"));
  EXPECT_EQ(csv.rfind("R,rho_gs,rho_a,rho_b,rho_max,rho_svar,limit_23,capacity", 0), 0u);
  EXPECT_NE(csv.find("\n0.250000,0.500000,"), std::string::npos);
}

TEST_F(Cli, Simulate) {
  const auto r = run({"simulate", "--q", "13", "--m", "3", "--k", "2", "--s", "2", "--r", "3", "--trials", "3", "--seed",
                      "5", "--channel", "burst"});
  EXPECT_EQ(r.status, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "q,m,k,s,r,variant,channel,e,trial,success,list_size,ms");
  int rows = 0;
  while (std::getline(in, line)) {
    EXPECT_EQ(line.rfind("13,3,2,2,3,standard,burst,2,", 0), 0u) << line;
    ++rows;
  }
  EXPECT_EQ(rows, 3);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run({"encode", "--bogus"}).status, 64);
  EXPECT_EQ(run({}).status, 64);
  EXPECT_EQ(run({"decode", "--q", "13", "--m", "3"}).status, 64);
  EXPECT_EQ(run({"encode", "--q", "5", "--m", "2", "--k", "1", "--in", path("missing.txt")}).status, 2);
  write_text_file(path("bad.txt"), "0 9\n");
  EXPECT_EQ(run({"encode", "--q", "5", "--m", "2", "--k", "1", "--in", path("bad.txt")}).status, 2);
  write_text_file(path("cw.txt"), "1 2\n4 3\n");
  // Multiplicity large enough that the Y-degree check rejects it.
  EXPECT_EQ(run({"decode", "--q", "5", "--m", "2", "--k", "1", "--r", "6", "--in", path("cw.txt")}).status, 1);
  EXPECT_EQ(run({"encode", "--q", "4", "--m", "2", "--k", "1", "--in", path("cw.txt")}).status, 1);
  EXPECT_EQ(run({"--help"}).status, 0);
}

}  // namespace
}  // namespace frs
