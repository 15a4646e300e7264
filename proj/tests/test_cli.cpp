// Copyright 2026 The unifac Authors
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

#include "test_support.hpp"
#include "unifac/cli.hpp"
#include "unifac/factorizer.hpp"
#include "unifac/io.hpp"
#include "unifac/oracle.hpp"

namespace unifac {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("unifac_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  int run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return cli::run(args, out_, err_);
  }

  void write(const std::string& name, const std::string& text) { io::write_file(path(name), text); }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, ComposeZeroParametersGivesIdentity) {
  write("p.json", io::format_params({ParameterSet::zeros(3), false}));
  ASSERT_EQ(run({"compose", "--in", path("p.json"), "--out", path("m.json")}), cli::kOk);
  EXPECT_EQ(io::parse_matrix(io::read_file(path("m.json"))), ComplexMatrix::identity(3));
  EXPECT_TRUE(out_.str().empty());
  EXPECT_NE(err_.str().find("unitarity defect"), std::string::npos);
}

TEST_F(CliTest, ComposeQuarterTurn) {
  write("p.json", R"({"n": 2, "angles": [0.78539816339744828], "phases": [0, 0, 0]})");
  ASSERT_EQ(run({"compose", "--in", path("p.json"), "--out", "-"}), cli::kOk);
  const ComplexMatrix m = io::parse_matrix(out_.str());
  const double h = std::sqrt(2.0) / 2.0;
  EXPECT_LE(testing::max_abs_diff(m, ComplexMatrix(2, {h, -h, h, h})), 1e-15);
}

TEST_F(CliTest, ComposeSpecialUnitaryFlag) {
  const auto p = random_parameters({4, 2, RandomKind::random_parameters});
  write("p.json", io::format_params({p, false}));
  ASSERT_EQ(run({"compose", "--special-unitary", "--in", path("p.json"), "--out", path("m.json")}),
            cli::kOk);
  EXPECT_LE(std::abs(determinant(io::parse_matrix(io::read_file(path("m.json")))) - 1.0), 1e-12);

  write("q.json", io::format_params({p, true}));
  ASSERT_EQ(run({"compose", "--in", path("q.json"), "--out", path("n.json")}), cli::kOk);
  EXPECT_EQ(io::read_file(path("m.json")), io::read_file(path("n.json")));
}

TEST_F(CliTest, DecomposeIdentity) {
  write("i.json", io::format_matrix(ComplexMatrix::identity(4)));
  ASSERT_EQ(run({"decompose", "--in", path("i.json"), "--out", path("p.json")}), cli::kOk);
  EXPECT_EQ(io::parse_params(io::read_file(path("p.json"))).params, ParameterSet::zeros(4));
}

TEST_F(CliTest, ParameterRoundTripThroughFiles) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto p = random_parameters({6, seed, RandomKind::random_parameters});
    write("p.json", io::format_params({p, false}));
    ASSERT_EQ(run({"compose", "--in", path("p.json"), "--out", path("m.json")}), cli::kOk);
    ASSERT_EQ(run({"decompose", "--in", path("m.json"), "--out", path("q.json")}), cli::kOk);
    const auto q = io::parse_params(io::read_file(path("q.json"))).params;
    for (std::size_t i = 0; i < p.angles().size(); ++i) EXPECT_NEAR(q.angles()[i], p.angles()[i], 1e-9);
    for (std::size_t i = 0; i < p.phases().size(); ++i) EXPECT_NEAR(q.phases()[i], p.phases()[i], 1e-9);
  }
}

TEST_F(CliTest, DecomposeRejectsNonUnitary) {
  write("half.json", R"({"n": 2, "entries": [[[0.5, 0], [0.5, 0]], [[0.5, 0], [0.5, 0]]]})");
  EXPECT_EQ(run({"decompose", "--in", path("half.json"), "--out", path("p.json")}), cli::kNotUnitary);
  EXPECT_NE(err_.str().find("defect"), std::string::npos);
  EXPECT_FALSE(fs::exists(path("p.json")));
}

TEST_F(CliTest, DecomposeToleranceFlag) {
  ComplexMatrix a = random_unitary({3, 1, RandomKind::haar_unitary});
  a(0, 0) += 1e-6;
  write("a.json", io::format_matrix(a));
  EXPECT_EQ(run({"decompose", "--in", path("a.json"), "--out", path("p.json")}), cli::kNotUnitary);
  EXPECT_EQ(run({"decompose", "--tolerance", "1e-5", "--in", path("a.json"), "--out", path("p.json")}),
            cli::kOk);
}

TEST_F(CliTest, ParseAndShapeErrors) {
  write("bad.json", "{ nope");
  EXPECT_EQ(run({"compose", "--in", path("bad.json"), "--out", path("m.json")}), cli::kParseError);
  EXPECT_EQ(run({"decompose", "--in", path("bad.json"), "--out", path("m.json")}), cli::kParseError);
  EXPECT_EQ(run({"compose", "--in", path("missing.json"), "--out", path("m.json")}), cli::kParseError);

  write("short.json", R"({"n": 3, "angles": [0.1], "phases": [0, 0, 0, 0, 0, 0]})");
  EXPECT_EQ(run({"compose", "--in", path("short.json"), "--out", path("m.json")}), cli::kShapeError);
  write("rows.json", R"({"n": 2, "entries": [[[1, 0], [0, 0]]]})");
  EXPECT_EQ(run({"decompose", "--in", path("rows.json"), "--out", path("p.json")}), cli::kShapeError);
}

TEST_F(CliTest, BadFlags) {
  EXPECT_EQ(run({}), cli::kParseError);
  EXPECT_EQ(run({"frobnicate"}), cli::kParseError);
  EXPECT_EQ(run({"random", "--n", "3"}), cli::kParseError);
  EXPECT_EQ(run({"random", "--n", "0", "--out", "-"}), cli::kParseError);
  EXPECT_EQ(run({"random", "--n", "x", "--out", "-"}), cli::kParseError);
  EXPECT_EQ(run({"random", "--n", "3", "--kind", "gaussian", "--out", "-"}), cli::kParseError);
  EXPECT_EQ(run({"--help"}), cli::kOk);
}

TEST_F(CliTest, WeylWritesConjugatorAndReconstruction) {
  const double t = 0.4, p1 = 0.3, p2 = 2.0, p3 = 5.0;
  write("p.json", io::format_params({ParameterSet(2, {t}, {p1, p2, p3}), false}));
  ASSERT_EQ(run({"weyl", "--in", path("p.json"), "--out", path("w.json"), path("W.json")}), cli::kOk);
  const auto big_w = io::parse_matrix(io::read_file(path("W.json")));
  EXPECT_LE(testing::max_abs_diff(big_w, testing::closed_form_w2(t, p1, p2, p3)), 1e-14);
  EXPECT_LE(unitarity_defect(io::parse_matrix(io::read_file(path("w.json")))), 1e-14);
  EXPECT_NE(err_.str().find("eigenrelation residual"), std::string::npos);

  EXPECT_EQ(run({"weyl", "--in", path("p.json"), "--out", path("w.json")}), cli::kParseError);
}

TEST_F(CliTest, WeylEqualPhases) {
  write("p.json", io::format_params({ParameterSet(3, {0.2, 0.9, 1.1}, std::vector<double>(6, 0.8)), false}));
  ASSERT_EQ(run({"weyl", "--in", path("p.json"), "--out", path("w.json"), path("W.json")}), cli::kOk);
  ComplexMatrix expected = ComplexMatrix::identity(3);
  for (auto& z : expected.entries()) z *= std::polar(1.0, 0.8);
  EXPECT_LE(frobenius_distance(io::parse_matrix(io::read_file(path("W.json"))), expected), 1e-14);
}

TEST_F(CliTest, VerifyMatchedMismatchedAndIdentity) {
  const auto p = random_parameters({5, 1, RandomKind::random_parameters});
  const auto q = random_parameters({5, 2, RandomKind::random_parameters});
  write("m.json", io::format_matrix(compose(p)));
  write("p.json", io::format_params({p, false}));
  write("q.json", io::format_params({q, false}));
  EXPECT_EQ(run({"verify", "--in", path("m.json"), path("p.json")}), cli::kOk);
  EXPECT_EQ(run({"verify", "--in", path("m.json"), path("q.json")}), cli::kVerifyFailed);

  write("i.json", io::format_matrix(ComplexMatrix::identity(3)));
  write("z.json", io::format_params({ParameterSet::zeros(3), false}));
  ASSERT_EQ(run({"verify", "--in", path("i.json"), path("z.json")}), cli::kOk);
  EXPECT_NE(err_.str().find("residual: 0\n"), std::string::npos);

  EXPECT_EQ(run({"verify", "--in", path("i.json"), path("p.json")}), cli::kShapeError);
}

TEST_F(CliTest, RandomIsDeterministicAndCountsMatch) {
  ASSERT_EQ(run({"random", "--n", "4", "--seed", "7", "--kind", "haar_unitary", "--out", path("a.json")}),
            cli::kOk);
  ASSERT_EQ(run({"random", "--n", "4", "--seed", "7", "--kind", "haar_unitary", "--out", path("b.json")}),
            cli::kOk);
  EXPECT_EQ(io::read_file(path("a.json")), io::read_file(path("b.json")));

  ASSERT_EQ(run({"random", "--kind", "random_parameters", "--n", "3", "--out", "-"}), cli::kOk);
  const auto doc = io::parse_params(out_.str());
  EXPECT_EQ(doc.params.angles().size(), 3u);
  EXPECT_EQ(doc.params.phases().size(), 6u);

  ASSERT_EQ(run({"random", "--kind", "haar_orthogonal", "--n", "5", "--out", "-"}), cli::kOk);
  const auto o = io::parse_matrix(out_.str());
  for (const auto& z : o.entries()) EXPECT_EQ(z.imag(), 0.0);
}

TEST_F(CliTest, SoAndGivens) {
  write("p.json", io::format_params({ParameterSet::zeros(3), false}));
  ASSERT_EQ(run({"so", "--reflect", "--in", path("p.json"), "--out", "-"}), cli::kOk);
  ComplexMatrix flip = ComplexMatrix::identity(3);
  flip(2, 2) = -1.0;
  EXPECT_EQ(io::parse_matrix(out_.str()), flip);

  write("q.json", R"({"n": 3, "angles": [0.1, 0.2, 0.3], "phases": [0, 0, 0, 0, 0, 0]})");
  ASSERT_EQ(run({"givens", "--in", path("q.json"), "--out", "-"}), cli::kOk);
  EXPECT_NE(out_.str().find("{\"level\": 1, \"blocks\": [{\"plane\": 2, \"angle\": 0.29999999999999999}]}"),
            std::string::npos);
}

}  // namespace
}  // namespace unifac
