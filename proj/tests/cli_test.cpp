// Copyright 2026 The pathgraph Authors
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

#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include <unistd.h>

#include "pathgraph/families.hpp"
#include "pathgraph/graph_io.hpp"
#include "test_graphs.hpp"

namespace pathgraph::tools {
namespace {

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

CliRun Cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliRun r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("pathgraph_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  std::filesystem::path dir_;
};

const char kH[] = "5 5\n0 1\n1 2\n2 3\n3 4\n1 3\n";
const char kC5[] = "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n";

TEST_F(CliTest, RecognizeC5) {
  const CliRun r = Cli({"recognize", "--input", Write("c5.txt", kC5)});
  EXPECT_EQ(r.code, kExitNo);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("verdict"), "not-path-graph");
  EXPECT_EQ(j.at("certificate").at("family"), "F0");
  EXPECT_EQ(j.at("certificate").at("parameter"), 5);
}

TEST_F(CliTest, RecognizeH) {
  const CliRun r = Cli({"recognize", "--input", Write("h.txt", kH)});
  EXPECT_EQ(r.code, kExitYes);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("verdict"), "path-graph");
  EXPECT_EQ(j.at("tree").at("cliques").size(), 3u);
}

TEST_F(CliTest, RecognizeMalformed) {
  const CliRun r = Cli({"recognize", "--input", Write("bad.txt", "3 1\n0 7\n")});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
  EXPECT_EQ(Cli({"recognize", "--input", (dir_ / "missing").string()}).code, kExitUsage);
  EXPECT_EQ(Cli({"recognize"}).code, kExitUsage);
  EXPECT_EQ(Cli({"recognize", "--graph6", "Cl", "--format", "xml"}).code, kExitUsage);
}

TEST_F(CliTest, ExitCodeIndependentOfFormat) {
  for (const std::string format : {"json", "dot", "text"}) {
    EXPECT_EQ(Cli({"recognize", "--graph6", "Cl", "--format", format}).code, kExitNo);
    EXPECT_EQ(Cli({"recognize", "--graph6", "DjC", "--format", format}).code, kExitYes);
  }
}

TEST_F(CliTest, DotOutputParses) {
  for (const std::string& g6 : std::vector<std::string>{"DjC", "Cl", to_graph6(generate(make_family(11, 8)))}) {
    const CliRun r = Cli({"recognize", "--graph6", g6, "--format", "dot"});
    EXPECT_EQ(pathgraph::testing::DotChecker(r.out).Check(), "") << r.out;
  }
  const CliRun o = Cli({"oracle", "--graph6", "DjC", "--format", "dot"});
  EXPECT_EQ(pathgraph::testing::DotChecker(o.out).Check(), "") << o.out;
}

TEST_F(CliTest, TextOutput) {
  const CliRun yes = Cli({"recognize", "--input", Write("h.txt", "# names: a b c d e\n" +
                                                                  std::string(kH)),
                       "--format", "text"});
  EXPECT_NE(yes.out.find("path graph: 3 maximal cliques"), std::string::npos) << yes.out;
  EXPECT_NE(yes.out.find("{b, c, d}"), std::string::npos) << yes.out;
  const CliRun no = Cli({"recognize", "--graph6", "Cl", "--format", "text"});
  EXPECT_NE(no.out.find("induced F0(4)"), std::string::npos) << no.out;
}

TEST_F(CliTest, Stats) {
  const CliRun r = Cli({"recognize", "--graph6", to_graph6(generate(make_family(6))), "--stats"});
  EXPECT_EQ(r.code, kExitNo);
  EXPECT_NE(r.err.find("subproblems="), std::string::npos);
}

TEST_F(CliTest, Generate) {
  const CliRun c6 = Cli({"generate", "F0", "6"});
  EXPECT_EQ(c6.code, kExitYes);
  EXPECT_EQ(parse_edge_list(c6.out), pathgraph::testing::Cycle(6));

  const CliRun f11 = Cli({"generate", "--family", "F11", "--param", "8"});
  const Graph g = parse_edge_list(f11.out);
  EXPECT_EQ(g.order(), 8);
  EXPECT_EQ(g.size(), 15);
  EXPECT_EQ(g.name(0), "a");

  const CliRun bad = Cli({"generate", "F11", "9"});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_NE(bad.err.find("0 mod 4"), std::string::npos) << bad.err;

  EXPECT_EQ(Cli({"generate", "F2", "7"}).code, kExitUsage);
  EXPECT_EQ(Cli({"generate", "F5"}).code, kExitUsage);
  EXPECT_EQ(Cli({"generate", "F99"}).code, kExitUsage);
  const CliRun g6 = Cli({"generate", "F0", "4", "--format", "graph6"});
  EXPECT_EQ(g6.out, "Cl\n");
}

TEST_F(CliTest, ValidateRoundTripsRecognizeOutput) {
  const std::string graph = Write("f6.txt", to_edge_list(generate(make_family(6))));
  const CliRun rec = Cli({"recognize", "--input", graph});
  ASSERT_EQ(rec.code, kExitNo);
  const std::string cert = Write("cert.json", rec.out);
  const CliRun ok = Cli({"validate", "--input", graph, "--certificate", cert, "--minimal"});
  EXPECT_EQ(ok.code, kExitYes) << ok.out << ok.err;
  EXPECT_NE(ok.out.find("valid: induced F6"), std::string::npos);
  EXPECT_NE(ok.out.find("minimal"), std::string::npos);

  const CliRun wrong = Cli({"validate", "--input", Write("k8.txt", to_edge_list(pathgraph::testing::Complete(8))),
                         "--certificate", cert});
  EXPECT_EQ(wrong.code, kExitNo);
  EXPECT_EQ(Cli({"validate", "--input", graph, "--certificate", Write("junk.json", "{")}).code,
            kExitUsage);
}

TEST_F(CliTest, Oracle) {
  const CliRun yes = Cli({"oracle", "--graph6", "DjC"});
  EXPECT_EQ(yes.code, kExitYes);
  EXPECT_EQ(nlohmann::json::parse(yes.out).at("status"), "tree");
  EXPECT_EQ(Cli({"oracle", "--graph6", to_graph6(generate(make_family(11, 8)))}).code, kExitNo);
  const CliRun over = Cli({"oracle", "--graph6", to_graph6(pathgraph::testing::Star(9)),
                        "--budget-cliques", "4"});
  EXPECT_EQ(over.code, kExitOverBudget);
  EXPECT_EQ(nlohmann::json::parse(over.out).at("status"), "over-budget");
}

TEST_F(CliTest, SmallSweep) {
  const CliRun r = Cli({"sweep", "--samples", "200", "--seed", "1", "--order", "8", "--max-order",
                     "4"});
  EXPECT_EQ(r.code, kExitYes) << r.out;
  EXPECT_NE(r.out.find("seed=1"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Cli({}).code, kExitUsage);
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Cli({"recognize", "--graph6", "Cl", "--input", "x"}).code, kExitUsage);
  EXPECT_EQ(Cli({"--help"}).code, kExitYes);
}

}  // namespace
}  // namespace pathgraph::tools
