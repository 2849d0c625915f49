#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

fs::path scratch(const std::string& name) {
  return fs::temp_directory_path() / ("pack2dom_cli_" + std::to_string(getpid()) + "_" + name);
}

// Runs the CLI with `args`; `input` is fed on stdin. stderr is discarded.
CliRun run(const std::string& args, const std::string& input = "") {
  static int calls = 0;
  const fs::path in = scratch("stdin_" + std::to_string(calls++));
  {
    std::ofstream f(in, std::ios::binary);
    f << input;
  }
  const std::string cmd =
      std::string(PACK2DOM_CLI_PATH) + " " + args + " < " + in.string() + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  fs::remove(in);
  return r;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, HelpAndUsage) {
  EXPECT_EQ(run("--help").code, 0);
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("frobnicate").code, 1);
  EXPECT_EQ(run("survey").code, 1);
  EXPECT_EQ(run("invariants --out-format xml -").code, 1);
}

TEST(Cli, InvariantsOfK4FromEdgeList) {
  const CliRun r = run("invariants -", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  ASSERT_EQ(r.code, 0);
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 1u);
  const Json j = Json::parse(rows[0]);
  EXPECT_EQ(j["gamma"], 1);
  EXPECT_EQ(j["nu2"], 4);
  EXPECT_EQ(j["beta"], 3);
  EXPECT_EQ(j["alpha"], 1);
  EXPECT_EQ(j["max_degree"], 3);
  EXPECT_EQ(j["connected"], true);
}

TEST(Cli, InvariantsErrors) {
  EXPECT_EQ(run("invariants --format graph6 -", "C~\nC\n").code, 2);
  EXPECT_EQ(run("invariants /nonexistent/file.g6").code, 2);
  const CliRun empty = run("invariants -", "");
  EXPECT_EQ(empty.code, 0);
  EXPECT_TRUE(empty.out.empty());
  // 45 vertices is beyond the exact solvers' default range.
  std::string big = "45 44\n";
  for (int v = 0; v < 44; ++v) big += std::to_string(v) + " " + std::to_string(v + 1) + "\n";
  EXPECT_EQ(run("invariants --format edgelist -", big).code, 3);
}

TEST(Cli, CsvAndJsonCarryTheSameData) {
  const std::string input = "C~\nDhC\nIheA@GUAo\n";
  const CliRun json = run("invariants -", input);
  const CliRun csv = run("invariants --out-format csv -", input);
  ASSERT_EQ(json.code, 0);
  ASSERT_EQ(csv.code, 0);
  const auto json_rows = lines(json.out);
  const auto csv_rows = lines(csv.out);
  ASSERT_EQ(csv_rows.size(), json_rows.size() + 1);
  std::vector<std::string> header;
  {
    std::istringstream h(csv_rows[0]);
    std::string cell;
    while (std::getline(h, cell, ',')) header.push_back(cell);
  }
  for (std::size_t i = 0; i < json_rows.size(); ++i) {
    const Json j = Json::parse(json_rows[i]);
    std::istringstream row(csv_rows[i + 1]);
    std::string cell;
    for (const std::string& key : header) {
      ASSERT_TRUE(std::getline(row, cell, ','));
      const Json& v = j.at(key);
      EXPECT_EQ(v.is_string() ? v.get<std::string>() : v.dump(), cell) << key;
    }
  }
}

TEST(Cli, Generate) {
  const CliRun r = run("generate -s 1 -t 1 --format graph6");
  ASSERT_EQ(r.code, 0);
  ASSERT_EQ(lines(r.out).size(), 1u);
  EXPECT_EQ(r.out[0] - 63, 8);  // order byte

  EXPECT_EQ(run("generate -s 0 -t 1").code, 4);
  EXPECT_EQ(run("generate -s 1 -t 0").code, 4);

  const CliRun roles = run("generate -s 2 -t 3 --roles");
  ASSERT_EQ(roles.code, 0);
  const auto out = lines(roles.out);
  ASSERT_EQ(out.size(), 2u);
  const Json j = Json::parse(out[1]);
  EXPECT_EQ(j["p"].size(), 2u);
  EXPECT_EQ(j["q"].size(), 2u);
  EXPECT_EQ(j["w"].size(), 3u);
  EXPECT_EQ(j["v"].size(), 5u);

  const CliRun edges = run("generate -s 1 -t 2 --format edgelist");
  ASSERT_EQ(edges.code, 0);
  EXPECT_EQ(lines(edges.out)[0], "9 8");
}

TEST(Cli, RecognizeRoundTrip) {
  const CliRun gen = run("generate -s 2 -t 3");
  ASSERT_EQ(gen.code, 0);
  const CliRun r = run("recognize -", gen.out);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "T(2,3,6)\n");
  // C6, then a spider with three 2-legs and no leaf.
  const CliRun rej = run("recognize --format edgelist -",
                      "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n"
                      "7 6\n0 1\n1 2\n0 3\n3 4\n0 5\n5 6\n");
  EXPECT_EQ(rej.code, 0);
  EXPECT_EQ(rej.out, "reject: not-a-tree\nreject: no-leaf-leg\n");
  EXPECT_EQ(run("recognize -", "C\n").code, 2);
}

TEST(Cli, EnumerateMatchesCounts) {
  const CliRun r = run("enumerate --builtin 5");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).size(), 21u);
  EXPECT_EQ(run("enumerate --builtin 9").code, 3);
}

TEST(Cli, SurveyBuiltinSeven) {
  const fs::path reports = scratch("reports7.jsonl");
  const CliRun r = run("survey --builtin 7 --workers 2 --output " + reports.string());
  ASSERT_EQ(r.code, 0);
  const Json s = Json::parse(r.out);
  EXPECT_EQ(s["graphs"], 853);
  EXPECT_TRUE(s["counterexamples"].empty());
  for (const auto& [claim, totals] : s["claims"].items()) EXPECT_EQ(totals["fail"], 0) << claim;
  EXPECT_EQ(lines(read_file(reports)).size(), 853u);
  fs::remove(reports);
}

TEST(Cli, SurveyCorpusAndErrors) {
  EXPECT_EQ(run("survey --corpus /nonexistent/missing.g6").code, 2);
  EXPECT_EQ(run("survey --corpus -", "C~\nC\n").code, 2);
  EXPECT_EQ(run("survey --builtin 9").code, 3);
  const CliRun ok = run("survey --corpus - --out-format text", "C~\nA?\n");
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("1 graphs, 1 disconnected skipped"), std::string::npos) << ok.out;
  const CliRun csv = run("survey --corpus - --out-format csv", "C~\n");
  EXPECT_EQ(lines(csv.out).size(), 11u);
}

TEST(Cli, SurveyIsByteIdentical) {
  const fs::path a = scratch("a.jsonl");
  const fs::path b = scratch("b.jsonl");
  const CliRun ra = run("survey --builtin 6 --workers 1 --output " + a.string());
  const CliRun rb = run("survey --builtin 6 --workers 3 --output " + b.string());
  ASSERT_EQ(ra.code, 0);
  ASSERT_EQ(rb.code, 0);
  EXPECT_EQ(ra.out, rb.out);
  EXPECT_EQ(read_file(a), read_file(b));
  fs::remove(a);
  fs::remove(b);
}

TEST(Cli, SolverBoundEnvironment) {
  // With the exact solvers capped at 4 vertices every report is NA.
  const CliRun r = run("survey --builtin 5 --out-format json");
  const std::string cmd_prefix = "PACK2DOM_SOLVER_BOUND=exact_vertices=4 ";
  const std::string cmd = cmd_prefix + PACK2DOM_CLI_PATH + " survey --builtin 5 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string out;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  pclose(pipe);
  EXPECT_EQ(Json::parse(out)["solver_na"], 21);
  EXPECT_EQ(Json::parse(r.out)["solver_na"], 0);
}
