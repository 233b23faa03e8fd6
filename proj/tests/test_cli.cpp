#include <algorithm>
#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun xint(const std::string& args) {
  const std::string cmd = std::string(XINT_CLI) + " " + args + " 2>/dev/null";
  CliRun run;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return run;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) run.out.append(buf, got);
  const int status = pclose(pipe);
  run.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return run;
}

json xint_json(const std::string& args, int expected_code = 0) {
  const CliRun r = xint(args);
  EXPECT_EQ(r.code, expected_code) << args;
  return json::parse(r.out);
}

std::string temp_path(const std::string& name) { return std::string(XINT_TMP) + "/" + name; }

}  // namespace

TEST(Cli, Enumerate) {
  const json j = xint_json("enumerate --graph cycle:5 --r 2");
  EXPECT_EQ(j.at("count"), 5);
  EXPECT_EQ(j.at("family").size(), 5u);
  EXPECT_EQ(xint("enumerate --graph cliques:2,3 --r 2 --count-only").out, "6\n");
  EXPECT_EQ(xint("enumerate --graph empty:4 --r 2 --star 1 --count-only").out, "3\n");
}

TEST(Cli, Mu) { EXPECT_EQ(xint_json("mu --graph matching:3").at("mu"), 3); }

TEST(Cli, Search) {
  EXPECT_EQ(xint_json("search --graph empty:4 --r 2 --k 3").at("value"), 9);
  const json c5 = xint_json("search --graph cycle:5 --r 2 --k 2 --engine naive");
  EXPECT_EQ(c5.at("value"), 5);
  EXPECT_EQ(c5.at("engine"), "naive");
  EXPECT_EQ(xint_json("search --graph matching:3 --r 2 --k 2 --enumerate-optima").at("count"), 2);
  EXPECT_EQ(xint_json("search --graph matching:3 --r 2 --intersecting").at("value"), 4);
  EXPECT_EQ(xint_json("search --graph matching:3 --r 2 --intersecting --enumerate-optima").at("count"), 6);
}

TEST(Cli, StableOutputIsByteIdentical) {
  const std::string args = "search --graph cycle:9 --r 3 --k 3 --stable";
  const CliRun a = xint(args);
  EXPECT_EQ(a.out, xint(args).out);
  EXPECT_EQ(json::parse(a.out).contains("nodes"), false);
  const std::string v = "verify conjecture --n-max 7 --seeds 30 --seed 4 --stable";
  EXPECT_EQ(xint(v).out, xint(v).out);
}

TEST(Cli, Verify) {
  EXPECT_EQ(xint_json("verify hilton --n 4 --r 2 --k 3").at("pass"), true);
  EXPECT_EQ(xint_json("verify cycle --n 7 --r 3").at("pass"), true);
  const json c = xint_json("verify conjecture --n-max 8 --seeds 100");
  EXPECT_EQ(c.at("pass"), true);
  EXPECT_EQ(c.at("notable"), false);
  EXPECT_EQ(xint_json("verify union-cliques --sizes 2,3 --r 2 --k 2").at("achieved"), 6);
  EXPECT_EQ(xint_json("verify chordal --graph path:4 --r 1").at("achieved"), 4);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(xint("verify hilton --n 4 --r 3 --k 2").code, 2);
  EXPECT_EQ(xint("verify union-cliques --r 1 --k 2").code, 2);
  EXPECT_EQ(xint("verify nonsense").code, 2);
  EXPECT_EQ(xint("enumerate --graph wheel:5 --r 1").code, 2);
  EXPECT_EQ(xint("enumerate --r 1").code, 2);
  EXPECT_EQ(xint("enumerate --graph cycle:5 --graph-file x.json --r 1").code, 2);
  EXPECT_EQ(xint("search --graph empty:7 --r 2 --engine naive").code, 2);
  EXPECT_EQ(xint("search --graph empty:8 --r 3 --k 3 --budget 2").code, 3);
  EXPECT_EQ(xint("chordal-check --graph cycle:4").code, 1);
}

TEST(Cli, GraphFileAndOutputFile) {
  const std::string in = temp_path("c5.json");
  std::ofstream(in) << R"({"n": 5, "edges": [[1,2],[2,3],[3,4],[4,5],[5,1]]})";
  const std::string out = temp_path("c5_out.json");
  EXPECT_EQ(xint("enumerate --graph-file " + in + " --r 2 --output " + out).code, 0);
  std::ifstream f(out);
  EXPECT_EQ(json::parse(f).at("count"), 5);
  EXPECT_EQ(xint("mu --graph-file " + temp_path("missing.json")).code, 2);
}

TEST(Cli, ChordalCheck) {
  const json yes = xint_json("chordal-check --graph path:3");
  EXPECT_EQ(yes.at("ordering"), json::parse("[1,2,3]"));
  const json no = xint_json("chordal-check --graph cycle:5", 1);
  EXPECT_EQ(no.at("chordal"), false);
  auto cycle = no.at("induced_cycle").get<std::vector<int>>();
  std::sort(cycle.begin(), cycle.end());
  EXPECT_EQ(cycle, (std::vector<int>{1, 2, 3, 4, 5}));
}

TEST(Cli, CompressDemo) {
  const json c = xint_json("compress-demo --graph path:3 --a '[[2]]' --b '[[2]]' --v1 1 --vi 2");
  EXPECT_EQ(c.at("shifted").at("A"), json::parse("[[1]]"));
  EXPECT_EQ(c.at("down_vi").at("A"), json::array());
  const json s = xint_json("compress-demo --graph cycle:5 --mode cycle --a '[[3,5],[1,3]]' --r 2");
  EXPECT_EQ(s.at("A").at("through_high"), json::parse("[[3]]"));
  EXPECT_EQ(s.at("claims_hold"), true);
  EXPECT_EQ(xint("compress-demo --graph path:3 --a '[[1]]' --b '[[3]]' --v1 1 --vi 2").code, 2);
}

TEST(Cli, Grid) {
  const CliRun r = xint("grid cycle --n-max 6 --stable --jobs 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "theorem,params,bound,achieved,branch,pass,notable,runtime_ms");
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1 + 9);
  EXPECT_EQ(r.out, xint("grid cycle --n-max 6 --stable --jobs 1").out);
  const CliRun aborted = xint("grid hilton --n-max 8 --budget 50 --stable");
  EXPECT_EQ(aborted.code, 3);
  EXPECT_EQ(aborted.out.rfind("theorem,params", 0), 0u);
}
