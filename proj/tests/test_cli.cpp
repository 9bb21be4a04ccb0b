#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

// end-to-end tests driving the installed front end; the binary path arrives
// as the last command-line argument
static std::string g_binary;

struct RunResult {
  int code = -1;
  std::string out;
};

static RunResult run_cli(const std::string& args) {
  std::string cmd = g_binary + " " + args + " 2>/dev/null";
  RunResult res;
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return res;
  char buf[4096];
  size_t k;
  while ((k = fread(buf, 1, sizeof buf, f)) > 0) res.out.append(buf, k);
  int st = pclose(f);
  res.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return res;
}

static nlohmann::json parse_normalized(const std::string& s) {
  auto j = nlohmann::json::parse(s);
  if (j.contains("checks"))
    for (auto& c : j["checks"]) c["ms"] = 0.0;
  return j;
}

TEST_CASE("threshold command: brute force confirms the closed form") {
  auto res = run_cli("rbound --p 3 --m 2 --n 1 --format json");
  REQUIRE(res.code == 0);
  auto j = nlohmann::json::parse(res.out);
  CHECK(j["command"] == "rbound");
  CHECK(j["pass"] == true);
  REQUIRE(j["checks"].size() == 1);
  const auto& row = j["checks"][0];
  CHECK(row["claim_id"] == "rbound-m2-n1-p3");
  CHECK(row["computed"] == "4");
  CHECK(row["expected"] == "4");
  CHECK(row["provenance"] == "oracle");
  CHECK(row["pass"] == true);
  CHECK(row["ms"].is_number());
}

TEST_CASE("threshold command: characteristic zero and ranges") {
  auto res = run_cli("rbound --p 0 --m 1 --n 1 --format json");
  REQUIRE(res.code == 0);
  auto j = nlohmann::json::parse(res.out);
  CHECK(j["checks"][0]["computed"] == "3");

  auto grid = run_cli("rbound --p 3 --m 1..2 --n 1 --format json");
  REQUIRE(grid.code == 0);
  auto jg = nlohmann::json::parse(grid.out);
  REQUIRE(jg["checks"].size() == 2);
  CHECK(jg["checks"][0]["claim_id"] == "rbound-m1-n1-p3");
  CHECK(jg["checks"][1]["claim_id"] == "rbound-m2-n1-p3");
}

TEST_CASE("threshold command: oversized instances are reported as skipped") {
  auto res = run_cli("rbound --p 5 --m 7 --n 7 --format json");
  REQUIRE(res.code == 0);
  auto j = nlohmann::json::parse(res.out);
  CHECK(j["checks"][0]["computed"] == "skipped (over limit)");
  CHECK(j["checks"][0]["expected"] == "33");
  CHECK(j["checks"][0]["pass"] == true);
}

TEST_CASE("commutant dimension command") {
  auto res = run_cli("endodim --p 3 --m 2 --n 1 --r 5 --format json");
  REQUIRE(res.code == 0);
  auto j = nlohmann::json::parse(res.out);
  CHECK(j["checks"][0]["claim_id"] == "endodim-m2-n1-p3-r5");
  CHECK(j["checks"][0]["computed"] == "delta_p 120, delta_0 120, equal true");

  auto char0 = run_cli("endodim --p 0 --m 1 --n 1 --r 5 --format json");
  REQUIRE(char0.code == 0);
  auto j0 = nlohmann::json::parse(char0.out);
  CHECK(j0["checks"][0]["computed"] == "delta_0 70");
}

TEST_CASE("lattice command: rank, index, generators") {
  auto res = run_cli("sigma --p 3 --m 1 --n 1 --r 3 --format json");
  REQUIRE(res.code == 0);
  auto j = nlohmann::json::parse(res.out);
  REQUIRE(j["checks"].size() == 2);
  CHECK(j["checks"][0]["claim_id"] == "sigma-rank-m1-n1-p3-r3");
  CHECK(j["checks"][0]["computed"] == "6");
  CHECK(j["checks"][1]["claim_id"] == "sigma-index-m1-n1-p3-r3");
  CHECK(j["checks"][1]["computed"] == "3^0");

  auto gen = run_cli("sigma --p 3 --m 2 --n 1 --r 5 --extras skew:1 --format json");
  REQUIRE(gen.code == 0);
  auto jg = nlohmann::json::parse(gen.out);
  REQUIRE(jg["checks"].size() == 3);
  CHECK(jg["checks"][1]["computed"] == "3^1");
  CHECK(jg["checks"][2]["claim_id"] == "sigma-generators-m2-n1-p3-r5");
  CHECK(jg["checks"][2]["computed"] == "spans saturation");

  // overdrawn denominator: the command runs but the check fails
  auto bad = run_cli("sigma --p 3 --m 2 --n 1 --r 5 --extras skew:2 --format json");
  CHECK(bad.code == 1);
  auto jb = nlohmann::json::parse(bad.out);
  CHECK(jb["pass"] == false);
  std::string computed = jb["checks"][2]["computed"];
  CHECK(computed.find("divisibility failure") == 0);
}

TEST_CASE("survey command") {
  auto res = run_cli("scan --p 3 --m 1 --n 1 --r 2..4 --format json");
  REQUIRE(res.code == 0);
  auto j = nlohmann::json::parse(res.out);
  REQUIRE(j["checks"].size() == 3);
  for (const auto& row : j["checks"]) {
    std::string computed = row["computed"];
    CHECK(computed.find("equal true") != std::string::npos);
    CHECK(computed.find("surjective true") != std::string::npos);
    CHECK(computed.find("necessary-condition true") != std::string::npos);
  }

  auto res21 = run_cli("scan --p 3 --m 2 --n 1 --r 2 --format json");
  REQUIRE(res21.code == 0);
  auto j21 = nlohmann::json::parse(res21.out);
  std::string computed = j21["checks"][0]["computed"];
  CHECK(computed.find("necessary-condition false") != std::string::npos);
}

TEST_CASE("json rows always carry the full schema") {
  auto res = run_cli("endodim --p 3 --m 1 --n 1 --r 2..4 --format json");
  REQUIRE(res.code == 0);
  auto j = nlohmann::json::parse(res.out);
  CHECK(j["command"].is_string());
  CHECK(j["pass"].is_boolean());
  for (const auto& row : j["checks"]) {
    CHECK(row["claim_id"].is_string());
    CHECK(row["computed"].is_string());
    CHECK(row["expected"].is_string());
    CHECK(row["provenance"].is_string());
    CHECK(row["pass"].is_boolean());
    CHECK(row["ms"].is_number());
  }
}

TEST_CASE("repeated runs are identical apart from timings") {
  std::string args = "rbound --p 3 --m 1..3 --n 1..2 --format json";
  auto a = run_cli(args);
  auto b = run_cli(args);
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  CHECK(parse_normalized(a.out) == parse_normalized(b.out));
}

TEST_CASE("table output") {
  auto res = run_cli("rbound --p 3 --m 2 --n 1");
  REQUIRE(res.code == 0);
  CHECK(res.out.find("command: rbound") != std::string::npos);
  CHECK(res.out.find("[ok] rbound-m2-n1-p3") != std::string::npos);
  CHECK(res.out.find("result: PASS") != std::string::npos);
}

TEST_CASE("config file supplies defaults, flags win") {
  std::string cfg = "/tmp/schurw-cli-test.cfg";
  {
    std::ofstream out(cfg);
    out << "# defaults for the threshold run\n";
    out << "p = 3\n";
    out << "m = 2\n";
    out << "n = 1\n";
    out << "format = json\n";
  }
  auto res = run_cli("rbound --config " + cfg);
  REQUIRE(res.code == 0);
  auto j = nlohmann::json::parse(res.out);
  CHECK(j["checks"][0]["claim_id"] == "rbound-m2-n1-p3");

  auto over = run_cli("rbound --config " + cfg + " --m 1");
  REQUIRE(over.code == 0);
  auto jo = nlohmann::json::parse(over.out);
  CHECK(jo["checks"][0]["claim_id"] == "rbound-m1-n1-p3");
}

TEST_CASE("dump directory receives lattice and matrix files") {
  std::string dir = "/tmp/schurw-cli-dump";
  std::filesystem::remove_all(dir);
  auto res = run_cli("sigma --p 3 --m 1 --n 1 --r 2 --dump " + dir);
  REQUIRE(res.code == 0);
  CHECK(std::filesystem::exists(dir + "/sigma-m1-n1-p3-r2.txt"));
  CHECK(std::filesystem::exists(dir + "/phi-m1-n1-r2.mtx"));
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("rbound --bogus 1").code == 2);
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("rbound --p 9 --m 1 --n 1").code == 2);
  CHECK(run_cli("rbound --p 3 --m 2..1 --n 1").code == 2);
  CHECK(run_cli("sigma --p 3 --m 1 --n 1 --r 2 --extras foo:1").code == 2);
  CHECK(run_cli("endodim --p 3 --m 1 --n 1").code == 2);  // missing --r
  CHECK(run_cli("rbound --p 3 --m 1 --n 1 --config /nonexistent.cfg").code == 2);
}

TEST_CASE("size-limit aborts exit with code 3") {
  CHECK(run_cli("sigma --p 3 --m 2 --n 2 --r 8").code == 3);
}

TEST_CASE("help exits cleanly") {
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("rbound --help").code == 0);
}

int main(int argc, char** argv) {
  if (argc >= 2 && argv[argc - 1][0] != '-') g_binary = argv[--argc];
  if (g_binary.empty()) {
    std::fprintf(stderr, "usage: test_cli [doctest options] <path-to-cli-binary>\n");
    return 1;
  }
  doctest::Context ctx(argc, argv);
  return ctx.run();
}
