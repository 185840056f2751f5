// End-to-end checks of the installed command surface: exit codes, JSON
// error payloads, and golden table output.
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef CAPITULA_CLI_PATH
#error "CAPITULA_CLI_PATH must point at the capitula binary"
#endif
#ifndef CAPITULA_GOLDEN_DIR
#error "CAPITULA_GOLDEN_DIR must point at tests/golden"
#endif

namespace {

struct RunResult {
  int status;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(CAPITULA_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int rc = pclose(pipe);
  return {WEXITSTATUS(rc), out};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("report exit codes") {
  CHECK(run("report --p1 17 --p2 41 --format json").status == 0);
  CHECK(run("report --p1 7 --p2 13").status == 2);
  CHECK(run("report --p1 13 --p2 13").status == 2);
  CHECK(run("report --p1 junk --p2 13").status == 2);
}

TEST_CASE("report json carries the worked values") {
  RunResult r = run("report --p1 17 --p2 41 --format json");
  CHECK(r.out.find("\"d\":\"1394\"") != std::string::npos);
  CHECK(r.out.find("\"x\":\"12545\"") != std::string::npos);
  CHECK(r.out.find("\"main_theorem\":\"pass\"") != std::string::npos);
}

TEST_CASE("unit subcommand") {
  RunResult r = run("unit --d 46658");
  CHECK(r.status == 0);
  CHECK(r.out.find("46657 + 216*sqrt(46658)") != std::string::npos);
  CHECK(run("unit --d 12").status == 2);
}

TEST_CASE("tables match the golden files") {
  for (const char* id : {"ex48", "ex49", "k3-q", "k3-sq", "genus"}) {
    RunResult r = run(std::string("tables ") + id);
    REQUIRE(r.status == 0);
    CHECK(r.out == slurp(std::string(CAPITULA_GOLDEN_DIR) + "/" + id + ".txt"));
  }
  CHECK(run("tables bogus").status == 2);
}

TEST_CASE("scan exit codes and record counts") {
  RunResult empty = run("scan --max 4");
  CHECK(empty.status == 0);  // no valid primes below 5: zero records
  CHECK(empty.out.empty());

  RunResult r = run("scan --max 30 --jobs 2");
  CHECK(r.status == 0);
  int lines = 0;
  for (char c : r.out)
    if (c == '\n') ++lines;
  CHECK(lines == 12);

  RunResult f = run("scan --max 50 --filter 222");
  CHECK(f.status == 0);
  CHECK(f.out.find("\"type_222\":false") == std::string::npos);

  CHECK(run("scan --max 30 --out /nonexistent-dir/x.jsonl").status == 4);
}

TEST_CASE("environment variables mirror the flags") {
  RunResult r = run("report --p1 5 --p2 13 --format json");
  CHECK(r.status == 0);
  std::string cmd = std::string("CAPITULA_PERIOD_CAP=1 ") + CAPITULA_CLI_PATH +
                    " unit --d 46658 2>/dev/null";
  int rc = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(rc) != 0);
}

}  // TEST_SUITE
