#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

// Runs the built binary with stderr dropped; stdout and exit code captured.
CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(JACQ_CLI_PATH) + " " + args + " 2>/dev/null";
  CliResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    res.out.append(buf.data(), got);
  }
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

std::size_t count_occurrences(const std::string& s, const std::string& needle) {
  std::size_t n = 0, pos = 0;
  while ((pos = s.find(needle, pos)) != std::string::npos) {
    ++n;
    pos += needle.size();
  }
  return n;
}

}  // namespace

TEST_CASE("CLI term evaluates table and negative indices") {
  auto res = run_cli("term --seq J3 --n 8");
  CHECK(res.exit_code == 0);
  CHECK(res.out == "{\"seq\":\"J3\",\"n\":8,\"value\":\"73\"}\n");

  res = run_cli("term --seq J3 --n -2");
  CHECK(res.exit_code == 0);
  CHECK(res.out == "{\"seq\":\"J3\",\"n\":-2,\"value\":\"1/2\"}\n");

  res = run_cli("term --seq jL2 --n 5");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("\"value\":\"31\"") != std::string::npos);
}

TEST_CASE("CLI term domain and usage errors exit 2") {
  CHECK(run_cli("term --seq nope --n 3").exit_code == 2);
  CHECK(run_cli("term --seq J2 --n -1").exit_code == 2);
  CHECK(run_cli("term --seq J3").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("CLI qterm emits quaternion JSON") {
  auto res = run_cli("qterm --seq jQ3 --n 0");
  CHECK(res.exit_code == 0);
  CHECK(res.out ==
        "{\"seq\":\"jQ3\",\"n\":0,\"value\":{\"s\":\"2\",\"i\":\"1\",\"j\":\"5\",\"k\":\"10\"}}\n");
  CHECK(run_cli("qterm --seq JQ3 --n -1").exit_code == 2);
  CHECK(run_cli("qterm --seq J3 --n 1").exit_code == 2);
}

TEST_CASE("CLI sum pairs direct and closed evaluation") {
  auto res = run_cli("sum --r 2 --n 2");
  CHECK(res.exit_code == 0);
  CHECK(res.out == "{\"r\":2,\"n\":2,\"direct\":\"6\",\"closed\":\"6\"}\n");

  res = run_cli("sum --r 3 --n 1");  // degenerate stride: no closed form
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("\"closed\":null") != std::string::npos);
}

TEST_CASE("CLI verify single identity") {
  auto res = run_cli("verify --identity e3 --from 0 --to 100");
  CHECK(res.exit_code == 0);
  CHECK(count_lines(res.out) == 101);
  CHECK(count_occurrences(res.out, "\"pass\":true") == 101);
  CHECK(res.out.find("\"pass\":false") == std::string::npos);
}

TEST_CASE("CLI verify marks out-of-domain points as skipped") {
  auto res = run_cli("verify --identity product --from 1 --to 10");
  CHECK(res.exit_code == 0);
  CHECK(count_lines(res.out) == 10);
  CHECK(count_occurrences(res.out, "\"pass\":true") == 3);  // n = 3, 6, 9
  CHECK(count_occurrences(res.out, "\"skipped\":true") == 7);
  CHECK(count_occurrences(res.out, "out_of_domain") == 7);
}

TEST_CASE("CLI verify reports degenerate strides distinctly") {
  auto res = run_cli("verify --identity g5 --from 2 --to 2 --max-r 6");
  CHECK(res.exit_code == 0);
  CHECK(count_lines(res.out) == 6);
  CHECK(count_occurrences(res.out, "degenerate_modulus") == 2);  // r = 3, 6
  CHECK(count_occurrences(res.out, "\"pass\":true") == 4);
}

TEST_CASE("CLI verify all is deterministic and passes") {
  const std::string args = "verify --identity all --from 0 --to 12 --max-r 4";
  auto first = run_cli(args);
  auto second = run_cli(args);
  CHECK(first.exit_code == 0);
  CHECK(second.exit_code == 0);
  CHECK(first.out == second.out);
  CHECK(first.out.find("\"pass\":false") == std::string::npos);
}

TEST_CASE("CLI verify unknown tag exits 2") {
  CHECK(run_cli("verify --identity nope --from 0 --to 1").exit_code == 2);
  CHECK(run_cli("verify --identity e3 --from 5 --to 1").exit_code == 2);
}

TEST_CASE("CLI verify csv format") {
  auto res = run_cli("verify --identity e3 --from 0 --to 2 --format csv");
  CHECK(res.exit_code == 0);
  CHECK(count_lines(res.out) == 4);  // header + 3 rows
  CHECK(res.out.rfind("identity,n,r,s,lhs,rhs,pass,skipped,reason\n", 0) == 0);
  CHECK(res.out.find("e3,0,,,2,2,true,,") != std::string::npos);
}

TEST_CASE("CLI series streams quaternion coefficients") {
  auto res = run_cli("series --count 3");
  CHECK(res.exit_code == 0);
  CHECK(res.out ==
        "{\"s\":\"0\",\"i\":\"1\",\"j\":\"1\",\"k\":\"2\"}\n"
        "{\"s\":\"1\",\"i\":\"1\",\"j\":\"2\",\"k\":\"5\"}\n"
        "{\"s\":\"1\",\"i\":\"2\",\"j\":\"5\",\"k\":\"9\"}\n");

  res = run_cli("series --seq jQ3 --count 1");
  CHECK(res.exit_code == 0);
  CHECK(res.out == "{\"s\":\"2\",\"i\":\"1\",\"j\":\"5\",\"k\":\"10\"}\n");
}

TEST_CASE("CLI matrix inspection") {
  auto res = run_cli("matrix --name M --power 2");
  CHECK(res.exit_code == 0);
  CHECK(res.out ==
        "{\"name\":\"M\",\"power\":2,\"rows\":3,\"cols\":3,"
        "\"entries\":[\"2\",\"3\",\"2\",\"1\",\"1\",\"2\",\"1\",\"0\",\"0\"]}\n");

  res = run_cli("matrix --name H --r 2");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("\"-1/9 + 0*w\"") != std::string::npos);

  CHECK(run_cli("matrix --name H --r 3").exit_code == 2);  // degenerate
  CHECK(run_cli("matrix --name F --r 2").exit_code == 2);  // missing --n
  CHECK(run_cli("matrix --name Z").exit_code == 2);

  res = run_cli("matrix --name R");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("{\"s\":\"5\",\"i\":\"9\",\"j\":\"18\",\"k\":\"37\"}") !=
        std::string::npos);  // top-left JQ_4
}

TEST_CASE("CLI bench agrees across methods") {
  auto res = run_cli("bench --n 1000");
  CHECK(res.exit_code == 0);
  CHECK(count_lines(res.out) == 4);
  CHECK(count_occurrences(res.out, "\"value_digits\":301") == 4);

  res = run_cli("bench --n 0 --methods matrix,closed-form");
  CHECK(res.exit_code == 0);
  CHECK(count_occurrences(res.out, "\"value_digits\":1") == 2);

  CHECK(run_cli("bench --n 10 --methods warp").exit_code == 2);
}

TEST_CASE("CLI env JACQ_MAX_R overrides the grid default") {
  const std::string prefix = "JACQ_MAX_R=2 " + std::string(JACQ_CLI_PATH);
  const std::string cmd = prefix + " verify --identity thmLF --from 1 --to 1 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  pclose(pipe);
  CHECK(count_lines(out) == 2);  // r = 1, 2 only
}
