#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "qlat/json_io.hpp"

#ifndef QLAT_BINARY
#error "QLAT_BINARY must name the qlat executable"
#endif

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string("'") + QLAT_BINARY + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("qlat_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

const char* kPlane = R"({
  "x": {"ambient": 2, "basis": [[["1","1","0","1"], ["0","1","0","1"]]]},
  "y": {"ambient": 2, "basis": [[["0","1","0","1"], ["1","1","0","1"]]]},
  "z": {"ambient": 2, "basis": [[["1","1","0","1"], ["1","1","0","1"]]]}
})";

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run("").code == 2);
  CHECK(run("no-such-command").code == 2);
  CHECK(run("falsify").code == 2);
  CHECK(run("falsify 'x & (y' ").code == 2);
  CHECK(run("falsify 'x | y'").code == 2);  // not an equation
  CHECK(run("--dim 0 falsify 'x = x'").code == 2);
  CHECK(run("--dim 99 falsify 'x = x'").code == 2);
  CHECK(run("check-law not_a_law_or_equation").code == 2);
  CHECK(run("alpha 0").code == 2);
  CHECK(run("mdist 0").code == 2);
  CHECK(run("separate 3 2").code == 2);
  CHECK(run("tl jw --n 2 --r 2").code == 2);
}

TEST_CASE("eval") {
  const std::string file = temp_file("plane.json", kPlane);
  const Run r = run("--json eval 'x & (y | z)' '" + file + "'");
  CHECK(r.code == 0);
  const auto j = qlat::Json::parse(r.out);
  CHECK(j["result"]["ambient"] == 2);
  CHECK(j["result"]["basis"].size() == 1);
  CHECK(j.contains("seed"));
  CHECK(j["version"] == "0.3.1");

  CHECK(run("eval 'x & w' '" + file + "'").code == 2);
  CHECK(run("eval x /nonexistent/file.json").code == 2);
  CHECK(run("eval x '" + temp_file("bad.json", "{not json") + "'").code == 2);
  CHECK(run("eval x '" + temp_file("badsub.json", R"({"x": {"ambient": 2, "basis": [[1]]}})") + "'")
            .code == 2);
}

TEST_CASE("check-law and falsify") {
  CHECK(run("check-law distributivity").code == 1);
  CHECK(run("check-law modularity --dim 4 --trials 100").code == 0);
  CHECK(run("--dim 1 check-law distributivity --trials 100").code == 0);
  CHECK(run("falsify 'x & y <= x' --dim 3 --trials 50").code == 0);
  const Run found = run("--json falsify 'x & (y | z) = x & y | x & z' --seed 7");
  CHECK(found.code == 1);
  const auto j = qlat::Json::parse(found.out);
  CHECK(j["status"] == "counterexample_found");
  CHECK(j["seed"] == 7);
}

TEST_CASE("JSON output is reproducible and parallel-invariant") {
  const Run a = run("--json --seed 5 --dim 3 falsify 'x & (y0 | y1 | y2) = x & (y1 | y2) | x & (y0 | y2) | x & (y0 | y1)' --trials 400");
  const Run b = run("--json --seed 5 --dim 3 falsify 'x & (y0 | y1 | y2) = x & (y1 | y2) | x & (y0 | y2) | x & (y0 | y1)' --trials 400");
  const Run c = run("--json --parallel --seed 5 --dim 3 falsify 'x & (y0 | y1 | y2) = x & (y1 | y2) | x & (y0 | y2) | x & (y0 | y1)' --trials 400");
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(a.code == b.code);
}

TEST_CASE("separate, alpha and mdist") {
  CHECK(run("separate 1 2").code == 0);
  const Run qubit = run("--json separate 2 4");
  CHECK(qubit.code == 0);
  CHECK(qlat::Json::parse(qubit.out)["route"] == "alpha_iter");
  const Run human = run("separate 2 4");
  CHECK(human.out.find("chars, use --json") != std::string::npos);

  const Run alpha = run("alpha 1");
  CHECK(alpha.code == 0);
  CHECK(alpha.out.find("(p1 | q1 & r1 | (p1 | q1) & (p1 | r1))") != std::string::npos);
  const Run mdist = run("mdist 1");
  CHECK(mdist.code == 0);
  CHECK(mdist.out.find("x & (y0 | y1) = x & y1 | x & y0") != std::string::npos);
}

TEST_CASE("tl commands") {
  CHECK(run("tl relations --n 4").code == 0);
  CHECK(run("tl jw --n 3").code == 0);
  CHECK(run("tl jw --n 3 --r 5").code == 0);
  CHECK(run("tl jw --n 4 --r 4").code == 1);
  CHECK(run("tl trace --n 3 --r 4").code == 0);
  const Run j = run("--json tl trace --n 3 --r 5");
  CHECK(j.code == 0);
  CHECK(qlat::Json::parse(j.out)["all_match"] == true);
}
