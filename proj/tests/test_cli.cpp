#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "doctest.h"
#include "nlohmann/json.hpp"

namespace {

// Runs the front end and captures stdout plus the exit code. The binary
// path arrives through the environment so the test works from any build
// directory layout. Specs are fed through stdin ("--spec -").
struct RunResult {
  int code = -1;
  std::string out;
};

std::string cli_path() {
  const char* p = std::getenv("FACTORLAB_CLI");
  REQUIRE_MESSAGE(p != nullptr, "FACTORLAB_CLI must point at the front-end binary");
  return p;
}

RunResult run_cmd(const std::string& shell_cmd) {
  RunResult r;
  std::string cmd = shell_cmd + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

RunResult run(const std::string& args) { return run_cmd(cli_path() + " " + args); }

// pipe the monoid spec json in on stdin; json must not contain single quotes
RunResult run_spec(const std::string& spec, const std::string& args) {
  return run_cmd("printf '%s' '" + spec + "' | " + cli_path() + " " + args + " --spec -");
}

const char* kC3 = R"({"kind":"block","group":[3]})";

}  // namespace

TEST_CASE("atom listings match the adapters") {
  RunResult r = run_spec(kC3, "atoms");
  CHECK(r.code == 0);
  CHECK(r.out.find("atoms: 4") != std::string::npos);
  CHECK(r.out.find("(1)(2)") != std::string::npos);

  RunResult nz = run_spec(R"({"kind":"block","group":[2,2],"g0":"nonzero"})", "atoms");
  CHECK(nz.out.find("atoms: 4") != std::string::npos);

  RunResult num = run_spec(R"({"kind":"numerical","generators":[2,3,4]})", "atoms");
  CHECK(num.out.find("atoms: 2") != std::string::npos);

  RunResult pw = run_spec(R"({"kind":"power0","max_value":4})", "atoms");
  CHECK(pw.code == 0);
  CHECK(pw.out.find("{0,1}") != std::string::npos);
}

TEST_CASE("element reports") {
  RunResult r = run_spec(kC3, "element '[[[1],3],[[2],3]]' --what lengths");
  CHECK(r.code == 0);
  CHECK(r.out.find("[2,3]") != std::string::npos);

  RunResult c =
      run_spec(R"({"kind":"numerical","generators":[2,3]})", "element 6 --what catenary");
  CHECK(c.out.find("catenary: 3") != std::string::npos);

  RunResult id = run_spec(kC3, "element '[]' --what lengths");
  CHECK(id.code == 0);
  CHECK(id.out.find("[0]") != std::string::npos);
}

TEST_CASE("exit codes separate the failure families") {
  CHECK(run_spec(R"({"kind":"nope"})", "atoms").code == 2);
  CHECK(run_spec(kC3, "element '[[[1],1]]'").code == 3);  // not zero-sum
  CHECK(run_spec(kC3, "element 'not-json'").code == 3);
  CHECK(run_spec(R"({"kind":"power0","max_value":8})", "element '[0,99]'").code == 4);
  CHECK(run("verify carlitz").code == 0);
  CHECK(run("verify no_such_check").code == 2);
  CHECK(run("nonsense-subcommand").code == 2);
}

TEST_CASE("scan summary lines") {
  RunResult r = run_spec(kC3, "scan --bound 9 --k 2");
  CHECK(r.code == 0);
  CHECK(r.out.find("75 elements") != std::string::npos);
  CHECK(r.out.find("delta union: [1]") != std::string::npos);
  CHECK(r.out.find("U_2 = [2,3] (exact)") != std::string::npos);
}

TEST_CASE("json reports parse and re-serialize byte-identically") {
  for (const RunResult& r :
       {run_spec(kC3, "scan --bound 6 --json"),
        run_spec(kC3, "element '[[[1],3],[[2],3]]' --json"),
        run("verify carlitz dav_formula --json")}) {
    CHECK(r.code == 0);
    auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j.dump(2) + "\n" == r.out);
    CHECK(j.contains("tool_version"));
    CHECK(j.contains("status"));
  }
}

TEST_CASE("worker count stays out of the verify envelope") {
  RunResult a = run("verify carlitz --json --workers 1");
  RunResult b = run("verify carlitz --json --workers 2");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}
