#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string("\"") + BW_CLI_PATH + "\" " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("cli exit codes") {
  RunResult ok = run_cli("algebra validate ex6");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("24") != std::string::npos);

  CHECK(run_cli("algebra validate no-such-algebra").code == 2);
  CHECK(run_cli("module pdim ex6").code == 2);        /* no module given */
  CHECK(run_cli("module pdim ex6 --word \"tau tau\"").code == 2);
  CHECK(run_cli("frobnicate").code == 2);             /* unknown subcommand */
  CHECK(run_cli("algebra validate ex6 --field F4").code == 2);
}

TEST_CASE("cli pdim and certificates") {
  RunResult inf = run_cli("module pdim ex6 --simple 3");
  CHECK(inf.code == 0);
  CHECK(inf.out.find("Infinite") != std::string::npos);

  RunResult fin = run_cli("module pdim ex6 --word \"gamma^- rho tau\"");
  CHECK(fin.code == 0);
  CHECK(fin.out.find("0") != std::string::npos);
}

TEST_CASE("cli json envelope") {
  RunResult r = run_cli("strings enumerate ex6 --max-len 1 --json");
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "strings enumerate");
  CHECK(j.contains("algebra"));
  CHECK(j.contains("results"));
  CHECK(j["results"]["count"] == 20);
}

TEST_CASE("cli criterion3") {
  CHECK(run_cli("criterion3 validate ex6").code == 0);
  /* Exhaustive refutation needs a finite field. */
  CHECK(run_cli("criterion3 refute ex6").code == 2);
  RunResult scan = run_cli(
      "criterion3 scan ex2 --max-len 6 --band-len 4 --n-max 2 --cutoff 12");
  CHECK(scan.code == 1); /* validation passes, condition (2) fails */
}

TEST_CASE("cli extend and reproduce") {
  RunResult ext = run_cli(
      "extend ex7-lambda --spec \"vertex 9; arrow chi1: 9 -> 5; arrow chi2: 9 -> 6;"
      " rel: beta1.chi1 - beta2.chi2\"");
  CHECK(ext.code == 0);
  CHECK(ext.out.find("26") != std::string::npos);

  RunResult rep = run_cli("reproduce example2");
  CHECK(rep.code == 0);
  CHECK(rep.out.find("[FAIL]") == std::string::npos);
  CHECK(rep.out.find("[ok]") != std::string::npos);
}
