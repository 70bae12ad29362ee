#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/stat.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

namespace {

std::string bin() {
  const char* b = std::getenv("SUPERCONG_BIN");
  REQUIRE(b != nullptr);
  return b;
}

struct RunResult {
  int exit_code;
  std::string out;  // stdout + stderr
};

RunResult run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + bin() + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string fresh_dir() {
  char tmpl[] = "/tmp/supercong-cli-XXXXXX";
  REQUIRE(mkdtemp(tmpl) != nullptr);
  return tmpl;
}

std::string slurp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  REQUIRE(is.good());
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

std::string body_after_meta(const std::string& text) {
  auto nl = text.find('\n');
  REQUIRE(nl != std::string::npos);
  CHECK(text.compare(0, 9, "{\"_meta\":") == 0);
  return text.substr(nl + 1);
}

size_t count_lines(const std::string& text) {
  size_t n = 0;
  for (char c : text)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("cli gamma") {
  RunResult a = run("gamma --p 7 --x 1 --precision 3");
  CHECK(a.exit_code == 0);
  CHECK(a.out.find("342") != std::string::npos);
  CHECK(a.out.find("6,6,6") != std::string::npos);

  RunResult b = run("gamma --p 3 --x 3/4 --precision 3");
  CHECK(b.exit_code == 0);
  CHECK(b.out.find("= 25") != std::string::npos);

  RunResult c = run("gamma --p 3 --x 1/3 --precision 2");
  CHECK(c.exit_code == 2);

  RunResult d = run("gamma --p 4 --x 1 --precision 2");
  CHECK(d.exit_code == 2);

  RunResult e = run("gamma --p 7 --x 2/0 --precision 2");
  CHECK(e.exit_code == 2);
}

TEST_CASE("cli sum") {
  RunResult a = run("sum --m 1");
  CHECK(a.exit_code == 0);
  CHECK(a.out.find("55/64") != std::string::npos);

  RunResult b = run("sum --m 6 --p 3 --precision 8");
  CHECK(b.exit_code == 0);
  CHECK(b.out.find("vp: 2") != std::string::npos);
  CHECK(b.out.find("1429") != std::string::npos);

  RunResult c = run("sum --m 3 --d 3");
  CHECK(c.exit_code == 0);
  CHECK(c.out.find("417340/531441") != std::string::npos);

  RunResult d = run("sum --m 2 --p 3 --precision 1 --modular");
  CHECK(d.exit_code == 2);

  RunResult e = run("sum --m -2");
  CHECK(e.exit_code == 2);

  RunResult f = run("sum --m 6 --p 3 --precision 8 --modular");
  CHECK(f.exit_code == 0);
  CHECK(f.out.find("1429") != std::string::npos);
}

TEST_CASE("cli verify exit codes and report text") {
  RunResult pass = run("verify --claim f3 --p 3");
  CHECK(pass.exit_code == 0);
  CHECK(pass.out.find("PASS") != std::string::npos);
  CHECK(pass.out.find("residual valuation: 7") != std::string::npos);
  CHECK(pass.out.find("m=2") != std::string::npos);

  RunResult fail = run("verify --claim thm-1-1 --p 7 --r 3");
  CHECK(fail.exit_code == 1);
  CHECK(fail.out.find("FAIL") != std::string::npos);
  CHECK(fail.out.find("residual valuation: 2") != std::string::npos);

  CHECK(run("verify --claim f1 --p 4").exit_code == 2);
  CHECK(run("verify --claim nope --p 5").exit_code == 2);
  CHECK(run("verify --p 5").exit_code == 2);          // missing --claim
  CHECK(run("verify --claim f1 --p 5 --precision 1").exit_code == 2);
}

TEST_CASE("cli wz") {
  RunResult grid = run("wz --check grid --nmax 12 --kmax 12");
  CHECK(grid.exit_code == 0);
  CHECK(grid.out.find("0 violation(s)") != std::string::npos);

  RunResult cert = run("wz --check certificate");
  CHECK(cert.exit_code == 0);
  CHECK(cert.out.find("difference polynomial: 0") != std::string::npos);
  CHECK(cert.out.find("PASS") != std::string::npos);

  RunResult l32 = run("wz --check lemma32 --p 3 --r 3");
  CHECK(l32.exit_code == 1);
  CHECK(l32.out.find("min=1") != std::string::npos);
  CHECK(l32.out.find("FAIL") != std::string::npos);

  RunResult l33 = run("wz --check lemma33 --p 3 --r 3");
  CHECK(l33.exit_code == 0);
  CHECK(l33.out.find("PASS") != std::string::npos);

  RunResult l23 = run("wz --check lemma23 --p 3 --r 3 --which abc");
  CHECK(l23.exit_code == 0);
  CHECK(l23.out.find("unit 22 vs 22") != std::string::npos);

  CHECK(run("wz --check lemma32 --p 5 --r 3").exit_code == 2);
  CHECK(run("wz --check bogus").exit_code == 2);
}

TEST_CASE("cli sweep writes jsonl and csv") {
  std::string dir = fresh_dir();
  RunResult r = run("sweep --claim f3 --p-min 3 --p-max 50 --format both --out " +
                    dir + "/f3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("tuples=8 pass=8 fail=0 error=0 min_residual=3") !=
        std::string::npos);

  std::string jsonl = slurp(dir + "/f3.jsonl");
  CHECK(count_lines(jsonl) == 9);  // meta + 8 records
  std::string body = body_after_meta(jsonl);
  CHECK(body.find("\"claim\":\"f3\",\"p\":3,\"r\":1,\"d\":4,\"m\":2,"
                  "\"modulus_exp\":3,\"residual_valuation\":7,\"pass\":true,"
                  "\"precision\":5") != std::string::npos);

  std::string csv = slurp(dir + "/f3.csv");
  CHECK(count_lines(csv) == 9);  // header + 8 records
  CHECK(csv.rfind("claim,p,r,d,m,modulus_exp,residual_valuation,pass,precision,"
                  "seconds\n", 0) == 0);
  CHECK(csv.find("f3,47,1,4,35,3,3,true,5,") != std::string::npos);
}

TEST_CASE("cli sweep determinism across jobs") {
  std::string dir = fresh_dir();
  RunResult a = run("sweep --claim f3 --p-min 3 --p-max 31 --jobs 1 --timing off"
                    " --out " + dir + "/j1");
  RunResult b = run("sweep --claim f3 --p-min 3 --p-max 31 --jobs 8 --timing off"
                    " --out " + dir + "/j8");
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);
  std::string b1 = body_after_meta(slurp(dir + "/j1.jsonl"));
  std::string b8 = body_after_meta(slurp(dir + "/j8.jsonl"));
  CHECK(b1 == b8);
  CHECK(b1.find("\"seconds\":0.0") != std::string::npos);
}

TEST_CASE("cli sweep default output directory from the environment") {
  std::string dir = fresh_dir();
  RunResult r = run("sweep --claim guo-f4 --p-min 3 --p-max 12 --d 3 --r 1",
                    "SUPERCONG_OUT_DIR=" + dir);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("wrote=" + dir + "/guo-f4-sweep.jsonl") != std::string::npos);
  std::string jsonl = slurp(dir + "/guo-f4-sweep.jsonl");
  CHECK(count_lines(jsonl) == 3);  // meta + p = 5, 11
}

TEST_CASE("cli sweep reports congruence failures with exit 1") {
  std::string dir = fresh_dir();
  RunResult r = run("sweep --claim thm-1-1 --p-min 3 --p-max 20 --r 3 --out " +
                    dir + "/t");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("pass=1 fail=3") != std::string::npos);
  std::string body = body_after_meta(slurp(dir + "/t.jsonl"));
  CHECK(body.find("\"pass\":false") != std::string::npos);
}

TEST_CASE("cli sweep invalid arguments") {
  CHECK(run("sweep --claim f3 --p-max 10 --p-mod nonsense").exit_code == 2);
  CHECK(run("sweep --claim f3 --p-max 10 --out /nonexistent-dir/x").exit_code ==
        2);
  CHECK(run("sweep --claim f3").exit_code == 2);  // missing --p-max
}

TEST_CASE("cli surfaces write failures as internal errors") {
  if (access("/dev/full", W_OK) != 0) return;  // ENOSPC device unavailable
  std::string dir = fresh_dir();
  REQUIRE(symlink("/dev/full", (dir + "/full.jsonl").c_str()) == 0);
  RunResult r = run("sweep --claim f3 --p-min 3 --p-max 10 --out " + dir +
                    "/full");
  CHECK(r.exit_code == 3);
  CHECK(r.out.find("internal error") != std::string::npos);
}

TEST_CASE("cli p-mod filter") {
  std::string dir = fresh_dir();
  RunResult r = run("sweep --claim f3 --p-min 3 --p-max 23 --p-mod 8:3 --out " +
                    dir + "/f");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("tuples=3") != std::string::npos);
}
