#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef PLURIKIT_CLI_BIN
#error "PLURIKIT_CLI_BIN must point at the CLI binary"
#endif

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string(PLURIKIT_CLI_BIN) + " " + args + " >/dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  return WEXITSTATUS(raw);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("deterministic CSV bytes across repeated runs") {
  const std::string out1 = "/tmp/plurikit_det1.csv";
  const std::string out2 = "/tmp/plurikit_det2.csv";
  const std::string common =
      "tcheby --domain interval:-1,1 --resolution 301 --weight gauss:1 --theta 1 "
      "--js 2,4,8 --seed 7 -o ";
  REQUIRE(run(common + out1) == 0);
  REQUIRE(run(common + out2) == 0);
  const std::string a = slurp(out1), b = slurp(out2);
  CHECK(!a.empty());
  CHECK(a == b);
  CHECK(a.find("j,d,minimax_value,dth_root,status,certificate_factor") == 0);
  // LF endings only
  CHECK(a.find('\r') == std::string::npos);
}

TEST_CASE("unknown weight spec exits 2 and names the builtins") {
  CHECK(run("tcheby --domain interval:-1,1 --weight slab:3 --js 2 -o /tmp/p_bad.csv") == 2);
  CHECK(run("green --domain circle --weight const:0 -o /tmp/p_bad.csv") == 2);  // admissibility
  CHECK(run("tcheby --domain pentagon --js 2 -o /tmp/p_bad.csv") == 2);
}

TEST_CASE("conditioning abort exits 3") {
  // degree far beyond what 9 sample points support
  CHECK(run("ortho --domain interval:-1,1 --resolution 9 --d 40 -o /tmp/p_cond.csv") == 2);
  // enough points for the column count but numerically dependent columns
  CHECK(run("ortho --domain interval:0,1e-12 --resolution 60 --d 40 -o /tmp/p_cond2.csv") == 3);
}

TEST_CASE("manifest written alongside the CSV") {
  const std::string out = "/tmp/plurikit_man.csv";
  REQUIRE(run("bm --domain interval:-1,1 --resolution 101 --degrees 2,4 -o " + out) == 0);
  const std::string man = slurp(out + ".manifest.json");
  CHECK(man.find("\"subcommand\": \"bm\"") != std::string::npos);
  CHECK(man.find("qr_diag_guard_rel") != std::string::npos);
  CHECK(man.find("complex_halfplanes") != std::string::npos);
  CHECK(man.find("tail_budget_default") != std::string::npos);
  CHECK(man.find("library_version") != std::string::npos);
}

TEST_CASE("config file with flag override") {
  const std::string cfg = "/tmp/plurikit_cfg.ini";
  {
    std::ofstream c(cfg);
    c << "domain = interval:-1,1\n";
    c << "resolution = 101\n";
    c << "weight = const:1\n";
    c << "js = 2,4\n";
    c << "theta = 1\n";
  }
  const std::string out = "/tmp/plurikit_cfg_out.csv";
  REQUIRE(run("tcheby --config " + cfg + " -o " + out) == 0);
  std::string body = slurp(out);
  CHECK(body.find("\n2,2,") != std::string::npos);
  CHECK(body.find("\n4,4,") != std::string::npos);

  // the flag wins over the file
  REQUIRE(run("tcheby --config " + cfg + " --js 3 -o " + out) == 0);
  body = slurp(out);
  CHECK(body.find("\n3,3,") != std::string::npos);
  CHECK(body.find("\n2,2,") == std::string::npos);
}

TEST_CASE("asym subcommand emits the documented columns") {
  const std::string out = "/tmp/plurikit_asym.csv";
  REQUIRE(run("asym --freud x^2 --theta 1 --js 2,4 --resolution 201 -o " + out) == 0);
  const std::string body = slurp(out);
  CHECK(body.find("j,d,lhs,rhs,gap,R,condition_estimate") == 0);
}

TEST_CASE("lift-check residual rows stay within 1e-12") {
  const std::string out = "/tmp/plurikit_lift.csv";
  REQUIRE(run("lift-check --domain interval:-1,1 --resolution 61 --weight gauss:1 "
              "--dmax 4 --m 9 -o " +
              out) == 0);
  std::ifstream in(out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "check,d,max_residual");
  int rows = 0;
  while (std::getline(in, line)) {
    const auto last = line.rfind(',');
    const double resid = std::stod(line.substr(last + 1));
    CHECK(resid <= 1e-12);
    ++rows;
  }
  CHECK(rows == 8);  // sup-norm + l2-norm for d = 1..4
}

TEST_CASE("worker threads do not change the output bytes") {
  const std::string serial = "/tmp/plurikit_thr1.csv";
  const std::string threaded = "/tmp/plurikit_thr4.csv";
  const std::string args =
      "tcheby --domain interval:-1,1 --resolution 301 --weight gauss:1 --theta 1 "
      "--js 2,4,8,12 --seed 3 -o ";
  {
    const std::string cmd = std::string("PLURIKIT_THREADS=0 ") + PLURIKIT_CLI_BIN + " " +
                            args + serial + " >/dev/null 2>&1";
    REQUIRE(WEXITSTATUS(std::system(cmd.c_str())) == 0);
  }
  {
    const std::string cmd = std::string("PLURIKIT_THREADS=4 ") + PLURIKIT_CLI_BIN + " " +
                            args + threaded + " >/dev/null 2>&1";
    REQUIRE(WEXITSTATUS(std::system(cmd.c_str())) == 0);
  }
  CHECK(slurp(serial) == slurp(threaded));
}

TEST_CASE("asym without --freud runs the sample-set trace") {
  const std::string out = "/tmp/plurikit_t41.csv";
  REQUIRE(run("asym --domain interval:-1,1 --resolution 201 --theta 1 --js 2,4 -o " +
              out) == 0);
  const std::string body = slurp(out);
  CHECK(body.find("j,d,lhs,rhs,gap,R,condition_estimate") == 0);
  CHECK(body.find("\n2,2,") != std::string::npos);
}

TEST_CASE("exp-poly and torus specs parse and run") {
  CHECK(run("tcheby --domain interval:-1,1 --resolution 61 --weight exp-poly:0,1 "
            "--js 2 -o /tmp/plurikit_ep.csv") == 0);
  CHECK(run("green --domain torus --resolution 10 --dmax 2 -o /tmp/plurikit_torus.csv") == 0);
  CHECK(run("ortho --domain interval:-1,1 --measure gl:32 --d 3 -o /tmp/plurikit_gl.csv") == 0);
  CHECK(run("ortho --domain interval:-1,1 --measure weird --d 3 -o /tmp/plurikit_m.csv") == 2);
}

TEST_CASE("help exits 0") { CHECK(run("--help") == 0); }
