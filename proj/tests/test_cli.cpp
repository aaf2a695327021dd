#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(STCI_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), got);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli derive") {
  RunResult r = run_cli("derive --delta 4 --eps1 3 --eps2 1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "m=3"));
  CHECK(contains(r.out, "n=2"));
  CHECK(contains(r.out, "u=3"));
  CHECK(contains(r.out, "w=2"));

  RunResult aff = run_cli("derive --affine 1 2 3");
  CHECK(aff.exit_code == 0);
  CHECK(contains(aff.out, "delta=3 eps1=2 eps2=1"));

  RunResult bad = run_cli("derive --delta 4 --eps1 5 --eps2 1");
  CHECK(bad.exit_code == 2);
  CHECK(contains(bad.out, "error:"));
}

TEST_CASE("cli binomials text and json") {
  RunResult r = run_cli("binomials --delta 4 --eps1 3 --eps2 1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "x1^3,x0*x3,x2;x0^2,x1,1"));
  CHECK(contains(r.out, "case I"));
  CHECK(contains(r.out, "x1^3-x0^2*x2"));
  CHECK(contains(r.out, "x0*x3-x1*x2"));
  CHECK(contains(r.out, "x2^3-x1*x3^2"));

  RunResult big =
      run_cli("binomials --delta 70 --eps1 66 --eps2 15 --variant binomials");
  CHECK(contains(big.out, "case IV"));
  CHECK(contains(big.out, "x1^35-x0^33*x3^2"));
  CHECK(contains(big.out, "x1^55-x0^51*x2^4"));
  CHECK(contains(big.out, "x2^22-x1^5*x3^17"));

  RunResult aff = run_cli("binomials --affine 1 2 3");
  CHECK(aff.exit_code == 0);
  CHECK_FALSE(contains(aff.out, "x0"));

  // json output parses and re-renders byte-identically
  RunResult j = run_cli("--format json binomials --delta 4 --eps1 3 --eps2 1");
  CHECK(j.exit_code == 0);
  nlohmann::json parsed = nlohmann::json::parse(j.out);
  CHECK(parsed.dump(2) + "\n" == j.out);
  CHECK(parsed["system"]["case"] == "I");
  CHECK(parsed["system"]["f"]["text"] == "x1^4-x0^3*x3");
  CHECK(parsed["params"]["m"] == "3");

  // deterministic for fixed input
  RunResult j2 = run_cli("--format json binomials --delta 4 --eps1 3 --eps2 1");
  CHECK(j.out == j2.out);
}

TEST_CASE("cli verify exit codes") {
  RunResult ok = run_cli("verify --delta 4 --eps1 3 --eps2 1 --prime 5 --prime 13");
  CHECK(ok.exit_code == 0);

  RunResult sym = run_cli("verify --delta 6 --eps1 4 --eps2 3 --skip-oracle");
  CHECK(sym.exit_code == 0);

  RunResult bad = run_cli(
      "verify --delta 4 --eps1 3 --eps2 1 --skip-oracle --extra-poly x1-x0");
  CHECK(bad.exit_code == 1);
  CHECK(contains(bad.out, "witness"));
}

TEST_CASE("cli prop1") {
  RunResult ex = run_cli("prop1 --matrix 'a*d,b,c;b,a,d'");
  CHECK(ex.exit_code == 0);
  CHECK(contains(ex.out, "column 2: holds"));
  CHECK(contains(ex.out, "column 1: does not hold"));

  RunResult quartic =
      run_cli("prop1 --matrix 'x1^3,x0*x3,x2;x0^2,x1,1'");
  CHECK(contains(quartic.out, "column 1: holds"));
  CHECK(contains(quartic.out, "column 3: holds"));

  RunResult none = run_cli("prop1 --matrix 'a,b,c;d,e,f'");
  CHECK(contains(none.out, "column 1: does not hold"));
  CHECK(contains(none.out, "column 2: does not hold"));
  CHECK(contains(none.out, "column 3: does not hold"));

  RunResult bad = run_cli("prop1 --matrix 'a,b;c'");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("cli classify") {
  RunResult i = run_cli("classify --matrix 'a,b,c;b,c,a'");
  CHECK(i.exit_code == 0);
  CHECK(contains(i.out, "form (i)"));

  RunResult iv = run_cli("classify --matrix 'a^2,b,c;b*c,d,a'");
  CHECK(contains(iv.out, "form (iv)"));

  RunResult ns = run_cli("classify --matrix 'a,b,a;b,a,b'");
  CHECK(ns.exit_code == 2);
}

TEST_CASE("cli valla") {
  RunResult r = run_cli(
      "valla --m 2 --n 1 --p 1 --r 1 --s 1 --u 1 --check-curve 3 5 4");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "g = a^4-2*a*b*c+c^3"));

  RunResult n0 = run_cli("valla --m 1 --n 0 --p 1 --r 1 --s 1 --u 1");
  CHECK(n0.exit_code == 0);
  CHECK(contains(n0.out, "f = a*c-b"));
  CHECK(contains(n0.out, "g = a-c^2"));

  RunResult oracle =
      run_cli("valla --m 2 --n 1 --p 1 --r 1 --s 1 --u 1 --prime 5 --prime 7");
  CHECK(oracle.exit_code == 0);
}
