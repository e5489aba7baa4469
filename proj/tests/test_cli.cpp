#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "rtc/channel.hpp"
#include "rtc/decoders.hpp"
#include "rtc/io.hpp"

using namespace rtc;

namespace {

std::string cli() { return RTC_CLI_PATH; }

int run(const std::string& args) {
  std::string cmd = cli() + " " + args;
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  std::string path;
  TempDir() {
    char buf[] = "/tmp/rtc_cli_XXXXXX";
    path = mkdtemp(buf);
  }
  std::string operator/(const std::string& f) const { return path + "/" + f; }
};

}  // namespace

TEST_CASE("gen emits a parsable canonical spec that round-trips") {
  TempDir d;
  REQUIRE(run("gen --q 2 --n 3 --m 2 --mu 1 --out " + (d / "spec.txt") + " > /dev/null 2>&1") ==
          0);
  CodeSpec spec = load_code_spec(d / "spec.txt");
  CHECK(spec.support.points.size() == 4);
  CHECK(spec.field->q() == 2);
  CHECK(emit_code_spec(spec) == slurp(d / "spec.txt"));

  // prime power q builds the tower
  REQUIRE(run("gen --q 4 --n 2 --m 2 --mu 0 --out " + (d / "spec4.txt") + " > /dev/null 2>&1") ==
          0);
  CodeSpec spec4 = load_code_spec(d / "spec4.txt");
  CHECK(spec4.field->q() == 4);
  CHECK(spec4.field->base().p() == 2);
}

TEST_CASE("gen rejects a reducible modulus with the data exit code") {
  TempDir d;
  CHECK(run("gen --q 2 --n 3 --m 2 --mu 1 --modulus 1,0,0,1 --out " + (d / "x.txt") +
            " > /dev/null 2>&1") == 3);
}

TEST_CASE("usage errors exit with code 1") {
  CHECK(run("decode --alg nosuch 2> /dev/null") == 1);
  CHECK(run("nosuchcommand 2> /dev/null") == 1);
}

TEST_CASE("encode -> decode with zero error reproduces the message byte-exactly") {
  TempDir d;
  REQUIRE(run("gen --q 2 --n 4 --m 2 --mu 1 --out " + (d / "spec.txt") + " > /dev/null") == 0);
  CodeSpec spec = load_code_spec(d / "spec.txt");
  // canonical message file written through the library emitter
  MultilinPoly f = ml_zero(2);
  f.coeffs[{0, 1}] = spec.field->gen();
  f.coeffs[{1, 1}] = spec.field->one();
  write_file(d / "msg.txt", emit_poly(*spec.field, f) + "\n");

  REQUIRE(run("encode --code " + (d / "spec.txt") + " --in " + (d / "msg.txt") + " --out " +
              (d / "word.txt")) == 0);
  REQUIRE(run("decode --alg col --code " + (d / "spec.txt") + " --in " + (d / "word.txt") +
              " --message " + (d / "back.txt") + " 2> /dev/null") == 0);
  CHECK(slurp(d / "back.txt") == slurp(d / "msg.txt"));
}

TEST_CASE("corrupt then column decoding succeeds across seeds") {
  TempDir d;
  REQUIRE(run("gen --q 2 --n 5 --m 2 --mu 1 --out " + (d / "spec.txt") + " > /dev/null") == 0);
  CodeSpec spec = load_code_spec(d / "spec.txt");
  MultilinPoly f = ml_zero(2);
  f.coeffs[{1, 0}] = spec.field->gen();
  write_file(d / "msg.txt", emit_poly(*spec.field, f) + "\n");
  REQUIRE(run("encode --code " + (d / "spec.txt") + " --in " + (d / "msg.txt") + " --out " +
              (d / "word.txt")) == 0);
  for (int seed = 1; seed <= 100; ++seed) {
    REQUIRE(run("corrupt --code " + (d / "spec.txt") + " --in " + (d / "word.txt") +
                " --out " + (d / "recv.txt") + " --model col-rank --radius 1 --seed " +
                std::to_string(seed)) == 0);
    REQUIRE(run("decode --alg col --code " + (d / "spec.txt") + " --in " + (d / "recv.txt") +
                " --out " + (d / "dec.txt") + " 2> /dev/null") == 0);
    CHECK(slurp(d / "dec.txt") == slurp(d / "word.txt"));
  }
}

TEST_CASE("decode failure exits with code 2 and still emits the fibre-pass word") {
  TempDir d;
  REQUIRE(run("gen --q 2 --n 4 --m 2 --mu 1 --out " + (d / "spec.txt") + " > /dev/null") == 0);
  CodeSpec spec = load_code_spec(d / "spec.txt");
  // a uniform random word is essentially never decodable column-wise
  Word junk = Word::zeros(2, 4);
  Rng rng(1234);
  int rc = 0;
  for (int attempt = 0; attempt < 10; ++attempt) {
    for (auto& x : junk.a) x = spec.field->element_at(rng.below(spec.field->order()));
    write_file(d / "junk.txt", emit_word(junk));
    rc = run("decode --alg col --code " + (d / "spec.txt") + " --in " + (d / "junk.txt") +
             " --out " + (d / "cand.txt") + " 2> /dev/null");
    if (rc == 2) break;
  }
  CHECK(rc == 2);
  CHECK(!slurp(d / "cand.txt").empty());
}

TEST_CASE("weights and trank subcommands emit key=value reports") {
  TempDir d;
  REQUIRE(run("gen --q 3 --n 2 --m 2 --mu 0 --out " + (d / "spec.txt") + " > /dev/null") == 0);
  CodeSpec spec = load_code_spec(d / "spec.txt");
  Word w = Word::zeros(2, 2);
  w.at2(0, 0) = spec.field->one();
  write_file(d / "w.txt", emit_word(w));
  REQUIRE(run("weights --code " + (d / "spec.txt") + " --in " + (d / "w.txt") + " > " +
              (d / "wout.txt")) == 0);
  CHECK(slurp(d / "wout.txt") == "wF=1 wS1=1 wS2=1 maxrk1=1 maxrk2=1 wSigma=2\n");
  REQUIRE(run("trank --code " + (d / "spec.txt") + " --in " + (d / "w.txt") + " > " +
              (d / "tout.txt")) == 0);
  CHECK(slurp(d / "tout.txt") == "trank=1\n");
}

TEST_CASE("stats emits the reproduction row") {
  TempDir d;
  REQUIRE(run("stats --q 2 --n 10 --mu1 5 --mu2 5 > " + (d / "s.csv")) == 0);
  CHECK(slurp(d / "s.csv") == "mu1,mu2,log10_ratio\n5,5,39.338\n");
  REQUIRE(run("stats --q 2 --n 10 --figure3-grid > " + (d / "grid.csv")) == 0);
  std::string grid = slurp(d / "grid.csv");
  CHECK(grid.find("5,5,39.338") != std::string::npos);
  int rows = 0;
  for (char c : grid)
    if (c == '\n') ++rows;
  CHECK(rows == 65);  // header + 8x8
}

TEST_CASE("bench is deterministic under a fixed seed") {
  TempDir d;
  REQUIRE(run("gen --q 3 --n 5 --m 2 --mu 2 --out " + (d / "spec.txt") + " > /dev/null") == 0);
  std::string cmd = "bench --code " + (d / "spec.txt") +
                    " --alg radical --model slice-fibre --sigma 1 --tau 1 --trials 20 --seed 7 > ";
  REQUIRE(run(cmd + (d / "b1.csv")) == 0);
  REQUIRE(run(cmd + (d / "b2.csv")) == 0);
  CHECK(slurp(d / "b1.csv") == slurp(d / "b2.csv"));
  CHECK(slurp(d / "b1.csv").find("trial,seed,algorithm,model,success,delta") == 0);

  // trials=0 gives a header-only file
  REQUIRE(run("bench --code " + (d / "spec.txt") + " --trials 0 --seed 1 > " + (d / "b0.csv")) ==
          0);
  CHECK(slurp(d / "b0.csv") == "trial,seed,algorithm,model,success,delta\n");
}

TEST_CASE("selftest passes") { CHECK(run("selftest > /dev/null") == 0); }

TEST_CASE("gen with an explicit support list round-trips through parse") {
  TempDir d;
  REQUIRE(run("gen --q 2 --n 3 --m 2 --support \"(0,0);(2,1)\" --out " + (d / "s.txt") +
              " > /dev/null 2>&1") == 0);
  CodeSpec spec = load_code_spec(d / "s.txt");
  CHECK(spec.support.points.size() == 2);
  CHECK(spec.support.points.count({0, 0}) == 1);
  CHECK(spec.support.points.count({2, 1}) == 1);
  CHECK(emit_code_spec(spec) == slurp(d / "s.txt"));
}
