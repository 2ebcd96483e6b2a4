#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prc/cli.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace prc;

namespace {
struct Out {
  int code;
  std::string out, err;
};

Out call(std::vector<std::string> args) {
  std::ostringstream o, e;
  const int c = cli::run(args, o, e);
  return {c, o.str(), e.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}
}  // namespace

TEST_CASE("exact number parsing") {
  CHECK(cli::parse_rational("7/6") == Rational(7, 6));
  CHECK(cli::parse_rational("-0.25") == Rational(-1, 4));
  CHECK(cli::parse_rational("\xE2\x88\x92" "3") == Rational(-3));
  CHECK(cli::parse_rational("1.5e2") == Rational(150));
  CHECK(cli::parse_rational(" 2 ") == Rational(2));
  for (const char* bad : {"", "abc", "1/0", "1.5/2", "3/", "--1"})
    CHECK_THROWS_AS(cli::parse_rational(bad), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_list("1,2", 3), std::invalid_argument);
}

TEST_CASE("ranges") {
  const auto r = cli::parse_range("0:1:1/4").points();
  REQUIRE(r.size() == 5);
  CHECK(r.back() == Rational(1));
  CHECK(cli::parse_range("1:0:0.1").points().empty());
  CHECK_THROWS_AS(cli::parse_range("0:1:0"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_range("0:1"), std::invalid_argument);
}

TEST_CASE("twelve significant digits") {
  CHECK(cli::fmt12(65.0 / 108.0) == "0.601851851852");
  CHECK(cli::fmt12(-0.0) == "0");
}

TEST_CASE("ric at the golden point") {
  const auto r = call({"ric", "--space", "so17", "--xyz", "1,1,0.5"});
  CHECK(r.code == 0);
  CHECK(r.out == "r1=0.601851851852 r2=-0.398148148148 r3=-0.592592592593 exact=65/108,-43/108,-16/27\n");
}

TEST_CASE("json mode emits one object per line") {
  const auto r = call({"ric", "--xyz", "1,1,1/2", "--json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["r1"].get<double>() == 0.601851851852);
  CHECK(j["exact"] == "65/108,-43/108,-16/27");
}

TEST_CASE("generic solve-ct includes c = 0.5") {
  const auto r = call({"--json", "solve-ct", "--space", "generic", "--params", "7,7,7/6,7/6", "--t",
                       "0.8333333333,\xE2\x88\x92" "1.1666666667"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  bool half = false;
  for (double c : j["c"]) half |= std::abs(c - 0.5) < 1e-9;
  CHECK(half);
}

TEST_CASE("domain verdicts exit 0, usage errors exit 2") {
  const auto none = call({"solve-ct", "--t", "1,-2,0"});
  CHECK(none.code == 0);
  CHECK(none.out.find("solutions=0") != std::string::npos);
  const auto nt = call({"solve-t", "--space", "generic", "--params", "7,7,7/6,7/6", "--t2", "0"});
  CHECK(nt.code == 0);
  CHECK(nt.out.find("member=false") != std::string::npos);
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"ric", "--xyz", "1,1"}).code == 2);
  CHECK(call({"ric", "--xyz", "1,1,1"}).code == 2);
  CHECK(call({"solve-ct", "--t", "-1,-1,0"}).code == 2);
  CHECK(call({"region", "--l", "-1", "--m", "0"}).code == 2);
  CHECK(call({"sweep", "--l", "0:1:0", "--m", "0:1:1"}).code == 2);
  CHECK(call({"classify"}).code == 2);
}

TEST_CASE("region query") {
  const auto r = call({"region", "--l", "-43/65", "--m", "64/65"});
  CHECK(r.code == 0);
  CHECK(r.out.find("in_R=true") != std::string::npos);
  CHECK(r.out.find("regions=3;6;10") != std::string::npos);
}

TEST_CASE("classify --label I.16") {
  const auto r = call({"classify", "--label", "I.16"});
  CHECK(r.code == 0);
  CHECK(r.out.find("label=I.16") != std::string::npos);
  CHECK(r.out.find("flags=equivalent_summands") != std::string::npos);
  CHECK(call({"classify", "--label", "Z.9"}).code == 2);
}

TEST_CASE("sweeps") {
  const auto t = call({"sweep", "--mode", "t", "--t2", "-2:-1:1/2", "--t3", "0:0:1"});
  CHECK(t.code == 0);
  std::istringstream rows(t.out);
  std::string line;
  std::getline(rows, line);
  CHECK(line == "t2,t3,t1,in_image");
  int n = 0;
  while (std::getline(rows, line)) {
    double t2, t3, t1;
    int in;
    REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf,%d", &t2, &t3, &t1, &in) == 4);
    CHECK(in == 1);
    CHECK(t1 == doctest::Approx(6 * t2 * t2 + 6 * t2 + 15.0 / 8.0).epsilon(1e-11));
    ++n;
  }
  CHECK(n == 3);

  const auto empty = call({"sweep", "--l", "1:0:0.1", "--m", "0:1:0.5"});
  CHECK(empty.out == "l,m,in_R,region_ids,c_list\n");

  const std::string a = "sweep_a.csv", b = "sweep_b.csv";
  CHECK(call({"sweep", "--l", "-1:0:1/4", "--m", "0:1:1/4", "--out", a}).code == 0);
  CHECK(call({"sweep", "--l", "-1:0:1/4", "--m", "0:1:1/4", "--out", b}).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).rfind("l,m,in_R,region_ids,c_list\n", 0) == 0);
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST_CASE("verify passes on a small sample") {
  const auto r = call({"verify", "--samples", "20", "--region-samples", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}
