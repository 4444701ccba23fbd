#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "halve2/cli.hpp"
#include "halve2/codec.hpp"

using halve2::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = halve2::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("halve reports the worked example") {
  auto r = invoke({"halve", "--field", "Q", "--roots", "0,3,4", "--point", "4,0", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["halvable"] == true);
  REQUIRE(j["halves"].size() == 4);
  CHECK(j["halves"][0]["Q"] == Json::parse(R"({"x":"6","y":"-6"})"));
  CHECK(j["halves"][0]["tangent"] == Json::parse(R"({"l":"-3","m":"12"})"));
}

TEST_CASE("divisible lists the non-square witnesses") {
  auto r = invoke({"divisible", "--field", "Q", "--roots", "0,3,4", "--point", "6,-6"});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["halvable"] == false);
  std::vector<std::string> diffs;
  for (const auto& w : j["witness"]) {
    CHECK(w["is_square"] == false);
    CHECK(w["root"].is_null());
    diffs.push_back(w["difference"]);
  }
  CHECK(diffs == std::vector<std::string>{"6", "3", "2"});
}

TEST_CASE("input errors exit with 1") {
  auto r = invoke({"halve", "--field", "Q", "--roots", "0,0,1", "--point", "1,1"});
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  CHECK(r.err.find("RepeatedRoot") != std::string::npos);

  CHECK(invoke({"halve", "--field", "Q", "--roots", "0,3,4", "--point", "1,1"}).code == 1);
  CHECK(invoke({"halve", "--field", "Fp:8", "--roots", "0,3,4", "--point", "1,1"}).code == 1);
  CHECK(invoke({"halve", "--field", "Q", "--roots", "0,3,4"}).code == 1);
  CHECK(invoke({"halve", "--field", "Q", "--roots", "0,3,4", "--point", "x,1"}).code == 1);
  CHECK(invoke({"bogus"}).code == 1);
  CHECK(invoke({}).code == 1);
  CHECK(invoke({"tower", "--field", "Q", "--roots", "0,3,4", "--point", "4,0", "--max-depth", "0"}).code == 1);
  CHECK(invoke({"tower", "--field", "Q", "--roots", "0,3,4", "--point", "inf", "--max-depth", "2"}).code == 1);
  CHECK(invoke({"divisible", "--field", "Q", "--roots", "0,3,4", "--point", "inf"}).code == 1);
  CHECK(invoke({"order4", "--field", "Q", "--roots", "0,3,4", "--index", "4"}).code == 1);
  CHECK(invoke({"halve", "--field", "Q", "--roots", "0,3,4", "--point", "4,0", "--format", "xml"}).code == 1);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("halve of infinity lists the 2-torsion") {
  auto r = invoke({"halve", "--field", "Fp:7", "--roots", "0,3,4", "--point", "inf"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "[\"inf\",{\"x\":\"0\",\"y\":\"0\"},{\"x\":\"3\",\"y\":\"0\"},{\"x\":\"4\",\"y\":\"0\"}]\n");
}

TEST_CASE("tower and order4") {
  auto t = invoke({"tower", "--field", "Q", "--roots", "0,3,4", "--point", "4,0", "--max-depth", "2"});
  REQUIRE(t.code == 0);
  CHECK(t.out == "{\"base\":{\"x\":\"4\",\"y\":\"0\"},\"links\":[{\"x\":\"6\",\"y\":\"-6\"}],\"depth\":1}\n");

  auto o = invoke({"order4", "--field", "Q", "--roots", "0,3,4", "--index", "3"});
  REQUIRE(o.code == 0);
  auto j = Json::parse(o.out);
  REQUIRE(j["points"].size() == 4);
  for (const auto& e : j["points"]) {
    CHECK(e["doubles_to_base"] == true);
    CHECK(e["order4"] == true);
  }

  auto bad = invoke({"order4", "--field", "Q", "--roots", "0,1,2", "--index", "3"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("RootsNotSquare") != std::string::npos);
  CHECK(bad.err.find("x - a1 = 2  not a square") != std::string::npos);
}

TEST_CASE("oracle emits one JSON record per point") {
  auto r = invoke({"oracle", "--field", "Fp:7", "--roots", "0,3,4"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::vector<Json> records;
  while (std::getline(lines, line)) records.push_back(Json::parse(line));
  REQUIRE(records.size() == 8);
  CHECK(records[0]["point"] == "inf");
  CHECK(records[0]["preimages"].size() == 4);
  for (const auto& rec : records) CHECK((rec["preimages"].empty() || rec["preimages"].size() == 4));

  CHECK(invoke({"oracle", "--field", "Q", "--roots", "0,3,4"}).code == 1);
}

TEST_CASE("prime bound comes from the environment") {
  ::setenv("HALVE2_PRIME_BOUND", "5", 1);
  CHECK(invoke({"oracle", "--field", "Fp:7", "--roots", "0,3,4"}).code == 1);
  ::setenv("HALVE2_PRIME_BOUND", "seven", 1);
  CHECK(invoke({"oracle", "--field", "Fp:7", "--roots", "0,3,4"}).code == 1);
  ::setenv("HALVE2_PRIME_BOUND", "20011", 1);
  CHECK(invoke({"oracle", "--field", "Fp:10009", "--roots", "0,3,4"}).code == 0);
  ::unsetenv("HALVE2_PRIME_BOUND");
  CHECK(invoke({"oracle", "--field", "Fp:10009", "--roots", "0,3,4"}).code == 1);
}

TEST_CASE("verify accepts honest reports and rejects tampered ones") {
  const std::vector<std::string> where{"--field", "Q", "--roots", "0,3,4", "--point", "4,0"};
  auto with = [&](std::string sub, std::vector<std::string> extra = {}) {
    std::vector<std::string> a{std::move(sub)};
    a.insert(a.end(), where.begin(), where.end());
    a.insert(a.end(), extra.begin(), extra.end());
    return a;
  };
  const std::string report = invoke(with("halve")).out;

  auto ok = invoke(with("verify"), report);
  CHECK(ok.code == 0);
  CHECK(Json::parse(ok.out)["all_pass"] == true);

  auto text = invoke(with("verify", {"--format", "text"}), report);
  CHECK(text.code == 0);
  CHECK(text.out.find("PASS half[1].cubic_identity") != std::string::npos);
  CHECK(text.out.find("FAIL") == std::string::npos);

  Json tampered = Json::parse(report);
  tampered["halves"][0]["tangent"]["m"] = "11";
  auto bad = invoke(with("verify", {"--format", "text"}), tampered.dump());
  CHECK(bad.code == halve2::cli::kExitVerifyFailed);
  CHECK(bad.out.find("FAIL half[1].cubic_identity") != std::string::npos);
  CHECK(bad.out.find("FAIL half[1].moebius") != std::string::npos);
  CHECK(bad.out.find("PASS half[2].moebius") != std::string::npos);

  Json dropped = Json::parse(report);
  dropped["halves"].erase(3);
  CHECK(invoke(with("verify"), dropped.dump()).code == halve2::cli::kExitVerifyFailed);

  Json lying = Json::parse(report);
  lying["halvable"] = false;
  CHECK(invoke(with("verify"), lying.dump()).code == halve2::cli::kExitVerifyFailed);

  // A half sitting on a root makes the Moebius denominator vanish: reported, not thrown.
  Json degenerate = Json::parse(report);
  degenerate["halves"][0]["Q"] = Json::parse(R"({"x":"0","y":"0"})");
  auto deg = invoke(with("verify", {"--format", "text"}), degenerate.dump());
  CHECK(deg.code == halve2::cli::kExitVerifyFailed);
  CHECK(deg.out.find("FAIL half[1].moebius") != std::string::npos);

  CHECK(invoke(with("verify"), "not json").code == 1);
  CHECK(invoke(with("verify"), "{}").code == 1);
}

TEST_CASE("text output") {
  auto r = invoke({"halve", "--field", "Q", "--roots", "0,3,4", "--point", "4,0", "--format", "text"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("half 1: Q = (6, -6)  roots (2, 1, 0)  tangent y = -3*x + 12") != std::string::npos);
}

TEST_CASE("repeated invocations are byte-identical") {
  const std::vector<std::vector<std::string>> runs{
      {"halve", "--field", "Fp:31", "--roots", "0,1,3", "--point", "1,0"},
      {"divisible", "--field", "Q", "--roots", "0,3,4", "--point", "6,-6", "--format", "text"},
      {"tower", "--field", "Fp:31", "--roots", "0,1,3", "--point", "1,0", "--max-depth", "3"},
      {"oracle", "--field", "Fp:13", "--roots", "0,1,4"},
  };
  for (const auto& a : runs) {
    auto first = invoke(a), second = invoke(a);
    CHECK(first.code == second.code);
    CHECK(first.out == second.out);
  }
}
