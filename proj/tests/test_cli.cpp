#include <filesystem>
#include <sstream>

#include "corpus.hpp"
#include "dcmp/cli.hpp"
#include "dcmp/io.hpp"
#include "doctest.h"

using namespace dcmp;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "dcmp");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "dcmp-cli-test";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

}  // namespace

TEST_CASE("check: point passes everything") {
  auto r = call({"check", corpus::data_path("point.json"), "--axiom", "all"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("check: json report shape") {
  auto r = call({"--json", "check", corpus::data_path("chain3.json"), "--axiom", "segal"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  REQUIRE(j["reports"].size() == 1);
  CHECK(j["reports"][0]["axiom"] == "segal");
  CHECK(j["reports"][0]["verdict"] == "pass");
  CHECK(j["reports"][0]["maxDegreeChecked"].is_number_integer());
  CHECK(j["reports"][0]["witnesses"].is_array());
}

TEST_CASE("check: failures exit 1 with a witness") {
  auto X = rpt_build(3, 3);
  save_sset(X, tmp("rpt3.json"));
  auto r = call({"check", tmp("rpt3.json"), "--axiom", "segal"});
  CHECK(r.code == 1);
  CHECK(r.out.find("duplicated lift") != std::string::npos);
  CHECK(call({"check", tmp("rpt3.json"), "--axiom", "decomposition"}).code == 0);
}

TEST_CASE("usage and input errors exit 2") {
  CHECK(call({}).code == 2);
  CHECK(call({"check", corpus::data_path("point.json"), "--axiom", "bogus"}).code == 2);
  CHECK(call({"check", "/nonexistent.json"}).code == 2);
  CHECK(call({"coalgebra", corpus::data_path("chain3.json"), "--element", "nope"}).code == 2);
  CHECK(call({"universal", corpus::data_path("chain3.json"), "--maxdeg", "2"}).code == 2);
}

TEST_CASE("coalgebra: three-term table and coassociativity") {
  auto r = call({"coalgebra", corpus::data_path("chain3.json"), "--element", "x_z", "--verify", "coassoc"});
  CHECK(r.code == 0);
  CHECK(r.out.find("delta(x_z): 3 terms") != std::string::npos);
  auto j = json::parse(call({"--json", "coalgebra", corpus::data_path("chain3.json"), "--element", "x_z"}).out);
  REQUIRE(j["delta"]["x_z"].size() == 3);
  CHECK(j["delta"]["x_z"][0].contains("left"));
  CHECK(j["delta"]["x_z"][0].contains("mult"));
}

TEST_CASE("moebius") {
  auto r = call({"moebius", corpus::data_path("chain3.json"), "--at", "x_y"});
  CHECK(r.code == 0);
  CHECK(r.out.find("mu(x_y) = -1") != std::string::npos);
  auto j = json::parse(call({"--json", "moebius", corpus::data_path("chain3.json")}).out);
  CHECK(j["moebius"]["x_z"] == "0");
}

TEST_CASE("build, interval and factorize") {
  CHECK(call({"build", "poset", corpus::data_path("chain3.poset.json"), "--dim", "5", "-o", tmp("c3.json")}).code == 0);
  CHECK(load_sset(tmp("c3.json")) == corpus::chain(3, 5));
  CHECK(call({"build", "category", corpus::data_path("diamond.category.json"), "--dim", "3", "-o", tmp("d.json")}).code == 0);
  CHECK(call({"build", "monoid", corpus::data_path("monoid.json"), "--dim", "3", "-o", tmp("m.json")}).code == 0);
  CHECK(call({"build", "rpt", corpus::data_path("ladder.trees"), "--dim", "3", "-o", tmp("t.json")}).code == 0);
  CHECK(call({"build", "poset", corpus::data_path("ladder.trees"), "--dim", "3", "-o", tmp("x.json")}).code == 2);
  CHECK(call({"interval", tmp("c3.json"), "--edge", "x_z", "-o", tmp("I.json")}).code == 0);
  auto I = read_json_file(tmp("I.json"));
  CHECK(I.contains("bot"));
  // identity map given on degrees 0 and 1
  json m = json::object();
  auto S = sset_from_json(I);
  for (int k = 0; k <= 1; ++k)
    for (const auto& n : S.names(k)) m[std::to_string(k)][n] = n;
  write_text_file(tmp("id.json"), dump_canonical(m));
  auto r = call({"factorize", "--src", tmp("I.json"), "--dst", tmp("I.json"), "--map", tmp("id.json")});
  CHECK(r.code == 0);
  m["0"]["x_x_x"] = "x_y_z";  // not simplicial
  write_text_file(tmp("bad.json"), dump_canonical(m));
  CHECK(call({"factorize", "--src", tmp("I.json"), "--dst", tmp("I.json"), "--map", tmp("bad.json")}).code == 2);
}

TEST_CASE("universal on a small chain") {
  CHECK(call({"build", "poset", corpus::data_path("chain3.poset.json"), "--dim", "5", "-o", tmp("c3.json")}).code == 0);
  auto r = call({"universal", tmp("c3.json"), "--maxdeg", "3", "--verify", "all"});
  CHECK(r.code == 0);
  CHECK(r.out.find("modifications found: 1 (identity)") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  auto a = call({"--json", "coalgebra", corpus::data_path("chain3.json"), "--table", "--verify", "counit"});
  auto b = call({"--json", "coalgebra", corpus::data_path("chain3.json"), "--table", "--verify", "counit"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}
