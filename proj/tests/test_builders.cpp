#include <fstream>

#include "corpus.hpp"
#include "oracles.hpp"
#include "dcmp/axioms.hpp"
#include "dcmp/builders.hpp"
#include "doctest.h"

using namespace dcmp;


TEST_CASE("poset nerves have the chain counts") {
  for (const auto& P : {corpus::boolean_poset(2), corpus::boolean_poset(3), corpus::divisors12(), corpus::diamond()}) {
    auto X = poset_nerve(P, 3);
    for (int k = 0; k <= 3; ++k) CHECK(X.size(k) == oracle::chains(P, k));
    CHECK(validate_simplicial(X).pass);
  }
}

TEST_CASE("category nerve of the diamond matches its poset nerve") {
  auto C = corpus::diamond(4);
  auto P = poset_nerve(corpus::diamond(), 4);
  for (int k = 0; k <= 4; ++k) CHECK(C.size(k) == P.size(k));
  CHECK(validate_simplicial(C).pass);
  CHECK(C.find(3, "f1|c|d").has_value());
  CellIndex l = C.at(3, "f1|c|d");
  CHECK(C.name(2, C.face(3, 0, l)) == "c|d");
  CHECK(C.name(2, C.face(3, 1, l)) == "x>yb|d");
  CHECK(C.name(1, long_edge(C, 3, l)) == "f");
  CHECK(C.name(1, C.degen(0, 0, C.at(0, "x"))) == "id_x");
}

TEST_CASE("category validation") {
  FinCategory C;
  C.objects = {"a", "b"};
  C.morphisms = {{"u", "a", "b"}, {"v", "b", "a"}};
  C.composition = {{"u", "v", "id_a"}};
  CHECK_THROWS_AS(category_nerve(C, 2), InputError);  // v then u missing
  C.composition.push_back({"v", "u", "id_b"});
  auto X = category_nerve(C, 3);
  CHECK(validate_simplicial(X).pass);
  CHECK(is_segal(X).pass);
  CHECK(is_decomposition(X).pass);
}

TEST_CASE("monoid nerve: trace normal forms") {
  MonoidPresentation M;
  M.generators = {{"a", 1}, {"b", 1}};
  M.commute = {{"a", "b"}};
  M.max_length = 2;
  auto X = monoid_nerve(M, 2);
  // elements of length <= 2 in the free commutative monoid on a, b: 1, a, b, aa, ab, bb
  CHECK(X.size(0) == 1);
  CHECK(X.size(1) == 6);
  CHECK(X.find(1, "a.b").has_value());
  CHECK_FALSE(X.find(1, "b.a").has_value());
  CHECK(X.name(1, X.face(2, 1, X.at(2, "b|a"))) == "a.b");
  CHECK(validate_simplicial(X).pass);
  // a.b followed by a has total length 3 > 2, so the pair has no filler
  CHECK_FALSE(is_segal(X).pass);
  CHECK(is_decomposition(X).pass);
}

TEST_CASE("rooted plane forests") {
  auto F = parse_forest("(())()");
  CHECK(F.size() == 2);
  CHECK(render_forest(F) == "(())()");
  CHECK(parse_forest("e").empty());
  CHECK_THROWS_AS(parse_forest("(()"), InputError);
  // plane forests with n nodes: Catalan(n)
  CHECK(all_forests(0).size() == 1);
  CHECK(all_forests(1).size() == 1);
  CHECK(all_forests(2).size() == 2);
  CHECK(all_forests(3).size() == 5);
  CHECK(all_forests(4).size() == 14);
}

TEST_CASE("rpt: counts and structure") {
  auto X = rpt_build(2, 3);
  CHECK(X.size(0) == 1);
  CHECK(X.size(1) == 4);
  CHECK(validate_simplicial(X).pass);
  CellIndex ladder = X.at(1, "(())");
  // cuts of the ladder: empty crown, crown = leaf, crown = everything
  std::size_t cuts = 0;
  for (CellIndex s = 0; s < static_cast<CellIndex>(X.size(2)); ++s)
    if (X.face(2, 1, s) == ladder) ++cuts;
  CHECK(cuts == 3);
}

TEST_CASE("rpt from a forest file closes under cuts") {
  auto forests = read_forest_file(corpus::data_path("ladder.trees"));
  REQUIRE(forests.size() == 2);
  auto X = rpt_from_forests(forests, 3);
  CHECK(validate_simplicial(X).pass);
  CHECK(X.find(1, "()").has_value());
  CHECK(X.find(1, "e").has_value());
  CHECK(X.size(1) == 4);
}

TEST_CASE("parsers reject bad files") {
  CHECK_THROWS_AS(poset_from_json(json::parse("{\"covers\": []}")), InputError);
  CHECK_THROWS_AS(category_from_json(json::parse("{\"objects\": [\"a\"]}")), InputError);
  CHECK_THROWS_AS(monoid_from_json(json::parse("{\"generators\": [\"a\"]}")), InputError);
  FinPoset cyc{{"a", "b"}, {{"a", "b"}, {"b", "a"}}};
  CHECK_THROWS_AS(poset_nerve(cyc, 2), InputError);
}
