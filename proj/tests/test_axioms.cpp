#include <map>

#include "corpus.hpp"
#include "dcmp/axioms.hpp"
#include "doctest.h"

using namespace dcmp;

namespace {
// Segal at degree 2 by counting fillers of each composable pair
bool segal2_by_counting(const TruncSSet& X) {
  std::map<std::pair<CellIndex, CellIndex>, int> fillers;
  for (CellIndex s = 0; s < static_cast<CellIndex>(X.size(2)); ++s) ++fillers[{X.face(2, 2, s), X.face(2, 0, s)}];
  for (CellIndex a = 0; a < static_cast<CellIndex>(X.size(1)); ++a)
    for (CellIndex b = 0; b < static_cast<CellIndex>(X.size(1)); ++b)
      if (X.face(1, 0, a) == X.face(1, 1, b) && fillers[{a, b}] != 1) return false;
  for (auto& [k, v] : fillers)
    if (X.face(1, 0, k.first) != X.face(1, 1, k.second)) return false;
  return true;
}
}  // namespace

TEST_CASE("poset nerves satisfy every axiom") {
  for (int N = 2; N <= 4; ++N)
    for (const auto& e : corpus::posets(N)) {
      CAPTURE(e.name);
      CAPTURE(N);
      CHECK(is_segal(e.X).pass);
      CHECK(is_decomposition(e.X).pass);
      CHECK(is_upper_2segal(e.X).pass);
      CHECK(is_lower_2segal(e.X).pass);
      CHECK(is_complete(e.X).pass);
      CHECK(check_unital(e.X, Side::Upper).pass);
      CHECK(check_unital(e.X, Side::Lower).pass);
    }
}

TEST_CASE("segal verdict agrees with filler counting") {
  for (const auto& e : corpus::all(3)) {
    CAPTURE(e.name);
    CHECK(segal2_by_counting(e.X) == is_segal(e.X).pass);
  }
  CHECK_FALSE(segal2_by_counting(corpus::hollow_triangle(3)));
}

TEST_CASE("trees: decomposition and complete but not segal") {
  auto X = rpt_build(3, 3);
  CHECK(is_decomposition(X).pass);
  CHECK(is_complete(X).pass);
  auto s = is_segal(X);
  CHECK_FALSE(s.pass);
  CHECK_FALSE(s.witnesses.empty());
}

TEST_CASE("monoid and diamond nerves") {
  auto D = corpus::diamond(4);
  CHECK(is_segal(D).pass);
  CHECK(is_decomposition(D).pass);
  CHECK(is_complete(D).pass);
  // the length cap removes fillers of long composable pairs
  auto M = corpus::free_monoid(4);
  CHECK_FALSE(is_segal(M).pass);
  CHECK(is_decomposition(M).pass);
  CHECK(is_complete(M).pass);
}

TEST_CASE("hollow triangle: decomposition but not segal") {
  auto X = corpus::hollow_triangle(3);
  CHECK(validate_simplicial(X).pass);
  auto s = is_segal(X);
  CHECK_FALSE(s.pass);
  REQUIRE_FALSE(s.witnesses.empty());
  CHECK(s.witnesses[0].detail.find("missing lift") != std::string::npos);
  CHECK(is_decomposition(X).pass);
}

TEST_CASE("a missing 3-simplex breaks the decomposition squares") {
  auto X = corpus::without_top_cell(corpus::chain(4, 3), "a0_a1_a2_a3");
  CHECK(validate_simplicial(X).pass);
  auto d = is_decomposition(X);
  CHECK_FALSE(d.pass);
  REQUIRE_FALSE(d.witnesses.empty());
  CHECK(d.witnesses[0].detail.find("missing lift") != std::string::npos);
}

TEST_CASE("for sets completeness holds even with non-trivial isomorphisms") {
  FinCategory C;
  C.objects = {"a", "b"};
  C.morphisms = {{"u", "a", "b"}, {"v", "b", "a"}};
  C.composition = {{"u", "v", "id_a"}, {"v", "u", "id_b"}};
  auto X = category_nerve(C, 3);
  CHECK(is_decomposition(X).pass);
  // s0 always has the retraction d0
  CHECK(is_complete(X).pass);
}

TEST_CASE("pullback checker on a hand-made square") {
  // A = {0,1}, B = C = D = {0}: two elements over one point, not a pullback
  std::vector<CellIndex> top{0, 0}, left{0, 0}, right{0}, bottom{0};
  auto nm = [](CellIndex c) { return std::to_string(c); };
  AxiomReport r("square");
  SquareSpec sq{"t", top, left, right, bottom, 2, 1, 1, nm, nm, nm};
  CHECK_FALSE(check_pullback(sq, r));
  CHECK(r.witnesses.size() == 1);
  std::vector<CellIndex> one{0};
  AxiomReport r2("square");
  SquareSpec ok{"t", one, one, right, bottom, 1, 1, 1, nm, nm, nm};
  CHECK(check_pullback(ok, r2));
}
