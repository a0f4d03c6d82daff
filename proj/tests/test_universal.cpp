#include "corpus.hpp"
#include "oracles.hpp"
#include "dcmp/universal.hpp"
#include "doctest.h"

using namespace dcmp;

namespace {
void all_checks_pass(const UXGroupoid& U) {
  CHECK(check_strict(U).pass);
  CHECK(check_objects(U).pass);
  CHECK(check_all_active(U).pass);
  CHECK(check_decomposition_grpd(U).pass);
  CHECK(check_complete_grpd(U).pass);
  CHECK(classifying_map(U).pass);
}
}  // namespace

TEST_CASE("active maps") {
  auto A = active_maps(2);
  // [m] -> [n] with endpoints fixed: n = 0 only from [0]; otherwise C(m-1 + n, n) ... count directly
  std::size_t expect = 0;
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= 2; ++m) {
      if (n == 0) {
        ++expect;  // the constant map is active
        continue;
      }
      if (m == 0) continue;
      // monotone g: [m] -> [n], g(0) = 0, g(m) = n: choose values of g(1..m-1), weakly increasing in [0, n]
      std::size_t c = 0;
      std::function<void(int, int)> rec = [&](int pos, int lo) {
        if (pos == m) {
          ++c;
          return;
        }
        for (int v = lo; v <= n; ++v) rec(pos + 1, v);
      };
      rec(1, 0);
      expect += c;
    }
  CHECK(A.size() == expect);
  for (const auto& [n, g] : A) {
    CHECK(g.front() == 0);
    CHECK(g.back() == n);
  }
}

TEST_CASE("point: every level trivial") {
  auto X = corpus::point(4);
  UXGroupoid U(X, 2);
  for (int n = 0; n <= 2; ++n) {
    CHECK(U.object_count(n) == 1);
    CHECK(U.morphisms(n).size() == 1);
  }
  all_checks_pass(U);
  auto M = enumerate_modifications(U);
  REQUIRE(M.found.size() == 1);
  CHECK(M.found[0].identity);
}

TEST_CASE("chain-3: automorphism groups are trivial") {
  auto X = corpus::chain(3, 4);
  UXGroupoid U(X, 2);
  for (int n = 0; n <= 2; ++n)
    for (CellIndex l = 0; l < static_cast<CellIndex>(X.size(n)); ++l) CHECK(U.hom(n, l, l).size() == 1);
  // level 0: all objects are points, so the groupoid is connected
  CHECK(U.morphisms(0).size() == 9);
  // level 1: x_y and y_z have isomorphic intervals
  CHECK(U.hom(1, X.at(1, "x_y"), X.at(1, "y_z")).size() == 1);
  CHECK(U.hom(1, X.at(1, "x_y"), X.at(1, "x_z")).empty());
  all_checks_pass(U);
  auto M = enumerate_modifications(U);
  REQUIRE(M.found.size() == 1);
  CHECK(M.found[0].identity);
}

TEST_CASE("interval isomorphisms are the order automorphisms of the sub-interval") {
  for (const auto& P : {corpus::boolean_poset(2), corpus::diamond(), corpus::divisors12()}) {
    auto X = poset_nerve(P, 4);
    UXGroupoid U(X, 1);
    for (CellIndex f = 0; f < static_cast<CellIndex>(X.size(1)); ++f) {
      std::size_t fast = 0;
      for (std::size_t id = 0; id < U.functor_count(); ++id)
        fast += U.functor(static_cast<int>(id)).from == f && U.functor(static_cast<int>(id)).to == f;
      std::string name = X.name(1, f);
      auto cut = name.find('_');
      CAPTURE(name);
      CHECK(fast == oracle::automorphisms(oracle::interval(P, name.substr(0, cut), name.substr(cut + 1))));
    }
  }
  auto X = corpus::boolean(2, 4);
  UXGroupoid U(X, 2);
  CellIndex top = X.at(1, "0_ab");
  CHECK(U.hom(1, top, top).size() == 2);
}

TEST_CASE("groupoid operations") {
  auto X = corpus::boolean(2, 5);
  UXGroupoid U(X, 3);
  for (int n = 0; n <= 3; ++n)
    for (std::size_t m = 0; m < U.morphisms(n).size(); ++m) {
      int mi = static_cast<int>(m);
      int inv = U.inverse(n, mi);
      CHECK(U.compose(n, inv, mi) == U.identity(n, U.morphisms(n)[m].src));
      std::vector<int> id(n + 1);
      std::iota(id.begin(), id.end(), 0);
      CHECK(U.apply(n, mi, id) == mi);
      if (n == 2) CHECK(U.apply(n, mi, {0, 2}) == U.face(2, 1, mi));
      if (n == 3) CHECK(U.apply(n, mi, {0, 3}) == U.face(2, 1, U.face(3, 1, mi)));
      if (n == 1) CHECK(U.apply(n, mi, {0, 0, 1}) == U.degen(1, 0, mi));
    }
  all_checks_pass(U);
}

TEST_CASE("diamond: the inert face d0 has a morphism with two lifts") {
  auto X = corpus::diamond(5);
  UXGroupoid U(X, 3);
  all_checks_pass(U);
  // weak and strong stretched readings select the same isomorphisms
  CHECK(U.stretched_readings_disagree() == 0);
  CellIndex l = X.at(3, "f1|c|d");
  CellIndex a = X.at(2, "c'|d'"), b = X.at(2, "c|d");
  CHECK(X.face(3, 0, l) == b);
  // the functor swapping the two middle points above z
  int swap = -1;
  for (int m : U.hom(2, a, b)) swap = m;
  REQUIRE(U.hom(2, a, b).size() == 1);
  auto L = lifts(U, 3, {1, 2, 3}, swap, l);
  CHECK(L.size() == 2);
  CHECK(U.morphisms(3)[L[0]].functor != U.morphisms(3)[L[1]].functor);
  auto hist = lift_histogram(U, 3, {1, 2, 3});
  CHECK(hist.count(2) == 1);
  CHECK_FALSE(check_active_discrete_fibration(U, 3, {1, 2, 3}).pass);
  auto M = enumerate_modifications(U);
  REQUIRE(M.found.size() == 1);
  CHECK(M.found[0].identity);
}

TEST_CASE("rpt with two nodes") {
  auto X = rpt_build(2, 5);
  UXGroupoid U(X, 3);
  all_checks_pass(U);
  CHECK(enumerate_modifications(U).found.size() == 1);
}

TEST_CASE("build rejects bad inputs") {
  CHECK_THROWS_AS(UXGroupoid(corpus::chain(3, 3), 1), InputError);
  CHECK_THROWS_AS(UXGroupoid(corpus::chain(3, 4), 3), InputError);
  CHECK_THROWS_AS(UXGroupoid(rpt_build(2, 4), -1), InputError);
}

TEST_CASE("thread budget reads the environment") {
  setenv("DCMP_THREADS", "3", 1);
  CHECK(thread_budget() == 3);
  setenv("DCMP_THREADS", "1", 1);
  auto X = corpus::chain(4, 5);
  UXGroupoid serial(X, 3);
  unsetenv("DCMP_THREADS");
  UXGroupoid parallel(X, 3);
  for (int n = 0; n <= 3; ++n) CHECK(serial.morphisms(n).size() == parallel.morphisms(n).size());
}
