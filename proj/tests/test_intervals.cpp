#include <set>

#include "corpus.hpp"
#include "oracles.hpp"
#include "dcmp/axioms.hpp"
#include "dcmp/decalage.hpp"
#include "dcmp/intervals.hpp"
#include "doctest.h"

using namespace dcmp;

namespace {

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::size_t p = 0;
  for (std::size_t q; (q = s.find('_', p)) != std::string::npos; p = q + 1) out.push_back(s.substr(p, q - p));
  out.push_back(s.substr(p));
  return out;
}

}  // namespace

TEST_CASE("interval of a poset edge is the nerve of the sub-interval") {
  for (auto [name, P] : std::vector<std::pair<std::string, FinPoset>>{{"B2", corpus::boolean_poset(2)},
                                                                      {"chain-4", corpus::chain_poset(4)},
                                                                      {"div12", corpus::divisors12()}}) {
    CAPTURE(name);
    auto X = poset_nerve(P, 4);
    for (CellIndex f = 0; f < static_cast<CellIndex>(X.size(1)); ++f) {
      auto ab = split(X.name(1, f));
      auto I = interval_of(X, f);
      auto Q = poset_nerve(oracle::interval(P, ab[0], ab[1]), 2);
      CAPTURE(X.name(1, f));
      for (int k = 0; k <= 2; ++k) {
        REQUIRE(I.interval.X().size(k) == Q.size(k));
        std::set<std::string> got;
        for (CellIndex c = 0; c < static_cast<CellIndex>(Q.size(k)); ++c) got.insert(X.name(k, I.M(k, c)));
        CHECK(got == std::set<std::string>(Q.names(k).begin(), Q.names(k).end()));
      }
      CHECK(I.interval.validate().pass);
      CHECK(is_segal(I.interval.X()).pass);
      CHECK(is_complete(I.interval.X()).pass);
      CHECK(is_culf(I.M).pass);
    }
  }
}

TEST_CASE("interval of a degenerate edge is a point") {
  auto X = corpus::chain(3, 4);
  auto I = interval_of(X, X.at(1, "y_y"));
  for (int k = 0; k <= 2; ++k) CHECK(I.interval.X().size(k) == 1);
}

TEST_CASE("interval of a tree: vertices are its cuts") {
  auto X = rpt_build(3, 4);
  auto I = interval_of(X, X.at(1, "(())"));
  CHECK(I.interval.X().size(0) == 3);
  CHECK(I.interval.validate().pass);
  CHECK(I.interval.bot != I.interval.top);
}

TEST_CASE("phi and eta lifts") {
  auto X = corpus::chain(3, 4);
  CellIndex xz = X.at(1, "x_z");
  auto I = interval_of(X, xz);
  CellIndex phi = phi_lift(X, I, 1, xz);
  CHECK(X.name(3, I.to_x[1][phi]) == "x_x_z_z");
  CHECK(I.M(1, phi) == xz);
  CHECK(stretched_cell(I.interval, 1, phi));
  // eta of the middle vertex is the 2-chain through it
  CellIndex y = I.interval.X().at(0, "x_y_z");
  CellIndex eta = eta_lift(I.interval, 0, y);
  CHECK(I.interval.X().name(2, eta) == "x_x_y_z_z");
  for (const auto& e : corpus::all(4)) {
    CAPTURE(e.name);
    for (int n = 0; n <= 2; ++n)
      for (CellIndex l = 0; l < static_cast<CellIndex>(e.X.size(n)); ++l) {
        auto J = interval_of(e.X, long_edge_or_unit(e.X, n, l));
        CHECK_NOTHROW(phi_lift(e.X, J, n, l, true));
      }
  }
}

TEST_CASE("M of an interval at its chosen edge is stretched, W inverts it") {
  auto X = corpus::boolean(2, 5);
  auto I = interval_of(X, X.at(1, "0_ab"));
  auto W = W_map(I.interval);
  CHECK(W.report.pass);
  CHECK(is_stretched(W.target.M, W.target.interval, I.interval).pass);
  CHECK(levelwise_bijective(W.W));
  auto id = identity_map(I.interval.X());
  auto v = is_stretched(id, I.interval, I.interval);
  CHECK(v.pass);
  CHECK_FALSE(v.readings_disagree());
}

TEST_CASE("a map moving bot is not stretched") {
  auto X = corpus::chain(3, 5);
  auto I = interval_of(X, X.at(1, "x_z"));
  const auto& S = I.interval.X();
  MapSearch opts;
  opts.fixed_vertices = {{I.interval.bot, I.interval.top}};
  auto maps = enumerate_maps(S, S, opts);
  REQUIRE_FALSE(maps.empty());
  for (const auto& F : maps) CHECK_FALSE(is_stretched(F, I.interval, I.interval).pass);
}

TEST_CASE("culf examples") {
  auto X = corpus::chain(3, 3);
  CHECK(is_culf(dec_bot(X).map).pass);
  // chain-2 into chain-3 missing the middle point: x_z has a factorisation downstairs only
  auto A = corpus::chain(2, 3);
  SimpMap inc{&A, &X, {}};
  for (int k = 0; k <= 3; ++k) {
    inc.comp.emplace_back();
    for (CellIndex c = 0; c < static_cast<CellIndex>(A.size(k)); ++c) inc.comp[k].push_back(X.at(k, A.name(k, c)));
  }
  CHECK(check_natural(inc).pass);
  auto r = is_culf(inc);
  CHECK_FALSE(r.pass);
  CHECK_FALSE(r.witnesses.empty());
  // a point into chain-2 is culf: the only factorisations of an identity are identities
  auto P = corpus::point(3);
  auto C2 = corpus::chain(2, 3);
  SimpMap pt{&P, &C2, {}};
  for (int k = 0; k <= 3; ++k) pt.comp.push_back({C2.at(k, chain_id(std::vector<std::string>(k + 1, "x")))});
  CHECK(is_culf(pt).pass);
}

TEST_CASE("culf transport along a dec map") {
  auto X = corpus::chain(4, 5);
  auto D = dec_bot(X);
  for (CellIndex f = 0; f < static_cast<CellIndex>(D.space->size(1)); ++f) {
    auto T = culf_transport(D.map, f);
    CHECK(T.report.pass);
    CHECK(levelwise_bijective(T.T));
  }
}

TEST_CASE("factorize and fill a square on chain intervals") {
  auto X = corpus::chain(3, 5);
  auto E = interval_of(X, X.at(1, "x_z"));
  auto C = interval_of(X, X.at(1, "x_z"));
  int squares = 0;
  for (const auto& G : enumerate_maps(E.interval.X(), C.interval.X())) {
    auto FG = compose(C.M, G);
    auto fac = factorize(FG, E.interval);
    REQUIRE(fac.report.pass);
    auto fill = fill_square(E.interval, fac.middle.interval, C.interval, fac.S, G, C.M, fac.Mpart);
    CHECK(fill.report.pass);
    CHECK(fill.scan_agrees);
    ++squares;
  }
  CHECK(squares > 5);
}

TEST_CASE("serialisation of intervals and maps") {
  auto X = corpus::chain(3, 5);
  auto I = interval_of(X, X.at(1, "x_z"));
  json j = to_json(I.interval);
  auto back = interval_from_json(j);
  CHECK(back.X() == I.interval.X());
  CHECK(back.bot == I.interval.bot);
  CHECK(back.eb == I.interval.eb);
  CHECK(dump_canonical(to_json(back)) == dump_canonical(j));
  auto id = identity_map(I.interval.X());
  json m = map_to_json(id);
  m.erase("2");
  m.erase("3");
  auto F = map_from_json(m, I.interval.X(), I.interval.X());
  CHECK(F.comp == id.comp);
  m.erase("1");
  CHECK_THROWS_AS(map_from_json(m, I.interval.X(), I.interval.X()), InputError);
}

TEST_CASE("map enumeration agrees with brute force on a small interval") {
  auto X = corpus::chain(3, 3);
  auto I = interval_of(X, X.at(1, "x_z"));
  const auto& S = I.interval.X();
  REQUIRE(S.dim() == 1);
  auto fast = enumerate_maps(S, S);
  auto brute = brute_force_maps(S, S, false);
  CHECK(fast.size() == brute.size());
  std::set<Components> a, b;
  for (const auto& F : fast) a.insert(F.comp);
  for (const auto& F : brute) b.insert(F.comp);
  CHECK(a == b);
  MapSearch bij;
  bij.bijective = true;
  CHECK(enumerate_maps(S, S, bij).size() == brute_force_maps(S, S, true).size());
}
