#include "dcmp/intervals.hpp"

#include <algorithm>
#include <map>

#include "dcmp/axioms.hpp"

namespace dcmp {

AxiomReport Interval::validate() const {
  AxiomReport r("interval");
  const auto& S = X();
  const int N = dim();
  auto bad = [&](const std::string& eq, int k, CellIndex c) {
    r.fail(eq, "at degree " + std::to_string(k) + " on '" + S.name(k, c) + "'");
  };
  if (N < 1) {
    r.fail("dim", "interval needs dim >= 1");
    return r;
  }
  if (static_cast<int>(eb.size()) != N || static_cast<int>(et.size()) != N) {
    r.fail("shape", "eb/et need one table per degree below dim");
    return r;
  }
  for (int k = 0; k < N; ++k) {
    for (CellIndex c = 0; c < static_cast<CellIndex>(S.size(k)); ++c) {
      CellIndex b = eb[k][c], t = et[k][c];
      if (S.face(k + 1, 0, b) != c) bad("d0 eb = id", k, c);
      if (S.face(k + 1, k + 1, t) != c) bad("d_top et = id", k, c);
      if (k >= 1)
        for (int i = 0; i <= k; ++i) {
          if (S.face(k + 1, i + 1, b) != eb[k - 1][S.face(k, i, c)]) bad("d(i+1) eb = eb d(i)", k, c);
          if (S.face(k + 1, i, t) != et[k - 1][S.face(k, i, c)]) bad("d(i) et = et d(i)", k, c);
        }
      if (k + 1 < N) {
        for (int i = 0; i <= k; ++i) {
          if (S.degen(k + 1, i + 1, b) != eb[k + 1][S.degen(k, i, c)]) bad("s(i+1) eb = eb s(i)", k, c);
          if (S.degen(k + 1, i, t) != et[k + 1][S.degen(k, i, c)]) bad("s(i) et = et s(i)", k, c);
        }
        if (et[k + 1][b] != eb[k + 1][t]) bad("et eb = eb et", k, c);
      }
    }
  }
  for (CellIndex x = 0; x < static_cast<CellIndex>(S.size(0)); ++x) {
    if (S.face(1, 1, eb[0][x]) != bot) bad("eb0 starts at bot", 0, x);
    if (S.face(1, 0, et[0][x]) != top) bad("et0 ends at top", 0, x);
  }
  if (eb[0][top] != varpi || et[0][bot] != varpi) r.fail("varpi", "varpi must equal eb(top) and et(bot)");
  r.touch(N);
  auto seg = is_segal(S);
  if (!seg.pass) r.merge(seg);
  return r;
}

CellIndex IntervalOf::lift(int k, CellIndex x_cell) const {
  auto it = from_x.at(k).find(x_cell);
  if (it == from_x[k].end()) throw InvariantError("cell is not in the long-edge fibre");
  return it->second;
}

IntervalOf interval_of(const TruncSSet& X, CellIndex f) {
  const int N = X.dim();
  if (N < 3) throw InputError("interval_of needs dim >= 3");
  if (f < 0 || f >= static_cast<CellIndex>(X.size(1))) throw InputError("not a 1-cell");
  const int D = N - 2;
  SSetBuilder b(D);
  Components handle(D + 1);
  for (int k = 0; k <= D; ++k) {
    handle[k].assign(X.size(k + 2), -1);
    for (CellIndex c = 0; c < static_cast<CellIndex>(X.size(k + 2)); ++c)
      if (long_edge(X, k + 2, c) == f) handle[k][c] = b.add(k, X.name(k + 2, c));
  }
  for (int k = 0; k <= D; ++k)
    for (CellIndex c = 0; c < static_cast<CellIndex>(X.size(k + 2)); ++c) {
      if (handle[k][c] < 0) continue;
      if (k >= 1)
        for (int i = 0; i <= k; ++i) b.set_face(k, i, handle[k][c], handle[k - 1][X.face(k + 2, i + 1, c)]);
      if (k < D)
        for (int i = 0; i <= k; ++i) b.set_degen(k, i, handle[k][c], handle[k + 1][X.degen(k + 2, i + 1, c)]);
    }
  IntervalOf out;
  out.edge = f;
  auto space = std::make_shared<TruncSSet>(b.build());
  out.interval.space = space;
  const auto& I = *space;
  out.to_x.resize(D + 1);
  out.from_x.resize(D + 1);
  for (int k = 0; k <= D; ++k)
    for (CellIndex c = 0; c < static_cast<CellIndex>(I.size(k)); ++c) {
      CellIndex x = X.at(k + 2, I.name(k, c));
      out.to_x[k].push_back(x);
      out.from_x[k][x] = c;
    }
  out.interval.eb.resize(D);
  out.interval.et.resize(D);
  for (int k = 0; k < D; ++k)
    for (CellIndex c = 0; c < static_cast<CellIndex>(I.size(k)); ++c) {
      out.interval.eb[k].push_back(out.lift(k + 1, X.degen(k + 2, 0, out.to_x[k][c])));
      out.interval.et[k].push_back(out.lift(k + 1, X.degen(k + 2, k + 2, out.to_x[k][c])));
    }
  CellIndex sf0 = X.degen(1, 0, f);
  out.interval.bot = out.lift(0, sf0);
  out.interval.top = out.lift(0, X.degen(1, 1, f));
  out.interval.varpi = out.lift(1, X.degen(2, 2, sf0));
  out.M.source = space.get();
  out.M.target = &X;
  for (int k = 0; k <= D; ++k) {
    out.M.comp.emplace_back();
    for (CellIndex x : out.to_x[k]) out.M.comp[k].push_back(X.face(k + 1, 0, X.face(k + 2, k + 2, x)));
  }
  return out;
}

bool stretched_cell(const Interval& C, int n, CellIndex c) {
  return vertex(C.X(), n, c, 0) == C.bot && vertex(C.X(), n, c, n) == C.top;
}

CellIndex phi_lift(const TruncSSet& X, const IntervalOf& I, int n, CellIndex lambda, bool scan) {
  if (n + 2 > X.dim()) throw InputError("phi_lift: truncation exceeded");
  if (I.edge != long_edge_or_unit(X, n, lambda)) throw InputError("phi_lift: interval is not over long(lambda)");
  CellIndex x = X.degen(n + 1, n + 1, X.degen(n, 0, lambda));
  CellIndex phi = I.lift(n, x);
  if (I.M(n, phi) != lambda) throw InvariantError("phi_lift: M(phi) != lambda");
  if (!stretched_cell(I.interval, n, phi)) throw InvariantError("phi_lift: phi is not stretched");
  if (scan) {
    int hits = 0;
    for (CellIndex k = 0; k < static_cast<CellIndex>(I.interval.X().size(n)); ++k)
      if (I.M(n, k) == lambda && stretched_cell(I.interval, n, k)) ++hits;
    if (hits != 1) throw InvariantError("phi_lift: " + std::to_string(hits) + " stretched lifts of '" + X.name(n, lambda) + "'");
  }
  return phi;
}

CellIndex eta_lift(const Interval& C, int n, CellIndex lambda, bool scan) {
  const auto& S = C.X();
  if (n + 2 > C.dim()) throw InputError("eta_lift: truncation exceeded");
  CellIndex eta = C.et[n + 1][C.eb[n][lambda]];
  auto outer = [&](CellIndex c) { return S.face(n + 1, 0, S.face(n + 2, n + 2, c)); };
  if (outer(eta) != lambda) throw InvariantError("eta_lift: d0 d_top eta != lambda");
  if (long_edge(S, n + 2, eta) != C.varpi) throw InvariantError("eta_lift: long(eta) != varpi");
  if (scan) {
    int hits = 0;
    for (CellIndex c = 0; c < static_cast<CellIndex>(S.size(n + 2)); ++c)
      if (outer(c) == lambda && long_edge(S, n + 2, c) == C.varpi) ++hits;
    if (hits != 1) throw InvariantError("eta_lift: " + std::to_string(hits) + " lifts of '" + S.name(n, lambda) + "'");
  }
  return eta;
}

AxiomReport is_culf(const SimpMap& F) {
  AxiomReport r("culf");
  const auto& X = *F.source;
  const auto& Y = *F.target;
  const int n = F.dim();
  auto sq = [&](const std::string& label, int a, int b, std::span<const CellIndex> ox, std::span<const CellIndex> oy) {
    SquareSpec s{label,
                 F.comp[a],
                 ox,
                 oy,
                 F.comp[b],
                 X.size(a),
                 Y.size(a),
                 X.size(b),
                 [&X, a](CellIndex c) { return X.name(a, c); },
                 [&Y, a](CellIndex c) { return Y.name(a, c); },
                 [&X, b](CellIndex c) { return X.name(b, c); }};
    return check_pullback(s, r);
  };
  bool primary = true;
  if (n >= 2) {
    AxiomReport d1("culf-d1");
    SquareSpec s{"d1@2",
                 F.comp[2],
                 X.face_table(2, 1),
                 Y.face_table(2, 1),
                 F.comp[1],
                 X.size(2),
                 Y.size(2),
                 X.size(1),
                 [&X](CellIndex c) { return X.name(2, c); },
                 [&Y](CellIndex c) { return Y.name(2, c); },
                 [&X](CellIndex c) { return X.name(1, c); }};
    primary = check_pullback(s, d1);
  }
  bool all = true;
  for (int k = 0; k <= n; ++k) {
    for (int i = 1; i < k; ++i)
      all = sq("d" + std::to_string(i) + "@" + std::to_string(k), k, k - 1, X.face_table(k, i), Y.face_table(k, i)) && all;
    if (k < n)
      for (int j = 0; j <= k; ++j)
        all = sq("s" + std::to_string(j) + "@" + std::to_string(k), k, k + 1, X.degen_table(k, j), Y.degen_table(k, j)) &&
              all;
    r.touch(k);
  }
  if (n >= 2 && primary != all)
    r.fail("agreement", "the d1 criterion and the full active check disagree (truncation artefact)");
  return r;
}

StretchVerdict is_stretched(const SimpMap& F, const Interval& C, const Interval& D, bool relaxed) {
  StretchVerdict v;
  v.weak = F.dim() >= 1 && F(0, C.bot) == D.bot && F(0, C.top) == D.top && F(1, C.varpi) == D.varpi;
  v.strong = v.weak;
  for (int k = 0; k < F.dim() && v.strong; ++k)
    for (CellIndex c = 0; c < static_cast<CellIndex>(C.X().size(k)) && v.strong; ++c)
      if (F(k + 1, C.eb[k][c]) != D.eb[k][F(k, c)] || F(k + 1, C.et[k][c]) != D.et[k][F(k, c)]) v.strong = false;
  v.pass = relaxed ? v.weak : v.strong;
  return v;
}

bool same_map(const SimpMap& A, const SimpMap& B) {
  int n = std::min(A.dim(), B.dim());
  for (int k = 0; k <= n; ++k)
    if (A.comp[k] != B.comp[k]) return false;
  return true;
}

namespace {

bool is_identity(const SimpMap& F) {
  for (int k = 0; k <= F.dim(); ++k)
    for (CellIndex c = 0; c < static_cast<CellIndex>(F.comp[k].size()); ++c)
      if (F.comp[k][c] != c) return false;
  return true;
}

}  // namespace

WResult W_map(const Interval& C) {
  if (C.dim() < 3) throw InputError("W_map needs dim >= 3");
  WResult res{interval_of(C.X(), C.varpi), {}, AxiomReport("W")};
  const int D = C.dim() - 2;
  res.W.source = C.space.get();
  res.W.target = res.target.interval.space.get();
  for (int n = 0; n <= D; ++n) {
    res.W.comp.emplace_back();
    for (CellIndex c = 0; c < static_cast<CellIndex>(C.X().size(n)); ++c)
      res.W.comp[n].push_back(res.target.lift(n, eta_lift(C, n, c)));
  }
  res.report.merge(check_natural(res.W));
  if (!is_identity(compose(res.target.M, res.W))) res.report.fail("M W = id", "fails");
  if (!is_identity(compose(res.W, res.target.M))) res.report.fail("W M = id", "fails");
  if (!is_stretched(res.W, C, res.target.interval).pass) res.report.fail("stretched", "W is not stretched");
  res.report.touch(D);
  return res;
}

TransportResult culf_transport(const SimpMap& F, CellIndex f) {
  TransportResult res{interval_of(*F.source, f), interval_of(*F.target, F(1, f)), {}, AxiomReport("culf_transport")};
  auto culf = is_culf(F);
  if (!culf.pass) {
    res.report.merge(culf);
    throw InputError("culf_transport: map is not CULF: " + culf.summary());
  }
  const int D = F.dim() - 2;
  res.T.source = res.source.interval.space.get();
  res.T.target = res.target.interval.space.get();
  for (int k = 0; k <= D; ++k) {
    res.T.comp.emplace_back();
    for (CellIndex x : res.source.to_x[k]) res.T.comp[k].push_back(res.target.lift(k, F(k + 2, x)));
  }
  res.report.merge(check_natural(res.T));
  for (int k = 0; k <= D; ++k) {
    if (res.T.comp[k].size() != res.target.interval.X().size(k)) res.report.fail("bijective", "sizes differ at degree " + std::to_string(k));
    std::vector<CellIndex> s = res.T.comp[k];
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) res.report.fail("bijective", "not injective at degree " + std::to_string(k));
  }
  if (!same_map(compose(res.target.M, res.T), compose(F, res.source.M)))
    res.report.fail("M T = F M", "square does not commute");
  res.report.touch(D);
  return res;
}

Factorization factorize(const SimpMap& F, const Interval& C) {
  if (C.dim() < 3) throw InputError("factorize needs source dim >= 3");
  const auto& D = *F.target;
  Factorization res{interval_of(D, F(1, C.varpi)), {}, {}, AxiomReport("factorize")};
  const auto& mid = res.middle;
  res.S.source = C.space.get();
  res.S.target = mid.interval.space.get();
  const int direct = F.dim() - 2;
  Components comp;
  for (int n = 0; n <= direct; ++n) {
    comp.emplace_back();
    for (CellIndex c = 0; c < static_cast<CellIndex>(C.X().size(n)); ++c)
      comp[n].push_back(mid.lift(n, F(n + 2, eta_lift(C, n, c))));
  }
  const int top = std::min(C.dim(), mid.interval.dim());
  if (static_cast<int>(comp.size()) - 1 < top) {
    SpineIndex idx(mid.interval.X());
    if (!extend_by_spine(C.X(), idx, comp, top)) throw InvariantError("factorize: spine extension failed");
  }
  res.S.comp = std::move(comp);
  res.Mpart = mid.M;
  res.report.merge(check_natural(res.S));
  if (!same_map(compose(res.Mpart, res.S), F)) res.report.fail("Mpart S = F", "composite differs from F");
  if (!is_stretched(res.S, C, mid.interval).pass) res.report.fail("stretched", "S is not stretched");
  auto culf = is_culf(res.Mpart);
  if (!culf.pass) res.report.merge(culf);
  res.report.touch(res.S.dim());
  return res;
}

FillResult fill_square(const Interval& E, const Interval& Ep, const Interval& C, const SimpMap& S, const SimpMap& G,
                       const SimpMap& F, const SimpMap& H, bool scan) {
  FillResult res;
  const auto& Cs = C.X();
  const auto& Es = Ep.X();
  if (!same_map(compose(F, G), compose(H, S))) throw InputError("fill_square: square does not commute");
  const CellIndex g = G(1, E.varpi);
  const int direct = std::min({Ep.dim(), Cs.dim(), F.dim(), H.dim()}) - 2;
  if (direct < 1) throw InputError("fill_square: truncation too small");
  Components comp;
  for (int n = 0; n <= direct; ++n) {
    // (F mu, long mu) -> mu over C_{n+2}
    std::map<std::pair<CellIndex, CellIndex>, std::vector<CellIndex>> over;
    for (CellIndex mu = 0; mu < static_cast<CellIndex>(Cs.size(n + 2)); ++mu)
      over[{F(n + 2, mu), long_edge(Cs, n + 2, mu)}].push_back(mu);
    comp.emplace_back();
    for (CellIndex l = 0; l < static_cast<CellIndex>(Es.size(n)); ++l) {
      CellIndex h = H(n + 2, eta_lift(Ep, n, l));
      auto it = over.find({h, g});
      if (it == over.end()) throw InvariantError("fill_square: no lift (F not CULF or square not commuting)");
      if (it->second.size() != 1) throw InvariantError("fill_square: several lifts (precondition broken)");
      CellIndex mu = it->second[0];
      comp[n].push_back(Cs.face(n + 1, 0, Cs.face(n + 2, n + 2, mu)));
    }
  }
  const int top = std::min(Es.dim(), Cs.dim());
  if (static_cast<int>(comp.size()) - 1 < top) {
    SpineIndex idx(Cs);
    if (!extend_by_spine(Es, idx, comp, top)) throw InvariantError("fill_square: spine extension failed");
  }
  res.L = SimpMap{Ep.space.get(), C.space.get(), std::move(comp)};
  res.report.merge(check_natural(res.L));
  if (!same_map(compose(res.L, S), G)) res.report.fail("L S = G", "upper triangle fails");
  if (!same_map(compose(F, res.L), H)) res.report.fail("F L = H", "lower triangle fails");
  res.report.touch(res.L.dim());
  if (scan) {
    MapSearch opts;
    opts.accept = [&](const SimpMap& L) { return same_map(compose(L, S), G) && same_map(compose(F, L), H); };
    auto fillers = enumerate_maps(Es, Cs, opts);
    res.scan_fillers = fillers.size();
    res.scan_agrees = fillers.size() == 1 && same_map(fillers[0], res.L);
    if (!res.scan_agrees)
      res.report.fail("scan", std::to_string(fillers.size()) + " fillers found by exhaustive scan");
  }
  return res;
}

json to_json(const Interval& C) {
  json j = to_json(C.X());
  const auto& S = C.X();
  j["bot"] = S.name(0, C.bot);
  j["top"] = S.name(0, C.top);
  j["varpi"] = S.name(1, C.varpi);
  for (const char* which : {"eb", "et"}) {
    const auto& tab = std::string(which) == "eb" ? C.eb : C.et;
    json t = json::object();
    for (int k = 0; k < C.dim(); ++k) {
      json m = json::object();
      for (CellIndex c = 0; c < static_cast<CellIndex>(S.size(k)); ++c) m[S.name(k, c)] = S.name(k + 1, tab[k][c]);
      t[std::to_string(k)] = m;
    }
    j[which] = t;
  }
  return j;
}

Interval interval_from_json(const json& j) {
  Interval C;
  auto space = std::make_shared<TruncSSet>(sset_from_json(j));
  C.space = space;
  const auto& S = *space;
  try {
    C.bot = S.at(0, j.at("bot").get<std::string>());
    C.top = S.at(0, j.at("top").get<std::string>());
    C.varpi = S.at(1, j.at("varpi").get<std::string>());
    for (const char* which : {"eb", "et"}) {
      auto& tab = std::string(which) == "eb" ? C.eb : C.et;
      tab.assign(S.dim(), {});
      for (int k = 0; k < S.dim(); ++k) {
        tab[k].assign(S.size(k), -1);
        const auto& m = j.at(which).at(std::to_string(k));
        for (const auto& [c, t] : m.items()) tab[k][S.at(k, c)] = S.at(k + 1, t.get<std::string>());
        for (CellIndex v : tab[k])
          if (v < 0) throw InputError(std::string("incomplete ") + which + " table at degree " + std::to_string(k));
      }
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("interval schema error: ") + e.what());
  }
  return C;
}

json map_to_json(const SimpMap& F) {
  json j = json::object();
  for (int k = 0; k <= F.dim(); ++k) {
    json m = json::object();
    for (CellIndex c = 0; c < static_cast<CellIndex>(F.comp[k].size()); ++c)
      m[F.source->name(k, c)] = F.target->name(k, F.comp[k][c]);
    j[std::to_string(k)] = m;
  }
  return j;
}

SimpMap map_from_json(const json& j, const TruncSSet& A, const TruncSSet& B) {
  const int top = std::min(A.dim(), B.dim());
  Components comp;
  try {
    for (int k = 0; k <= top && j.contains(std::to_string(k)); ++k) {
      comp.emplace_back(A.size(k), -1);
      for (const auto& [c, t] : j.at(std::to_string(k)).items()) comp[k][A.at(k, c)] = B.at(k, t.get<std::string>());
      for (CellIndex v : comp[k])
        if (v < 0) throw InputError("map is not total at degree " + std::to_string(k));
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("map schema error: ") + e.what());
  }
  if (comp.size() < 2 && top >= 1) throw InputError("map must give degrees 0 and 1");
  if (static_cast<int>(comp.size()) - 1 < top) {
    SpineIndex idx(B);
    if (!extend_by_spine(A, idx, comp, top)) throw InputError("map does not extend along spines");
  }
  SimpMap F{&A, &B, std::move(comp)};
  auto nat = check_natural(F);
  if (!nat.pass) throw InputError("map is not simplicial: " + nat.summary());
  return F;
}

}  // namespace dcmp
