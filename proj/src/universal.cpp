#include "dcmp/universal.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "dcmp/axioms.hpp"

namespace dcmp {

int thread_budget() {
  if (const char* s = std::getenv("DCMP_THREADS")) {
    int n = std::atoi(s);
    if (n >= 1) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  const std::size_t T = std::min<std::size_t>(thread_budget(), count);
  if (T <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < T; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < count;) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(mu);
          if (!err) err = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

std::vector<std::size_t> signature(const TruncSSet& S) {
  std::vector<std::size_t> sig;
  for (int k = 0; k <= S.dim(); ++k) sig.push_back(S.size(k));
  // vertex in/out degrees (non-degenerate edges), sorted
  std::vector<std::pair<int, int>> deg(S.size(0));
  if (S.dim() >= 1)
    for (CellIndex e = 0; e < static_cast<CellIndex>(S.size(1)); ++e) {
      ++deg[S.face(1, 1, e)].first;
      ++deg[S.face(1, 0, e)].second;
    }
  std::sort(deg.begin(), deg.end());
  for (auto [a, b] : deg) {
    sig.push_back(a);
    sig.push_back(b);
  }
  return sig;
}

Components compose_comp(const Components& g, const Components& f) {
  Components h(std::min(g.size(), f.size()));
  for (std::size_t k = 0; k < h.size(); ++k) {
    h[k].resize(f[k].size());
    for (std::size_t c = 0; c < f[k].size(); ++c) h[k][c] = g[k][f[k][c]];
  }
  return h;
}

Components identity_comp(const TruncSSet& S) {
  Components c(S.dim() + 1);
  for (int k = 0; k <= S.dim(); ++k) {
    c[k].resize(S.size(k));
    std::iota(c[k].begin(), c[k].end(), 0);
  }
  return c;
}

std::int64_t pair_key(CellIndex a, CellIndex b) { return (static_cast<std::int64_t>(a) << 32) | static_cast<std::uint32_t>(b); }

}  // namespace

UXGroupoid::UXGroupoid(const TruncSSet& X, int maxdeg) : X_(&X), maxdeg_(maxdeg) {
  const int N = X.dim();
  if (N < 4) throw InputError("build_UX needs dim >= 4");
  if (maxdeg < 0 || maxdeg + 2 > N) throw InputError("build_UX needs 0 <= maxdeg <= dim - 2");
  if (!is_decomposition(X).pass) throw InputError("build_UX: input is not a decomposition set");
  if (!is_complete(X).pass) throw InputError("build_UX: input is not complete");

  const auto E = X.size(1);
  intervals_.resize(E);
  parallel_for(E, [&](std::size_t f) { intervals_[f] = interval_of(X, static_cast<CellIndex>(f)); });

  // stretched isomorphisms between intervals with matching signatures
  std::map<std::vector<std::size_t>, std::vector<CellIndex>> classes;
  for (CellIndex f = 0; f < static_cast<CellIndex>(E); ++f) classes[signature(intervals_[f].interval.X())].push_back(f);
  std::vector<std::pair<CellIndex, CellIndex>> pairs;
  for (const auto& [sig, fs] : classes)
    for (CellIndex f : fs)
      for (CellIndex g : fs) pairs.emplace_back(f, g);
  std::vector<std::vector<Components>> found(pairs.size());
  std::vector<std::size_t> disagree(pairs.size(), 0);
  parallel_for(pairs.size(), [&](std::size_t p) {
    auto [f, g] = pairs[p];
    const auto& A = intervals_[f].interval;
    const auto& B = intervals_[g].interval;
    MapSearch opts;
    opts.bijective = true;
    opts.fixed_vertices = {{A.bot, B.bot}, {A.top, B.top}};
    opts.accept = [&](const SimpMap& F) {
      auto v = is_stretched(F, A, B);
      if (v.readings_disagree()) ++disagree[p];
      return v.pass && is_culf(F).pass;
    };
    for (auto& F : enumerate_maps(A.X(), B.X(), opts)) found[p].push_back(std::move(F.comp));
  });
  functors_from_.assign(E, {});
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    disagreements_ += disagree[p];
    for (auto& comp : found[p]) {
      int id = static_cast<int>(functors_.size());
      functor_index_[{pairs[p].first, pairs[p].second, comp[0], comp[1]}] = id;
      functors_.push_back({pairs[p].first, pairs[p].second, std::move(comp)});
      functors_from_[pairs[p].first].push_back(id);
    }
  }

  glue_index_.assign(2, std::vector<std::unordered_map<std::int64_t, CellIndex>>(N + 1));
  for (int m = 3; m <= N; ++m)
    for (CellIndex w = 0; w < static_cast<CellIndex>(X.size(m)); ++w) {
      for (int side = 0; side < 2; ++side) {
        CellIndex eta = side == 0 ? X.face(m, 0, w) : X.face(m, m, w);
        CellIndex tau = side == 0 ? restrict_to(X, m, w, {0, 1, m}) : restrict_to(X, m, w, {0, m - 1, m});
        auto [it, fresh] = glue_index_[side][m].emplace(pair_key(eta, tau), w);
        if (!fresh) it->second = -2;
      }
    }

  levels_.resize(maxdeg + 1);
  for (int n = 0; n <= maxdeg; ++n) {
    auto& L = levels_[n];
    const auto On = X.size(n);
    L.edge.resize(On);
    L.phi.resize(On);
    for (CellIndex l = 0; l < static_cast<CellIndex>(On); ++l) {
      L.edge[l] = long_edge_or_unit(X, n, l);
      L.phi[l] = phi_lift(X, intervals_[L.edge[l]], n, l);
    }
    L.identity.assign(On, -1);
    for (CellIndex l = 0; l < static_cast<CellIndex>(On); ++l) {
      for (int id : functors_from_[L.edge[l]]) {
        const auto& F = functors_[id];
        CellIndex kappa = F.comp[n][L.phi[l]];
        CellIndex mu = intervals_[F.to].M(n, kappa);
        if (L.edge[mu] != F.to || L.phi[mu] != kappa)
          throw InvariantError("object correspondence fails at level " + std::to_string(n));
        int m = static_cast<int>(L.mor.size());
        L.mor.push_back({l, mu, id});
        L.hom[{l, mu}].push_back(m);
        L.lookup[{l, mu, id}] = m;
      }
      auto idf = identity_comp(intervals_[L.edge[l]].interval.X());
      auto it = L.lookup.find({l, l, functor_id(L.edge[l], L.edge[l], idf)});
      if (it == L.lookup.end()) throw InvariantError("missing identity morphism");
      L.identity[l] = it->second;
    }
  }

  for (int n = 1; n <= maxdeg; ++n)
    for (CellIndex l = 0; l < static_cast<CellIndex>(X.size(n)); ++l)
      for (int i : {0, n}) glue_[{n, l, i}] = compute_glue(n, l, i);

  // faces on morphisms: unique F' with M_{g'} F' = M_g F H
  for (int n = 1; n <= maxdeg; ++n) {
    auto& L = levels_[n];
    L.face.assign(n + 1, std::vector<int>(L.mor.size(), -1));
    parallel_for(L.mor.size(), [&](std::size_t m) {
      const auto& mor = L.mor[m];
      const auto& F = functors_[mor.functor];
      const auto& Ig = intervals_[F.to];
      for (int i = 0; i <= n; ++i) {
        CellIndex a = X.face(n, i, mor.src), b = X.face(n, i, mor.dst);
        Components H = (i == 0 || i == n) ? glue(n, mor.src, i)
                                           : identity_comp(intervals_[L.edge[mor.src]].interval.X());
        // M_g F H on degrees 0 and 1 decides; the full check follows
        auto target = compose_comp(Ig.M.comp, compose_comp(F.comp, H));
        int hit = -1, hits = 0;
        for (int cand : hom(n - 1, a, b)) {
          const auto& G = functors_[levels_[n - 1].mor[cand].functor];
          auto lhs = compose_comp(intervals_[G.to].M.comp, G.comp);
          if (lhs == target) {
            hit = cand;
            ++hits;
          }
        }
        if (hits != 1)
          throw InvariantError("face d" + std::to_string(i) + " of a level-" + std::to_string(n) + " morphism has " +
                               std::to_string(hits) + " candidates");
        L.face[i][m] = hit;
      }
    });
  }
  for (int n = 0; n < maxdeg; ++n) {
    auto& L = levels_[n];
    L.degen.assign(n + 1, std::vector<int>(L.mor.size(), -1));
    for (std::size_t m = 0; m < L.mor.size(); ++m)
      for (int j = 0; j <= n; ++j) {
        const auto& mor = L.mor[m];
        auto hit = find(n + 1, X.degen(n, j, mor.src), X.degen(n, j, mor.dst), mor.functor);
        if (!hit) throw InvariantError("degeneracy of a morphism is missing at level " + std::to_string(n + 1));
        L.degen[j][m] = *hit;
      }
  }
}

int UXGroupoid::functor_id(CellIndex from, CellIndex to, const Components& comp) const {
  auto it = functor_index_.find({from, to, comp.at(0), comp.at(1)});
  if (it == functor_index_.end()) return -1;
  return it->second;
}

const std::vector<int>& UXGroupoid::hom(int n, CellIndex a, CellIndex b) const {
  auto it = levels_[n].hom.find({a, b});
  return it == levels_[n].hom.end() ? empty_ : it->second;
}

std::optional<int> UXGroupoid::find(int n, CellIndex a, CellIndex b, int functor) const {
  auto it = levels_[n].lookup.find({a, b, functor});
  if (it == levels_[n].lookup.end()) return std::nullopt;
  return it->second;
}

int UXGroupoid::compose(int n, int g, int f) const {
  const auto& L = levels_[n];
  const auto& mf = L.mor[f];
  const auto& mg = L.mor[g];
  if (mf.dst != mg.src) throw InputError("composing non-composable morphisms");
  const auto& F = functors_[mf.functor];
  const auto& G = functors_[mg.functor];
  int id = functor_id(F.from, G.to, compose_comp(G.comp, F.comp));
  if (id < 0) throw InvariantError("composite functor is not enumerated");
  auto hit = find(n, mf.src, mg.dst, id);
  if (!hit) throw InvariantError("composite morphism is not enumerated");
  return *hit;
}

int UXGroupoid::inverse(int n, int m) const {
  const auto& mor = levels_[n].mor[m];
  for (int cand : hom(n, mor.dst, mor.src))
    if (compose(n, cand, m) == identity(n, mor.src)) return cand;
  throw InvariantError("morphism has no inverse");
}

int UXGroupoid::apply(int n, int m, const std::vector<int>& g) const {
  std::vector<int> image;
  for (int v : g)
    if (image.empty() || image.back() != v) image.push_back(v);
  std::vector<bool> keep(n + 1, false);
  for (int v : image) keep[v] = true;
  int k = n;
  for (int v = n; v >= 0; --v)
    if (!keep[v]) m = face(k--, v, m);
  for (std::size_t i = 0; i + 1 < g.size(); ++i)
    if (g[i] == g[i + 1]) m = degen(k++, static_cast<int>(i), m);
  return m;
}

SimpMap UXGroupoid::functor_map(int id) const {
  const auto& F = functors_[id];
  return SimpMap{intervals_[F.from].interval.space.get(), intervals_[F.to].interval.space.get(), F.comp};
}

const Components& UXGroupoid::glue(int n, CellIndex lambda, int i) const { return glue_.at({n, lambda, i}); }

CellIndex UXGroupoid::glue_lookup(int side, int m, CellIndex eta, CellIndex tau) const {
  auto it = glue_index_[side][m].find(pair_key(eta, tau));
  if (it == glue_index_[side][m].end()) throw InvariantError("gluing: no cell with the prescribed faces");
  if (it->second < 0) throw InvariantError("gluing: several cells with the prescribed faces");
  return it->second;
}

Components UXGroupoid::compute_glue(int n, CellIndex lambda, int i) const {
  const auto& X = *X_;
  const int N = X.dim();
  CellIndex lp = X.face(n, i, lambda);
  CellIndex fp = long_edge_or_unit(X, n - 1, lp);
  const auto& Ip = intervals_[fp];
  const auto& I = intervals_[levels_[n].edge[lambda]];
  int side = i == 0 ? 0 : 1;
  CellIndex tau = side == 0 ? apply_monotone(X, n, lambda, {0, 1, n}) : apply_monotone(X, n, lambda, {0, n - 1, n});
  Components H;
  for (int k = 0; k + 3 <= N && k <= Ip.interval.dim(); ++k) {
    H.emplace_back();
    const int m = k + 3;
    for (CellIndex eta : Ip.to_x[k]) {
      CellIndex w = glue_lookup(side, m, eta, tau);
      H[k].push_back(I.lift(k, X.face(m, side == 0 ? 1 : m - 1, w)));
    }
  }
  SpineIndex idx(I.interval.X());
  if (!extend_by_spine(Ip.interval.X(), idx, H, Ip.interval.dim()))
    throw InvariantError("gluing: spine extension failed");
  SimpMap Hm{Ip.interval.space.get(), I.interval.space.get(), H};
  if (!check_natural(Hm).pass) throw InvariantError("gluing: H is not simplicial");
  if (!same_map(dcmp::compose(I.M, Hm), Ip.M)) throw InvariantError("gluing: M H != M'");
  if (n - 1 <= Ip.interval.dim() && H[n - 1][levels_[n - 1].phi[lp]] != I.interval.X().face(n, i, levels_[n].phi[lambda]))
    throw InvariantError("gluing: H phi' != phi p");
  return H;
}

// ---- checks --------------------------------------------------------------

AxiomReport check_strict(const UXGroupoid& U) {
  AxiomReport r("ux-strict");
  const auto& X = U.X();
  const int D = U.maxdeg();
  for (int n = 0; n <= D; ++n) {
    const auto& mors = U.morphisms(n);
    // groupoid: identities, composition, inverses
    for (std::size_t m = 0; m < mors.size(); ++m) {
      try {
        int mi = static_cast<int>(m);
        if (U.compose(n, mi, U.identity(n, mors[m].src)) != mi || U.compose(n, U.identity(n, mors[m].dst), mi) != mi)
          r.fail("unit", "level " + std::to_string(n));
        int inv = U.inverse(n, mi);
        if (U.compose(n, mi, inv) != U.identity(n, mors[m].dst)) r.fail("inverse", "level " + std::to_string(n));
        for (int g : [&] {
               std::vector<int> out;
               for (CellIndex c = 0; c < static_cast<CellIndex>(U.object_count(n)); ++c)
                 for (int h : U.hom(n, mors[m].dst, c)) out.push_back(h);
               return out;
             }()) {
          int gm = U.compose(n, g, mi);
          // faces and degeneracies are functors
          if (n >= 1)
            for (int i = 0; i <= n; ++i)
              if (U.face(n, i, gm) != U.compose(n - 1, U.face(n, i, g), U.face(n, i, mi)))
                r.fail("d" + std::to_string(i) + " functor", "composition not preserved at level " + std::to_string(n));
          if (n < D)
            for (int j = 0; j <= n; ++j)
              if (U.degen(n, j, gm) != U.compose(n + 1, U.degen(n, j, g), U.degen(n, j, mi)))
                r.fail("s" + std::to_string(j) + " functor", "composition not preserved at level " + std::to_string(n));
        }
      } catch (const InvariantError& e) {
        r.fail("groupoid", std::string(e.what()) + " at level " + std::to_string(n));
        return r;
      }
    }
    for (CellIndex l = 0; l < static_cast<CellIndex>(U.object_count(n)); ++l) {
      int id = U.identity(n, l);
      if (n >= 1)
        for (int i = 0; i <= n; ++i)
          if (U.face(n, i, id) != U.identity(n - 1, X.face(n, i, l))) r.fail("d identity", "level " + std::to_string(n));
      if (n < D)
        for (int j = 0; j <= n; ++j)
          if (U.degen(n, j, id) != U.identity(n + 1, X.degen(n, j, l))) r.fail("s identity", "level " + std::to_string(n));
    }
    // simplicial identities on morphisms (objects follow X)
    for (std::size_t mm = 0; mm < mors.size(); ++mm) {
      int m = static_cast<int>(mm);
      if (n >= 2)
        for (int j = 1; j <= n; ++j)
          for (int i = 0; i < j; ++i)
            if (U.face(n - 1, i, U.face(n, j, m)) != U.face(n - 1, j - 1, U.face(n, i, m)))
              r.fail("d" + std::to_string(i) + " d" + std::to_string(j), "level " + std::to_string(n));
      if (n < D)
        for (int j = 0; j <= n; ++j) {
          int sj = U.degen(n, j, m);
          for (int i = 0; i <= n + 1; ++i) {
            int lhs = U.face(n + 1, i, sj);
            int rhs;
            if (i == j || i == j + 1) rhs = m;
            else if (i < j) rhs = U.degen(n - 1, j - 1, U.face(n, i, m));
            else rhs = U.degen(n - 1, j, U.face(n, i - 1, m));
            if (lhs != rhs) r.fail("d" + std::to_string(i) + " s" + std::to_string(j), "level " + std::to_string(n));
          }
        }
      if (n + 2 <= D)
        for (int j = 0; j <= n; ++j)
          for (int i = 0; i <= j; ++i)
            if (U.degen(n + 1, i, U.degen(n, j, m)) != U.degen(n + 1, j + 1, U.degen(n, i, m)))
              r.fail("s" + std::to_string(i) + " s" + std::to_string(j), "level " + std::to_string(n));
      const auto& mor = mors[m];
      if (n >= 1)
        for (int i = 0; i <= n; ++i) {
          const auto& f = U.morphisms(n - 1)[U.face(n, i, m)];
          if (f.src != X.face(n, i, mor.src) || f.dst != X.face(n, i, mor.dst))
            r.fail("face endpoints", "level " + std::to_string(n));
          if (i > 0 && i < n && f.functor != mor.functor) r.fail("inner face functor", "level " + std::to_string(n));
        }
    }
    r.touch(n);
  }
  return r;
}

AxiomReport check_objects(const UXGroupoid& U) {
  AxiomReport r("ux-objects");
  const auto& X = U.X();
  for (int n = 0; n <= U.maxdeg(); ++n) {
    std::set<std::pair<CellIndex, CellIndex>> seen;
    for (CellIndex l = 0; l < static_cast<CellIndex>(X.size(n)); ++l) {
      CellIndex f = U.object_edge(n, l);
      const auto& I = U.interval(f);
      const auto& S = I.interval.X();
      CellIndex phi = U.phi(n, l);
      if (I.M(n, phi) != l) r.fail("M phi = lambda", "at '" + X.name(n, l) + "'");
      if (!seen.insert({f, phi}).second) r.fail("injective", "two cells share an object at '" + X.name(n, l) + "'");
      for (int i = 0; n >= 1 && i <= n; ++i) {
        CellIndex lp = X.face(n, i, l);
        CellIndex face_phi = S.face(n, i, phi);
        if (i > 0 && i < n) {
          if (U.object_edge(n - 1, lp) != f || U.phi(n - 1, lp) != face_phi)
            r.fail("inner face", "d" + std::to_string(i) + " at '" + X.name(n, l) + "'");
        } else {
          const auto& H = U.glue(n, l, i);
          if (H[n - 1][U.phi(n - 1, lp)] != face_phi)
            r.fail("outer face", "d" + std::to_string(i) + " at '" + X.name(n, l) + "'");
        }
      }
      for (int j = 0; n < U.maxdeg() && j <= n; ++j) {
        CellIndex ls = X.degen(n, j, l);
        if (U.object_edge(n + 1, ls) != f || U.phi(n + 1, ls) != S.degen(n, j, phi))
          r.fail("degeneracy", "s" + std::to_string(j) + " at '" + X.name(n, l) + "'");
      }
    }
    // every stretched cell of every interval is some phi
    for (CellIndex f = 0; f < static_cast<CellIndex>(X.size(1)); ++f) {
      const auto& I = U.interval(f);
      for (CellIndex k = 0; k < static_cast<CellIndex>(I.interval.X().size(n)); ++k) {
        if (!stretched_cell(I.interval, n, k)) continue;
        CellIndex l = I.M(n, k);
        if (U.object_edge(n, l) != f || U.phi(n, l) != k)
          r.fail("surjective", "stretched cell '" + I.interval.X().name(n, k) + "' is not a phi");
      }
    }
    r.touch(n);
  }
  return r;
}

std::vector<std::pair<int, std::vector<int>>> active_maps(int maxdeg) {
  std::vector<std::pair<int, std::vector<int>>> out;
  for (int n = 0; n <= maxdeg; ++n)
    for (int m = 0; m <= maxdeg; ++m) {
      std::vector<int> g(m + 1, 0);
      std::function<void(int)> rec = [&](int pos) {
        if (pos == m) {
          if (g[m] == n && g[0] == 0) out.emplace_back(n, g);
          return;
        }
        for (int v = g[pos]; v <= n; ++v) {
          g[pos + 1] = v;
          rec(pos + 1);
        }
      };
      if (m == 0) {
        if (n == 0) out.emplace_back(0, std::vector<int>{0});
        continue;
      }
      g[0] = 0;
      rec(0);
    }
  return out;
}

namespace {

std::string op_label(const std::vector<int>& g, int n) {
  std::string s = "[" + std::to_string(g.size() - 1) + "]->[" + std::to_string(n) + "] (";
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
  return s + ")";
}

// count[(down morphism, upstairs target)] over all upstairs morphisms
std::map<std::pair<int, CellIndex>, int> lift_table(const UXGroupoid& U, int n, const std::vector<int>& g) {
  std::map<std::pair<int, CellIndex>, int> count;
  const auto& mors = U.morphisms(n);
  for (std::size_t m = 0; m < mors.size(); ++m) ++count[{U.apply(n, static_cast<int>(m), g), mors[m].dst}];
  return count;
}

}  // namespace

std::vector<int> lifts(const UXGroupoid& U, int n, const std::vector<int>& g, int down, CellIndex target) {
  std::vector<int> out;
  const auto& mors = U.morphisms(n);
  for (std::size_t m = 0; m < mors.size(); ++m)
    if (mors[m].dst == target && U.apply(n, static_cast<int>(m), g) == down) out.push_back(static_cast<int>(m));
  return out;
}

std::map<int, std::size_t> lift_histogram(const UXGroupoid& U, int n, const std::vector<int>& g) {
  const auto& X = U.X();
  const int m = static_cast<int>(g.size()) - 1;
  auto count = lift_table(U, n, g);
  std::map<CellIndex, std::vector<CellIndex>> over;
  for (CellIndex l = 0; l < static_cast<CellIndex>(X.size(n)); ++l) over[apply_monotone(X, n, l, g)].push_back(l);
  std::map<int, std::size_t> hist;
  const auto& down = U.morphisms(m);
  for (std::size_t d = 0; d < down.size(); ++d) {
    auto it = over.find(down[d].dst);
    if (it == over.end()) continue;
    for (CellIndex l : it->second) {
      auto c = count.find({static_cast<int>(d), l});
      ++hist[c == count.end() ? 0 : c->second];
    }
  }
  return hist;
}

AxiomReport check_active_discrete_fibration(const UXGroupoid& U, int n, const std::vector<int>& g) {
  AxiomReport r("discrete-fibration");
  auto hist = lift_histogram(U, n, g);
  for (auto [c, times] : hist)
    if (c != 1)
      r.fail(op_label(g, n), std::to_string(times) + " (morphism, object) pairs with " + std::to_string(c) + " lifts");
  r.touch(n);
  return r;
}

AxiomReport check_all_active(const UXGroupoid& U) {
  AxiomReport r("active-discrete-fibrations");
  for (const auto& [n, g] : active_maps(U.maxdeg())) r.merge(check_active_discrete_fibration(U, n, g));
  return r;
}

namespace {

// Fibre of a functor p: level `level` -> level `level-1`-ish over an object,
// represented by its objects and an admissibility test on morphisms.
struct Fiber {
  int level;
  std::vector<CellIndex> objs;
  std::function<bool(int)> in;
};

// Is obj/mor map Phi: A -> B an equivalence of finite groupoids?
bool equivalent(const UXGroupoid& U, const Fiber& A, const Fiber& B, const std::function<CellIndex(CellIndex)>& phi_obj,
                const std::function<int(int)>& phi_mor, std::string& why) {
  auto classes = [&](const Fiber& F) {
    std::map<CellIndex, int> pos;
    for (std::size_t i = 0; i < F.objs.size(); ++i) pos[F.objs[i]] = static_cast<int>(i);
    std::vector<int> parent(F.objs.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
    for (std::size_t i = 0; i < F.objs.size(); ++i)
      for (std::size_t j = 0; j < F.objs.size(); ++j)
        for (int m : U.hom(F.level, F.objs[i], F.objs[j]))
          if (F.in(m)) parent[root(static_cast<int>(i))] = root(static_cast<int>(j));
    std::map<CellIndex, int> cls;
    for (std::size_t i = 0; i < F.objs.size(); ++i) cls[F.objs[i]] = root(static_cast<int>(i));
    return cls;
  };
  auto ca = classes(A);
  auto cb = classes(B);
  std::map<int, int> image;  // class in A -> class in B
  std::set<int> hit;
  for (CellIndex a : A.objs) {
    auto itb = cb.find(phi_obj(a));
    if (itb == cb.end()) {
      why = "functor leaves the target fibre";
      return false;
    }
    auto [it, fresh] = image.emplace(ca[a], itb->second);
    if (!fresh && it->second != itb->second) {
      why = "functor is not well defined on classes";
      return false;
    }
  }
  for (auto [x, y] : image) {
    if (!hit.insert(y).second) {
      why = "two isomorphism classes are identified";
      return false;
    }
  }
  std::set<int> all_b;
  for (auto [o, c] : cb) all_b.insert(c);
  if (hit.size() != all_b.size()) {
    why = "not essentially surjective";
    return false;
  }
  for (CellIndex a : A.objs) {
    std::vector<int> autA, autB;
    for (int m : U.hom(A.level, a, a))
      if (A.in(m)) autA.push_back(m);
    CellIndex b = phi_obj(a);
    for (int m : U.hom(B.level, b, b))
      if (B.in(m)) autB.push_back(m);
    std::set<int> img;
    for (int m : autA) img.insert(phi_mor(m));
    if (img.size() != autA.size() || autA.size() != autB.size()) {
      why = "automorphism groups differ";
      return false;
    }
    for (int m : img)
      if (std::find(autB.begin(), autB.end(), m) == autB.end()) {
        why = "automorphism lands outside the fibre";
        return false;
      }
  }
  return true;
}

// decomposition square at levels (n+1, n), via strict fibres of the active legs
bool square_grpd(const UXGroupoid& U, int n, int active_top, int inert, int inert_bottom, int active_bottom,
                 const std::string& label, AxiomReport& r) {
  const auto& X = U.X();
  // fibre of active_top: U_{n+1} -> U_n over each object A of U_n
  std::map<CellIndex, std::vector<CellIndex>> top_fib, bot_fib;
  for (CellIndex w = 0; w < static_cast<CellIndex>(X.size(n + 1)); ++w) top_fib[X.face(n + 1, active_top, w)].push_back(w);
  for (CellIndex v = 0; v < static_cast<CellIndex>(X.size(n)); ++v) bot_fib[X.face(n, active_bottom, v)].push_back(v);
  for (CellIndex A = 0; A < static_cast<CellIndex>(X.size(n)); ++A) {
    CellIndex B = X.face(n, inert_bottom, A);
    int idA = U.identity(n, A), idB = U.identity(n - 1, B);
    Fiber top{n + 1, top_fib[A], [&, idA](int m) { return U.face(n + 1, active_top, m) == idA; }};
    Fiber bot{n, bot_fib[B], [&, idB](int m) { return U.face(n, active_bottom, m) == idB; }};
    std::string why;
    if (!equivalent(
            U, top, bot, [&](CellIndex w) { return X.face(n + 1, inert, w); },
            [&](int m) { return U.face(n + 1, inert, m); }, why)) {
      r.fail(label, why + " over '" + X.name(n, A) + "'");
      return false;
    }
  }
  return true;
}

}  // namespace

AxiomReport check_decomposition_grpd(const UXGroupoid& U) {
  AxiomReport r("ux-decomposition");
  // active legs must be discrete fibrations for strict fibres to compute the homotopy pullback
  for (int n = 2; n + 1 <= U.maxdeg(); ++n) {
    for (int i = 1; i < n; ++i) {
      for (auto [lvl, j] : {std::pair{n + 1, i + 1}, std::pair{n + 1, i}, std::pair{n, i}}) {
        std::vector<int> g;
        for (int v = 0; v <= lvl; ++v)
          if (v != j) g.push_back(v);
        auto fib = check_active_discrete_fibration(U, lvl, g);
        if (!fib.pass) {
          r.merge(fib);
          return r;
        }
      }
      std::string tag = "n=" + std::to_string(n) + " i=" + std::to_string(i);
      if (!square_grpd(U, n, i + 1, 0, 0, i, "upper " + tag, r)) return r;
      if (!square_grpd(U, n, i, n + 1, n, i, "lower " + tag, r)) return r;
    }
    r.touch(n + 1);
  }
  if (r.max_degree_checked < 0) r.touch(U.maxdeg());
  return r;
}

AxiomReport check_complete_grpd(const UXGroupoid& U) {
  AxiomReport r("ux-complete");
  const auto& X = U.X();
  if (U.maxdeg() < 1) {
    r.fail("truncation", "needs maxdeg >= 1");
    return r;
  }
  std::set<CellIndex> images;
  for (CellIndex x = 0; x < static_cast<CellIndex>(X.size(0)); ++x)
    if (!images.insert(X.degen(0, 0, x)).second) r.fail("s0 objects", "not injective at '" + X.name(0, x) + "'");
  for (CellIndex x = 0; x < static_cast<CellIndex>(X.size(0)); ++x)
    for (CellIndex y = 0; y < static_cast<CellIndex>(X.size(0)); ++y) {
      const auto& h0 = U.hom(0, x, y);
      const auto& h1 = U.hom(1, X.degen(0, 0, x), X.degen(0, 0, y));
      std::set<int> img;
      for (int m : h0) img.insert(U.degen(0, 0, m));
      if (img.size() != h0.size()) r.fail("s0 faithful", "at ('" + X.name(0, x) + "', '" + X.name(0, y) + "')");
      if (img.size() != h1.size()) r.fail("s0 full", "at ('" + X.name(0, x) + "', '" + X.name(0, y) + "')");
    }
  r.touch(1);
  return r;
}

AxiomReport classifying_map(const UXGroupoid& U) {
  AxiomReport r("classifying-map");
  const auto& X = U.X();
  // CULF on every inner face and degeneracy within range: the fibre of the
  // operator over lambda in X must be equivalent to the fibre in U_X
  // fibres of an operator X_up -> X_down over each cell: discrete on the X side,
  // the strict fibre of the same operator on the U_X side
  auto check = [&](int up, int down, bool is_face, int idx, const std::string& label) {
    auto op = [&](CellIndex c) { return is_face ? X.face(up, idx, c) : X.degen(up, idx, c); };
    std::map<CellIndex, std::vector<CellIndex>> fib;
    for (CellIndex c = 0; c < static_cast<CellIndex>(X.size(up)); ++c) fib[op(c)].push_back(c);
    for (CellIndex l = 0; l < static_cast<CellIndex>(X.size(down)); ++l) {
      int id = U.identity(down, l);
      Fiber xs{up, fib[l], [&U, up](int m) { return U.identity(up, U.morphisms(up)[m].src) == m; }};
      Fiber us{up, fib[l], [&U, up, idx, is_face, id](int m) {
                 return (is_face ? U.face(up, idx, m) : U.degen(up, idx, m)) == id;
               }};
      std::string why;
      if (!equivalent(
              U, xs, us, [](CellIndex w) { return w; }, [](int m) { return m; }, why)) {
        r.fail(label, why + " over '" + X.name(down, l) + "'");
        return false;
      }
    }
    return true;
  };
  if (U.maxdeg() >= 2 && !check(2, 1, true, 1, "d1@2")) return r;
  for (int n = 3; n <= U.maxdeg(); ++n)
    for (int i = 1; i < n; ++i)
      if (!check(n, n - 1, true, i, "d" + std::to_string(i) + "@" + std::to_string(n))) return r;
  for (int n = 0; n < U.maxdeg(); ++n)
    for (int j = 0; j <= n; ++j)
      if (!check(n, n + 1, false, j, "s" + std::to_string(j) + "@" + std::to_string(n))) return r;
  // I commutes with all operators on objects
  for (int n = 1; n <= U.maxdeg(); ++n)
    for (CellIndex l = 0; l < static_cast<CellIndex>(X.size(n)); ++l)
      for (int i = 0; i <= n; ++i)
        if (U.morphisms(n - 1)[U.face(n, i, U.identity(n, l))].src != X.face(n, i, l))
          r.fail("naturality", "at '" + X.name(n, l) + "'");
  r.touch(U.maxdeg());
  return r;
}

ModificationSearch enumerate_modifications(const UXGroupoid& U, std::size_t limit) {
  const auto& X = U.X();
  const int D = U.maxdeg();
  std::vector<std::size_t> offset(D + 2, 0);
  for (int n = 0; n <= D; ++n) offset[n + 1] = offset[n] + X.size(n);
  const std::size_t V = offset[D + 1];
  using Domains = std::vector<std::vector<int>>;
  Domains dom(V);
  for (int n = 0; n <= D; ++n)
    for (CellIndex l = 0; l < static_cast<CellIndex>(X.size(n)); ++l) dom[offset[n] + l] = U.hom(n, l, l);
  // functional constraints: value at u determines value at w via op
  struct Con {
    std::size_t u, w;
    int level;
    bool face;
    int idx;
  };
  std::vector<Con> cons;
  std::vector<std::vector<std::size_t>> touching(V);
  for (int n = 1; n <= D; ++n)
    for (CellIndex l = 0; l < static_cast<CellIndex>(X.size(n)); ++l)
      for (int i = 0; i <= n; ++i) cons.push_back({offset[n] + l, offset[n - 1] + X.face(n, i, l), n, true, i});
  for (int n = 0; n < D; ++n)
    for (CellIndex l = 0; l < static_cast<CellIndex>(X.size(n)); ++l)
      for (int j = 0; j <= n; ++j) cons.push_back({offset[n] + l, offset[n + 1] + X.degen(n, j, l), n, false, j});
  for (std::size_t c = 0; c < cons.size(); ++c) {
    touching[cons[c].u].push_back(c);
    touching[cons[c].w].push_back(c);
  }
  auto image = [&](const Con& c, int a) { return c.face ? U.face(c.level, c.idx, a) : U.degen(c.level, c.idx, a); };

  auto propagate = [&](Domains& d, std::deque<std::size_t> queue) {
    std::vector<bool> queued(cons.size(), false);
    for (auto c : queue) queued[c] = true;
    while (!queue.empty()) {
      std::size_t ci = queue.front();
      queue.pop_front();
      queued[ci] = false;
      const auto& c = cons[ci];
      std::set<int> wset(d[c.w].begin(), d[c.w].end());
      std::vector<int> nu;
      std::set<int> reach;
      for (int a : d[c.u]) {
        int b = image(c, a);
        if (wset.count(b)) {
          nu.push_back(a);
          reach.insert(b);
        }
      }
      std::vector<int> nw;
      for (int b : d[c.w])
        if (reach.count(b)) nw.push_back(b);
      for (auto [var, fresh] : {std::pair{c.u, &nu}, std::pair{c.w, &nw}}) {
        if (fresh->size() == d[var].size()) continue;
        d[var] = *fresh;
        if (d[var].empty()) return false;
        for (auto other : touching[var])
          if (!queued[other]) {
            queued[other] = true;
            queue.push_back(other);
          }
      }
    }
    return true;
  };

  ModificationSearch out;
  std::function<void(Domains)> search = [&](Domains d) {
    if (out.found.size() >= limit) {
      out.truncated = true;
      return;
    }
    std::size_t pick = V;
    for (std::size_t v = 0; v < V; ++v)
      if (d[v].size() > 1 && (pick == V || d[v].size() < d[pick].size())) pick = v;
    if (pick == V) {
      Modification m;
      m.identity = true;
      m.gamma.resize(D + 1);
      for (int n = 0; n <= D; ++n)
        for (CellIndex l = 0; l < static_cast<CellIndex>(X.size(n)); ++l) {
          int a = d[offset[n] + l][0];
          m.gamma[n].push_back(a);
          if (a != U.identity(n, l)) m.identity = false;
        }
      out.found.push_back(std::move(m));
      return;
    }
    for (int a : d[pick]) {
      Domains e = d;
      e[pick] = {a};
      std::deque<std::size_t> q(touching[pick].begin(), touching[pick].end());
      if (propagate(e, q)) search(std::move(e));
    }
  };
  std::deque<std::size_t> all(cons.size());
  std::iota(all.begin(), all.end(), 0);
  for (const auto& d : dom)
    if (d.empty()) return out;
  if (propagate(dom, all)) search(dom);
  return out;
}

}  // namespace dcmp
