#include "dcmp/builders.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <set>

namespace dcmp {

std::string chain_id(const std::vector<std::string>& chain) {
  std::string s;
  for (std::size_t i = 0; i < chain.size(); ++i) s += (i ? "_" : "") + chain[i];
  return s;
}

namespace {

// Generic nerve assembly: cells are handed over as tuples of small ints with a
// naming function and the face/degeneracy actions on tuples.
template <class Tuple>
struct NerveAssembler {
  int N;
  std::vector<std::vector<Tuple>> cells;
  std::function<std::string(int, const Tuple&)> name;
  std::function<Tuple(int, int, const Tuple&)> face;
  std::function<Tuple(int, int, const Tuple&)> degen;

  TruncSSet run() const {
    SSetBuilder b(N);
    std::vector<std::map<Tuple, int>> idx(N + 1);
    for (int k = 0; k <= N; ++k)
      for (const auto& t : cells[k]) idx[k][t] = b.add(k, name(k, t));
    auto lookup = [&](int k, const Tuple& t) {
      auto it = idx[k].find(t);
      if (it == idx[k].end()) throw InputError("builder produced a cell outside the truncation at degree " + std::to_string(k));
      return it->second;
    };
    for (int k = 0; k <= N; ++k)
      for (const auto& t : cells[k]) {
        int h = idx[k][t];
        if (k >= 1)
          for (int i = 0; i <= k; ++i) b.set_face(k, i, h, lookup(k - 1, face(k, i, t)));
        if (k < N)
          for (int i = 0; i <= k; ++i) b.set_degen(k, i, h, lookup(k + 1, degen(k, i, t)));
      }
    return b.build();
  }
};

}  // namespace

TruncSSet poset_nerve(const FinPoset& P, int N) {
  const int n = static_cast<int>(P.elements.size());
  std::map<std::string, int> pos;
  for (int i = 0; i < n; ++i)
    if (!pos.emplace(P.elements[i], i).second) throw InputError("duplicate poset element " + P.elements[i]);
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) le[i][i] = true;
  for (const auto& [a, b] : P.leq) {
    if (!pos.count(a) || !pos.count(b)) throw InputError("relation mentions unknown element");
    le[pos[a]][pos[b]] = true;
  }
  for (int m = 0; m < n; ++m)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (le[i][m] && le[m][j]) le[i][j] = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && le[i][j] && le[j][i]) throw InputError("relation is not antisymmetric");

  using T = std::vector<int>;
  NerveAssembler<T> A{N, std::vector<std::vector<T>>(N + 1), {}, {}, {}};
  std::function<void(T&, int)> grow = [&](T& ch, int k) {
    A.cells[ch.size() - 1].push_back(ch);
    if (static_cast<int>(ch.size()) - 1 == N) return;
    for (int j = 0; j < n; ++j)
      if (le[ch.back()][j]) {
        ch.push_back(j);
        grow(ch, k + 1);
        ch.pop_back();
      }
  };
  for (int i = 0; i < n; ++i) {
    T ch{i};
    grow(ch, 0);
  }
  A.name = [&](int, const T& t) {
    std::vector<std::string> s;
    for (int v : t) s.push_back(P.elements[v]);
    return chain_id(s);
  };
  A.face = [](int, int i, const T& t) {
    T r = t;
    r.erase(r.begin() + i);
    return r;
  };
  A.degen = [](int, int i, const T& t) {
    T r = t;
    r.insert(r.begin() + i, t[i]);
    return r;
  };
  return A.run();
}

TruncSSet category_nerve(const FinCategory& C, int N) {
  std::map<std::string, int> obj;
  for (std::size_t i = 0; i < C.objects.size(); ++i)
    if (!obj.emplace(C.objects[i], static_cast<int>(i)).second) throw InputError("duplicate object " + C.objects[i]);
  std::vector<FinCategory::Arrow> arrows = C.morphisms;
  std::map<std::string, int> arr;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (!obj.count(arrows[i].src) || !obj.count(arrows[i].tgt))
      throw InputError("morphism " + arrows[i].id + " has unknown endpoint");
    if (!arr.emplace(arrows[i].id, static_cast<int>(i)).second) throw InputError("duplicate morphism " + arrows[i].id);
  }
  std::vector<int> ident(C.objects.size(), -1);
  for (const auto& [o, m] : C.identities) {
    if (!obj.count(o) || !arr.count(m)) throw InputError("bad identity assignment for " + o);
    const auto& a = arrows[arr[m]];
    if (a.src != o || a.tgt != o) throw InputError("identity " + m + " is not an endomorphism of " + o);
    ident[obj[o]] = arr[m];
  }
  for (std::size_t o = 0; o < C.objects.size(); ++o)
    if (ident[o] < 0) {
      std::string id = "id_" + C.objects[o];
      if (arr.count(id)) throw InputError("implicit identity name clashes: " + id);
      arr[id] = static_cast<int>(arrows.size());
      ident[o] = static_cast<int>(arrows.size());
      arrows.push_back({id, C.objects[o], C.objects[o]});
    }
  const int m = static_cast<int>(arrows.size());
  std::vector<bool> is_id(m, false);
  for (int i : ident) is_id[i] = true;
  std::vector<std::vector<int>> comp(m, std::vector<int>(m, -1));
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      if (arrows[f].tgt != arrows[g].src) continue;
      if (is_id[f]) comp[f][g] = g;
      else if (is_id[g]) comp[f][g] = f;
    }
  for (const auto& [f, g, h] : C.composition) {
    if (!arr.count(f) || !arr.count(g) || !arr.count(h)) throw InputError("composition mentions unknown morphism");
    int a = arr[f], b = arr[g], c = arr[h];
    if (arrows[a].tgt != arrows[b].src) throw InputError("composition of non-composable " + f + ", " + g);
    if (arrows[c].src != arrows[a].src || arrows[c].tgt != arrows[b].tgt)
      throw InputError("composite " + h + " has wrong endpoints");
    if (comp[a][b] >= 0 && comp[a][b] != c) throw InputError("conflicting composition for " + f + ", " + g);
    comp[a][b] = c;
  }
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g)
      if (arrows[f].tgt == arrows[g].src && comp[f][g] < 0)
        throw InputError("composition table missing " + arrows[f].id + " then " + arrows[g].id);
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      if (comp[f][g] < 0) continue;
      for (int h = 0; h < m; ++h)
        if (comp[g][h] >= 0 && comp[comp[f][g]][h] != comp[f][comp[g][h]])
          throw InputError("composition is not associative at " + arrows[f].id + ", " + arrows[g].id + ", " +
                           arrows[h].id);
    }

  // a k-cell: object for k = 0, else a composable string of k arrows
  using T = std::vector<int>;
  NerveAssembler<T> A{N, std::vector<std::vector<T>>(N + 1), {}, {}, {}};
  for (std::size_t o = 0; o < C.objects.size(); ++o) A.cells[0].push_back({static_cast<int>(o)});
  if (N >= 1) {
    for (int f = 0; f < m; ++f) A.cells[1].push_back({f});
    for (int k = 2; k <= N; ++k)
      for (const auto& t : A.cells[k - 1])
        for (int g = 0; g < m; ++g)
          if (arrows[t.back()].tgt == arrows[g].src) {
            T r = t;
            r.push_back(g);
            A.cells[k].push_back(r);
          }
  }
  A.name = [&](int k, const T& t) {
    if (k == 0) return C.objects[t[0]];
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "|" : "") + arrows[t[i]].id;
    return s;
  };
  A.face = [&](int k, int i, const T& t) -> T {
    if (k == 1) return {obj.at(i == 0 ? arrows[t[0]].tgt : arrows[t[0]].src)};
    T r = t;
    if (i == 0) r.erase(r.begin());
    else if (i == k) r.pop_back();
    else {
      r[i - 1] = comp[t[i - 1]][t[i]];
      r.erase(r.begin() + i);
    }
    return r;
  };
  A.degen = [&](int k, int i, const T& t) -> T {
    if (k == 0) return {ident[t[0]]};
    int o = obj.at(i == 0 ? arrows[t[0]].src : arrows[t[i - 1]].tgt);
    T r = t;
    r.insert(r.begin() + i, ident[o]);
    return r;
  };
  return A.run();
}

namespace {

struct TraceMonoid {
  std::vector<std::string> gens;
  std::vector<int> len;
  std::vector<std::vector<bool>> comm;

  std::vector<int> normal(std::vector<int> w) const {
    std::vector<int> out;
    while (!w.empty()) {
      int best = -1;
      for (std::size_t p = 0; p < w.size(); ++p) {
        bool free = true;
        for (std::size_t q = 0; q < p && free; ++q) free = comm[w[q]][w[p]];
        if (free && (best < 0 || w[p] < w[best])) best = static_cast<int>(p);
      }
      out.push_back(w[best]);
      w.erase(w.begin() + best);
    }
    return out;
  }
  int length(const std::vector<int>& w) const {
    int s = 0;
    for (int g : w) s += len[g];
    return s;
  }
  std::string name(const std::vector<int>& w) const {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "." : "") + gens[w[i]];
    return s;
  }
};

}  // namespace

TruncSSet monoid_nerve(const MonoidPresentation& M, int N) {
  TraceMonoid T;
  std::map<std::string, int> gi;
  for (const auto& [g, l] : M.generators) {
    if (l <= 0) throw InputError("generator lengths must be positive");
    if (g.empty() || g == "1" || g.find_first_of(".|*") != std::string::npos)
      throw InputError("bad generator name '" + g + "'");
    if (!gi.emplace(g, static_cast<int>(T.gens.size())).second) throw InputError("duplicate generator " + g);
    T.gens.push_back(g);
    T.len.push_back(l);
  }
  const int G = static_cast<int>(T.gens.size());
  T.comm.assign(G, std::vector<bool>(G, false));
  for (const auto& [a, b] : M.commute) {
    if (!gi.count(a) || !gi.count(b) || a == b) throw InputError("bad commutation pair");
    T.comm[gi[a]][gi[b]] = T.comm[gi[b]][gi[a]] = true;
  }
  if (M.max_length < 0) throw InputError("negative length cap");

  // normal forms up to the cap
  std::set<std::vector<int>> elems{{}};
  std::vector<std::vector<int>> frontier{{}};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& w : frontier)
      for (int g = 0; g < G; ++g) {
        if (T.length(w) + T.len[g] > M.max_length) continue;
        auto v = w;
        v.push_back(g);
        v = T.normal(v);
        if (elems.insert(v).second) next.push_back(v);
      }
    frontier = std::move(next);
  }
  std::vector<std::vector<int>> el(elems.begin(), elems.end());
  std::map<std::vector<int>, int> eidx;
  for (std::size_t i = 0; i < el.size(); ++i) eidx[el[i]] = static_cast<int>(i);
  const int unit = eidx.at({});
  auto mult = [&](int a, int b) {
    auto w = el[a];
    w.insert(w.end(), el[b].begin(), el[b].end());
    return eidx.at(T.normal(w));
  };

  using Tup = std::vector<int>;
  NerveAssembler<Tup> A{N, std::vector<std::vector<Tup>>(N + 1), {}, {}, {}};
  A.cells[0].push_back({});
  std::function<void(Tup&, int, int)> grow = [&](Tup& t, int k, int used) {
    if (k == static_cast<int>(t.size())) {
      A.cells[k].push_back(t);
      return;
    }
    for (std::size_t e = 0; e < el.size(); ++e) {
      int l = T.length(el[e]);
      if (used + l > M.max_length) continue;
      t.push_back(static_cast<int>(e));
      grow(t, k, used + l);
      t.pop_back();
    }
  };
  for (int k = 1; k <= N; ++k) {
    Tup t;
    grow(t, k, 0);
  }
  A.name = [&](int k, const Tup& t) {
    if (k == 0) return std::string("*");
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "|" : "") + T.name(el[t[i]]);
    return s;
  };
  A.face = [&](int k, int i, const Tup& t) -> Tup {
    Tup r = t;
    if (i == 0) r.erase(r.begin());
    else if (i == k) r.pop_back();
    else {
      r[i - 1] = mult(t[i - 1], t[i]);
      r.erase(r.begin() + i);
    }
    return r;
  };
  A.degen = [&](int, int i, const Tup& t) -> Tup {
    Tup r = t;
    r.insert(r.begin() + i, unit);
    return r;
  };
  return A.run();
}

// ---- rooted plane trees -------------------------------------------------

namespace {

struct LTree {
  int layer;
  std::vector<LTree> kids;
  bool operator==(const LTree&) const = default;
};
bool operator<(const LTree& a, const LTree& b) {
  if (a.layer != b.layer) return a.layer < b.layer;
  return std::lexicographical_compare(a.kids.begin(), a.kids.end(), b.kids.begin(), b.kids.end());
}
using LForest = std::vector<LTree>;

LForest with_layer(const PlaneForest& F, int layer) {
  LForest out;
  for (const auto& t : F) out.push_back({layer, with_layer(t.kids, layer)});
  return out;
}

PlaneForest shape(const LForest& F) {
  PlaneForest out;
  for (const auto& t : F) out.push_back({shape(t.kids)});
  return out;
}

void render(const LForest& F, bool layers, std::string& s) {
  for (const auto& t : F) {
    if (layers) s += std::to_string(t.layer);
    s += "(";
    render(t.kids, layers, s);
    s += ")";
  }
}

// all layerings with values in 1..k and child layer <= parent layer
void layerings(const PlaneForest& F, int cap, std::vector<LForest>& out) {
  if (F.empty()) {
    out.push_back({});
    return;
  }
  std::vector<LForest> rest;
  layerings(PlaneForest(F.begin() + 1, F.end()), cap, rest);
  for (int l = 1; l <= cap; ++l) {
    std::vector<LForest> kids;
    layerings(F[0].kids, l, kids);
    for (const auto& kf : kids)
      for (const auto& rf : rest) {
        LForest f{LTree{l, kf}};
        f.insert(f.end(), rf.begin(), rf.end());
        out.push_back(std::move(f));
      }
  }
}

// delete nodes of layer `gone`, splicing their children in place
LForest drop_layer(const LForest& F, int gone) {
  LForest out;
  for (const auto& t : F) {
    LForest kids = drop_layer(t.kids, gone);
    if (t.layer == gone) out.insert(out.end(), kids.begin(), kids.end());
    else out.push_back({t.layer > gone ? t.layer - 1 : t.layer, std::move(kids)});
  }
  return out;
}

LForest merge_after(const LForest& F, int i) {
  LForest out;
  for (const auto& t : F) out.push_back({t.layer > i ? t.layer - 1 : t.layer, merge_after(t.kids, i)});
  return out;
}

LForest insert_empty(const LForest& F, int i) {
  LForest out;
  for (const auto& t : F) out.push_back({t.layer > i ? t.layer + 1 : t.layer, insert_empty(t.kids, i)});
  return out;
}

}  // namespace

std::string render_forest(const PlaneForest& F) {
  std::string s;
  render(with_layer(F, 1), false, s);
  return s;
}

PlaneForest parse_forest(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t' && c != '\r') s += c;
  if (s == "e" || s.empty()) return {};
  std::size_t p = 0;
  std::function<PlaneForest()> forest = [&]() {
    PlaneForest f;
    while (p < s.size() && s[p] == '(') {
      ++p;
      PlaneTree t{forest()};
      if (p >= s.size() || s[p] != ')') throw InputError("unbalanced tree string '" + text + "'");
      ++p;
      f.push_back(std::move(t));
    }
    return f;
  };
  PlaneForest f = forest();
  if (p != s.size()) throw InputError("malformed tree string '" + text + "'");
  return f;
}

std::vector<PlaneForest> read_forest_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::vector<PlaneForest> out;
  std::string line;
  while (std::getline(in, line)) {
    auto h = line.find('#');
    if (h != std::string::npos) line.erase(h);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_forest(line));
  }
  return out;
}

std::vector<PlaneForest> all_forests(int nodes) {
  static std::map<int, std::vector<PlaneForest>> memo;
  if (nodes == 0) return {{}};
  if (auto it = memo.find(nodes); it != memo.end()) return it->second;
  std::vector<PlaneForest> out;
  // first tree has r nodes: a root over a forest of r-1 nodes
  for (int r = 1; r <= nodes; ++r)
    for (const auto& below : all_forests(r - 1))
      for (const auto& rest : all_forests(nodes - r)) {
        PlaneForest f{PlaneTree{below}};
        f.insert(f.end(), rest.begin(), rest.end());
        out.push_back(std::move(f));
      }
  memo[nodes] = out;
  return out;
}

TruncSSet rpt_from_forests(const std::vector<PlaneForest>& forests, int N) {
  if (N < 1) throw InputError("rpt needs dim >= 1");
  std::set<std::string> seen;
  std::vector<PlaneForest> base;
  auto push = [&](const PlaneForest& f) {
    if (seen.insert(render_forest(f)).second) base.push_back(f);
  };
  push({});
  for (const auto& f : forests) push(f);
  for (std::size_t q = 0; q < base.size(); ++q) {
    std::vector<LForest> cuts;
    layerings(base[q], 2, cuts);
    for (const auto& c : cuts) {
      push(shape(drop_layer(c, 2)));
      push(shape(drop_layer(c, 1)));
    }
  }

  using T = LForest;
  NerveAssembler<T> A{N, std::vector<std::vector<T>>(N + 1), {}, {}, {}};
  A.cells[0].push_back({});
  for (int k = 1; k <= N; ++k)
    for (const auto& f : base) layerings(f, k, A.cells[k]);
  A.name = [](int k, const T& t) {
    if (k == 0) return std::string("pt");
    std::string s;
    render(t, k >= 2, s);
    return s.empty() ? std::string("e") : s;
  };
  A.face = [](int k, int i, const T& t) -> T {
    if (k == 1) return {};
    if (i == 0 || i == k) return drop_layer(t, i == 0 ? 1 : k);
    return merge_after(t, i);
  };
  A.degen = [](int, int i, const T& t) -> T { return insert_empty(t, i); };
  return A.run();
}

TruncSSet rpt_build(int max_nodes, int N) {
  if (max_nodes < 0) throw InputError("negative node bound");
  std::vector<PlaneForest> fs;
  for (int n = 0; n <= max_nodes; ++n)
    for (const auto& f : all_forests(n)) fs.push_back(f);
  return rpt_from_forests(fs, N);
}

// ---- file formats -------------------------------------------------------

FinPoset poset_from_json(const json& j) {
  try {
    FinPoset P;
    P.elements = j.at("elements").get<std::vector<std::string>>();
    if (j.contains("covers"))
      for (const auto& c : j.at("covers")) P.leq.emplace_back(c.at(0).get<std::string>(), c.at(1).get<std::string>());
    return P;
  } catch (const json::exception& e) {
    throw InputError(std::string("poset file: ") + e.what());
  }
}

FinCategory category_from_json(const json& j) {
  try {
    FinCategory C;
    C.objects = j.at("objects").get<std::vector<std::string>>();
    for (const auto& m : j.at("morphisms"))
      C.morphisms.push_back({m.at("id").get<std::string>(), m.at("src").get<std::string>(), m.at("tgt").get<std::string>()});
    if (j.contains("identities"))
      for (const auto& [o, m] : j.at("identities").items()) C.identities.emplace_back(o, m.get<std::string>());
    if (j.contains("composition"))
      for (const auto& t : j.at("composition"))
        C.composition.emplace_back(t.at(0).get<std::string>(), t.at(1).get<std::string>(), t.at(2).get<std::string>());
    return C;
  } catch (const json::exception& e) {
    throw InputError(std::string("category file: ") + e.what());
  }
}

MonoidPresentation monoid_from_json(const json& j) {
  try {
    MonoidPresentation M;
    for (const auto& g : j.at("generators")) {
      if (g.is_string()) M.generators.emplace_back(g.get<std::string>(), 1);
      else M.generators.emplace_back(g.at("name").get<std::string>(), g.value("length", 1));
    }
    if (j.contains("commute"))
      for (const auto& c : j.at("commute")) M.commute.emplace_back(c.at(0).get<std::string>(), c.at(1).get<std::string>());
    M.max_length = j.at("maxLength").get<int>();
    return M;
  } catch (const json::exception& e) {
    throw InputError(std::string("monoid file: ") + e.what());
  }
}

}  // namespace dcmp
