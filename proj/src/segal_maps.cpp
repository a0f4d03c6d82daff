#include "dcmp/segal_maps.hpp"

#include <algorithm>

namespace dcmp {

SpineIndex::SpineIndex(const TruncSSet& B) : B_(&B), by_spine_(B.dim() + 1) {
  for (int k = 2; k <= B.dim(); ++k)
    for (CellIndex c = 0; c < static_cast<CellIndex>(B.size(k)); ++c) {
      auto [it, fresh] = by_spine_[k].emplace(spine(B, k, c), c);
      if (!fresh) it->second = kAmbiguous;
    }
  if (B.dim() >= 1)
    for (CellIndex e = 0; e < static_cast<CellIndex>(B.size(1)); ++e)
      edges_[{B.face(1, 1, e), B.face(1, 0, e)}].push_back(e);
}

CellIndex SpineIndex::find(int k, const std::vector<CellIndex>& edges) const {
  if (k == 1) return edges.at(0);
  if (k < 1 || k > B_->dim()) return kNone;
  auto it = by_spine_[k].find(edges);
  return it == by_spine_[k].end() ? kNone : it->second;
}

const std::vector<CellIndex>& SpineIndex::edges_between(CellIndex p, CellIndex q) const {
  auto it = edges_.find({p, q});
  return it == edges_.end() ? empty_ : it->second;
}

bool extend_by_spine(const TruncSSet& A, const SpineIndex& B, Components& comp, int top) {
  for (int k = static_cast<int>(comp.size()); k <= top; ++k) {
    std::vector<CellIndex> level(A.size(k));
    for (CellIndex c = 0; c < static_cast<CellIndex>(A.size(k)); ++c) {
      auto sp = spine(A, k, c);
      for (auto& e : sp) e = comp[1][e];
      CellIndex t = B.find(k, sp);
      if (t < 0) return false;
      level[c] = t;
    }
    comp.push_back(std::move(level));
  }
  return true;
}

namespace {

struct Search {
  const TruncSSet& A;
  const TruncSSet& B;
  const MapSearch& opts;
  SpineIndex index;
  int top;
  std::vector<SimpMap> out;

  std::vector<CellIndex> vmap, emap;
  std::vector<bool> vused, eused;
  // edges of A in the order they are assigned, with 2-cells checked once the
  // last of their edges is set
  std::vector<CellIndex> edge_order;
  std::vector<std::vector<CellIndex>> checks_at;  // position -> 2-cells
  std::vector<std::vector<CellIndex>> edges_by_last_vertex;
  std::vector<bool> deg_edge;

  Search(const TruncSSet& a, const TruncSSet& b, const MapSearch& o)
      : A(a), B(b), opts(o), index(b), top(std::min(a.dim(), b.dim())) {}

  bool stop() const { return out.size() >= opts.limit; }

  void run() {
    if (opts.bijective)
      for (int k = 0; k <= top; ++k)
        if (A.size(k) != B.size(k)) return;
    const auto nv = A.size(0);
    vmap.assign(nv, -1);
    vused.assign(B.size(0), false);
    for (auto [a, b] : opts.fixed_vertices) {
      if (vmap[a] >= 0 && vmap[a] != b) return;
      if (opts.bijective && vused[b] && vmap[a] != b) return;
      vmap[a] = b;
      vused[b] = true;
    }
    if (top >= 1) {
      edges_by_last_vertex.assign(nv, {});
      deg_edge.assign(A.size(1), false);
      for (CellIndex v = 0; v < static_cast<CellIndex>(nv); ++v) deg_edge[A.degen(0, 0, v)] = true;
      for (CellIndex e = 0; e < static_cast<CellIndex>(A.size(1)); ++e)
        edges_by_last_vertex[std::max(A.face(1, 0, e), A.face(1, 1, e))].push_back(e);
    }
    assign_vertex(0);
  }

  bool vertex_ok(CellIndex v) {
    if (top < 1) return true;
    for (CellIndex e : edges_by_last_vertex[v]) {
      CellIndex p = A.face(1, 1, e), q = A.face(1, 0, e);
      if (vmap[p] < 0 || vmap[q] < 0) continue;
      if (index.edges_between(vmap[p], vmap[q]).empty()) return false;
    }
    return true;
  }

  void assign_vertex(CellIndex v) {
    if (stop()) return;
    if (v == static_cast<CellIndex>(A.size(0))) {
      start_edges();
      return;
    }
    if (vmap[v] >= 0) {
      if (vertex_ok(v)) assign_vertex(v + 1);
      return;
    }
    for (CellIndex b = 0; b < static_cast<CellIndex>(B.size(0)); ++b) {
      if (opts.bijective && vused[b]) continue;
      vmap[v] = b;
      vused[b] = true;
      if (vertex_ok(v)) assign_vertex(v + 1);
      vused[b] = false;
      vmap[v] = -1;
      if (stop()) return;
    }
  }

  void start_edges() {
    if (top < 1) {
      finish();
      return;
    }
    emap.assign(A.size(1), -1);
    eused.assign(B.size(1), false);
    edge_order.clear();
    for (CellIndex v = 0; v < static_cast<CellIndex>(A.size(0)); ++v) {
      CellIndex e = A.degen(0, 0, v);
      emap[e] = B.degen(0, 0, vmap[v]);
      if (opts.bijective) {
        if (eused[emap[e]]) return;
        eused[emap[e]] = true;
      }
    }
    for (CellIndex e = 0; e < static_cast<CellIndex>(A.size(1)); ++e)
      if (!deg_edge[e]) edge_order.push_back(e);
    std::vector<int> position(A.size(1), -1);
    for (std::size_t p = 0; p < edge_order.size(); ++p) position[edge_order[p]] = static_cast<int>(p);
    checks_at.assign(edge_order.size() + 1, {});
    if (top >= 2)
      for (CellIndex s = 0; s < static_cast<CellIndex>(A.size(2)); ++s) {
        int last = -1;
        for (int i = 0; i <= 2; ++i) last = std::max(last, position[A.face(2, i, s)]);
        checks_at[last + 1].push_back(s);
      }
    if (!two_cells_ok(0)) return;
    assign_edge(0);
  }

  bool two_cells_ok(std::size_t slot) {
    for (CellIndex s : checks_at[slot]) {
      CellIndex t = index.find(2, {emap[A.face(2, 2, s)], emap[A.face(2, 0, s)]});
      if (t < 0 || B.face(2, 1, t) != emap[A.face(2, 1, s)]) return false;
    }
    return true;
  }

  void assign_edge(std::size_t p) {
    if (stop()) return;
    if (p == edge_order.size()) {
      finish();
      return;
    }
    CellIndex e = edge_order[p];
    for (CellIndex b : index.edges_between(vmap[A.face(1, 1, e)], vmap[A.face(1, 0, e)])) {
      if (opts.bijective && eused[b]) continue;
      emap[e] = b;
      eused[b] = true;
      if (two_cells_ok(p + 1)) assign_edge(p + 1);
      eused[b] = false;
      if (stop()) break;
    }
    emap[e] = -1;
  }

  void finish() {
    Components comp{vmap};
    if (top >= 1) comp.push_back(emap);
    if (!extend_by_spine(A, index, comp, top)) return;
    SimpMap F{&A, &B, std::move(comp)};
    if (!check_natural(F).pass) return;
    if (opts.bijective)
      for (int k = 0; k <= top; ++k) {
        std::vector<bool> hit(B.size(k), false);
        for (CellIndex t : F.comp[k]) {
          if (hit[t]) return;
          hit[t] = true;
        }
      }
    if (opts.accept && !opts.accept(F)) return;
    out.push_back(std::move(F));
  }
};

}  // namespace

std::vector<SimpMap> enumerate_maps(const TruncSSet& A, const TruncSSet& B, const MapSearch& opts) {
  Search s(A, B, opts);
  s.run();
  return std::move(s.out);
}

std::vector<SimpMap> brute_force_maps(const TruncSSet& A, const TruncSSet& B, bool bijective) {
  const int top = std::min(A.dim(), B.dim());
  std::vector<SimpMap> out;
  Components comp(top + 1);
  for (int k = 0; k <= top; ++k) comp[k].assign(A.size(k), 0);
  if (bijective)
    for (int k = 0; k <= top; ++k)
      if (A.size(k) != B.size(k)) return out;
  for (int k = 0; k <= top; ++k)
    if (A.size(k) > 0 && B.size(k) == 0) return out;
  // odometer over all levelwise functions
  while (true) {
    SimpMap F{&A, &B, comp};
    bool ok = check_natural(F).pass;
    if (ok && bijective)
      for (int k = 0; k <= top && ok; ++k) {
        std::vector<bool> hit(B.size(k), false);
        for (CellIndex t : comp[k]) {
          if (hit[t]) ok = false;
          hit[t] = true;
        }
      }
    if (ok) out.push_back(std::move(F));
    int k = 0;
    std::size_t c = 0;
    for (;;) {
      if (k > top) return out;
      if (c >= comp[k].size()) {
        ++k;
        c = 0;
        continue;
      }
      if (++comp[k][c] < static_cast<CellIndex>(B.size(k))) break;
      comp[k][c] = 0;
      ++c;
    }
  }
}

}  // namespace dcmp
