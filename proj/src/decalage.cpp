#include "dcmp/decalage.hpp"

#include <functional>

namespace dcmp {

namespace {

// Subspace of a shifted X: degree k uses cells of X_{k+shift} passing `keep`,
// with operators d_i -> d_{i+offset}, s_i -> s_{i+offset}, and the map given
// by `proj` (a face index depending on k).
DecResult shifted(const TruncSSet& X, int shift, int offset, const std::function<bool(int, CellIndex)>& keep,
                  const std::function<CellIndex(int, CellIndex)>& proj) {
  const int N = X.dim() - shift;
  if (N < 0) throw InputError("dimension too small for decalage");
  SSetBuilder b(N);
  std::vector<std::vector<int>> handle(N + 1);
  for (int k = 0; k <= N; ++k) {
    handle[k].assign(X.size(k + shift), -1);
    for (CellIndex c = 0; c < static_cast<CellIndex>(X.size(k + shift)); ++c)
      if (keep(k, c)) handle[k][c] = b.add(k, X.name(k + shift, c));
  }
  auto need = [&](int k, CellIndex c) {
    if (handle[k][c] < 0) throw InvariantError("subspace not closed under operators at degree " + std::to_string(k));
    return handle[k][c];
  };
  for (int k = 0; k <= N; ++k)
    for (CellIndex c = 0; c < static_cast<CellIndex>(X.size(k + shift)); ++c) {
      if (handle[k][c] < 0) continue;
      if (k >= 1)
        for (int i = 0; i <= k; ++i) b.set_face(k, i, handle[k][c], need(k - 1, X.face(k + shift, i + offset, c)));
      if (k < N)
        for (int i = 0; i <= k; ++i) b.set_degen(k, i, handle[k][c], need(k + 1, X.degen(k + shift, i + offset, c)));
    }
  DecResult out{std::make_shared<TruncSSet>(b.build()), {}};
  out.map.source = out.space.get();
  out.map.target = &X;
  for (int k = 0; k <= N; ++k) {
    out.map.comp.emplace_back(out.space->size(k));
    for (CellIndex c = 0; c < static_cast<CellIndex>(out.space->size(k)); ++c)
      out.map.comp[k][c] = proj(k, X.at(k + shift, out.space->name(k, c)));
  }
  return out;
}

CellIndex last_vertex(const TruncSSet& X, int n, CellIndex c) { return vertex(X, n, c, n); }
CellIndex first_vertex(const TruncSSet& X, int n, CellIndex c) { return vertex(X, n, c, 0); }

}  // namespace

DecResult dec_bot(const TruncSSet& X) {
  if (X.dim() < 1) throw InputError("dec_bot needs dim >= 1");
  return shifted(
      X, 1, 1, [](int, CellIndex) { return true; }, [&X](int k, CellIndex c) { return X.face(k + 1, 0, c); });
}

DecResult dec_top(const TruncSSet& X) {
  if (X.dim() < 1) throw InputError("dec_top needs dim >= 1");
  return shifted(
      X, 1, 0, [](int, CellIndex) { return true; }, [&X](int k, CellIndex c) { return X.face(k + 1, k + 1, c); });
}

DecResult double_dec(const TruncSSet& X) {
  if (X.dim() < 2) throw InputError("double_dec needs dim >= 2");
  return shifted(
      X, 2, 1, [](int, CellIndex) { return true; },
      [&X](int k, CellIndex c) { return X.face(k + 1, 0, X.face(k + 2, k + 2, c)); });
}

DecResult slice(const TruncSSet& X, CellIndex y) {
  if (X.dim() < 1) throw InputError("slice needs dim >= 1");
  if (y < 0 || y >= static_cast<CellIndex>(X.size(0))) throw InputError("slice point is not a 0-cell");
  return shifted(
      X, 1, 0, [&X, y](int k, CellIndex c) { return last_vertex(X, k + 1, c) == y; },
      [&X](int k, CellIndex c) { return X.face(k + 1, k + 1, c); });
}

DecResult coslice(const TruncSSet& X, CellIndex x) {
  if (X.dim() < 1) throw InputError("coslice needs dim >= 1");
  if (x < 0 || x >= static_cast<CellIndex>(X.size(0))) throw InputError("coslice point is not a 0-cell");
  return shifted(
      X, 1, 1, [&X, x](int k, CellIndex c) { return first_vertex(X, k + 1, c) == x; },
      [&X](int k, CellIndex c) { return X.face(k + 1, 0, c); });
}

bool levelwise_bijective(const SimpMap& F) {
  for (int k = 0; k <= F.dim(); ++k) {
    if (F.comp[k].size() != F.target->size(k)) return false;
    std::vector<bool> hit(F.target->size(k), false);
    for (CellIndex t : F.comp[k]) {
      if (hit[t]) return false;
      hit[t] = true;
    }
  }
  return true;
}

std::vector<CellIndex> find_terminal(const TruncSSet& X) {
  std::vector<CellIndex> out;
  for (CellIndex y = 0; y < static_cast<CellIndex>(X.size(0)); ++y)
    if (levelwise_bijective(slice(X, y).map)) out.push_back(y);
  return out;
}

std::vector<CellIndex> find_initial(const TruncSSet& X) {
  std::vector<CellIndex> out;
  for (CellIndex x = 0; x < static_cast<CellIndex>(X.size(0)); ++x)
    if (levelwise_bijective(coslice(X, x).map)) out.push_back(x);
  return out;
}

}  // namespace dcmp
