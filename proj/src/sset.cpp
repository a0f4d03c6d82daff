#include "dcmp/sset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dcmp {

std::string op_name(char kind, int i) { return std::string(1, kind) + std::to_string(i); }

std::optional<CellIndex> TruncSSet::find(int k, std::string_view id) const {
  if (k < 0 || k > dim_) return std::nullopt;
  auto it = lookup_[k].find(id);
  if (it == lookup_[k].end()) return std::nullopt;
  return it->second;
}

CellIndex TruncSSet::at(int k, std::string_view id) const {
  auto c = find(k, id);
  if (!c) throw InputError("no cell '" + std::string(id) + "' in degree " + std::to_string(k));
  return *c;
}

SSetBuilder::SSetBuilder(int dim)
    : dim_(dim), ids_(dim + 1), index_(dim + 1), face_(dim + 1), degen_(dim + 1) {
  if (dim < 0) throw InputError("negative dimension");
  for (int k = 0; k <= dim; ++k) {
    if (k >= 1) face_[k].resize(k + 1);
    if (k < dim) degen_[k].resize(k + 1);
  }
}

int SSetBuilder::add(int k, std::string id) {
  if (k < 0 || k > dim_) throw InputError("degree out of range: " + std::to_string(k));
  if (index_[k].count(id)) throw InputError("duplicate cell id '" + id + "' in degree " + std::to_string(k));
  int h = static_cast<int>(ids_[k].size());
  index_[k].emplace(id, h);
  ids_[k].push_back(std::move(id));
  if (k >= 1)
    for (auto& t : face_[k]) t.push_back(-1);
  if (k < dim_)
    for (auto& t : degen_[k]) t.push_back(-1);
  return h;
}

std::optional<int> SSetBuilder::handle(int k, std::string_view id) const {
  if (k < 0 || k > dim_) return std::nullopt;
  auto it = index_[k].find(id);
  if (it == index_[k].end()) return std::nullopt;
  return it->second;
}

int SSetBuilder::handle_or_throw(int k, std::string_view id) const {
  auto h = handle(k, id);
  if (!h) throw InputError("dangling id '" + std::string(id) + "' in degree " + std::to_string(k));
  return *h;
}

void SSetBuilder::set_face(int k, int i, int cell, int target) {
  if (k < 1 || k > dim_ || i < 0 || i > k) throw InputError("face index out of range");
  face_[k][i].at(cell) = target;
}

void SSetBuilder::set_degen(int k, int i, int cell, int target) {
  if (k < 0 || k >= dim_ || i < 0 || i > k) throw InputError("degeneracy index out of range");
  degen_[k][i].at(cell) = target;
}

void SSetBuilder::set_face(int k, int i, std::string_view cell, std::string_view target) {
  set_face(k, i, handle_or_throw(k, cell), handle_or_throw(k - 1, target));
}

void SSetBuilder::set_degen(int k, int i, std::string_view cell, std::string_view target) {
  set_degen(k, i, handle_or_throw(k, cell), handle_or_throw(k + 1, target));
}

TruncSSet SSetBuilder::build() const {
  TruncSSet X;
  X.dim_ = dim_;
  X.names_.resize(dim_ + 1);
  X.lookup_.resize(dim_ + 1);
  X.face_.resize(dim_ + 1);
  X.degen_.resize(dim_ + 1);
  // position of provisional handle h after sorting
  std::vector<std::vector<int>> pos(dim_ + 1);
  for (int k = 0; k <= dim_; ++k) {
    std::vector<int> order(ids_[k].size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return ids_[k][a] < ids_[k][b]; });
    pos[k].assign(order.size(), 0);
    for (std::size_t p = 0; p < order.size(); ++p) {
      pos[k][order[p]] = static_cast<int>(p);
      X.names_[k].push_back(ids_[k][order[p]]);
      X.lookup_[k].emplace(ids_[k][order[p]], static_cast<int>(p));
    }
  }
  for (int k = 0; k <= dim_; ++k) {
    if (k >= 1) {
      X.face_[k].assign(k + 1, std::vector<CellIndex>(ids_[k].size()));
      for (int i = 0; i <= k; ++i)
        for (std::size_t h = 0; h < ids_[k].size(); ++h) {
          int t = face_[k][i][h];
          if (t < 0)
            throw InputError("missing face d" + std::to_string(i) + " of '" + ids_[k][h] + "' in degree " +
                             std::to_string(k));
          X.face_[k][i][pos[k][h]] = pos[k - 1][t];
        }
    }
    if (k < dim_) {
      X.degen_[k].assign(k + 1, std::vector<CellIndex>(ids_[k].size()));
      for (int i = 0; i <= k; ++i)
        for (std::size_t h = 0; h < ids_[k].size(); ++h) {
          int t = degen_[k][i][h];
          if (t < 0)
            throw InputError("missing degeneracy s" + std::to_string(i) + " of '" + ids_[k][h] + "' in degree " +
                             std::to_string(k));
          X.degen_[k][i][pos[k][h]] = pos[k + 1][t];
        }
    }
  }
  return X;
}

void AxiomReport::fail(std::string square, std::string detail) {
  pass = false;
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back({std::move(square), std::move(detail)});
}

void AxiomReport::merge(const AxiomReport& other) {
  if (!other.pass) pass = false;
  for (const auto& w : other.witnesses)
    if (witnesses.size() < kMaxWitnesses) witnesses.push_back(w);
  touch(other.max_degree_checked);
}

std::string AxiomReport::summary() const {
  std::ostringstream os;
  os << axiom << ": " << (pass ? "pass" : "FAIL") << " (max degree checked " << max_degree_checked << ")";
  for (const auto& w : witnesses) os << "\n  [" << w.square << "] " << w.detail;
  return os.str();
}

namespace {

void check_eq(AxiomReport& r, const TruncSSet& X, int k_out, CellIndex lhs, CellIndex rhs, int k_in, CellIndex c,
              const std::string& ident) {
  if (lhs != rhs)
    r.fail(ident, "at degree " + std::to_string(k_in) + " on cell '" + X.name(k_in, c) + "': '" +
                      X.name(k_out, lhs) + "' vs '" + X.name(k_out, rhs) + "'");
}

}  // namespace

AxiomReport validate_simplicial(const TruncSSet& X) {
  AxiomReport r("simplicial");
  const int N = X.dim();
  for (int k = 0; k <= N; ++k) {
    const auto sz = X.size(k);
    for (CellIndex c = 0; c < static_cast<CellIndex>(sz); ++c) {
      // d_i d_j = d_{j-1} d_i, i < j, on X_k
      if (k >= 2)
        for (int j = 1; j <= k; ++j)
          for (int i = 0; i < j; ++i)
            check_eq(r, X, k - 2, X.face(k - 1, i, X.face(k, j, c)), X.face(k - 1, j - 1, X.face(k, i, c)), k, c,
                     op_name('d', i) + " " + op_name('d', j) + " != " + op_name('d', j - 1) + " " + op_name('d', i));
      if (k < N)
        for (int j = 0; j <= k; ++j) {
          CellIndex sj = X.degen(k, j, c);
          for (int i = 0; i <= k + 1; ++i) {
            CellIndex lhs = X.face(k + 1, i, sj);
            std::string name = op_name('d', i) + " " + op_name('s', j);
            if (i == j || i == j + 1) {
              check_eq(r, X, k, lhs, c, k, c, name + " != id");
            } else if (i < j) {
              check_eq(r, X, k, lhs, X.degen(k - 1, j - 1, X.face(k, i, c)), k, c,
                       name + " != " + op_name('s', j - 1) + " " + op_name('d', i));
            } else {
              check_eq(r, X, k, lhs, X.degen(k - 1, j, X.face(k, i - 1, c)), k, c,
                       name + " != " + op_name('s', j) + " " + op_name('d', i - 1));
            }
          }
        }
      if (k + 2 <= N)
        for (int j = 0; j <= k; ++j)
          for (int i = 0; i <= j; ++i)
            check_eq(r, X, k + 2, X.degen(k + 1, i, X.degen(k, j, c)), X.degen(k + 1, j + 1, X.degen(k, i, c)), k, c,
                     op_name('s', i) + " " + op_name('s', j) + " != " + op_name('s', j + 1) + " " + op_name('s', i));
    }
    r.touch(k);
  }
  return r;
}

AxiomReport check_natural(const SimpMap& F) {
  AxiomReport r("natural");
  const auto& X = *F.source;
  const auto& Y = *F.target;
  const int n = F.dim();
  for (int k = 0; k <= n; ++k) {
    if (F.comp[k].size() != X.size(k)) {
      r.fail("shape", "component at degree " + std::to_string(k) + " has wrong size");
      return r;
    }
    for (CellIndex c = 0; c < static_cast<CellIndex>(X.size(k)); ++c) {
      if (F.comp[k][c] < 0 || F.comp[k][c] >= static_cast<CellIndex>(Y.size(k))) {
        r.fail("shape", "component at degree " + std::to_string(k) + " out of range");
        return r;
      }
      if (k >= 1)
        for (int i = 0; i <= k; ++i)
          if (F(k - 1, X.face(k, i, c)) != Y.face(k, i, F(k, c)))
            r.fail("F " + op_name('d', i), "on '" + X.name(k, c) + "'");
      if (k < n)
        for (int i = 0; i <= k; ++i)
          if (F(k + 1, X.degen(k, i, c)) != Y.degen(k, i, F(k, c)))
            r.fail("F " + op_name('s', i), "on '" + X.name(k, c) + "'");
    }
    r.touch(k);
  }
  return r;
}

SimpMap identity_map(const TruncSSet& X) {
  SimpMap F{&X, &X, {}};
  for (int k = 0; k <= X.dim(); ++k) {
    F.comp.emplace_back(X.size(k));
    std::iota(F.comp.back().begin(), F.comp.back().end(), 0);
  }
  return F;
}

SimpMap compose(const SimpMap& G, const SimpMap& F) {
  SimpMap H{F.source, G.target, {}};
  int n = std::min(F.dim(), G.dim());
  for (int k = 0; k <= n; ++k) {
    H.comp.emplace_back(F.comp[k].size());
    for (std::size_t c = 0; c < F.comp[k].size(); ++c) H.comp[k][c] = G.comp[k][F.comp[k][c]];
  }
  return H;
}

CellIndex long_edge(const TruncSSet& X, int n, CellIndex c) {
  if (n < 1) throw InputError("long_edge needs degree >= 1");
  for (int k = n; k > 1; --k) c = X.face(k, 1, c);
  return c;
}

CellIndex long_edge_or_unit(const TruncSSet& X, int n, CellIndex c) {
  if (n == 0) return X.degen(0, 0, c);
  return long_edge(X, n, c);
}

CellIndex restrict_to(const TruncSSet& X, int n, CellIndex c, const std::vector<int>& verts) {
  std::vector<bool> keep(n + 1, false);
  for (int v : verts) keep.at(v) = true;
  int k = n;
  for (int v = n; v >= 0; --v)
    if (!keep[v]) c = X.face(k--, v, c);
  return c;
}

CellIndex vertex(const TruncSSet& X, int n, CellIndex c, int j) { return restrict_to(X, n, c, {j}); }

CellIndex apply_monotone(const TruncSSet& X, int n, CellIndex c, const std::vector<int>& g) {
  std::vector<int> image;
  for (int v : g)
    if (image.empty() || image.back() != v) image.push_back(v);
  c = restrict_to(X, n, c, image);
  int k = static_cast<int>(image.size()) - 1;
  for (std::size_t i = 0; i + 1 < g.size(); ++i)
    if (g[i] == g[i + 1]) {
      if (k >= X.dim()) throw InputError("truncation exceeded in apply_monotone");
      c = X.degen(k++, static_cast<int>(i), c);
    }
  return c;
}

std::vector<CellIndex> spine(const TruncSSet& X, int n, CellIndex c) {
  std::vector<CellIndex> out;
  for (int i = 1; i <= n; ++i) out.push_back(restrict_to(X, n, c, {i - 1, i}));
  return out;
}

std::vector<std::vector<bool>> degenerate_flags(const TruncSSet& X) {
  std::vector<std::vector<bool>> flags(X.dim() + 1);
  for (int k = 0; k <= X.dim(); ++k) flags[k].assign(X.size(k), false);
  for (int k = 0; k < X.dim(); ++k)
    for (int i = 0; i <= k; ++i)
      for (CellIndex b = 0; b < static_cast<CellIndex>(X.size(k)); ++b) flags[k + 1][X.degen(k, i, b)] = true;
  return flags;
}

bool is_degenerate(const TruncSSet& X, int k, CellIndex c) {
  if (k == 0) return false;
  for (int i = 0; i < k; ++i)
    for (CellIndex b = 0; b < static_cast<CellIndex>(X.size(k - 1)); ++b)
      if (X.degen(k - 1, i, b) == c) return true;
  return false;
}

Cell apply_word(const TruncSSet& X, Cell c, const Word& w) {
  for (const Op& op : w) {
    int k = c.degree;
    if (op.index < 0 || op.index > k) throw InputError("operator index out of range for degree " + std::to_string(k));
    if (op.kind == Op::Face) {
      if (k == 0) throw InputError("face applied to a degree-0 cell");
      c = {k - 1, X.face(k, op.index, c.index)};
    } else {
      if (k >= X.dim()) throw InputError("truncation exceeded");
      c = {k + 1, X.degen(k, op.index, c.index)};
    }
  }
  return c;
}

Word parse_word(std::string_view text) {
  Word w;
  std::size_t p = 0;
  while (p < text.size()) {
    while (p < text.size() && (text[p] == ',' || text[p] == ' ')) ++p;
    if (p >= text.size()) break;
    char kind = text[p++];
    if (kind != 'd' && kind != 's') throw InputError("bad operator word");
    std::size_t q = p;
    while (q < text.size() && text[q] >= '0' && text[q] <= '9') ++q;
    if (q == p) throw InputError("bad operator word");
    int i = std::stoi(std::string(text.substr(p, q - p)));
    w.push_back(kind == 'd' ? face_op(i) : degen_op(i));
    p = q;
  }
  return w;
}

}  // namespace dcmp
