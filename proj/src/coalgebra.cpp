#include "dcmp/coalgebra.hpp"

#include <algorithm>
#include <tuple>

namespace dcmp {

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Coalgebra::Coalgebra(const TruncSSet& X) : X_(&X) {
  if (X.dim() < 2) throw InputError("comultiplication needs dim >= 2");
  const auto n1 = X.size(1);
  std::vector<std::map<std::pair<CellIndex, CellIndex>, int>> acc(n1);
  for (CellIndex s = 0; s < static_cast<CellIndex>(X.size(2)); ++s)
    ++acc[X.face(2, 1, s)][{X.face(2, 2, s), X.face(2, 0, s)}];
  delta_.resize(n1);
  for (std::size_t f = 0; f < n1; ++f)
    for (const auto& [lr, m] : acc[f]) delta_[f].push_back({lr.first, lr.second, m});
  unit_.assign(n1, false);
  for (CellIndex x = 0; x < static_cast<CellIndex>(X.size(0)); ++x) unit_[X.degen(0, 0, x)] = true;
}

namespace {
using Triple = std::tuple<CellIndex, CellIndex, CellIndex>;
}

AxiomReport Coalgebra::coassoc_check() const {
  AxiomReport r("coassociativity");
  const auto& X = *X_;
  std::vector<std::map<Triple, long>> from3;
  if (X.dim() >= 3) {
    from3.resize(X.size(1));
    for (CellIndex w = 0; w < static_cast<CellIndex>(X.size(3)); ++w) {
      CellIndex e01 = restrict_to(X, 3, w, {0, 1});
      CellIndex e12 = restrict_to(X, 3, w, {1, 2});
      CellIndex e23 = restrict_to(X, 3, w, {2, 3});
      ++from3[long_edge(X, 3, w)][{e01, e12, e23}];
    }
  }
  for (CellIndex f = 0; f < static_cast<CellIndex>(X.size(1)); ++f) {
    std::map<Triple, long> lhs, rhs;
    for (const auto& t : delta_[f]) {
      for (const auto& u : delta_[t.left]) lhs[{u.left, u.right, t.right}] += long(t.mult) * u.mult;
      for (const auto& u : delta_[t.right]) rhs[{t.left, u.left, u.right}] += long(t.mult) * u.mult;
    }
    if (lhs != rhs) r.fail("(D x id)D vs (id x D)D", "differ on '" + X.name(1, f) + "'");
    if (X.dim() >= 3 && lhs != from3[f]) r.fail("triples from X_3", "differ on '" + X.name(1, f) + "'");
  }
  r.touch(std::min(X.dim(), 3));
  return r;
}

AxiomReport Coalgebra::counit_check() const {
  AxiomReport r("counit");
  const auto& X = *X_;
  for (CellIndex f = 0; f < static_cast<CellIndex>(X.size(1)); ++f) {
    std::map<CellIndex, int> left, right;
    for (const auto& t : delta_[f]) {
      if (unit_[t.left]) left[t.right] += t.mult;
      if (unit_[t.right]) right[t.left] += t.mult;
    }
    std::map<CellIndex, int> want{{f, 1}};
    if (left != want) r.fail("(e x id)D", "on '" + X.name(1, f) + "'");
    if (right != want) r.fail("(id x e)D", "on '" + X.name(1, f) + "'");
  }
  r.touch(2);
  return r;
}

Functional Coalgebra::zeta() const { return Functional(X_->size(1), Rational(1)); }

Functional Coalgebra::delta_functional() const {
  Functional d(X_->size(1), Rational(0));
  for (std::size_t f = 0; f < d.size(); ++f)
    if (unit_[f]) d[f] = 1;
  return d;
}

Functional Coalgebra::convolve(const Functional& a, const Functional& b) const {
  if (a.size() != X_->size(1) || b.size() != X_->size(1)) throw InputError("functional has wrong size");
  Functional out(a.size(), Rational(0));
  for (std::size_t f = 0; f < a.size(); ++f)
    for (const auto& t : delta_[f]) out[f] += Rational(t.mult) * a[t.left] * b[t.right];
  return out;
}

Functional Coalgebra::moebius() const {
  const auto n = X_->size(1);
  Functional mu(n, Rational(0));
  // 0 = unvisited, 1 = on stack, 2 = done
  std::vector<int> state(n, 0);
  // iterative post-order over "f needs mu(a) for (a, b) in D(f) with b not a unit"
  for (CellIndex root = 0; root < static_cast<CellIndex>(n); ++root) {
    if (state[root]) continue;
    std::vector<std::pair<CellIndex, std::size_t>> stack{{root, 0}};
    state[root] = 1;
    while (!stack.empty()) {
      auto& [f, pos] = stack.back();
      const auto& terms = delta_[f];
      bool pushed = false;
      while (pos < terms.size()) {
        const auto& t = terms[pos++];
        if (unit_[t.right]) continue;
        if (state[t.left] == 1)
          throw InvariantError("Moebius recursion is not well founded: cycle through '" + X_->name(1, t.left) + "'");
        if (state[t.left] == 0) {
          state[t.left] = 1;
          stack.push_back({t.left, 0});
          pushed = true;
          break;
        }
      }
      if (pushed) continue;
      // mu(f) * [unit right factor count] + sum_{b non-unit} mu(a) = delta(f)
      Rational acc = unit_[f] ? 1 : 0;
      int self = 0;
      for (const auto& t : terms) {
        if (unit_[t.right]) {
          if (t.left != f) throw InvariantError("unit term with foreign left factor on '" + X_->name(1, f) + "'");
          self += t.mult;
        } else {
          acc -= Rational(t.mult) * mu[t.left];
        }
      }
      if (self != 1) throw InvariantError("counit law fails on '" + X_->name(1, f) + "'");
      mu[f] = acc;
      state[f] = 2;
      stack.pop_back();
    }
  }
  return mu;
}

AxiomReport Coalgebra::moebius_check(const Functional& mu) const {
  AxiomReport r("moebius");
  auto z = zeta();
  auto d = delta_functional();
  auto l = convolve(mu, z);
  auto rr = convolve(z, mu);
  for (std::size_t f = 0; f < d.size(); ++f) {
    if (l[f] != d[f]) r.fail("mu*zeta", "on '" + X_->name(1, static_cast<CellIndex>(f)) + "': " + to_string(l[f]));
    if (rr[f] != d[f]) r.fail("zeta*mu", "on '" + X_->name(1, static_cast<CellIndex>(f)) + "': " + to_string(rr[f]));
  }
  r.touch(2);
  return r;
}

}  // namespace dcmp
