#pragma once

// Independent reference computations on finite posets, written directly from
// the order relation without going through simplicial sets.

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "dcmp/builders.hpp"
#include "dcmp/coalgebra.hpp"

namespace oracle {

struct Order {
  std::vector<std::string> el;
  std::vector<std::vector<bool>> le;

  explicit Order(const dcmp::FinPoset& P) : el(P.elements) {
    std::size_t n = el.size();
    le.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) le[i][i] = true;
    for (auto& [a, b] : P.leq) le[idx(a)][idx(b)] = true;
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (le[i][m] && le[m][j]) le[i][j] = true;
  }
  std::size_t idx(const std::string& s) const {
    return static_cast<std::size_t>(std::find(el.begin(), el.end(), s) - el.begin());
  }
  std::size_t size() const { return el.size(); }
};

// mu(x, x) = 1, mu(x, y) = -sum_{x <= z < y} mu(x, z)
inline std::map<std::pair<std::string, std::string>, dcmp::Rational> moebius(const dcmp::FinPoset& P) {
  Order O(P);
  std::size_t n = O.size();
  std::vector<int> below(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) below[j] += O.le[i][j];
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return below[a] < below[b]; });
  std::map<std::pair<std::string, std::string>, dcmp::Rational> mu;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y : order) {
      if (!O.le[x][y]) continue;
      if (x == y) {
        mu[{O.el[x], O.el[y]}] = 1;
        continue;
      }
      dcmp::Rational s = 0;
      for (std::size_t z = 0; z < n; ++z)
        if (O.le[x][z] && O.le[z][y] && z != y) s += mu.at({O.el[x], O.el[z]});
      mu[{O.el[x], O.el[y]}] = -s;
    }
  return mu;
}

// the closed interval [a, b] as a poset
inline dcmp::FinPoset interval(const dcmp::FinPoset& P, const std::string& a, const std::string& b) {
  Order O(P);
  dcmp::FinPoset Q;
  std::size_t ia = O.idx(a), ib = O.idx(b);
  for (std::size_t e = 0; e < O.size(); ++e)
    if (O.le[ia][e] && O.le[e][ib]) Q.elements.push_back(O.el[e]);
  for (const auto& u : Q.elements)
    for (const auto& v : Q.elements)
      if (u != v && O.le[O.idx(u)][O.idx(v)]) Q.leq.emplace_back(u, v);
  return Q;
}

// weakly increasing (k+1)-tuples
inline std::size_t chains(const dcmp::FinPoset& P, int k) {
  Order O(P);
  std::size_t n = O.size();
  std::vector<std::size_t> ways(n, 1);
  for (int step = 0; step < k; ++step) {
    std::vector<std::size_t> nw(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (O.le[i][j]) nw[j] += ways[i];
    ways = nw;
  }
  std::size_t total = 0;
  for (auto w : ways) total += w;
  return total;
}

}  // namespace oracle

namespace oracle {

// order automorphisms, by trying every permutation of the elements
inline std::size_t automorphisms(const dcmp::FinPoset& P) {
  Order O(P);
  std::vector<std::size_t> p(O.size());
  std::iota(p.begin(), p.end(), 0);
  std::size_t count = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < O.size() && ok; ++i)
      for (std::size_t j = 0; j < O.size() && ok; ++j) ok = O.le[i][j] == O.le[p[i]][p[j]];
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

}  // namespace oracle
