#include "dcmp/axioms.hpp"

#include <functional>
#include <unordered_map>

namespace dcmp {

bool check_pullback(const SquareSpec& sq, AxiomReport& r) {
  bool ok = true;
  for (CellIndex a = 0; a < static_cast<CellIndex>(sq.a_size); ++a) {
    if (sq.right[sq.top[a]] != sq.bottom[sq.left[a]]) {
      r.fail(sq.label, "square does not commute at '" + sq.a_name(a) + "'");
      return false;
    }
  }
  std::unordered_map<std::int64_t, CellIndex> seen;
  seen.reserve(sq.a_size * 2);
  const std::int64_t stride = static_cast<std::int64_t>(sq.c_size) + 1;
  for (CellIndex a = 0; a < static_cast<CellIndex>(sq.a_size); ++a) {
    std::int64_t key = sq.top[a] * stride + sq.left[a];
    auto [it, fresh] = seen.emplace(key, a);
    if (!fresh) {
      r.fail(sq.label, "duplicated lift: '" + sq.a_name(it->second) + "' and '" + sq.a_name(a) + "' over ('" +
                           sq.b_name(sq.top[a]) + "', '" + sq.c_name(sq.left[a]) + "')");
      ok = false;
    }
  }
  // fibre product B x_D C grouped by D
  std::unordered_map<CellIndex, std::vector<CellIndex>> c_over;
  for (CellIndex c = 0; c < static_cast<CellIndex>(sq.c_size); ++c) c_over[sq.bottom[c]].push_back(c);
  for (CellIndex b = 0; b < static_cast<CellIndex>(sq.b_size); ++b) {
    auto it = c_over.find(sq.right[b]);
    if (it == c_over.end()) continue;
    for (CellIndex c : it->second)
      if (!seen.count(b * stride + c)) {
        r.fail(sq.label, "missing lift over ('" + sq.b_name(b) + "', '" + sq.c_name(c) + "')");
        ok = false;
      }
  }
  return ok;
}

namespace {

std::function<std::string(CellIndex)> namer(const TruncSSet& X, int k) {
  return [&X, k](CellIndex c) { return X.name(k, c); };
}

// top: X_a -> X_b, left: X_a -> X_c, right: X_b -> X_d, bottom: X_c -> X_d
SquareSpec square(const TruncSSet& X, std::string label, int a, int b, int c, std::span<const CellIndex> top,
                  std::span<const CellIndex> left, std::span<const CellIndex> right,
                  std::span<const CellIndex> bottom) {
  return {std::move(label), top,           left,           right,          bottom,
          X.size(a),        X.size(b),     X.size(c),      namer(X, a),    namer(X, b),
          namer(X, c)};
}

std::string dname(int i, int k) { return "d" + std::to_string(i) + "@" + std::to_string(k); }
std::string sname(int i, int k) { return "s" + std::to_string(i) + "@" + std::to_string(k); }

// one of the two families of decomposition squares at (n, i)
bool family_square(const TruncSSet& X, int n, int i, bool lower_face, AxiomReport& r) {
  if (!lower_face) {
    // (d_{i+1}, d_0) against (d_0, d_i)
    auto sq = square(X, "upper n=" + std::to_string(n) + " i=" + std::to_string(i) + ": " + dname(i + 1, n + 1) +
                            " vs " + dname(0, n + 1),
                     n + 1, n, n, X.face_table(n + 1, i + 1), X.face_table(n + 1, 0), X.face_table(n, 0),
                     X.face_table(n, i));
    return check_pullback(sq, r);
  }
  // (d_i, d_top) against (d_top, d_i)
  auto sq = square(X, "lower n=" + std::to_string(n) + " i=" + std::to_string(i) + ": " + dname(i, n + 1) + " vs " +
                          dname(n + 1, n + 1),
                   n + 1, n, n, X.face_table(n + 1, i), X.face_table(n + 1, n + 1), X.face_table(n, n),
                   X.face_table(n, i));
  return check_pullback(sq, r);
}

AxiomReport families(const TruncSSet& X, const std::string& name, bool upper, bool lower, bool extended) {
  AxiomReport r(name);
  for (int n = 2; n + 1 <= X.dim(); ++n) {
    for (int i = 1; i < n; ++i) {
      if (upper && !family_square(X, n, i, false, r)) return r;
      if (lower && !family_square(X, n, i, true, r)) return r;
    }
    if (extended && n >= 3) {
      for (int i = 1; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          auto sq = square(X, "inner n=" + std::to_string(n) + " " + dname(i, n + 1) + " vs " + dname(j + 1, n + 1),
                           n + 1, n, n, X.face_table(n + 1, i), X.face_table(n + 1, j + 1), X.face_table(n, j),
                           X.face_table(n, i));
          if (!check_pullback(sq, r)) return r;
          // degeneracy square on X_{n-3}: s_{i-1} then s_{j-1} against s_{j-2} then s_{i-1}
          {
            int k = n - 3;
            auto dq = square(X, "degeneracy n=" + std::to_string(n) + " " + sname(i - 1, k) + " vs " + sname(j - 2, k),
                             k, k + 1, k + 1, X.degen_table(k, i - 1), X.degen_table(k, j - 2),
                             X.degen_table(k + 1, j - 1), X.degen_table(k + 1, i - 1));
            if (!check_pullback(dq, r)) return r;
          }
        }
    }
    r.touch(n + 1);
  }
  if (r.max_degree_checked < 0) r.touch(X.dim());
  return r;
}

}  // namespace

AxiomReport is_segal(const TruncSSet& X) {
  AxiomReport r("segal");
  for (int n = 1; n + 1 <= X.dim(); ++n) {
    auto sq = square(X, "segal n=" + std::to_string(n) + ": " + dname(n + 1, n + 1) + " vs " + dname(0, n + 1), n + 1,
                     n, n, X.face_table(n + 1, n + 1), X.face_table(n + 1, 0), X.face_table(n, 0),
                     X.face_table(n, n));
    if (!check_pullback(sq, r)) return r;
    r.touch(n + 1);
  }
  if (r.max_degree_checked < 0) r.touch(X.dim());
  return r;
}

AxiomReport is_decomposition(const TruncSSet& X, bool extended) {
  return families(X, "decomposition", true, true, extended);
}
AxiomReport is_upper_2segal(const TruncSSet& X) { return families(X, "upper-2-segal", true, false, false); }
AxiomReport is_lower_2segal(const TruncSSet& X) { return families(X, "lower-2-segal", false, true, false); }

AxiomReport check_unital(const TruncSSet& X, Side side) {
  AxiomReport r(side == Side::Upper ? "unital-upper" : "unital-lower");
  for (int n = 0; n + 2 <= X.dim(); ++n) {
    for (int i = 0; i <= n; ++i) {
      // X_{n+1} --s--> X_{n+2}, down by a face to X_n --s_i--> X_{n+1}
      if (side == Side::Upper) {
        auto sq = square(X, "upper-unital n=" + std::to_string(n) + " " + sname(i + 1, n + 1), n + 1, n + 2, n,
                         X.degen_table(n + 1, i + 1), X.face_table(n + 1, 0), X.face_table(n + 2, 0),
                         X.degen_table(n, i));
        if (!check_pullback(sq, r)) return r;
      } else {
        auto sq = square(X, "lower-unital n=" + std::to_string(n) + " " + sname(i, n + 1), n + 1, n + 2, n,
                         X.degen_table(n + 1, i), X.face_table(n + 1, n + 1), X.face_table(n + 2, n + 2),
                         X.degen_table(n, i));
        if (!check_pullback(sq, r)) return r;
      }
    }
    r.touch(n + 2);
  }
  if (r.max_degree_checked < 0) r.touch(X.dim());
  return r;
}

AxiomReport is_complete(const TruncSSet& X) {
  AxiomReport r("complete");
  auto injective = [&](int k, int i) {
    std::unordered_map<CellIndex, CellIndex> hit;
    for (CellIndex c = 0; c < static_cast<CellIndex>(X.size(k)); ++c) {
      auto [it, fresh] = hit.emplace(X.degen(k, i, c), c);
      if (!fresh) {
        r.fail(sname(i, k), "'" + X.name(k, it->second) + "' and '" + X.name(k, c) + "' both map to '" +
                                X.name(k + 1, X.degen(k, i, c)) + "'");
        return false;
      }
    }
    return true;
  };
  if (X.dim() < 1) {
    r.touch(0);
    return r;
  }
  if (!injective(0, 0)) return r;
  r.touch(1);
  if (!is_decomposition(X).pass) return r;
  for (int k = 1; k < X.dim(); ++k) {
    for (int i = 0; i <= k; ++i)
      if (!injective(k, i)) return r;
    r.touch(k + 1);
  }
  return r;
}

}  // namespace dcmp
