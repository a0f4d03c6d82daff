#include "corpus.hpp"

#include <set>
#include "dcmp/io.hpp"

namespace corpus {

using namespace dcmp;

FinPoset chain_poset(int n) {
  FinPoset P;
  if (n == 2) P.elements = {"x", "z"};
  else if (n == 3) P.elements = {"x", "y", "z"};
  else
    for (int i = 0; i < n; ++i) P.elements.push_back("a" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) P.leq.emplace_back(P.elements[i], P.elements[i + 1]);
  return P;
}

FinPoset boolean_poset(int atoms) {
  FinPoset P;
  auto name = [](int s) {
    if (s == 0) return std::string("0");
    std::string out;
    for (int i = 0; i < 8; ++i)
      if (s >> i & 1) out += static_cast<char>('a' + i);
    return out;
  };
  for (int s = 0; s < (1 << atoms); ++s) P.elements.push_back(name(s));
  for (int s = 0; s < (1 << atoms); ++s)
    for (int i = 0; i < atoms; ++i)
      if (!(s >> i & 1)) P.leq.emplace_back(name(s), name(s | 1 << i));
  return P;
}

FinPoset divisors12() {
  FinPoset P;
  std::vector<int> d{1, 2, 3, 4, 6, 12};
  for (int a : d) P.elements.push_back(std::to_string(a));
  for (int a : d)
    for (int b : d)
      if (a != b && b % a == 0) P.leq.emplace_back(std::to_string(a), std::to_string(b));
  return P;
}

FinPoset diamond() {
  FinPoset P;
  P.elements = {"x", "y", "yp", "z", "yb", "ybp", "zp"};
  P.leq = {{"x", "y"}, {"x", "yp"}, {"y", "z"}, {"yp", "z"}, {"z", "yb"}, {"z", "ybp"}, {"yb", "zp"}, {"ybp", "zp"}};
  return P;
}

TruncSSet chain(int n, int N) { return poset_nerve(chain_poset(n), N); }
TruncSSet boolean(int atoms, int N) { return poset_nerve(boolean_poset(atoms), N); }
TruncSSet div12(int N) { return poset_nerve(divisors12(), N); }
TruncSSet diamond(int N) { return category_nerve(category_from_json(read_json_file(data_path("diamond.category.json"))), N); }
TruncSSet point(int N) { return chain(1, N); }

TruncSSet free_monoid(int N) {
  MonoidPresentation M;
  M.generators = {{"a", 1}, {"b", 1}};
  M.commute = {{"a", "b"}};
  M.max_length = 3;
  return monoid_nerve(M, N);
}

namespace {
template <class Keep>
TruncSSet subobject(const TruncSSet& X, Keep keep) {
  const int N = X.dim();
  SSetBuilder b(N);
  for (int k = 0; k <= N; ++k)
    for (CellIndex c = 0; c < static_cast<CellIndex>(X.size(k)); ++c)
      if (keep(k, c)) b.add(k, X.name(k, c));
  for (int k = 0; k <= N; ++k)
    for (CellIndex c = 0; c < static_cast<CellIndex>(X.size(k)); ++c)
      if (keep(k, c))
        for (int i = 0; i <= k; ++i) {
          if (k >= 1) b.set_face(k, i, X.name(k, c), X.name(k - 1, X.face(k, i, c)));
          if (k < N) b.set_degen(k, i, X.name(k, c), X.name(k + 1, X.degen(k, i, c)));
        }
  return b.build();
}
}  // namespace

TruncSSet hollow_triangle(int N) {
  auto X = chain(3, N);
  return subobject(X, [&](int k, CellIndex c) {
    std::set<CellIndex> v;
    for (int j = 0; j <= k; ++j) v.insert(vertex(X, k, c, j));
    return v.size() < 3;
  });
}

TruncSSet without_top_cell(const TruncSSet& X, const std::string& id) {
  CellIndex drop = X.at(X.dim(), id);
  return subobject(X, [&](int k, CellIndex c) { return k < X.dim() || c != drop; });
}

std::vector<Entry> posets(int N) {
  std::vector<Entry> out;
  for (int n = 1; n <= 5; ++n) out.push_back({"chain-" + std::to_string(n), chain(n, N)});
  out.push_back({"B2", boolean(2, N)});
  out.push_back({"B3", boolean(3, N)});
  out.push_back({"div12", div12(N)});
  return out;
}

std::vector<Entry> all(int N) {
  auto out = posets(N);
  out.push_back({"diamond", diamond(N)});
  out.push_back({"rpt(3)", rpt_build(3, N)});
  out.push_back({"monoid", free_monoid(N)});
  return out;
}

std::string data_path(const std::string& file) { return std::string(DCMP_DATA_DIR) + "/" + file; }

}  // namespace corpus
