#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dcmp {

// malformed input: bad files, dangling ids, out-of-range requests
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// a construction that should have a unique answer found zero or several
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

using CellIndex = int;

struct Cell {
  int degree = 0;
  CellIndex index = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct Op {
  enum Kind : std::uint8_t { Face, Degen } kind;
  int index;
};
using Word = std::vector<Op>;

inline Op face_op(int i) { return {Op::Face, i}; }
inline Op degen_op(int i) { return {Op::Degen, i}; }

class SSetBuilder;

// Degreewise finite simplicial set truncated at dim. Cells in each degree are
// kept sorted by id; tables are indexed by position in that order.
class TruncSSet {
 public:
  TruncSSet() = default;

  int dim() const { return dim_; }
  std::size_t size(int k) const { return names_.at(k).size(); }
  const std::vector<std::string>& names(int k) const { return names_.at(k); }
  const std::string& name(int k, CellIndex c) const { return names_.at(k).at(c); }
  std::optional<CellIndex> find(int k, std::string_view id) const;
  CellIndex at(int k, std::string_view id) const;  // throws InputError

  // d_i : X_k -> X_{k-1}
  CellIndex face(int k, int i, CellIndex c) const { return face_[k][i][c]; }
  // s_i : X_k -> X_{k+1}
  CellIndex degen(int k, int i, CellIndex c) const { return degen_[k][i][c]; }
  std::span<const CellIndex> face_table(int k, int i) const { return face_[k][i]; }
  std::span<const CellIndex> degen_table(int k, int i) const { return degen_[k][i]; }

  bool operator==(const TruncSSet& o) const {
    return dim_ == o.dim_ && names_ == o.names_ && face_ == o.face_ && degen_ == o.degen_;
  }

 private:
  friend class SSetBuilder;
  int dim_ = 0;
  std::vector<std::vector<std::string>> names_;
  std::vector<std::map<std::string, CellIndex, std::less<>>> lookup_;
  std::vector<std::vector<std::vector<CellIndex>>> face_;   // [k][i][c], k >= 1
  std::vector<std::vector<std::vector<CellIndex>>> degen_;  // [k][i][c], k < dim
};

// Collects cells in any order; build() sorts by id and remaps the tables.
class SSetBuilder {
 public:
  explicit SSetBuilder(int dim);

  int dim() const { return dim_; }
  int add(int k, std::string id);  // returns a provisional handle
  std::optional<int> handle(int k, std::string_view id) const;
  std::size_t count(int k) const { return ids_[k].size(); }

  void set_face(int k, int i, int cell, int target);
  void set_degen(int k, int i, int cell, int target);
  void set_face(int k, int i, std::string_view cell, std::string_view target);
  void set_degen(int k, int i, std::string_view cell, std::string_view target);

  // throws InputError if a table entry is missing
  TruncSSet build() const;

 private:
  int handle_or_throw(int k, std::string_view id) const;
  int dim_;
  std::vector<std::vector<std::string>> ids_;
  std::vector<std::map<std::string, int, std::less<>>> index_;
  std::vector<std::vector<std::vector<int>>> face_;
  std::vector<std::vector<std::vector<int>>> degen_;
};

struct Witness {
  std::string square;
  std::string detail;
};

struct AxiomReport {
  std::string axiom;
  bool pass = true;
  int max_degree_checked = -1;
  std::vector<Witness> witnesses;

  static constexpr std::size_t kMaxWitnesses = 12;

  explicit AxiomReport(std::string name = {}) : axiom(std::move(name)) {}
  void fail(std::string square, std::string detail);
  void touch(int degree) {
    if (degree > max_degree_checked) max_degree_checked = degree;
  }
  void merge(const AxiomReport& other);
  std::string summary() const;
};

// Levelwise function; comp[k] defined for k <= min(source.dim, target.dim).
struct SimpMap {
  const TruncSSet* source = nullptr;
  const TruncSSet* target = nullptr;
  std::vector<std::vector<CellIndex>> comp;

  int dim() const { return static_cast<int>(comp.size()) - 1; }
  CellIndex operator()(int k, CellIndex c) const { return comp[k][c]; }
};

AxiomReport validate_simplicial(const TruncSSet& X);
AxiomReport check_natural(const SimpMap& F);

SimpMap identity_map(const TruncSSet& X);
// G after F
SimpMap compose(const SimpMap& G, const SimpMap& F);

CellIndex long_edge(const TruncSSet& X, int n, CellIndex c);
// long edge that also accepts degree 0 (gives s_0 x)
CellIndex long_edge_or_unit(const TruncSSet& X, int n, CellIndex c);
CellIndex vertex(const TruncSSet& X, int n, CellIndex c, int j);
// restriction to an increasing list of vertices
CellIndex restrict_to(const TruncSSet& X, int n, CellIndex c, const std::vector<int>& verts);
// X(g) for a monotone g: [m] -> [n], given as g[0..m]
CellIndex apply_monotone(const TruncSSet& X, int n, CellIndex c, const std::vector<int>& g);
std::vector<CellIndex> spine(const TruncSSet& X, int n, CellIndex c);

bool is_degenerate(const TruncSSet& X, int k, CellIndex c);
std::vector<std::vector<bool>> degenerate_flags(const TruncSSet& X);

Cell apply_word(const TruncSSet& X, Cell c, const Word& w);
Word parse_word(std::string_view text);  // "d0,s1,d1"

std::string op_name(char kind, int i);

}  // namespace dcmp
