#pragma once

#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "dcmp/intervals.hpp"
#include "dcmp/sset.hpp"

namespace dcmp {

struct IntervalFunctor {
  CellIndex from = 0, to = 0;  // long edges f, g with F: I_f -> I_g
  Components comp;
};

struct UXMorphism {
  CellIndex src = 0, dst = 0;  // objects are indexed by cells of X_n
  int functor = 0;
};

// Strict simplicial groupoid with objects (I_f, phi_lambda) and morphisms the
// phi-compatible stretched isomorphisms between intervals, levels 0..maxdeg.
class UXGroupoid {
 public:
  UXGroupoid(const TruncSSet& X, int maxdeg);

  const TruncSSet& X() const { return *X_; }
  int maxdeg() const { return maxdeg_; }
  const IntervalOf& interval(CellIndex f) const { return intervals_.at(f); }

  std::size_t object_count(int n) const { return X_->size(n); }
  CellIndex object_edge(int n, CellIndex lambda) const { return levels_[n].edge[lambda]; }
  CellIndex phi(int n, CellIndex lambda) const { return levels_[n].phi[lambda]; }

  const std::vector<UXMorphism>& morphisms(int n) const { return levels_[n].mor; }
  const std::vector<int>& hom(int n, CellIndex a, CellIndex b) const;
  int identity(int n, CellIndex lambda) const { return levels_[n].identity[lambda]; }
  std::optional<int> find(int n, CellIndex a, CellIndex b, int functor) const;
  // g after f; throws if the composite is missing
  int compose(int n, int g, int f) const;
  int inverse(int n, int m) const;
  int face(int n, int i, int m) const { return levels_[n].face[i][m]; }
  int degen(int n, int j, int m) const { return levels_[n].degen[j][m]; }
  // X(g) on morphisms for monotone g: [m] -> [n]
  int apply(int n, int m, const std::vector<int>& g) const;

  const IntervalFunctor& functor(int id) const { return functors_[id]; }
  std::size_t functor_count() const { return functors_.size(); }
  SimpMap functor_map(int id) const;
  // the map I_{long(d_i lambda)} -> I_{long(lambda)} glued from lambda
  const Components& glue(int n, CellIndex lambda, int i) const;
  std::size_t stretched_readings_disagree() const { return disagreements_; }

 private:
  struct Level {
    std::vector<CellIndex> edge, phi;
    std::vector<UXMorphism> mor;
    std::vector<int> identity;
    std::map<std::pair<CellIndex, CellIndex>, std::vector<int>> hom;
    std::map<std::tuple<CellIndex, CellIndex, int>, int> lookup;
    std::vector<std::vector<int>> face, degen;
  };

  int functor_id(CellIndex from, CellIndex to, const Components& comp) const;
  Components compute_glue(int n, CellIndex lambda, int i) const;
  CellIndex glue_lookup(int side, int m, CellIndex eta, CellIndex tau) const;

  const TruncSSet* X_;
  int maxdeg_;
  std::vector<IntervalOf> intervals_;
  std::vector<IntervalFunctor> functors_;
  std::map<std::tuple<CellIndex, CellIndex, std::vector<CellIndex>, std::vector<CellIndex>>, int> functor_index_;
  std::vector<std::vector<int>> functors_from_;
  std::vector<Level> levels_;
  std::map<std::tuple<int, CellIndex, int>, Components> glue_;
  // [side][m]: (face of omega, triangle of omega) -> omega
  std::vector<std::vector<std::unordered_map<std::int64_t, CellIndex>>> glue_index_;
  std::vector<int> empty_;
  std::size_t disagreements_ = 0;
};

AxiomReport check_strict(const UXGroupoid& U);
AxiomReport check_objects(const UXGroupoid& U);

// monotone maps [m] -> [n] preserving endpoints, all m, n <= maxdeg
std::vector<std::pair<int, std::vector<int>>> active_maps(int maxdeg);
AxiomReport check_active_discrete_fibration(const UXGroupoid& U, int n, const std::vector<int>& g);
AxiomReport check_all_active(const UXGroupoid& U);

// lift counts over (morphism downstairs, object upstairs) for any operator;
// returns the histogram count -> occurrences
std::map<int, std::size_t> lift_histogram(const UXGroupoid& U, int n, const std::vector<int>& g);
// all morphisms at level n over a given morphism downstairs with given target
std::vector<int> lifts(const UXGroupoid& U, int n, const std::vector<int>& g, int down, CellIndex target);

AxiomReport check_decomposition_grpd(const UXGroupoid& U);
AxiomReport check_complete_grpd(const UXGroupoid& U);
AxiomReport classifying_map(const UXGroupoid& U);

struct Modification {
  std::vector<std::vector<int>> gamma;  // [n][lambda] -> automorphism id
  bool identity = false;
};
struct ModificationSearch {
  std::vector<Modification> found;
  bool truncated = false;  // stopped at the limit
};
ModificationSearch enumerate_modifications(const UXGroupoid& U, std::size_t limit = 64);

int thread_budget();  // DCMP_THREADS, else hardware concurrency

}  // namespace dcmp
