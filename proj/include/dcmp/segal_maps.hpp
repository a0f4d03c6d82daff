#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "dcmp/sset.hpp"

namespace dcmp {

// Lookup of cells by their spine (sequence of consecutive edges).
class SpineIndex {
 public:
  static constexpr CellIndex kNone = -1;
  static constexpr CellIndex kAmbiguous = -2;

  explicit SpineIndex(const TruncSSet& B);
  CellIndex find(int k, const std::vector<CellIndex>& edges) const;
  const std::vector<CellIndex>& edges_between(CellIndex p, CellIndex q) const;

 private:
  const TruncSSet* B_;
  std::vector<std::map<std::vector<CellIndex>, CellIndex>> by_spine_;
  std::map<std::pair<CellIndex, CellIndex>, std::vector<CellIndex>> edges_;
  std::vector<CellIndex> empty_;
};

using Components = std::vector<std::vector<CellIndex>>;

// Fill comp at degrees comp.size() .. top from spines; false if some spine has
// no (or no unique) image cell.
bool extend_by_spine(const TruncSSet& A, const SpineIndex& B, Components& comp, int top);

struct MapSearch {
  bool bijective = false;
  std::vector<std::pair<CellIndex, CellIndex>> fixed_vertices;
  std::size_t limit = SIZE_MAX;
  // extra filter run on complete candidates
  std::function<bool(const SimpMap&)> accept;
};

// All simplicial maps A -> B on degrees <= min(dims); B must be Segal.
std::vector<SimpMap> enumerate_maps(const TruncSSet& A, const TruncSSet& B, const MapSearch& opts = {});

// Brute force over every levelwise function, for cross-checking on tiny inputs.
std::vector<SimpMap> brute_force_maps(const TruncSSet& A, const TruncSSet& B, bool bijective);

}  // namespace dcmp
