#pragma once

#include <memory>
#include <string>
#include <vector>

#include "dcmp/sset.hpp"

namespace dcmp {

// The shifted space together with the deleted face family into X. The space
// is held by pointer so that map.source stays valid when the result moves.
struct DecResult {
  std::shared_ptr<TruncSSet> space;
  SimpMap map;
};

DecResult dec_bot(const TruncSSet& X);
DecResult dec_top(const TruncSSet& X);
DecResult double_dec(const TruncSSet& X);  // Dec_top Dec_bot, map d_0 d_top

// fibre of the upper dec over y (last vertex y); projection into X
DecResult slice(const TruncSSet& X, CellIndex y);
// fibre of the lower dec over x (first vertex x)
DecResult coslice(const TruncSSet& X, CellIndex x);

std::vector<CellIndex> find_terminal(const TruncSSet& X);
std::vector<CellIndex> find_initial(const TruncSSet& X);

bool levelwise_bijective(const SimpMap& F);

}  // namespace dcmp
