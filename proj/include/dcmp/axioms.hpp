#pragma once

#include <functional>
#include <span>
#include <string>

#include "dcmp/sset.hpp"

namespace dcmp {

// Commuting square of finite sets
//   A --top--> B
//   |left      |right
//   C --bot--> D
// is a pullback iff A -> B x_D C is bijective. Names are used for witnesses.
struct SquareSpec {
  std::string label;
  std::span<const CellIndex> top, left, right, bottom;
  std::size_t a_size, b_size, c_size;
  std::function<std::string(CellIndex)> a_name, b_name, c_name;
};
bool check_pullback(const SquareSpec& sq, AxiomReport& r);

AxiomReport is_segal(const TruncSSet& X);
AxiomReport is_decomposition(const TruncSSet& X, bool extended = true);
AxiomReport is_upper_2segal(const TruncSSet& X);
AxiomReport is_lower_2segal(const TruncSSet& X);

enum class Side { Upper, Lower };
AxiomReport check_unital(const TruncSSet& X, Side side);
AxiomReport is_complete(const TruncSSet& X);

}  // namespace dcmp
