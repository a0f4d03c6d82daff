#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "dcmp/sset.hpp"

namespace dcmp {

using Rational = boost::multiprecision::cpp_rational;

struct TensorTerm {
  CellIndex left, right;
  int mult;
  friend bool operator==(const TensorTerm&, const TensorTerm&) = default;
};

// values indexed by 1-cell
using Functional = std::vector<Rational>;

class Coalgebra {
 public:
  explicit Coalgebra(const TruncSSet& X);

  const TruncSSet& space() const { return *X_; }
  // terms sorted by (left, right)
  const std::vector<TensorTerm>& comult(CellIndex f) const { return delta_.at(f); }
  int counit(CellIndex f) const { return unit_[f] ? 1 : 0; }

  AxiomReport coassoc_check() const;
  AxiomReport counit_check() const;

  Functional zeta() const;
  Functional delta_functional() const;
  Functional convolve(const Functional& a, const Functional& b) const;
  // throws InvariantError if the recursion has a cycle
  Functional moebius() const;
  AxiomReport moebius_check(const Functional& mu) const;

 private:
  const TruncSSet* X_;
  std::vector<std::vector<TensorTerm>> delta_;
  std::vector<bool> unit_;
};

std::string to_string(const Rational& q);

}  // namespace dcmp
