#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "dcmp/io.hpp"
#include "dcmp/segal_maps.hpp"
#include "dcmp/sset.hpp"

namespace dcmp {

// Segal set with chosen bottom/top and extra outer degeneracies.
struct Interval {
  std::shared_ptr<const TruncSSet> space;
  CellIndex bot = 0, top = 0, varpi = 0;
  Components eb, et;  // [k][c] for k < dim

  const TruncSSet& X() const { return *space; }
  int dim() const { return space->dim(); }
  // the equations tying eb/et to the faces, plus segal
  AxiomReport validate() const;
};

struct IntervalOf {
  Interval interval;
  SimpMap M;              // interval -> X
  Components to_x;        // degree k cell -> X_{k+2}
  std::vector<std::unordered_map<CellIndex, CellIndex>> from_x;
  CellIndex edge = 0;     // f in X_1

  CellIndex lift(int k, CellIndex x_cell) const;  // throws if not in the fibre
};

IntervalOf interval_of(const TruncSSet& X, CellIndex f);

// s_{n+1} s_0 lambda, as a cell of I (which must be the interval of long(lambda))
CellIndex phi_lift(const TruncSSet& X, const IntervalOf& I, int n, CellIndex lambda, bool scan = true);
// et_{n+1} eb_n lambda in C_{n+2}
CellIndex eta_lift(const Interval& C, int n, CellIndex lambda, bool scan = true);

// vertex j of an n-cell of C equals bot / top
bool stretched_cell(const Interval& C, int n, CellIndex c);

AxiomReport is_culf(const SimpMap& F);

struct StretchVerdict {
  bool weak = false;    // bot, top, varpi preserved
  bool strong = false;  // plus eb/et equivariance
  bool pass = false;
  bool readings_disagree() const { return weak != strong; }
};
StretchVerdict is_stretched(const SimpMap& F, const Interval& C, const Interval& D, bool relaxed = false);

struct WResult {
  IntervalOf target;
  SimpMap W;
  AxiomReport report{"W"};
};
WResult W_map(const Interval& C);

struct TransportResult {
  IntervalOf source, target;
  SimpMap T;
  AxiomReport report{"culf_transport"};
};
TransportResult culf_transport(const SimpMap& F, CellIndex f);

struct Factorization {
  IntervalOf middle;
  SimpMap S;
  SimpMap Mpart;
  AxiomReport report{"factorize"};
};
Factorization factorize(const SimpMap& F, const Interval& C);

struct FillResult {
  SimpMap L;
  std::size_t scan_fillers = 0;
  bool scan_agrees = false;
  AxiomReport report{"fill_square"};
};
// S: E -> E', G: E -> C, F: C -> D (CULF), H: E' -> D
FillResult fill_square(const Interval& E, const Interval& Ep, const Interval& C, const SimpMap& S, const SimpMap& G,
                       const SimpMap& F, const SimpMap& H, bool scan = true);

bool same_map(const SimpMap& A, const SimpMap& B);  // on common degrees

json to_json(const Interval& C);
Interval interval_from_json(const json& j);
json map_to_json(const SimpMap& F);
// components given by name; missing higher degrees are filled by spines
SimpMap map_from_json(const json& j, const TruncSSet& A, const TruncSSet& B);

}  // namespace dcmp
