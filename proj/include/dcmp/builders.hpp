#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dcmp/io.hpp"
#include "dcmp/sset.hpp"

namespace dcmp {

struct FinPoset {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> leq;  // any generating relation; closed on use
};

struct FinCategory {
  struct Arrow {
    std::string id, src, tgt;
  };
  std::vector<std::string> objects;
  std::vector<Arrow> morphisms;  // identities may be listed or left implicit
  std::vector<std::pair<std::string, std::string>> identities;  // object -> arrow id
  // (f, g, h): first f then g equals h
  std::vector<std::tuple<std::string, std::string, std::string>> composition;
};

struct MonoidPresentation {
  std::vector<std::pair<std::string, int>> generators;  // name, length
  std::vector<std::pair<std::string, std::string>> commute;
  int max_length = 0;
};

// plane trees; a forest is an ordered list of trees
struct PlaneTree {
  std::vector<PlaneTree> kids;
  friend bool operator==(const PlaneTree&, const PlaneTree&) = default;
};
using PlaneForest = std::vector<PlaneTree>;

TruncSSet poset_nerve(const FinPoset& P, int N);
TruncSSet category_nerve(const FinCategory& C, int N);
TruncSSet monoid_nerve(const MonoidPresentation& M, int N);
TruncSSet rpt_build(int max_nodes, int N);
// the closure of the given forests under taking crowns and root parts of cuts
TruncSSet rpt_from_forests(const std::vector<PlaneForest>& forests, int N);

FinPoset poset_from_json(const json& j);
FinCategory category_from_json(const json& j);
MonoidPresentation monoid_from_json(const json& j);
PlaneForest parse_forest(const std::string& text);
std::string render_forest(const PlaneForest& F);
std::vector<PlaneForest> read_forest_file(const std::string& path);
std::vector<PlaneForest> all_forests(int nodes);

// name of the poset-nerve cell on a weakly increasing chain
std::string chain_id(const std::vector<std::string>& chain);

}  // namespace dcmp
