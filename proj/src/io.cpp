#include "dcmp/io.hpp"

#include <fstream>
#include <sstream>

namespace dcmp {

namespace {

std::string key(int k, int i) { return std::to_string(k) + "," + std::to_string(i); }

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw InputError(std::string("missing field '") + name + "'");
  return j.at(name);
}

}  // namespace

json to_json(const TruncSSet& X) {
  json j;
  j["dim"] = X.dim();
  json cells = json::array();
  for (int k = 0; k <= X.dim(); ++k) cells.push_back(X.names(k));
  j["cells"] = cells;
  json face = json::object();
  json degen = json::object();
  for (int k = 0; k <= X.dim(); ++k) {
    for (int i = 0; i <= k; ++i) {
      if (k >= 1) {
        json t = json::object();
        for (CellIndex c = 0; c < static_cast<CellIndex>(X.size(k)); ++c)
          t[X.name(k, c)] = X.name(k - 1, X.face(k, i, c));
        face[key(k, i)] = t;
      }
      if (k < X.dim()) {
        json t = json::object();
        for (CellIndex c = 0; c < static_cast<CellIndex>(X.size(k)); ++c)
          t[X.name(k, c)] = X.name(k + 1, X.degen(k, i, c));
        degen[key(k, i)] = t;
      }
    }
  }
  j["face"] = face;
  j["degen"] = degen;
  return j;
}

TruncSSet sset_from_json(const json& j) {
  try {
    const json& jd = field(j, "dim");
    if (!jd.is_number_integer() || jd.get<int>() < 0) throw InputError("'dim' must be a non-negative integer");
    int N = jd.get<int>();
    const json& cells = field(j, "cells");
    if (!cells.is_array() || static_cast<int>(cells.size()) != N + 1)
      throw InputError("'cells' must have dim+1 entries");
    SSetBuilder b(N);
    for (int k = 0; k <= N; ++k) {
      if (!cells[k].is_array()) throw InputError("'cells' entries must be arrays");
      for (const auto& id : cells[k]) b.add(k, id.get<std::string>());
    }
    const json& face = field(j, "face");
    const json& degen = field(j, "degen");
    for (int k = 0; k <= N; ++k)
      for (int i = 0; i <= k; ++i) {
        if (k >= 1) {
          if (!face.contains(key(k, i))) throw InputError("missing face key '" + key(k, i) + "'");
          for (const auto& [c, t] : face.at(key(k, i)).items()) b.set_face(k, i, c, t.get<std::string>());
        }
        if (k < N) {
          if (!degen.contains(key(k, i))) throw InputError("missing degen key '" + key(k, i) + "'");
          for (const auto& [c, t] : degen.at(key(k, i)).items()) b.set_degen(k, i, c, t.get<std::string>());
        }
      }
    return b.build();
  } catch (const json::exception& e) {
    throw InputError(std::string("schema error: ") + e.what());
  }
}

json to_json(const AxiomReport& r) {
  json w = json::array();
  for (const auto& x : r.witnesses) w.push_back({{"square", x.square}, {"detail", x.detail}});
  return {{"axiom", r.axiom},
          {"verdict", r.pass ? "pass" : "fail"},
          {"maxDegreeChecked", r.max_degree_checked},
          {"witnesses", w}};
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("'" + path + "': " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

TruncSSet load_sset(const std::string& path) {
  TruncSSet X = sset_from_json(read_json_file(path));
  AxiomReport r = validate_simplicial(X);
  if (!r.pass) throw InputError("'" + path + "' is not simplicial: " + r.summary());
  return X;
}

void save_sset(const TruncSSet& X, const std::string& path) { write_text_file(path, dump_canonical(to_json(X))); }

}  // namespace dcmp
