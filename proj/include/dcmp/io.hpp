#pragma once

#include <string>

#include "dcmp/sset.hpp"
#include "json.hpp"

namespace dcmp {

using json = nlohmann::json;

json to_json(const TruncSSet& X);
// schema errors raise InputError; tables are not validated here
TruncSSet sset_from_json(const json& j);

json to_json(const AxiomReport& r);

std::string dump_canonical(const json& j);  // two-space indent, trailing newline

// load runs validate_simplicial and throws InputError with the witness on failure
TruncSSet load_sset(const std::string& path);
void save_sset(const TruncSSet& X, const std::string& path);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace dcmp
