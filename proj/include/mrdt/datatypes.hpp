#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mrdt/core.hpp"

namespace mrdt {

// Builds the datatype catalog. `alphabet` is the pool of element symbols used
// to instantiate parameterized operations (set elements, map keys, register
// values); pass {} for the default {"a","b","c","d","e"}.
std::vector<MrdtSpec> make_catalog(const std::vector<std::string>& alphabet = {});

std::optional<MrdtSpec> find_datatype(const std::string& name,
                                      const std::vector<std::string>& alphabet = {});

std::vector<std::string> catalog_names();

// Datatypes exercised in three-way (MRDT) mode by the default suites.
std::vector<std::string> mrdt_roster();

// Datatypes exercised in two-way (state-based CRDT) mode.
std::vector<std::string> crdt_roster();

}  // namespace mrdt
