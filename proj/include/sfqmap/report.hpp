//
// sfqmap -- flat key/value run report
//

#pragma once

#include "sfqmap/mapped_network.hpp"

#include <map>
#include <string>

namespace sfqmap {

// Canonical form: one "key value" line per field, in a fixed order:
// gates, dffs, splitters, depth, worst_stage_delay, psd, runtime_seconds,
// iterations. An optional prefix (e.g. "phase1_") scopes the keys when two
// records share a file.
std::string write_report(const MapStats &stats, const std::string &key_prefix = "");

// Reads "key value" lines back into a map; ignores blank lines.
std::map<std::string, std::string> parse_report(const std::string &text);

} // namespace sfqmap
