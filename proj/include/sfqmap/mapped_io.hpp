//
// sfqmap -- mapped network emission and re-reading (.gate form)
//

#pragma once

#include "sfqmap/mapped_network.hpp"

#include <string>

namespace sfqmap {

// Emits one .gate line per cell in topological emission order with
// generated internal net names. Primary-output nets that carry a
// different name (a wire from a primary input, or a second output on one
// net) get a `.names <src> <po> / 1 1` alias. Requires a balanced,
// splitter-legal network; throws map_error otherwise. Re-parsing the text
// and writing again is byte-identical.
std::string write_mapped_blif(const MappedNetwork &net, const std::string &model_name);

// Reads a mapped file back against the same library: .gate lines become
// cells (built-in dff/splitter names resolve to their kinds), identity
// .names blocks are output aliases. Lines must come driver-first.
MappedNetwork parse_mapped_blif(const std::string &text, const CellLibrary &lib,
		std::string *model_name = nullptr);

} // namespace sfqmap
