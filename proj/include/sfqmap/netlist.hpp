//
// sfqmap -- BLIF subset reader and cover-form netlist
//

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sfqmap {

// Error with source position, thrown by the text readers.
struct parse_error : std::runtime_error {
	int line;
	int column;

	parse_error(const std::string &msg, int line = 0, int column = 0)
		: std::runtime_error(msg +
			  (line ? " (line " + std::to_string(line) +
					", column " + std::to_string(column) + ")"
				: std::string())),
		  line(line), column(column)
	{
	}
};

// One single-output .names block: a cover of cubes over the named inputs.
// Row i is cube_rows[i], a string over {'0','1','-'} of length inputs.size().
// output_value is the (single) output-plane literal shared by all rows:
// true for an on-set cover, false for an off-set cover.
struct CoverTable {
	std::string output;
	std::vector<std::string> inputs;
	std::vector<std::string> cube_rows;
	bool output_value = true;

	// Cover semantics: a row matches when every non-'-' literal equals the
	// corresponding input bit. On-set: f = OR of rows; off-set: complement.
	bool eval(const std::vector<bool> &input_values) const;
};

struct RawNetlist {
	std::string model_name;
	std::vector<std::string> inputs;
	std::vector<std::string> outputs;
	std::vector<CoverTable> tables;

	// Evaluates all tables in dependency order; `pattern` maps primary
	// inputs positionally. Returns primary output values positionally.
	std::vector<bool> eval(const std::vector<bool> &pattern) const;

	// Table evaluation order such that every table's inputs are defined
	// before it; throws on cycles.
	std::vector<int> topo_table_order() const;
};

// Parses the supported BLIF subset: .model/.inputs/.outputs/.names/.end,
// single-output covers, '\' line continuation, '#' comments. Rejects
// .latch (sequential input), cycles, undefined nets and duplicate drivers.
RawNetlist parse_blif(const std::string &text);

} // namespace sfqmap
