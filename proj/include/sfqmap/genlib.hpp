//
// sfqmap -- genlib subset reader and cell library
//

#pragma once

#include "sfqmap/truth_table.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sfqmap {

struct LibGate {
	std::string name;
	double area = 0.0;
	std::string output_name;
	std::vector<std::string> pin_names; // in pin-declaration order
	TruthTable function;                // over pin_names
	double delay = 0.0;                 // max over pins of max(rise, fall block)

	int fanin_count() const { return (int)pin_names.size(); }
	bool is_constant() const { return pin_names.empty(); }
};

// Parsed library plus the built-in DFF and splitter cells. The built-ins
// are identity cells; SFQ libraries in genlib form do not carry them.
struct CellLibrary {
	std::vector<LibGate> gates;
	LibGate dff;
	LibGate splitter;
	bool inverter_present = false;
	std::vector<std::string> warnings;

	int max_fanin() const;
	// First gate index computing !a, or -1.
	int inverter_index() const;
	// Gate index computing constant `value`, or -1.
	int constant_index(bool value) const;
	const LibGate *find(const std::string &name) const;
};

struct BuiltinParams {
	double dff_delay = 1.0;
	double dff_area = 1.0;
	double splitter_delay = 1.0;
	double splitter_area = 1.0;
};

// Parses `GATE <name> <area> <out>=<expr>;` records followed by PIN lines.
// Expressions: identifiers, '!'/postfix '\'' negation, '*' or juxtaposition
// for AND, '+' for OR, parentheses, CONST0/CONST1. Gates with more than
// 6 inputs are skipped with a warning. Throws parse_error on bad syntax
// or an empty library.
CellLibrary parse_genlib(const std::string &text, const BuiltinParams &builtins = {});

} // namespace sfqmap
