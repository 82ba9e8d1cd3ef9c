#include "sfqmap/netlist.hpp"

#include "blif_tokens.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace sfqmap {

bool CoverTable::eval(const std::vector<bool> &input_values) const
{
	if (cube_rows.empty())
		return false; // empty cover is constant 0
	for (const std::string &row : cube_rows) {
		bool match = true;
		for (size_t i = 0; i < row.size() && match; i++) {
			if (row[i] == '-')
				continue;
			if ((row[i] == '1') != input_values[i])
				match = false;
		}
		if (match)
			return output_value;
	}
	return !output_value;
}

std::vector<int> RawNetlist::topo_table_order() const
{
	std::map<std::string, int> producer;
	for (size_t i = 0; i < tables.size(); i++)
		producer[tables[i].output] = (int)i;

	std::set<std::string> pi_set(inputs.begin(), inputs.end());
	std::vector<int> state(tables.size(), 0); // 0 new, 1 open, 2 done
	std::vector<int> order;
	order.reserve(tables.size());

	// Iterative DFS so deep netlists don't overflow the stack.
	for (size_t root = 0; root < tables.size(); root++) {
		if (state[root])
			continue;
		std::vector<std::pair<int, size_t>> stack{{(int)root, 0}};
		state[root] = 1;
		while (!stack.empty()) {
			auto &[t, next_in] = stack.back();
			if (next_in == tables[t].inputs.size()) {
				state[t] = 2;
				order.push_back(t);
				stack.pop_back();
				continue;
			}
			const std::string &in = tables[t].inputs[next_in++];
			if (pi_set.count(in))
				continue;
			auto it = producer.find(in);
			if (it == producer.end())
				throw parse_error("undefined net '" + in + "'");
			int dep = it->second;
			if (state[dep] == 1)
				throw parse_error("cyclic dependency through net '" + in + "'");
			if (state[dep] == 0) {
				state[dep] = 1;
				stack.push_back({dep, 0});
			}
		}
	}
	return order;
}

std::vector<bool> RawNetlist::eval(const std::vector<bool> &pattern) const
{
	std::map<std::string, bool> values;
	for (size_t i = 0; i < inputs.size(); i++)
		values[inputs[i]] = pattern[i];

	for (int t : topo_table_order()) {
		const CoverTable &table = tables[t];
		std::vector<bool> in_vals;
		in_vals.reserve(table.inputs.size());
		for (const std::string &in : table.inputs)
			in_vals.push_back(values.at(in));
		values[table.output] = table.eval(in_vals);
	}

	std::vector<bool> out;
	out.reserve(outputs.size());
	for (const std::string &o : outputs) {
		auto it = values.find(o);
		if (it == values.end())
			throw parse_error("undefined net '" + o + "'");
		out.push_back(it->second);
	}
	return out;
}

RawNetlist parse_blif(const std::string &text)
{
	using detail::Token;
	RawNetlist net;
	bool saw_model = false, saw_end = false;
	CoverTable *open_table = nullptr;
	int output_plane = -1; // -1 until first row of the open table

	auto lines = detail::tokenize_blif_lines(text);
	for (auto &toks : lines) {
		const Token &head = toks[0];
		if (saw_end)
			throw parse_error("content after .end", head.line, head.column);

		if (head.text == ".model") {
			if (saw_model)
				throw parse_error("duplicate .model", head.line, head.column);
			saw_model = true;
			net.model_name = toks.size() > 1 ? toks[1].text : "";
			open_table = nullptr;
		} else if (head.text == ".inputs") {
			for (size_t i = 1; i < toks.size(); i++)
				net.inputs.push_back(toks[i].text);
			open_table = nullptr;
		} else if (head.text == ".outputs") {
			for (size_t i = 1; i < toks.size(); i++)
				net.outputs.push_back(toks[i].text);
			open_table = nullptr;
		} else if (head.text == ".names") {
			if (toks.size() < 2)
				throw parse_error(".names needs at least an output", head.line, head.column);
			CoverTable table;
			table.output = toks.back().text;
			for (size_t i = 1; i + 1 < toks.size(); i++)
				table.inputs.push_back(toks[i].text);
			net.tables.push_back(std::move(table));
			open_table = &net.tables.back();
			output_plane = -1;
		} else if (head.text == ".latch") {
			throw parse_error(".latch unsupported: input must be combinational",
					head.line, head.column);
		} else if (head.text == ".end") {
			saw_end = true;
			open_table = nullptr;
		} else if (head.text[0] == '.') {
			throw parse_error("unsupported directive '" + head.text + "'",
					head.line, head.column);
		} else {
			// Cover row of the open .names block.
			if (!open_table)
				throw parse_error("cover row outside .names", head.line, head.column);
			std::string cube;
			std::string out;
			if (open_table->inputs.empty()) {
				// Constant table: single output literal per row.
				if (toks.size() != 1)
					throw parse_error("constant cover row must be a single literal",
							head.line, head.column);
				out = toks[0].text;
			} else {
				if (toks.size() != 2)
					throw parse_error("cover row must be '<cube> <output>'",
							head.line, head.column);
				cube = toks[0].text;
				out = toks[1].text;
			}
			if (cube.size() != open_table->inputs.size())
				throw parse_error("cube width does not match input count",
						head.line, head.column);
			for (size_t i = 0; i < cube.size(); i++)
				if (cube[i] != '0' && cube[i] != '1' && cube[i] != '-')
					throw parse_error("bad cube literal '" + std::string(1, cube[i]) + "'",
							head.line, head.column + (int)i);
			if (out != "0" && out != "1")
				throw parse_error("bad output literal '" + out + "'",
						toks.back().line, toks.back().column);
			int plane = out == "1" ? 1 : 0;
			if (output_plane == -1)
				output_plane = plane;
			else if (output_plane != plane)
				throw parse_error("mixed output plane in one cover",
						toks.back().line, toks.back().column);
			open_table->output_value = plane == 1;
			open_table->cube_rows.push_back(cube);
		}
	}

	if (!saw_model)
		throw parse_error("missing .model");
	if (!saw_end)
		throw parse_error("missing .end");

	std::set<std::string> defined(net.inputs.begin(), net.inputs.end());
	for (const CoverTable &t : net.tables) {
		if (defined.count(t.output))
			throw parse_error("net '" + t.output + "' driven more than once");
		defined.insert(t.output);
	}
	for (const CoverTable &t : net.tables)
		for (const std::string &in : t.inputs)
			if (!defined.count(in))
				throw parse_error("undefined net '" + in + "'");
	for (const std::string &o : net.outputs)
		if (!defined.count(o))
			throw parse_error("undefined net '" + o + "'");

	net.topo_table_order(); // cycle check

	return net;
}

} // namespace sfqmap
