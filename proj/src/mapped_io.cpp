#include "sfqmap/mapped_io.hpp"

#include "blif_tokens.hpp"
#include "sfqmap/balancer.hpp"
#include "sfqmap/dp_mapper.hpp"
#include "sfqmap/netlist.hpp"

#include <map>
#include <set>
#include <sstream>

namespace sfqmap {

std::string write_mapped_blif(const MappedNetwork &net, const std::string &model_name)
{
	if (!net.balanced || !net.splitter_legal)
		throw map_error("unverified network: balance and legalize before writing");

	std::set<std::string> reserved(net.pi_names.begin(), net.pi_names.end());
	for (const MappedNetwork::Output &o : net.outputs)
		reserved.insert(o.name);

	// Net names: PI names stay; a cell net takes the name of the first
	// primary output it drives, otherwise a generated one.
	std::vector<std::string> net_name(net.nets.size());
	for (size_t i = 0; i < net.pi_nets.size(); i++)
		net_name[net.pi_nets[i]] = net.pi_names[i];
	for (const MappedNetwork::Output &o : net.outputs) {
		if (net.nets[o.net].pi_index < 0 && net_name[o.net].empty())
			net_name[o.net] = o.name;
	}
	int counter = 0;
	for (const MappedNetwork::Cell &c : net.cells) {
		if (!net_name[c.out_net].empty())
			continue;
		std::string name;
		do {
			name = "n" + std::to_string(counter++);
		} while (reserved.count(name));
		net_name[c.out_net] = name;
	}

	std::ostringstream out;
	out << ".model " << model_name << "\n";
	out << ".inputs";
	for (const std::string &name : net.pi_names)
		out << " " << name;
	out << "\n.outputs";
	for (const MappedNetwork::Output &o : net.outputs)
		out << " " << o.name;
	out << "\n";

	for (const MappedNetwork::Cell &c : net.cells) {
		const LibGate &gate = c.kind == CellKind::DFF ? net.lib->dff
				: c.kind == CellKind::SPLITTER       ? net.lib->splitter
													 : net.lib->gates[c.gate];
		out << ".gate " << gate.name;
		for (size_t pin = 0; pin < c.fanins.size(); pin++)
			out << " " << gate.pin_names[pin] << "=" << net_name[c.fanins[pin]];
		out << " " << gate.output_name << "=" << net_name[c.out_net] << "\n";
	}

	for (const MappedNetwork::Output &o : net.outputs)
		if (net_name[o.net] != o.name)
			out << ".names " << net_name[o.net] << " " << o.name << "\n1 1\n";

	out << ".end\n";
	return out.str();
}

MappedNetwork parse_mapped_blif(const std::string &text, const CellLibrary &lib,
		std::string *model_name)
{
	using detail::Token;
	MappedNetwork net;
	net.lib = &lib;

	std::map<std::string, int> net_by_name;
	std::vector<std::string> output_order;
	std::map<std::string, std::string> output_alias; // po name -> source net name
	bool saw_end = false;

	auto lines = detail::tokenize_blif_lines(text);
	size_t li = 0;
	while (li < lines.size()) {
		auto &toks = lines[li];
		const Token &head = toks[0];
		if (saw_end)
			throw parse_error("content after .end", head.line, head.column);

		if (head.text == ".model") {
			if (model_name && toks.size() > 1)
				*model_name = toks[1].text;
			li++;
		} else if (head.text == ".inputs") {
			for (size_t i = 1; i < toks.size(); i++)
				net_by_name[toks[i].text] = net.add_pi(toks[i].text);
			li++;
		} else if (head.text == ".outputs") {
			for (size_t i = 1; i < toks.size(); i++)
				output_order.push_back(toks[i].text);
			li++;
		} else if (head.text == ".gate") {
			if (toks.size() < 3)
				throw parse_error(".gate needs a cell and connections",
						head.line, head.column);
			const LibGate *gate = lib.find(toks[1].text);
			if (!gate)
				throw parse_error("unknown cell '" + toks[1].text + "'",
						toks[1].line, toks[1].column);
			std::map<std::string, std::string> formal_to_net;
			for (size_t i = 2; i < toks.size(); i++) {
				size_t eq = toks[i].text.find('=');
				if (eq == std::string::npos)
					throw parse_error("expected <formal>=<net>",
							toks[i].line, toks[i].column);
				formal_to_net[toks[i].text.substr(0, eq)] =
						toks[i].text.substr(eq + 1);
			}
			std::vector<int> fanins;
			for (const std::string &pin : gate->pin_names) {
				auto it = formal_to_net.find(pin);
				if (it == formal_to_net.end())
					throw parse_error("cell '" + gate->name +
							"' missing pin '" + pin + "'", head.line, head.column);
				auto nit = net_by_name.find(it->second);
				if (nit == net_by_name.end())
					throw parse_error("net '" + it->second +
							"' used before its driver", head.line, head.column);
				fanins.push_back(nit->second);
			}
			auto oit = formal_to_net.find(gate->output_name);
			if (oit == formal_to_net.end())
				throw parse_error("cell '" + gate->name + "' missing output '" +
						gate->output_name + "'", head.line, head.column);
			if (net_by_name.count(oit->second))
				throw parse_error("net '" + oit->second + "' driven more than once",
						head.line, head.column);

			CellKind kind = gate->name == lib.dff.name ? CellKind::DFF
					: gate->name == lib.splitter.name  ? CellKind::SPLITTER
													   : CellKind::LIBGATE;
			int gate_index = -1;
			if (kind == CellKind::LIBGATE)
				for (size_t g = 0; g < lib.gates.size(); g++)
					if (lib.gates[g].name == gate->name)
						gate_index = (int)g;
			net_by_name[oit->second] =
					net.add_cell(kind, gate_index, std::move(fanins));
			li++;
		} else if (head.text == ".names") {
			// Only the writer's identity aliases are allowed here.
			if (toks.size() != 3 || li + 1 >= lines.size() ||
					lines[li + 1].size() != 2 ||
					lines[li + 1][0].text != "1" || lines[li + 1][1].text != "1")
				throw parse_error("mapped files carry only .gate lines and "
						"identity .names aliases", head.line, head.column);
			output_alias[toks[2].text] = toks[1].text;
			li += 2;
		} else if (head.text == ".end") {
			saw_end = true;
			li++;
		} else {
			throw parse_error("unsupported directive '" + head.text +
					"' in mapped file", head.line, head.column);
		}
	}
	if (!saw_end)
		throw parse_error("missing .end");

	for (const std::string &name : output_order) {
		std::string source = name;
		auto ait = output_alias.find(name);
		if (ait != output_alias.end())
			source = ait->second;
		auto nit = net_by_name.find(source);
		if (nit == net_by_name.end())
			throw parse_error("undefined output net '" + source + "'");
		net.outputs.push_back({name, nit->second});
	}

	net.balanced = check_balanced(net).empty();
	net.splitter_legal = check_splitter_legal(net).empty();
	return net;
}

} // namespace sfqmap
