#include "sfqmap/mapped_network.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace sfqmap {

std::vector<int> MappedNetwork::fanout_counts() const
{
	std::vector<int> counts(nets.size(), 0);
	for (const Cell &c : cells)
		for (int f : c.fanins)
			counts[f]++;
	for (const Output &o : outputs)
		counts[o.net]++;
	return counts;
}

std::vector<std::vector<MappedNetwork::Sink>> MappedNetwork::sink_lists() const
{
	std::vector<std::vector<Sink>> sinks(nets.size());
	for (size_t c = 0; c < cells.size(); c++)
		for (size_t pin = 0; pin < cells[c].fanins.size(); pin++)
			sinks[cells[c].fanins[pin]].push_back({(int)c, (int)pin});
	for (size_t o = 0; o < outputs.size(); o++)
		sinks[outputs[o].net].push_back({kNoCell, (int)o});
	return sinks;
}

void MappedNetwork::count_cells(int64_t &gates, int64_t &dffs, int64_t &splitters) const
{
	gates = dffs = splitters = 0;
	for (const Cell &c : cells) {
		switch (c.kind) {
		case CellKind::LIBGATE:
			gates++;
			break;
		case CellKind::DFF:
			dffs++;
			break;
		case CellKind::SPLITTER:
			splitters++;
			break;
		}
	}
}

std::vector<uint64_t> MappedNetwork::eval_words(const std::vector<uint64_t> &pattern_words) const
{
	assert(pattern_words.size() == pi_names.size());
	std::vector<uint64_t> value(nets.size(), 0);
	for (size_t i = 0; i < pi_nets.size(); i++)
		value[pi_nets[i]] = pattern_words[i];

	for (const Cell &c : cells) {
		uint64_t v;
		switch (c.kind) {
		case CellKind::DFF:
		case CellKind::SPLITTER:
			v = value[c.fanins[0]];
			break;
		default: {
			const LibGate &gate = lib->gates[c.gate];
			if (gate.is_constant()) {
				v = gate.function.get(0) ? ~0ull : 0;
				break;
			}
			v = 0;
			// Evaluate bit-parallel over assignments of the gate function.
			for (uint32_t a = 0; a < (1u << gate.fanin_count()); a++) {
				if (!gate.function.get(a))
					continue;
				uint64_t term = ~0ull;
				for (int j = 0; j < gate.fanin_count(); j++) {
					uint64_t in = value[c.fanins[j]];
					term &= ((a >> j) & 1u) ? in : ~in;
				}
				v |= term;
			}
			break;
		}
		}
		value[c.out_net] = v;
	}

	std::vector<uint64_t> out;
	out.reserve(outputs.size());
	for (const Output &o : outputs)
		out.push_back(value[o.net]);
	return out;
}

std::vector<bool> MappedNetwork::eval(const std::vector<bool> &pattern) const
{
	std::vector<uint64_t> words(pattern.size());
	for (size_t i = 0; i < pattern.size(); i++)
		words[i] = pattern[i] ? ~0ull : 0;
	auto out_words = eval_words(words);
	std::vector<bool> out(out_words.size());
	for (size_t i = 0; i < out_words.size(); i++)
		out[i] = out_words[i] & 1;
	return out;
}

MappedNetwork MappedNetwork::strip_pipeline() const
{
	MappedNetwork out;
	out.lib = lib;

	// Resolve each net to its logical source through DFF/splitter chains.
	std::vector<int> source(nets.size(), -1);
	for (size_t i = 0; i < nets.size(); i++)
		if (nets[i].pi_index >= 0)
			source[i] = (int)i;
	for (const Cell &c : cells)
		if (c.kind == CellKind::LIBGATE)
			source[c.out_net] = c.out_net;
	for (const Cell &c : cells)
		if (c.kind != CellKind::LIBGATE) {
			// chains are topologically ordered, so one pass resolves
			source[c.out_net] = source[c.fanins[0]];
		}

	std::map<int, int> net_map; // old source net -> new net
	for (const std::string &name : pi_names)
		out.add_pi(name);
	for (size_t i = 0; i < pi_nets.size(); i++)
		net_map[pi_nets[i]] = out.pi_nets[i];

	for (const Cell &c : cells) {
		if (c.kind != CellKind::LIBGATE)
			continue;
		std::vector<int> fanins;
		fanins.reserve(c.fanins.size());
		for (int f : c.fanins)
			fanins.push_back(net_map.at(source[f]));
		net_map[c.out_net] = out.add_cell(CellKind::LIBGATE, c.gate, std::move(fanins));
	}
	for (const Output &o : outputs)
		out.outputs.push_back({o.name, net_map.at(source[o.net])});
	return out;
}

void MappedNetwork::check_acyclic_topological() const
{
	for (size_t c = 0; c < cells.size(); c++)
		for (int f : cells[c].fanins) {
			int d = nets[f].driver_cell;
			if (d != kNoCell && d >= (int)c)
				throw std::logic_error("mapped network is not in topological order");
		}
}

LevelMap compute_levels(const MappedNetwork &net)
{
	LevelMap lm;
	lm.cell_level.assign(net.cells.size(), 0);
	lm.net_level.assign(net.nets.size(), 0);

	for (size_t c = 0; c < net.cells.size(); c++) {
		const MappedNetwork::Cell &cell = net.cells[c];
		int in_max = 0;
		for (int f : cell.fanins)
			in_max = std::max(in_max, lm.net_level[f]);
		int level;
		if (cell.kind == CellKind::SPLITTER)
			level = in_max; // asynchronous, no level increment
		else if (cell.fanins.empty())
			level = 0; // constant source cell
		else
			level = in_max + 1;
		lm.cell_level[c] = level;
		lm.net_level[cell.out_net] = level;
	}
	for (const MappedNetwork::Output &o : net.outputs)
		lm.depth = std::max(lm.depth, lm.net_level[o.net]);
	return lm;
}

int splitter_levels_after(const MappedNetwork &net,
		const std::vector<std::vector<MappedNetwork::Sink>> &sinks, int net_id)
{
	int worst = 0;
	for (const MappedNetwork::Sink &s : sinks[net_id]) {
		if (s.cell != MappedNetwork::kNoCell &&
				net.cells[s.cell].kind == CellKind::SPLITTER)
			worst = std::max(worst,
					1 + splitter_levels_after(net, sinks, net.cells[s.cell].out_net));
	}
	return worst;
}

} // namespace sfqmap
