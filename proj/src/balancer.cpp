#include "sfqmap/balancer.hpp"

#include <algorithm>
#include <cassert>

namespace sfqmap {

int64_t balance_cost(const std::vector<int> &levels)
{
	assert(!levels.empty());
	int max = *std::max_element(levels.begin(), levels.end());
	int64_t sum = 0;
	for (int l : levels)
		sum += max - l;
	return sum;
}

namespace {

// Copies `net` cell by cell, letting `pin_hook` rewrite each fanin net and
// `po_hook` each output net in the new network's id space.
template <typename PinHook, typename PoHook>
MappedNetwork rebuild(const MappedNetwork &net, PinHook pin_hook, PoHook po_hook)
{
	MappedNetwork out;
	out.lib = net.lib;
	std::vector<int> net_map(net.nets.size(), -1);
	for (size_t i = 0; i < net.pi_names.size(); i++)
		net_map[net.pi_nets[i]] = out.add_pi(net.pi_names[i]);

	for (size_t c = 0; c < net.cells.size(); c++) {
		const MappedNetwork::Cell &cell = net.cells[c];
		std::vector<int> fanins;
		fanins.reserve(cell.fanins.size());
		for (size_t pin = 0; pin < cell.fanins.size(); pin++)
			fanins.push_back(pin_hook(out, (int)c, (int)pin,
					net_map[cell.fanins[pin]]));
		net_map[cell.out_net] = out.add_cell(cell.kind, cell.gate, std::move(fanins));
	}
	for (const MappedNetwork::Output &o : net.outputs)
		out.outputs.push_back({o.name, po_hook(out, net_map[o.net])});
	return out;
}

int dff_chain(MappedNetwork &net, int from_net, int count)
{
	for (int i = 0; i < count; i++)
		from_net = net.add_cell(CellKind::DFF, -1, {from_net});
	return from_net;
}

} // namespace

MappedNetwork insert_dffs(const MappedNetwork &net, bool balance_outputs)
{
	LevelMap lm = compute_levels(net);

	MappedNetwork out = rebuild(
			net,
			[&](MappedNetwork &b, int cell, int pin, int new_net) {
				const MappedNetwork::Cell &c = net.cells[cell];
				if (!net.cell_is_clocked(c) || c.fanins.size() < 2)
					return new_net;
				int max_level = 0;
				for (int f : c.fanins)
					max_level = std::max(max_level, lm.net_level[f]);
				int gap = max_level - lm.net_level[c.fanins[pin]];
				return dff_chain(b, new_net, gap);
			},
			[&](MappedNetwork &, int new_net) { return new_net; });

	if (balance_outputs) {
		LevelMap out_lm = compute_levels(out);
		int target = 0;
		for (const MappedNetwork::Output &o : out.outputs)
			target = std::max(target, out_lm.net_level[o.net]);
		for (MappedNetwork::Output &o : out.outputs)
			o.net = dff_chain(out, o.net, target - out_lm.net_level[o.net]);
	}

	out.balanced = true;
	return out;
}

MappedNetwork insert_splitters(const MappedNetwork &net)
{
	// Work on explicit sink lists of the balanced network, then re-drive
	// each multi-sink net through a balanced binary tree. Rebuilding cell
	// by cell keeps topological order: a net's tree is created right after
	// its driver, before any consumer.
	MappedNetwork out;
	out.lib = net.lib;
	auto sinks = net.sink_lists();

	// pin_source[c][p] / po_source[o]: net to use in the new network.
	std::vector<std::vector<int>> pin_source(net.cells.size());
	for (size_t c = 0; c < net.cells.size(); c++)
		pin_source[c].assign(net.cells[c].fanins.size(), -1);
	std::vector<int> po_source(net.outputs.size(), -1);

	// Builds a balanced splitter tree over sinks[old_net] below new_net.
	// `cap` is how many connections the source net may carry directly:
	// 1 for ordinary drivers, 2 once we are on a splitter output. A group
	// larger than the cap goes through a fresh splitter, halved balanced.
	auto distribute = [&](int old_net, int new_net, int cap) {
		const auto &list = sinks[old_net];
		auto wire = [&](int src, size_t i) {
			const MappedNetwork::Sink &s = list[i];
			if (s.cell == MappedNetwork::kNoCell)
				po_source[s.pin] = src;
			else
				pin_source[s.cell][s.pin] = src;
		};
		auto assign = [&](auto &&self, int src, size_t lo, size_t hi, int cap) -> void {
			size_t n = hi - lo;
			if (n == 0)
				return;
			if ((int)n <= cap) {
				for (size_t i = lo; i < hi; i++)
					wire(src, i);
				return;
			}
			if (cap == 1) {
				int split = out.add_cell(CellKind::SPLITTER, -1, {src});
				self(self, split, lo, hi, 2);
				return;
			}
			size_t mid = lo + (n + 1) / 2;
			for (auto [a, b] : {std::pair{lo, mid}, std::pair{mid, hi}}) {
				if (b - a == 1) {
					wire(src, a);
				} else {
					int split = out.add_cell(CellKind::SPLITTER, -1, {src});
					self(self, split, a, b, 2);
				}
			}
		};
		assign(assign, new_net, 0, list.size(), cap);
	};

	for (size_t i = 0; i < net.pi_names.size(); i++) {
		int new_net = out.add_pi(net.pi_names[i]);
		distribute(net.pi_nets[i], new_net, 1);
	}
	for (size_t c = 0; c < net.cells.size(); c++) {
		const MappedNetwork::Cell &cell = net.cells[c];
		int new_net = out.add_cell(cell.kind, cell.gate, pin_source[c]);
		distribute(cell.out_net, new_net, cell.kind == CellKind::SPLITTER ? 2 : 1);
	}
	for (size_t o = 0; o < net.outputs.size(); o++)
		out.outputs.push_back({net.outputs[o].name, po_source[o]});

	out.balanced = net.balanced;
	out.splitter_legal = true;
	return out;
}

std::string BalanceViolation::describe(const MappedNetwork &net) const
{
	if (cell < 0)
		return "primary outputs differ by " + std::to_string(gap) + " levels";
	const MappedNetwork::Cell &c = net.cells[cell];
	std::string kind = c.kind == CellKind::DFF ? "dff"
			: c.kind == CellKind::SPLITTER   ? "splitter"
											 : net.lib->gates[c.gate].name;
	return "cell " + std::to_string(cell) + " (" + kind + ") fanin levels differ by " +
			std::to_string(gap);
}

std::vector<BalanceViolation> check_balanced(const MappedNetwork &net, bool check_outputs)
{
	LevelMap lm = compute_levels(net);
	std::vector<BalanceViolation> violations;
	for (size_t c = 0; c < net.cells.size(); c++) {
		const MappedNetwork::Cell &cell = net.cells[c];
		if (!net.cell_is_clocked(cell) || cell.fanins.size() < 2)
			continue;
		int lo = lm.net_level[cell.fanins[0]], hi = lo;
		for (int f : cell.fanins) {
			lo = std::min(lo, lm.net_level[f]);
			hi = std::max(hi, lm.net_level[f]);
		}
		if (lo != hi)
			violations.push_back({(int)c, hi - lo});
	}
	if (check_outputs && !net.outputs.empty()) {
		int lo = lm.net_level[net.outputs[0].net], hi = lo;
		for (const MappedNetwork::Output &o : net.outputs) {
			lo = std::min(lo, lm.net_level[o.net]);
			hi = std::max(hi, lm.net_level[o.net]);
		}
		if (lo != hi)
			violations.push_back({-1, hi - lo});
	}
	return violations;
}

std::vector<int> check_splitter_legal(const MappedNetwork &net)
{
	auto counts = net.fanout_counts();
	std::vector<int> bad;
	for (size_t n = 0; n < net.nets.size(); n++) {
		int driver = net.nets[n].driver_cell;
		bool is_splitter = driver != MappedNetwork::kNoCell &&
				net.cells[driver].kind == CellKind::SPLITTER;
		int limit = is_splitter ? 2 : 1;
		if (counts[n] > limit)
			bad.push_back((int)n);
	}
	return bad;
}

} // namespace sfqmap
