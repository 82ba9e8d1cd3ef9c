#include "sfqmap/peephole.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace sfqmap {

namespace {

int ceil_log2(int n)
{
	int levels = 0;
	while ((1 << levels) < n)
		levels++;
	return levels;
}

// Splitter levels seen by a source net: the materialized chain when
// splitters exist downstream, else the balanced-tree estimate.
int net_splitter_levels(const MappedNetwork &net,
		const std::vector<std::vector<MappedNetwork::Sink>> &sinks, int net_id)
{
	bool has_splitter_sink = false;
	for (const MappedNetwork::Sink &s : sinks[net_id])
		if (s.cell != MappedNetwork::kNoCell &&
				net.cells[s.cell].kind == CellKind::SPLITTER)
			has_splitter_sink = true;
	if (has_splitter_sink)
		return splitter_levels_after(net, sinks, net_id);
	return ceil_log2(std::max<size_t>(sinks[net_id].size(), 1));
}

} // namespace

std::vector<double> all_stage_delays(const MappedNetwork &net,
		const StageDelayModel &model)
{
	auto sinks = net.sink_lists();
	std::vector<double> delays(net.cells.size() + net.pi_nets.size(), 0.0);
	for (size_t c = 0; c < net.cells.size(); c++) {
		const MappedNetwork::Cell &cell = net.cells[c];
		if (cell.kind == CellKind::SPLITTER)
			continue; // charged to the driving stage
		delays[c] = model.stage(net.cell_delay(cell),
				net_splitter_levels(net, sinks, cell.out_net));
	}
	for (size_t i = 0; i < net.pi_nets.size(); i++)
		delays[net.cells.size() + i] =
				model.stage(0.0, net_splitter_levels(net, sinks, net.pi_nets[i]));
	return delays;
}

double stage_delay(const MappedNetwork &net, int cell, const StageDelayModel &model)
{
	auto sinks = net.sink_lists();
	const MappedNetwork::Cell &c = net.cells[cell];
	if (c.kind == CellKind::SPLITTER)
		return 0.0;
	return model.stage(net.cell_delay(c), net_splitter_levels(net, sinks, c.out_net));
}

double worst_stage_delay(const MappedNetwork &net, const StageDelayModel &model)
{
	double worst = 0.0;
	for (double d : all_stage_delays(net, model))
		worst = std::max(worst, d);
	return worst;
}

double psd(const MappedNetwork &net, const StageDelayModel &model)
{
	return worst_stage_delay(net, model) * compute_levels(net).depth;
}

namespace {

struct Evaluation {
	MappedNetwork materialized;
	double psd = 0.0;
	int depth = 0;
};

Evaluation materialize(const MappedNetwork &logical, const PeepholeConfig &cfg,
		const StageDelayModel &model)
{
	Evaluation ev;
	ev.materialized = insert_splitters(insert_dffs(logical, cfg.balance_outputs));
	ev.depth = compute_levels(ev.materialized).depth;
	ev.psd = worst_stage_delay(ev.materialized, model) * ev.depth;
	return ev;
}

// Rebuilds `logical` with cell `target` duplicated into `replicas` copies;
// sink group i moves to replica i. Cell order stays topological because
// replicas are emitted in the target's position.
MappedNetwork duplicate_cell(const MappedNetwork &logical, int target, int replicas,
		const std::vector<std::vector<MappedNetwork::Sink>> &sinks)
{
	const auto &list = sinks[logical.cells[target].out_net];
	int groups = replicas;
	assert(groups >= 2 && groups <= (int)list.size());

	// Contiguous balanced grouping of the (deterministically ordered)
	// sink list.
	std::vector<int> group_of(list.size());
	size_t base = list.size() / groups, extra = list.size() % groups;
	size_t at = 0;
	for (int g = 0; g < groups; g++) {
		size_t len = base + (g < (int)extra ? 1 : 0);
		for (size_t i = 0; i < len; i++)
			group_of[at++] = g;
	}

	MappedNetwork out;
	out.lib = logical.lib;
	std::vector<int> net_map(logical.nets.size(), -1);
	for (size_t i = 0; i < logical.pi_names.size(); i++)
		net_map[logical.pi_nets[i]] = out.add_pi(logical.pi_names[i]);

	std::vector<int> replica_nets;
	for (size_t c = 0; c < logical.cells.size(); c++) {
		const MappedNetwork::Cell &cell = logical.cells[c];
		std::vector<int> fanins;
		fanins.reserve(cell.fanins.size());
		for (int f : cell.fanins)
			fanins.push_back(net_map[f]);
		if ((int)c == target) {
			for (int g = 0; g < groups; g++)
				replica_nets.push_back(
						out.add_cell(cell.kind, cell.gate, fanins));
			net_map[cell.out_net] = replica_nets[0];
		} else {
			net_map[cell.out_net] = out.add_cell(cell.kind, cell.gate,
					std::move(fanins));
		}
	}

	// Sinks of the duplicated net were wired to replica 0 via net_map;
	// move each one onto its group's replica. Consumers sit after the
	// target, so their cell ids shift by the extra replica count.
	for (size_t i = 0; i < list.size(); i++) {
		const MappedNetwork::Sink &s = list[i];
		int nn = replica_nets[group_of[i]];
		if (s.cell == MappedNetwork::kNoCell)
			continue; // outputs are rewired below
		int new_cell = s.cell > target ? s.cell + groups - 1 : s.cell;
		out.cells[new_cell].fanins[s.pin] = nn;
	}
	for (size_t o = 0; o < logical.outputs.size(); o++) {
		int nn = net_map[logical.outputs[o].net];
		for (size_t i = 0; i < list.size(); i++)
			if (list[i].cell == MappedNetwork::kNoCell &&
					list[i].pin == (int)o)
				nn = replica_nets[group_of[i]];
		out.outputs.push_back({logical.outputs[o].name, nn});
	}
	return out;
}

} // namespace

MappedNetwork tune_psd(const MappedNetwork &net, const PeepholeConfig &cfg,
		const StageDelayModel &model, int *iterations_used)
{
	if (iterations_used)
		*iterations_used = 0;
	if (cfg.iterations <= 0)
		return net;

	MappedNetwork logical = net.strip_pipeline();
	Evaluation current = materialize(logical, cfg, model);

	int p = cfg.iterations;
	int fanout_limit = cfg.init_fanout_count;
	int turns = 0;

	while (p > 0 && fanout_limit <= cfg.max_fanout_count) {
		p--;
		turns++;

		// Worst-stage scan on the logical view; ties break toward higher
		// fanout, then lower cell id.
		auto sinks = logical.sink_lists();
		auto delays = all_stage_delays(logical, model);
		int worst = -1;
		double worst_delay = -1.0;
		for (size_t c = 0; c < logical.cells.size(); c++) {
			if (logical.cells[c].kind != CellKind::LIBGATE)
				continue;
			double d = delays[c];
			int fanout = (int)sinks[logical.cells[c].out_net].size();
			if (worst >= 0) {
				int worst_fanout =
						(int)sinks[logical.cells[worst].out_net].size();
				if (d < worst_delay ||
						(d == worst_delay && fanout <= worst_fanout))
					continue;
			}
			worst = (int)c;
			worst_delay = d;
		}

		bool improved = false;
		if (worst >= 0) {
			int s = (int)sinks[logical.cells[worst].out_net].size();
			int replicas = (s + fanout_limit - 1) / fanout_limit;
			replicas = std::min(replicas, s);
			if (replicas >= 2) {
				MappedNetwork moved =
						duplicate_cell(logical, worst, replicas, sinks);
				Evaluation cand = materialize(moved, cfg, model);
				// Duplication keeps levels; reject any depth growth anyway.
				if (cand.psd < current.psd && cand.depth <= current.depth) {
					logical = std::move(moved);
					current = std::move(cand);
					improved = true;
				}
			}
		}
		if (!improved)
			fanout_limit++;
	}

	if (iterations_used)
		*iterations_used = turns;
	return current.materialized;
}

} // namespace sfqmap
