//
// sfqmap -- worst-stage peephole tuning of the mapped network
//

#pragma once

#include "sfqmap/balancer.hpp"
#include "sfqmap/mapped_network.hpp"

#include <vector>

namespace sfqmap {

// Stage delay of a clocked source: its own delay, plus one splitter delay
// per splitter level its output passes through, plus interconnect.
struct StageDelayModel {
	double splitter_delay = 1.0;
	double interconnect_delay = 0.0;

	static StageDelayModel from(const CellLibrary &lib)
	{
		return {lib.splitter.delay, 0.0};
	}

	double stage(double source_delay, int splitter_levels) const
	{
		return source_delay + splitter_levels * splitter_delay + interconnect_delay;
	}
};

struct PeepholeConfig {
	int iterations = 5;        // p
	int init_fanout_count = 2; // starting fanout limit for local remaps
	int max_fanout_count = 8;  // limit value past which iterations no-op
	bool balance_outputs = false;
};

// Stage delay of one cell. Splitter levels come from materialized splitter
// chains when present, otherwise from ceil(log2 fanout) of the net.
double stage_delay(const MappedNetwork &net, int cell, const StageDelayModel &model);

// Stage delays of every source (cells by id, then PIs as delay-0 sources).
// Splitter cells are not stages themselves and get 0.
std::vector<double> all_stage_delays(const MappedNetwork &net,
		const StageDelayModel &model);

double worst_stage_delay(const MappedNetwork &net, const StageDelayModel &model);

// Product of the worst stage delay and the logical depth.
double psd(const MappedNetwork &net, const StageDelayModel &model);

// Iteratively duplicates the worst-stage gate so each replica drives at
// most the current fanout limit, accepting a move only when the global PSD
// strictly decreases and raising the limit otherwise. Returns a balanced,
// splitter-legal network with PSD no worse than the input's.
// `iterations_used` (optional) receives the number of loop turns taken.
MappedNetwork tune_psd(const MappedNetwork &net, const PeepholeConfig &cfg,
		const StageDelayModel &model, int *iterations_used = nullptr);

} // namespace sfqmap
