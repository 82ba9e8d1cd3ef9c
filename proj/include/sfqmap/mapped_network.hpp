//
// sfqmap -- mapped network: gate, DFF and splitter instances over nets
//

#pragma once

#include "sfqmap/genlib.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sfqmap {

enum class CellKind : uint8_t { LIBGATE, DFF, SPLITTER };

struct MapStats {
	int64_t gate_count = 0;
	int64_t dff_count = 0;
	int64_t splitter_count = 0;
	int depth = 0;
	double worst_stage_delay = 0.0;
	double psd = 0.0;
	double runtime_seconds = 0.0;
	int iterations = 0;
};

// Nets have one driver (a cell or a primary input) and any number of
// sinks. Balancing and splitter legalization are explicit passes that set
// the corresponding flags; emission requires both.
struct MappedNetwork {
	static constexpr int kNoCell = -1;

	struct Cell {
		CellKind kind = CellKind::LIBGATE;
		int gate = -1; // index into lib->gates for LIBGATE
		std::vector<int> fanins; // net ids, in gate pin order
		int out_net = -1;
	};

	struct Net {
		int driver_cell = kNoCell; // kNoCell when driven by a PI
		int pi_index = -1;
	};

	struct Output {
		std::string name;
		int net = -1;
	};

	const CellLibrary *lib = nullptr;
	std::vector<Cell> cells; // topologically ordered by construction
	std::vector<Net> nets;
	std::vector<std::string> pi_names;
	std::vector<int> pi_nets;
	std::vector<Output> outputs;
	bool balanced = false;
	bool splitter_legal = false;

	int add_net()
	{
		nets.push_back({});
		return (int)nets.size() - 1;
	}

	int add_pi(const std::string &name)
	{
		int net = add_net();
		nets[net].pi_index = (int)pi_names.size();
		pi_names.push_back(name);
		pi_nets.push_back(net);
		return net;
	}

	int add_cell(CellKind kind, int gate, std::vector<int> fanins)
	{
		int net = add_net();
		Cell cell{kind, gate, std::move(fanins), net};
		cells.push_back(std::move(cell));
		nets[net].driver_cell = (int)cells.size() - 1;
		return net;
	}

	bool cell_is_clocked(const Cell &c) const { return c.kind != CellKind::SPLITTER; }

	double cell_delay(const Cell &c) const
	{
		switch (c.kind) {
		case CellKind::DFF:
			return lib->dff.delay;
		case CellKind::SPLITTER:
			return lib->splitter.delay;
		default:
			return lib->gates[c.gate].delay;
		}
	}

	double cell_area(const Cell &c) const
	{
		switch (c.kind) {
		case CellKind::DFF:
			return lib->dff.area;
		case CellKind::SPLITTER:
			return lib->splitter.area;
		default:
			return lib->gates[c.gate].area;
		}
	}

	// Sink counts per net (cell pins plus primary outputs).
	std::vector<int> fanout_counts() const;

	// Per-sink lists; each entry is (cell, pin) or (-1, output index).
	struct Sink {
		int cell;
		int pin;
	};
	std::vector<std::vector<Sink>> sink_lists() const;

	// Cell counts by kind: {gates, dffs, splitters}.
	void count_cells(int64_t &gates, int64_t &dffs, int64_t &splitters) const;

	// 64-lane bit-parallel evaluation; DFFs and splitters are identities
	// (functional view only, timing is ignored).
	std::vector<uint64_t> eval_words(const std::vector<uint64_t> &pattern_words) const;
	std::vector<bool> eval(const std::vector<bool> &pattern) const;

	// Copy with every DFF and splitter contracted away: the logical cover.
	MappedNetwork strip_pipeline() const;

	void check_acyclic_topological() const; // asserts construction order
};

// Levels: PI nets at 0, clocked cells one above their deepest fanin,
// splitters at their fanin's level.
struct LevelMap {
	std::vector<int> cell_level;
	std::vector<int> net_level;
	int depth = 0; // max over primary outputs
};
LevelMap compute_levels(const MappedNetwork &net);

// Worst splitter-chain length from this cell's output to any consuming
// pin; on an unsplit network this is ceil(log2(fanout)).
int splitter_levels_after(const MappedNetwork &net,
		const std::vector<std::vector<MappedNetwork::Sink>> &sinks, int net_id);

} // namespace sfqmap
