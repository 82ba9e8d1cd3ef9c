//
// sfqmap -- path balancing DFF insertion and splitter legalization
//

#pragma once

#include "sfqmap/mapped_network.hpp"

#include <string>
#include <vector>

namespace sfqmap {

// Number of DFFs needed to align the given arrival levels: sum of
// (max level - level) over the list.
int64_t balance_cost(const std::vector<int> &levels);

// Inserts a chain of DFFs ahead of every clocked-cell pin (and optionally
// every primary output) that arrives below the stage's maximum level.
// The input network is not modified.
MappedNetwork insert_dffs(const MappedNetwork &net, bool balance_outputs = false);

// Re-drives every net with more than one sink through a balanced binary
// splitter tree (ceil(log2 s) levels, s-1 splitters). Requires a balanced
// network; levels are unchanged since splitters are asynchronous.
MappedNetwork insert_splitters(const MappedNetwork &net);

struct BalanceViolation {
	int cell;    // offending cell, or -1 for a primary-output level gap
	int gap;     // level difference
	std::string describe(const MappedNetwork &net) const;
};

// Empty iff every clocked cell's fanins arrive at one level (and, when
// check_outputs is set, all primary outputs share a level).
std::vector<BalanceViolation> check_balanced(const MappedNetwork &net,
		bool check_outputs = false);

// Splitter legality: non-splitter nets drive at most one sink, splitter
// nets at most two. Returns offending net ids.
std::vector<int> check_splitter_legal(const MappedNetwork &net);

} // namespace sfqmap
