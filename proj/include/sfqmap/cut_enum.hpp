//
// sfqmap -- k-feasible cut enumeration over the subject graph
//

#pragma once

#include "sfqmap/subject_graph.hpp"
#include "sfqmap/truth_table.hpp"

#include <vector>

namespace sfqmap {

// A k-feasible cut: sorted, duplicate-free leaf set plus the root's
// function (positive phase) over the leaves. Leaf i of the sorted list is
// variable i of the function.
struct Cut {
	std::vector<uint32_t> leaves;
	TruthTable function;

	int size() const { return (int)leaves.size(); }
	bool is_trivial_for(uint32_t node) const
	{
		return leaves.size() == 1 && leaves[0] == node;
	}
	// True if this cut's leaves are a subset of `other`'s.
	bool dominates(const Cut &other) const;
};

struct CutSet {
	std::vector<Cut> cuts; // sorted by (size, lexicographic leaves)
	uint64_t dropped = 0;  // cuts discarded by the per-node cap
};

struct CutParams {
	int k = 4;
	int max_cuts = 16; // per-node cap, trivial cut always kept
};

// Per-node cut sets in topological order: the trivial cut plus every
// dominance-free merge of the fanin cut sets with at most k leaves,
// capped at max_cuts keeping smaller leaf counts first.
std::vector<CutSet> enumerate_cuts(const SubjectGraph &graph, const CutParams &params);

// Function of an arbitrary cut of `root`, by exhaustive simulation of the
// cone over all leaf assignments. Throws std::invalid_argument if the leaf
// set is not a cut of root.
TruthTable cut_function(const SubjectGraph &graph, uint32_t root,
		const std::vector<uint32_t> &leaves);

} // namespace sfqmap
