#include "sfqmap/cut_enum.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace sfqmap {

bool Cut::dominates(const Cut &other) const
{
	if (leaves.size() > other.leaves.size())
		return false;
	return std::includes(other.leaves.begin(), other.leaves.end(),
			leaves.begin(), leaves.end());
}

namespace {

// Merge two sorted leaf sets; empty result signals more than k leaves.
std::vector<uint32_t> merge_leaves(const std::vector<uint32_t> &a,
		const std::vector<uint32_t> &b, int k)
{
	std::vector<uint32_t> out;
	out.reserve(a.size() + b.size());
	size_t i = 0, j = 0;
	while (i < a.size() || j < b.size()) {
		uint32_t v;
		if (j == b.size() || (i < a.size() && a[i] < b[j]))
			v = a[i++];
		else if (i == a.size() || b[j] < a[i])
			v = b[j++];
		else {
			v = a[i];
			i++, j++;
		}
		out.push_back(v);
		if ((int)out.size() > k)
			return {};
	}
	return out;
}

TruthTable lift(const Cut &cut, const std::vector<uint32_t> &merged, bool compl_)
{
	int var_map[TruthTable::kMaxVars];
	for (int v = 0; v < cut.size(); v++)
		var_map[v] = (int)(std::lower_bound(merged.begin(), merged.end(),
							 cut.leaves[v]) -
				merged.begin());
	TruthTable t = cut.function.remap(var_map, (int)merged.size());
	return compl_ ? ~t : t;
}

bool cut_less(const Cut &a, const Cut &b)
{
	if (a.leaves.size() != b.leaves.size())
		return a.leaves.size() < b.leaves.size();
	return a.leaves < b.leaves;
}

} // namespace

std::vector<CutSet> enumerate_cuts(const SubjectGraph &graph, const CutParams &params)
{
	assert(params.k >= 2 && params.k <= TruthTable::kMaxVars);
	std::vector<CutSet> sets(graph.num_nodes());

	for (uint32_t n = 0; n < graph.num_nodes(); n++) {
		if (graph.is_const(n))
			continue;
		CutSet &set = sets[n];
		Cut trivial{{n}, {0b10, 1}};
		if (graph.is_pi(n)) {
			set.cuts.push_back(std::move(trivial));
			continue;
		}

		const SubjectGraph::Node &node = graph.nodes[n];
		const CutSet &s0 = sets[node.fanin0.node()];
		const CutSet &s1 = sets[node.fanin1.node()];

		std::vector<Cut> merged;
		for (const Cut &c0 : s0.cuts) {
			for (const Cut &c1 : s1.cuts) {
				std::vector<uint32_t> leaves =
						merge_leaves(c0.leaves, c1.leaves, params.k);
				if (leaves.empty())
					continue;
				TruthTable f = lift(c0, leaves, node.fanin0.complemented()) &
						lift(c1, leaves, node.fanin1.complemented());
				merged.push_back({std::move(leaves), f});
			}
		}

		std::sort(merged.begin(), merged.end(), cut_less);
		merged.erase(std::unique(merged.begin(), merged.end(),
						 [](const Cut &a, const Cut &b) {
							 return a.leaves == b.leaves;
						 }),
				merged.end());

		// Dominance pruning: smaller cuts come first, so one forward pass
		// suffices.
		std::vector<Cut> kept;
		for (Cut &c : merged) {
			bool dominated = false;
			for (const Cut &k : kept)
				if (k.dominates(c)) {
					dominated = true;
					break;
				}
			if (!dominated)
				kept.push_back(std::move(c));
		}

		set.cuts.push_back(std::move(trivial));
		for (Cut &c : kept) {
			if ((int)set.cuts.size() >= params.max_cuts) {
				set.dropped++;
				continue;
			}
			set.cuts.push_back(std::move(c));
		}
	}
	return sets;
}

TruthTable cut_function(const SubjectGraph &graph, uint32_t root,
		const std::vector<uint32_t> &leaves)
{
	assert(std::is_sorted(leaves.begin(), leaves.end()));
	int size = (int)leaves.size();
	std::vector<TruthTable> value(root + 1);
	std::vector<bool> known(root + 1, false);

	for (int i = 0; i < size; i++) {
		value[leaves[i]] = TruthTable::variable(i, size);
		known[leaves[i]] = true;
	}
	if (!known[0]) {
		value[0] = TruthTable::constant(true, size);
		known[0] = true;
	}

	for (uint32_t n = 1; n <= root; n++) {
		if (known[n])
			continue;
		const SubjectGraph::Node &node = graph.nodes[n];
		if (node.kind != NodeKind::AND2)
			continue;
		uint32_t a = node.fanin0.node(), b = node.fanin1.node();
		if (!known[a] || !known[b])
			continue;
		TruthTable ta = node.fanin0.complemented() ? ~value[a] : value[a];
		TruthTable tb = node.fanin1.complemented() ? ~value[b] : value[b];
		value[n] = ta & tb;
		known[n] = true;
	}
	if (!known[root])
		throw std::invalid_argument("leaf set is not a cut of the root");
	return value[root];
}

} // namespace sfqmap
