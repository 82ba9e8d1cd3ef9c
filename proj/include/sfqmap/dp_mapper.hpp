//
// sfqmap -- depth-minimizing, balancing-aware dynamic programming mapper
//

#pragma once

#include "sfqmap/cut_enum.hpp"
#include "sfqmap/mapped_network.hpp"
#include "sfqmap/matcher.hpp"
#include "sfqmap/subject_graph.hpp"

#include <array>
#include <limits>
#include <stdexcept>

namespace sfqmap {

struct map_error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

// Phase of a subject node's signal as carried on a mapped net.
enum class Phase : uint8_t { POS = 0, NEG = 1 };

inline Phase opposite(Phase p) { return p == Phase::POS ? Phase::NEG : Phase::POS; }

// One realization of a (node, phase). GATE: the bound gate of
// (cut, match), each pin fed by the leaf's frontier point pin_point[j].
// INVERT: an inverter over the opposite phase's realization described by
// the same fields (cut < 0 means the bare primary-input wire).
// PI_WIRE: the input itself.
struct SolutionPoint {
	enum Kind : uint8_t { PI_WIRE, GATE, INVERT } kind = PI_WIRE;
	int depth = 0;    // levels to produce this net
	int64_t dffs = 0; // balancing-DFF estimate, summed over the cover tree
	double area = 0.0;
	int cut = -1;
	int match = -1;
	std::array<uint8_t, TruthTable::kMaxVars> pin_point{};
};

// Frontier of useful realizations, shallowest first. Beyond the first
// (lexicographically optimal) point, deeper points are kept only when
// they strictly lower the consumer-side score (dffs - depth normally,
// area in baseline mode): a deeper sub-solution can pay for itself by
// absorbing balancing DFFs a shallow one would force above it.
struct NodeSolutions {
	std::vector<SolutionPoint> points;

	bool reachable() const { return !points.empty(); }
	const SolutionPoint &best() const { return points.front(); }
};

struct MatchTable {
	std::vector<std::array<NodeSolutions, 2>> sol; // indexed [node][phase]
	uint64_t frontier_truncations = 0; // points dropped by the size cap

	const NodeSolutions &at(uint32_t node, Phase phase) const
	{
		return sol[node][(int)phase];
	}
};

struct MapperOptions {
	// Baseline mode breaks depth ties by subtree area instead of the
	// balancing-DFF estimate, mimicking a balancing-unaware mapper.
	bool baseline = false;
	int max_frontier = 16;
};

// Per-node lexicographic optimization, in topological order: minimal
// depth first, then fewest balancing DFFs (baseline: least area), then
// smaller gate area, then cut/match order for determinism. Both output
// phases are solved; complemented consumers either find a complement
// match or pay one inverter level. Throws map_error when some node
// admits no realization at all.
MatchTable minimize_depth_pb(const SubjectGraph &graph,
		const std::vector<CutSet> &cuts, Matcher &matcher,
		const MapperOptions &options = {});

// Walks the chosen solution points from the primary outputs and
// instantiates gates, materializing inverters where a needed phase has no
// direct match. Identical realizations share one cell. The result is
// unbalanced and shares nothing with the inputs.
MappedNetwork recover_cover(const MatchTable &table, const SubjectGraph &graph,
		const std::vector<CutSet> &cuts, Matcher &matcher);

} // namespace sfqmap
