//
// sfqmap -- independent brute-force references used by the test suites
//
// Everything here is coded against definitions only: no cut_enum, matcher
// or dp_mapper internals are reused, so these results can stand as oracles
// for those modules.
//

#pragma once

#include "sfqmap/genlib.hpp"
#include "sfqmap/mapped_network.hpp"
#include "sfqmap/netlist.hpp"
#include "sfqmap/subject_graph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sfqmap::oracle {

struct oracle_error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

// ---- equivalence checking ----

struct EquivalenceResult {
	bool equivalent = false;
	std::vector<bool> counterexample; // PI assignment when not equivalent
	uint64_t patterns_checked = 0;
	bool exhaustive = false;
};

// Exhaustive for up to 16 inputs, at least `min_samples` seeded random
// patterns above that. PO/PI name sets must agree (order may differ).
EquivalenceResult check_equivalence(const RawNetlist &a, const MappedNetwork &b,
		uint64_t min_samples = 100000);
EquivalenceResult check_equivalence(const RawNetlist &a, const SubjectGraph &b,
		uint64_t min_samples = 100000);
EquivalenceResult check_equivalence(const MappedNetwork &a, const MappedNetwork &b,
		uint64_t min_samples = 100000);

// ---- brute-force cuts and matches ----

// Every irredundant leaf set of at most k nodes separating `node` from the
// primary inputs, found by testing all subsets of the node's cone.
// Guarded to graphs of at most ~30 nodes.
std::vector<std::vector<uint32_t>> enumerate_cuts_brute(const SubjectGraph &graph,
		uint32_t node, int k);

// Cone function over sorted leaves by direct evaluation per assignment.
TruthTable cone_function_brute(const SubjectGraph &graph, uint32_t node,
		const std::vector<uint32_t> &leaves);

// One binding found by the plain quadruple loop over gates, pin
// permutations, pin phases and output phase.
struct BruteMatch {
	int gate;
	std::vector<int> pin_to_leaf;  // gate pin -> leaf variable
	std::vector<bool> pin_negated; // gate pin wants the leaf complemented
	bool output_inverted;
};
std::vector<BruteMatch> match_brute(const TruthTable &function, const CellLibrary &lib);

// ---- exhaustive mapping ----

struct OracleResult {
	int min_depth = 0;
	int64_t min_dffs_at_min_depth = 0;
	// Witness cover: (node, phase, description) triples that re-evaluate
	// to the reported pair.
	struct WitnessCell {
		uint32_t node;
		bool negated_phase;
		std::string gate;
	};
	std::vector<WitnessCell> witness;
};

// Lexicographic (depth, balancing DFFs) optimum over every legal cover of
// the graph's outputs, by explicit enumeration of cover choices with true
// (shared) DFF counting. Guarded to 25 AND nodes and a bounded search
// budget; throws oracle_error("instance too large") beyond either.
OracleResult exhaustive_map(const SubjectGraph &graph, const CellLibrary &lib, int k);

struct PhaseValue {
	int depth = -1; // -1: phase unrealizable
	int64_t dffs = 0;

	bool reachable() const { return depth >= 0; }
};
using PhaseTable = std::vector<std::array<PhaseValue, 2>>; // [node][phase]

// Per-(node, phase) values computed with brute-force cuts and matches,
// under the restriction that every sub-solution sits at its own minimum
// depth: the space the per-node recurrences range over.
PhaseTable restricted_table(const SubjectGraph &graph, const CellLibrary &lib, int k);

// Per-(node, phase) lexicographic optimum over the full cover space via
// Pareto frontiers (sub-solutions may be deeper than minimal). DFFs of
// shared subtrees count once per use (the tree-unfolded value); exact on
// trees.
PhaseTable pareto_table(const SubjectGraph &graph, const CellLibrary &lib, int k);

// Minimum achievable depth per output, max-combined over all outputs;
// valid on any DAG since the depth objective separates per node.
int min_depth_only(const SubjectGraph &graph, const CellLibrary &lib, int k);

// True once no node or input feeds more than one consumer and there is a
// single output (exactly the instances where tree-summed DFF counting is
// the real count).
bool is_tree(const SubjectGraph &graph);

} // namespace sfqmap::oracle
