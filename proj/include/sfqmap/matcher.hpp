//
// sfqmap -- binding cut functions to library gates
//

#pragma once

#include "sfqmap/genlib.hpp"
#include "sfqmap/truth_table.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace sfqmap {

// One way to realize a cut function with a library gate: pin j of the gate
// connects to cut variable pins[j].leaf_var, negated when pins[j].negated
// (a negated pin consumes the leaf's complemented net). output_inverted
// matches realize the complement of the cut function.
struct Match {
	int gate = -1;
	struct PinBinding {
		uint8_t leaf_var = 0;
		bool negated = false;
	};
	std::array<PinBinding, TruthTable::kMaxVars> pins;
	bool output_inverted = false;

	// Number of negated pins; used as a cheap preference key.
	int negated_pin_count(int size) const
	{
		int n = 0;
		for (int i = 0; i < size; i++)
			n += pins[i].negated;
		return n;
	}
};

// Applies a match to its gate's table: the function the bound gate
// presents over the cut variables (before output inversion).
TruthTable apply_match(const LibGate &gate, const Match &match, int size);

// Gate matcher with a memo keyed on (function, size). Safe to share across
// threads; the fill is idempotent so results are deterministic.
class Matcher {
public:
	explicit Matcher(const CellLibrary &lib);

	// All (gate, permutation, pin phases, output phase) bindings whose
	// table equals `function` (output_inverted false) or its complement
	// (output_inverted true), deduplicated over symmetric gate pins.
	const std::vector<Match> &match_cut(const TruthTable &function);

	// Raw enumeration without symmetry deduplication (for inspection).
	std::vector<Match> match_cut_all(const TruthTable &function) const;

	const CellLibrary &library() const { return lib_; }

private:
	const CellLibrary &lib_;
	// Per-gate pin symmetry classes: symmetry_class_[g][pin].
	std::vector<std::vector<int>> symmetry_class_;
	std::vector<std::vector<int>> gates_by_fanin_;

	mutable std::mutex mutex_;
	// One memo per function size; 64-bit function bits key each bucket.
	std::array<std::unordered_map<uint64_t, std::unique_ptr<std::vector<Match>>>,
			TruthTable::kMaxVars + 1>
			memo_;

	void enumerate(const TruthTable &function, bool dedup,
			std::vector<Match> &out) const;
};

} // namespace sfqmap
