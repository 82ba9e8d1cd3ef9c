#include "sfqmap/matcher.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace sfqmap {

TruthTable apply_match(const LibGate &gate, const Match &match, int size)
{
	TruthTable out{0, size};
	for (uint32_t x = 0; x < (1u << size); x++) {
		uint32_t y = 0;
		for (int j = 0; j < size; j++) {
			uint32_t bit = (x >> match.pins[j].leaf_var) & 1u;
			bit ^= match.pins[j].negated ? 1u : 0u;
			y |= bit << j;
		}
		if (gate.function.get(y))
			out.bits |= 1ull << x;
	}
	return out;
}

namespace {

TruthTable swap_vars(const TruthTable &t, int a, int b)
{
	TruthTable out{0, t.size};
	for (uint32_t x = 0; x < (1u << t.size); x++) {
		uint32_t y = x;
		uint32_t ba = (x >> a) & 1u, bb = (x >> b) & 1u;
		y &= ~((1u << a) | (1u << b));
		y |= ba << b | bb << a;
		if (t.get(y))
			out.bits |= 1ull << x;
	}
	return out;
}

uint64_t signature(const Match &m, const std::vector<int> &sym_class, int size)
{
	// Canonicalize pin bindings within each symmetry class so that
	// semantically identical permutations collapse.
	std::array<Match::PinBinding, TruthTable::kMaxVars> pins = m.pins;
	for (int cls = 0; cls < size; cls++) {
		std::vector<int> members;
		for (int j = 0; j < size; j++)
			if (sym_class[j] == cls)
				members.push_back(j);
		if (members.size() < 2)
			continue;
		std::vector<std::pair<int, int>> bindings;
		for (int j : members)
			bindings.push_back({pins[j].leaf_var, pins[j].negated});
		std::sort(bindings.begin(), bindings.end());
		for (size_t i = 0; i < members.size(); i++)
			pins[members[i]] = {(uint8_t)bindings[i].first, bindings[i].second != 0};
	}
	uint64_t sig = (uint64_t)m.gate << 32 | (m.output_inverted ? 1u : 0u);
	for (int j = 0; j < size; j++)
		sig = sig * 131 + (pins[j].leaf_var << 1 | (pins[j].negated ? 1 : 0));
	return sig;
}

} // namespace

Matcher::Matcher(const CellLibrary &lib) : lib_(lib)
{
	gates_by_fanin_.resize(TruthTable::kMaxVars + 1);
	symmetry_class_.resize(lib.gates.size());
	for (size_t g = 0; g < lib.gates.size(); g++) {
		const LibGate &gate = lib.gates[g];
		int n = gate.fanin_count();
		if (n >= 1 && n <= TruthTable::kMaxVars)
			gates_by_fanin_[n].push_back((int)g);
		// Pin symmetry classes: pins whose pairwise swap leaves the gate
		// function unchanged share a class (the relation is closed under
		// composition of transpositions).
		std::vector<int> cls(n);
		std::iota(cls.begin(), cls.end(), 0);
		for (int p = 0; p < n; p++)
			for (int q = p + 1; q < n; q++)
				if (cls[q] > cls[p] && swap_vars(gate.function, p, q) == gate.function)
					cls[q] = cls[p];
		symmetry_class_[g] = std::move(cls);
	}
}

void Matcher::enumerate(const TruthTable &function, bool dedup,
		std::vector<Match> &out) const
{
	int size = function.size;
	if (size < 1 || size > TruthTable::kMaxVars)
		return;
	int pop_f = function.popcount();
	int total = 1 << size;

	std::set<uint64_t> seen;
	for (int g : gates_by_fanin_[size]) {
		const LibGate &gate = lib_.gates[g];
		int pop_g = gate.function.popcount();
		bool try_pos = pop_g == pop_f;
		bool try_neg = pop_g == total - pop_f;
		if (!try_pos && !try_neg)
			continue; // input phases and permutations preserve popcount

		std::array<uint8_t, TruthTable::kMaxVars> perm{};
		std::iota(perm.begin(), perm.begin() + size, (uint8_t)0);
		do {
			for (uint32_t flips = 0; flips < (1u << size); flips++) {
				Match m;
				m.gate = g;
				for (int j = 0; j < size; j++)
					m.pins[j] = {perm[j], ((flips >> j) & 1u) != 0};
				TruthTable t = apply_match(gate, m, size);
				for (int phase = 0; phase < 2; phase++) {
					if (phase == 0 ? !try_pos : !try_neg)
						continue;
					TruthTable want = phase == 0 ? function : ~function;
					if (t != want)
						continue;
					m.output_inverted = phase == 1;
					if (dedup) {
						uint64_t sig = signature(m, symmetry_class_[g], size);
						if (!seen.insert(sig).second)
							continue;
					}
					out.push_back(m);
				}
			}
		} while (std::next_permutation(perm.begin(), perm.begin() + size));
	}
}

const std::vector<Match> &Matcher::match_cut(const TruthTable &function)
{
	static const std::vector<Match> empty;
	int size = function.size;
	if (size < 1 || size > TruthTable::kMaxVars)
		return empty;

	std::lock_guard<std::mutex> lock(mutex_);
	auto &slot = memo_[size][function.bits];
	if (!slot) {
		auto vec = std::make_unique<std::vector<Match>>();
		enumerate(function, true, *vec);
		slot = std::move(vec);
	}
	return *slot;
}

std::vector<Match> Matcher::match_cut_all(const TruthTable &function) const
{
	std::vector<Match> out;
	enumerate(function, false, out);
	return out;
}

} // namespace sfqmap
