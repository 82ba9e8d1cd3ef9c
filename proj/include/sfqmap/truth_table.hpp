//
// sfqmap -- truth tables over up to 6 variables, packed into one word
//

#pragma once

#include <cassert>
#include <cstdint>
#include <string>

namespace sfqmap {

// Truth table of a boolean function over `size` variables (size <= 6).
// Bit i holds f(x) for the assignment where variable v equals bit v of i;
// variable 0 is the least significant selector.
struct TruthTable {
	uint64_t bits = 0;
	int size = 0;

	static constexpr int kMaxVars = 6;

	static uint64_t mask_for(int size)
	{
		return (size == 6) ? ~0ull : ((1ull << (1u << size)) - 1);
	}

	uint64_t mask() const { return mask_for(size); }

	static TruthTable constant(bool value, int size)
	{
		return {value ? mask_for(size) : 0, size};
	}

	// Projection onto variable `var`: f(x) = x_var.
	static TruthTable variable(int var, int size)
	{
		assert(var < size);
		static constexpr uint64_t proj[6] = {
			0xaaaaaaaaaaaaaaaaull, 0xccccccccccccccccull,
			0xf0f0f0f0f0f0f0f0ull, 0xff00ff00ff00ff00ull,
			0xffff0000ffff0000ull, 0xffffffff00000000ull,
		};
		return {proj[var] & mask_for(size), size};
	}

	bool get(uint32_t assignment) const { return (bits >> assignment) & 1; }

	void set(uint32_t assignment, bool value)
	{
		if (value)
			bits |= 1ull << assignment;
		else
			bits &= ~(1ull << assignment);
	}

	TruthTable operator~() const { return {~bits & mask(), size}; }

	TruthTable operator&(const TruthTable &o) const
	{
		assert(size == o.size);
		return {bits & o.bits, size};
	}

	TruthTable operator|(const TruthTable &o) const
	{
		assert(size == o.size);
		return {bits | o.bits, size};
	}

	bool operator==(const TruthTable &o) const
	{
		return size == o.size && bits == o.bits;
	}

	bool operator!=(const TruthTable &o) const { return !(*this == o); }

	bool is_constant() const { return bits == 0 || bits == mask(); }

	int popcount() const { return __builtin_popcountll(bits); }

	// Rewrites the function into a wider variable space: variable v of this
	// table becomes variable var_map[v] of a `new_size`-variable table.
	TruthTable remap(const int *var_map, int new_size) const
	{
		TruthTable out{0, new_size};
		for (uint32_t a = 0; a < (1u << new_size); a++) {
			uint32_t packed = 0;
			for (int v = 0; v < size; v++)
				packed |= ((a >> var_map[v]) & 1u) << v;
			if (get(packed))
				out.bits |= 1ull << a;
		}
		return out;
	}

	// MSB-first bit string, e.g. AND2 prints as "1000".
	std::string to_string() const
	{
		std::string s;
		for (int i = (1 << size) - 1; i >= 0; i--)
			s += get(i) ? '1' : '0';
		return s;
	}
};

} // namespace sfqmap
