#include "sfqmap/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace sfqmap::oracle {

// ---------------------------------------------------------------- equivalence

namespace {

struct SimView {
	std::vector<std::string> pi_names;
	std::vector<std::string> po_names;
	std::function<std::vector<uint64_t>(const std::vector<uint64_t> &)> eval;
};

SimView view_of(const RawNetlist &n)
{
	// Word-parallel wrapper over the scalar cover evaluator.
	return {n.inputs, n.outputs, [&n](const std::vector<uint64_t> &in) {
				std::vector<uint64_t> out(n.outputs.size(), 0);
				for (int bit = 0; bit < 64; bit++) {
					std::vector<bool> pattern(in.size());
					for (size_t i = 0; i < in.size(); i++)
						pattern[i] = (in[i] >> bit) & 1;
					std::vector<bool> po = n.eval(pattern);
					for (size_t o = 0; o < po.size(); o++)
						if (po[o])
							out[o] |= 1ull << bit;
				}
				return out;
			}};
}

SimView view_of(const SubjectGraph &g)
{
	std::vector<std::string> po_names;
	for (const SubjectGraph::Output &o : g.outputs)
		po_names.push_back(o.name);
	return {g.pi_names, po_names,
			[&g](const std::vector<uint64_t> &in) { return g.eval_words(in); }};
}

SimView view_of(const MappedNetwork &m)
{
	std::vector<std::string> po_names;
	for (const MappedNetwork::Output &o : m.outputs)
		po_names.push_back(o.name);
	return {m.pi_names, po_names,
			[&m](const std::vector<uint64_t> &in) { return m.eval_words(in); }};
}

EquivalenceResult check_views(const SimView &a, const SimView &b, uint64_t min_samples)
{
	// Match PIs and POs by name; order may differ between the two sides.
	if (a.pi_names.size() != b.pi_names.size() ||
			a.po_names.size() != b.po_names.size())
		throw oracle_error("PI/PO mismatch");
	std::map<std::string, size_t> b_pi, b_po;
	for (size_t i = 0; i < b.pi_names.size(); i++)
		b_pi[b.pi_names[i]] = i;
	for (size_t i = 0; i < b.po_names.size(); i++)
		b_po[b.po_names[i]] = i;
	std::vector<size_t> pi_map(a.pi_names.size()), po_map(a.po_names.size());
	for (size_t i = 0; i < a.pi_names.size(); i++) {
		auto it = b_pi.find(a.pi_names[i]);
		if (it == b_pi.end())
			throw oracle_error("PI/PO mismatch: no input '" + a.pi_names[i] + "'");
		pi_map[i] = it->second;
	}
	for (size_t i = 0; i < a.po_names.size(); i++) {
		auto it = b_po.find(a.po_names[i]);
		if (it == b_po.end())
			throw oracle_error("PI/PO mismatch: no output '" + a.po_names[i] + "'");
		po_map[i] = it->second;
	}

	size_t n = a.pi_names.size();
	EquivalenceResult result;
	result.exhaustive = n <= 16;

	auto run_batch = [&](const std::vector<uint64_t> &words_a,
							 uint64_t lanes) -> bool {
		std::vector<uint64_t> words_b(n);
		for (size_t i = 0; i < n; i++)
			words_b[pi_map[i]] = words_a[i];
		auto out_a = a.eval(words_a);
		auto out_b = b.eval(words_b);
		uint64_t lane_mask = lanes == 64 ? ~0ull : ((1ull << lanes) - 1);
		for (size_t o = 0; o < out_a.size(); o++) {
			uint64_t diff = (out_a[o] ^ out_b[po_map[o]]) & lane_mask;
			if (diff) {
				int lane = __builtin_ctzll(diff);
				result.counterexample.resize(n);
				for (size_t i = 0; i < n; i++)
					result.counterexample[i] = (words_a[i] >> lane) & 1;
				return false;
			}
		}
		result.patterns_checked += lanes;
		return true;
	};

	if (result.exhaustive) {
		uint64_t total = 1ull << n;
		for (uint64_t base = 0; base < total; base += 64) {
			uint64_t lanes = std::min<uint64_t>(64, total - base);
			std::vector<uint64_t> words(n, 0);
			for (uint64_t lane = 0; lane < lanes; lane++) {
				uint64_t assignment = base + lane;
				for (size_t i = 0; i < n; i++)
					if ((assignment >> i) & 1)
						words[i] |= 1ull << lane;
			}
			if (!run_batch(words, lanes)) {
				result.equivalent = false;
				return result;
			}
		}
		result.equivalent = true;
		return result;
	}

	std::mt19937_64 rng(0x5f0c7e11u);
	uint64_t batches = (min_samples + 63) / 64;
	for (uint64_t batch = 0; batch < batches; batch++) {
		std::vector<uint64_t> words(n);
		for (size_t i = 0; i < n; i++)
			words[i] = rng();
		if (!run_batch(words, 64)) {
			result.equivalent = false;
			return result;
		}
	}
	result.equivalent = true;
	return result;
}

} // namespace

EquivalenceResult check_equivalence(const RawNetlist &a, const MappedNetwork &b,
		uint64_t min_samples)
{
	return check_views(view_of(a), view_of(b), min_samples);
}

EquivalenceResult check_equivalence(const RawNetlist &a, const SubjectGraph &b,
		uint64_t min_samples)
{
	return check_views(view_of(a), view_of(b), min_samples);
}

EquivalenceResult check_equivalence(const MappedNetwork &a, const MappedNetwork &b,
		uint64_t min_samples)
{
	return check_views(view_of(a), view_of(b), min_samples);
}

// ------------------------------------------------------- brute-force cuts

std::vector<std::vector<uint32_t>> enumerate_cuts_brute(const SubjectGraph &graph,
		uint32_t node, int k)
{
	if (graph.num_nodes() > 40)
		throw oracle_error("instance too large");

	// Cone of `node` (itself included), excluding the constant.
	std::vector<uint32_t> cone;
	{
		std::vector<bool> seen(graph.num_nodes(), false);
		std::vector<uint32_t> stack{node};
		seen[node] = true;
		while (!stack.empty()) {
			uint32_t n = stack.back();
			stack.pop_back();
			cone.push_back(n);
			if (!graph.is_and(n))
				continue;
			for (Edge e : {graph.nodes[n].fanin0, graph.nodes[n].fanin1})
				if (!seen[e.node()]) {
					seen[e.node()] = true;
					stack.push_back(e.node());
				}
		}
		std::sort(cone.begin(), cone.end());
	}

	// Is `set` a cut: walking fanins from node must never pass a PI
	// outside the set.
	auto is_cut = [&](const std::vector<uint32_t> &set) {
		if (std::binary_search(set.begin(), set.end(), node))
			return set.size() == 1;
		std::vector<uint32_t> stack{node};
		std::set<uint32_t> visited{node};
		while (!stack.empty()) {
			uint32_t n = stack.back();
			stack.pop_back();
			if (!graph.is_and(n))
				return false; // reached a PI or constant uncut
			for (Edge e : {graph.nodes[n].fanin0, graph.nodes[n].fanin1}) {
				uint32_t m = e.node();
				if (std::binary_search(set.begin(), set.end(), m))
					continue;
				if (visited.insert(m).second)
					stack.push_back(m);
			}
		}
		return true;
	};

	// All subsets of the cone of size <= k.
	std::vector<std::vector<uint32_t>> cuts;
	std::vector<uint32_t> subset;
	auto recurse = [&](auto &&self, size_t from) -> void {
		if (!subset.empty() && is_cut(subset))
			cuts.push_back(subset);
		if ((int)subset.size() == k)
			return;
		for (size_t i = from; i < cone.size(); i++) {
			subset.push_back(cone[i]);
			self(self, i + 1);
			subset.pop_back();
		}
	};
	recurse(recurse, 0);

	// Dominance filter: drop any cut that contains another.
	std::sort(cuts.begin(), cuts.end(),
			[](const std::vector<uint32_t> &a, const std::vector<uint32_t> &b) {
				if (a.size() != b.size())
					return a.size() < b.size();
				return a < b;
			});
	std::vector<std::vector<uint32_t>> kept;
	for (const auto &c : cuts) {
		bool dominated = false;
		for (const auto &smaller : kept)
			if (std::includes(c.begin(), c.end(), smaller.begin(), smaller.end())) {
				dominated = true;
				break;
			}
		if (!dominated)
			kept.push_back(c);
	}
	return kept;
}

TruthTable cone_function_brute(const SubjectGraph &graph, uint32_t node,
		const std::vector<uint32_t> &leaves)
{
	int size = (int)leaves.size();
	TruthTable out{0, size};
	for (uint32_t assignment = 0; assignment < (1u << size); assignment++) {
		// Evaluate the cone for this leaf assignment.
		std::map<uint32_t, bool> value;
		for (int i = 0; i < size; i++)
			value[leaves[i]] = (assignment >> i) & 1;
		auto eval = [&](auto &&self, uint32_t n) -> bool {
			auto it = value.find(n);
			if (it != value.end())
				return it->second;
			if (graph.is_const(n))
				return true;
			if (!graph.is_and(n))
				throw oracle_error("leaf set is not a cut");
			const SubjectGraph::Node &nd = graph.nodes[n];
			bool a = self(self, nd.fanin0.node()) ^ nd.fanin0.complemented();
			bool b = self(self, nd.fanin1.node()) ^ nd.fanin1.complemented();
			bool v = a && b;
			value[n] = v;
			return v;
		};
		if (eval(eval, node))
			out.bits |= 1ull << assignment;
	}
	return out;
}

// ---------------------------------------------------- brute-force matching

std::vector<BruteMatch> match_brute(const TruthTable &function, const CellLibrary &lib)
{
	std::vector<BruteMatch> out;
	int size = function.size;
	for (size_t g = 0; g < lib.gates.size(); g++) {
		const LibGate &gate = lib.gates[g];
		if (gate.fanin_count() != size)
			continue;
		std::vector<int> perm(size);
		std::iota(perm.begin(), perm.end(), 0);
		do {
			for (uint32_t flips = 0; flips < (1u << size); flips++) {
				// Evaluate the bound gate on every assignment.
				uint64_t table = 0;
				for (uint32_t x = 0; x < (1u << size); x++) {
					uint32_t y = 0;
					for (int j = 0; j < size; j++) {
						uint32_t bit = (x >> perm[j]) & 1u;
						bit ^= (flips >> j) & 1u;
						y |= bit << j;
					}
					if (gate.function.get(y))
						table |= 1ull << x;
				}
				for (int inverted = 0; inverted < 2; inverted++) {
					uint64_t want = inverted
							? (~function.bits & function.mask())
							: function.bits;
					if (table != want)
						continue;
					BruteMatch m;
					m.gate = (int)g;
					m.pin_to_leaf = perm;
					m.pin_negated.resize(size);
					for (int j = 0; j < size; j++)
						m.pin_negated[j] = (flips >> j) & 1;
					m.output_inverted = inverted;
					out.push_back(std::move(m));
				}
			}
		} while (std::next_permutation(perm.begin(), perm.end()));
	}
	return out;
}

// ----------------------------------------------- per-(node, phase) tables

namespace {

struct GateOption {
	std::vector<uint32_t> leaves;
	BruteMatch match;
};

// All gate bindings per (node, phase); option lists are deterministic.
std::vector<std::array<std::vector<GateOption>, 2>> gate_options(
		const SubjectGraph &graph, const CellLibrary &lib, int k)
{
	std::vector<std::array<std::vector<GateOption>, 2>> options(graph.num_nodes());
	for (uint32_t n = 0; n < graph.num_nodes(); n++) {
		if (!graph.is_and(n))
			continue;
		for (const auto &leaves : enumerate_cuts_brute(graph, n, k)) {
			if (leaves.size() == 1 && leaves[0] == n)
				continue;
			TruthTable f = cone_function_brute(graph, n, leaves);
			for (BruteMatch &m : match_brute(f, lib))
				options[n][m.output_inverted ? 1 : 0].push_back(
						{leaves, std::move(m)});
		}
	}
	return options;
}

} // namespace

PhaseTable restricted_table(const SubjectGraph &graph, const CellLibrary &lib, int k)
{
	bool has_inv = lib.inverter_index() >= 0;
	auto options = gate_options(graph, lib, k);
	PhaseTable table(graph.num_nodes());

	for (uint32_t n = 0; n < graph.num_nodes(); n++) {
		if (graph.is_const(n))
			continue;
		if (graph.is_pi(n)) {
			table[n][0] = {0, 0};
			if (has_inv)
				table[n][1] = {1, 0};
			continue;
		}
		PhaseValue best[2];
		for (int phase = 0; phase < 2; phase++) {
			for (const GateOption &opt : options[n][phase]) {
				int size = (int)opt.leaves.size();
				int depth = 0;
				int64_t dffs = 0;
				bool ok = true;
				std::vector<int> levels(size);
				for (int j = 0; j < size && ok; j++) {
					uint32_t leaf = opt.leaves[opt.match.pin_to_leaf[j]];
					int ph = opt.match.pin_negated[j] ? 1 : 0;
					if (!table[leaf][ph].reachable()) {
						ok = false;
						break;
					}
					levels[j] = table[leaf][ph].depth;
					depth = std::max(depth, levels[j]);
					dffs += table[leaf][ph].dffs;
				}
				if (!ok)
					continue;
				for (int j = 0; j < size; j++)
					dffs += depth - levels[j];
				PhaseValue cand{depth + 1, dffs};
				if (!best[phase].reachable() ||
						cand.depth < best[phase].depth ||
						(cand.depth == best[phase].depth &&
								cand.dffs < best[phase].dffs))
					best[phase] = cand;
			}
		}
		if (has_inv) {
			for (int phase = 0; phase < 2; phase++) {
				const PhaseValue &from = best[1 - phase];
				if (!from.reachable())
					continue;
				PhaseValue bridged{from.depth + 1, from.dffs};
				if (!best[phase].reachable() ||
						bridged.depth < best[phase].depth ||
						(bridged.depth == best[phase].depth &&
								bridged.dffs < best[phase].dffs))
					best[phase] = bridged;
			}
		}
		table[n][0] = best[0];
		table[n][1] = best[1];
	}
	return table;
}

namespace {

// Conservative frontier: the best DFF count per depth, with no pruning
// across depths. A deeper point can be strictly preferable to a shallower
// one at a consumer (each level of slack it spans replaces one balancing
// DFF), so classic (depth, dffs) dominance must not drop it.
struct Frontier {
	std::map<int, int64_t> by_depth;

	void insert(PhaseValue p)
	{
		auto it = by_depth.find(p.depth);
		if (it == by_depth.end() || p.dffs < it->second)
			by_depth[p.depth] = p.dffs;
	}

	std::vector<PhaseValue> points() const
	{
		std::vector<PhaseValue> out;
		for (const auto &[d, f] : by_depth)
			out.push_back({d, f});
		return out;
	}

	bool empty() const { return by_depth.empty(); }

	PhaseValue best() const
	{
		if (by_depth.empty())
			return {};
		return {by_depth.begin()->first, by_depth.begin()->second};
	}
};

} // namespace

PhaseTable pareto_table(const SubjectGraph &graph, const CellLibrary &lib, int k)
{
	bool has_inv = lib.inverter_index() >= 0;
	auto options = gate_options(graph, lib, k);
	std::vector<std::array<Frontier, 2>> fr(graph.num_nodes());

	for (uint32_t n = 0; n < graph.num_nodes(); n++) {
		if (graph.is_const(n))
			continue;
		if (graph.is_pi(n)) {
			fr[n][0].insert({0, 0});
			if (has_inv)
				fr[n][1].insert({1, 0});
			continue;
		}
		Frontier gate_fr[2];
		for (int phase = 0; phase < 2; phase++) {
			for (const GateOption &opt : options[n][phase]) {
				int size = (int)opt.leaves.size();
				// Odometer over each pin's frontier points.
				std::vector<std::vector<PhaseValue>> pin_fr(size);
				bool ok = true;
				for (int j = 0; j < size; j++) {
					uint32_t leaf = opt.leaves[opt.match.pin_to_leaf[j]];
					pin_fr[j] = fr[leaf][opt.match.pin_negated[j] ? 1 : 0].points();
					if (pin_fr[j].empty())
						ok = false;
				}
				if (!ok)
					continue;
				std::vector<size_t> idx(size, 0);
				for (;;) {
					int depth = 0;
					int64_t dffs = 0;
					for (int j = 0; j < size; j++) {
						const PhaseValue &p = pin_fr[j][idx[j]];
						depth = std::max(depth, p.depth);
						dffs += p.dffs;
					}
					for (int j = 0; j < size; j++)
						dffs += depth - pin_fr[j][idx[j]].depth;
					gate_fr[phase].insert({depth + 1, dffs});

					int j = 0;
					while (j < size && ++idx[j] == pin_fr[j].size())
						idx[j++] = 0;
					if (j == size)
						break;
				}
			}
		}
		for (int phase = 0; phase < 2; phase++) {
			fr[n][phase] = gate_fr[phase];
			if (has_inv)
				for (const PhaseValue &p : gate_fr[1 - phase].points())
					fr[n][phase].insert({p.depth + 1, p.dffs});
		}
	}

	PhaseTable table(graph.num_nodes());
	for (uint32_t n = 0; n < graph.num_nodes(); n++)
		for (int phase = 0; phase < 2; phase++)
			if (!fr[n][phase].empty())
				table[n][phase] = fr[n][phase].best();
	return table;
}

int min_depth_only(const SubjectGraph &graph, const CellLibrary &lib, int k)
{
	PhaseTable table = restricted_table(graph, lib, k);
	int depth = 0;
	for (const SubjectGraph::Output &o : graph.outputs) {
		if (graph.is_const(o.edge.node()))
			continue;
		const PhaseValue &v = table[o.edge.node()][o.edge.complemented() ? 1 : 0];
		if (!v.reachable())
			throw oracle_error("output unrealizable");
		depth = std::max(depth, v.depth);
	}
	return depth;
}

bool is_tree(const SubjectGraph &graph)
{
	if (graph.outputs.size() != 1)
		return false;
	std::vector<int> uses(graph.num_nodes(), 0);
	for (uint32_t n = 0; n < graph.num_nodes(); n++)
		if (graph.is_and(n)) {
			uses[graph.nodes[n].fanin0.node()]++;
			uses[graph.nodes[n].fanin1.node()]++;
		}
	for (const SubjectGraph::Output &o : graph.outputs)
		uses[o.edge.node()]++;
	for (uint32_t n = 1; n < graph.num_nodes(); n++)
		if (uses[n] > 1)
			return false;
	return true;
}

// ------------------------------------------------------- exhaustive covers

namespace {

// Explicit cover enumeration with true shared-count evaluation.
struct Enumerator {
	const SubjectGraph &graph;
	const CellLibrary &lib;
	std::vector<std::array<std::vector<GateOption>, 2>> options;
	bool has_inv;
	uint64_t budget = 4'000'000; // assignments explored before giving up

	// assignment[node][phase]: -2 unassigned, -1 inverter, >= 0 gate option
	std::vector<std::array<int, 2>> assignment;
	std::vector<std::pair<uint32_t, int>> pending;
	bool found = false;
	PhaseValue best;
	std::vector<OracleResult::WitnessCell> best_witness;

	Enumerator(const SubjectGraph &g, const CellLibrary &l, int k)
		: graph(g), lib(l), options(gate_options(g, l, k)),
		  has_inv(l.inverter_index() >= 0)
	{
		assignment.assign(g.num_nodes(), {-2, -2});
	}

	bool assigned(uint32_t node, int phase) const
	{
		return assignment[node][phase] != -2;
	}

	void evaluate()
	{
		// Levels per assigned (node, phase), then true DFF total: one
		// balancing charge per realized gate pin.
		std::map<std::pair<uint32_t, int>, int> level;
		auto level_of = [&](auto &&self, uint32_t node, int phase) -> int {
			if (graph.is_pi(node) && phase == 0)
				return 0;
			auto key = std::make_pair(node, phase);
			auto it = level.find(key);
			if (it != level.end())
				return it->second;
			int value;
			int a = assignment[node][phase];
			if (a == -1) {
				value = self(self, node, 1 - phase) + 1;
			} else {
				const GateOption &opt = options[node][phase][a];
				value = 0;
				for (size_t j = 0; j < opt.leaves.size(); j++) {
					uint32_t leaf = opt.leaves[opt.match.pin_to_leaf[j]];
					value = std::max(value,
							self(self, leaf, opt.match.pin_negated[j] ? 1 : 0));
				}
				value++;
			}
			level[key] = value;
			return value;
		};

		int depth = 0;
		for (const SubjectGraph::Output &o : graph.outputs) {
			if (graph.is_const(o.edge.node()))
				continue;
			depth = std::max(depth,
					level_of(level_of, o.edge.node(), o.edge.complemented() ? 1 : 0));
		}

		int64_t dffs = 0;
		for (const auto &[key, lvl] : level) {
			auto [node, phase] = key;
			if (graph.is_pi(node))
				continue;
			int a = assignment[node][phase];
			if (a < 0)
				continue; // inverter pins never need balancing
			const GateOption &opt = options[node][phase][a];
			for (size_t j = 0; j < opt.leaves.size(); j++) {
				uint32_t leaf = opt.leaves[opt.match.pin_to_leaf[j]];
				int ph = opt.match.pin_negated[j] ? 1 : 0;
				int leaf_level = graph.is_pi(leaf) && ph == 0
						? 0
						: level.at({leaf, ph});
				dffs += (lvl - 1) - leaf_level;
			}
		}

		PhaseValue cand{depth, dffs};
		if (!found || cand.depth < best.depth ||
				(cand.depth == best.depth && cand.dffs < best.dffs)) {
			found = true;
			best = cand;
			best_witness.clear();
			for (const auto &[key, lvl] : level) {
				auto [node, phase] = key;
				(void)lvl;
				if (graph.is_pi(node))
					continue;
				int a = assignment[node][phase];
				best_witness.push_back({node, phase == 1,
						a == -1 ? std::string("inverter")
								: lib.gates[options[node][phase][a].match.gate].name});
			}
		}
	}

	void search()
	{
		if (budget == 0)
			throw oracle_error("instance too large");
		budget--;
		// Find the first pending pair without an assignment.
		size_t pick = pending.size();
		for (size_t i = 0; i < pending.size(); i++)
			if (!assigned(pending[i].first, pending[i].second)) {
				pick = i;
				break;
			}
		if (pick == pending.size()) {
			evaluate();
			return;
		}
		auto [node, phase] = pending[pick];

		if (graph.is_pi(node)) {
			// Positive phase is the input itself; negative takes an
			// inverter when the library has one.
			if (phase == 0 || has_inv) {
				assignment[node][phase] = -1;
				search();
				assignment[node][phase] = -2;
			}
			return;
		}

		size_t saved = pending.size();
		for (size_t o = 0; o < options[node][phase].size(); o++) {
			const GateOption &opt = options[node][phase][o];
			assignment[node][phase] = (int)o;
			for (size_t j = 0; j < opt.leaves.size(); j++) {
				uint32_t leaf = opt.leaves[opt.match.pin_to_leaf[j]];
				if (!graph.is_const(leaf))
					pending.push_back({leaf, opt.match.pin_negated[j] ? 1 : 0});
			}
			search();
			pending.resize(saved);
			assignment[node][phase] = -2;
		}
		if (has_inv && assignment[node][1 - phase] != -1) {
			// Inverter from the opposite phase; forbid mutual inversion.
			assignment[node][phase] = -1;
			pending.push_back({node, 1 - phase});
			search();
			pending.resize(saved);
			assignment[node][phase] = -2;
		}
	}
};

} // namespace

OracleResult exhaustive_map(const SubjectGraph &graph, const CellLibrary &lib, int k)
{
	size_t and_count = 0;
	for (uint32_t n = 0; n < graph.num_nodes(); n++)
		if (graph.is_and(n))
			and_count++;
	if (and_count > 25)
		throw oracle_error("instance too large");

	Enumerator en(graph, lib, k);
	for (const SubjectGraph::Output &o : graph.outputs)
		if (!graph.is_const(o.edge.node()))
			en.pending.push_back({o.edge.node(), o.edge.complemented() ? 1 : 0});
	en.search();
	if (!en.found)
		throw oracle_error("no legal cover exists");

	OracleResult result;
	result.min_depth = en.best.depth;
	result.min_dffs_at_min_depth = en.best.dffs;
	result.witness = std::move(en.best_witness);
	return result;
}

} // namespace sfqmap::oracle
