#include "sfqmap/dp_mapper.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace sfqmap {

namespace {

// Consumer-side score of a point: what a parent pays for this pin beyond
// the stage level itself. Under a fixed stage level L the pin costs
// dffs + (L - depth), so only dffs - depth orders the candidates; in
// baseline mode the cost is the level-independent subtree area.
int64_t pin_score(const SolutionPoint &p, bool baseline)
{
	if (baseline)
		return (int64_t)(p.area * 4096.0);
	return p.dffs - p.depth;
}

// Preference among equal-depth candidates: the lexicographic objective
// after depth, then deterministic structural keys.
bool point_better(const SolutionPoint &a, double gate_area_a,
		const SolutionPoint &b, double gate_area_b, bool baseline)
{
	if (baseline) {
		if (a.area != b.area)
			return a.area < b.area;
		if (a.dffs != b.dffs)
			return a.dffs < b.dffs;
	} else {
		if (a.dffs != b.dffs)
			return a.dffs < b.dffs;
		if (a.area != b.area)
			return a.area < b.area;
	}
	if (gate_area_a != gate_area_b)
		return gate_area_a < gate_area_b;
	if (a.kind != b.kind)
		return a.kind < b.kind;
	if (a.cut != b.cut)
		return a.cut < b.cut; // cuts are (size, lexicographic-leaves) sorted
	return a.match < b.match;
}

// Collects candidates keyed by depth, then emits the frontier: the
// shallowest point plus deeper points with strictly improving pin score.
struct FrontierBuilder {
	bool baseline = false;
	int max_frontier = 16;
	std::map<int, std::pair<SolutionPoint, double>> by_depth;

	void offer(const SolutionPoint &p, double gate_area)
	{
		auto it = by_depth.find(p.depth);
		if (it == by_depth.end())
			by_depth.emplace(p.depth, std::make_pair(p, gate_area));
		else if (point_better(p, gate_area, it->second.first, it->second.second,
						 baseline))
			it->second = {p, gate_area};
	}

	NodeSolutions finish(uint64_t *truncations = nullptr) const
	{
		NodeSolutions out;
		int64_t best_score = std::numeric_limits<int64_t>::max();
		for (const auto &[depth, entry] : by_depth) {
			(void)depth;
			int64_t score = pin_score(entry.first, baseline);
			if (!out.points.empty() && score >= best_score)
				continue;
			if ((int)out.points.size() >= max_frontier) {
				if (truncations)
					(*truncations)++;
				continue;
			}
			best_score = score;
			out.points.push_back(entry.first);
		}
		return out;
	}
};

// Per-pin choice: for a level bound L take the point of depth <= L with
// the best pin score (frontier scores improve with depth, so it is the
// deepest fitting point; kept explicit for clarity).
struct PinLookup {
	const NodeSolutions *sol = nullptr;

	int choose(int level_bound) const
	{
		const auto &pts = sol->points;
		int last = -1;
		for (size_t i = 0; i < pts.size(); i++)
			if (pts[i].depth <= level_bound)
				last = (int)i;
			else
				break;
		return last;
	}

	int min_depth() const { return sol->points.front().depth; }
};

} // namespace

MatchTable minimize_depth_pb(const SubjectGraph &graph,
		const std::vector<CutSet> &cuts, Matcher &matcher,
		const MapperOptions &options)
{
	const CellLibrary &lib = matcher.library();
	int inv = lib.inverter_index();
	double inv_area = inv >= 0 ? lib.gates[inv].area : 0.0;

	MatchTable table;
	table.sol.resize(graph.num_nodes());

	for (uint32_t n = 0; n < graph.num_nodes(); n++) {
		if (graph.is_const(n))
			continue;

		if (graph.is_pi(n)) {
			SolutionPoint wire;
			wire.kind = SolutionPoint::PI_WIRE;
			table.sol[n][(int)Phase::POS].points.push_back(wire);
			if (inv >= 0) {
				SolutionPoint neg;
				neg.kind = SolutionPoint::INVERT;
				neg.depth = 1;
				neg.area = inv_area;
				neg.cut = -1; // source: the input wire
				table.sol[n][(int)Phase::NEG].points.push_back(neg);
			}
			continue;
		}

		FrontierBuilder builder[2];
		builder[0].baseline = builder[1].baseline = options.baseline;
		builder[0].max_frontier = builder[1].max_frontier = options.max_frontier;

		const CutSet &set = cuts[n];
		for (size_t ci = 0; ci < set.cuts.size(); ci++) {
			const Cut &cut = set.cuts[ci];
			if (cut.is_trivial_for(n))
				continue;
			const std::vector<Match> &matches = matcher.match_cut(cut.function);
			for (size_t mi = 0; mi < matches.size(); mi++) {
				const Match &m = matches[mi];
				int size = cut.size();

				PinLookup pins[TruthTable::kMaxVars];
				bool reachable = true;
				int min_level = 0;
				std::vector<int> levels;
				for (int j = 0; j < size && reachable; j++) {
					uint32_t leaf = cut.leaves[m.pins[j].leaf_var];
					int ph = m.pins[j].negated ? 1 : 0;
					const NodeSolutions &ls = table.sol[leaf][ph];
					if (!ls.reachable()) {
						reachable = false;
						break;
					}
					pins[j].sol = &ls;
					min_level = std::max(min_level, pins[j].min_depth());
					for (const SolutionPoint &p : ls.points)
						levels.push_back(p.depth);
				}
				if (!reachable)
					continue;

				std::sort(levels.begin(), levels.end());
				levels.erase(std::unique(levels.begin(), levels.end()),
						levels.end());

				double gate_area = lib.gates[m.gate].area;
				for (int level : levels) {
					if (level < min_level)
						continue;
					SolutionPoint p;
					p.kind = SolutionPoint::GATE;
					p.depth = level + 1;
					p.area = gate_area;
					p.cut = (int)ci;
					p.match = (int)mi;
					for (int j = 0; j < size; j++) {
						int idx = pins[j].choose(level);
						assert(idx >= 0);
						const SolutionPoint &lp = pins[j].sol->points[idx];
						p.pin_point[j] = (uint8_t)idx;
						p.dffs += lp.dffs + (level - lp.depth);
						p.area += lp.area;
					}
					builder[m.output_inverted ? 1 : 0].offer(p, gate_area);
				}
			}
		}

		// Gate-backed frontiers first; then each phase may add inverter
		// bridges over the other's gate points (bridging a bridge would
		// only pad inverter pairs).
		NodeSolutions gate_sol[2] = {builder[0].finish(), builder[1].finish()};
		for (int ph = 0; ph < 2 && inv >= 0; ph++) {
			for (const SolutionPoint &src : gate_sol[1 - ph].points) {
				SolutionPoint b;
				b.kind = SolutionPoint::INVERT;
				b.depth = src.depth + 1;
				b.dffs = src.dffs;
				b.area = src.area + inv_area;
				b.cut = src.cut;
				b.match = src.match;
				b.pin_point = src.pin_point;
				builder[ph].offer(b, inv_area);
			}
		}
		for (int ph = 0; ph < 2; ph++)
			table.sol[n][ph] = builder[ph].finish(&table.frontier_truncations);

		if (!table.sol[n][0].reachable() && !table.sol[n][1].reachable()) {
			std::ostringstream msg;
			msg << "node " << n << " is unmatchable; cut functions:";
			for (const Cut &cut : set.cuts)
				if (!cut.is_trivial_for(n))
					msg << " " << cut.function.to_string();
			throw map_error(msg.str());
		}
	}
	return table;
}

namespace {

// Identity of one realization: gates by their binding, wires by the
// node, inverters by their source net (resolved separately).
struct RealizationKey {
	uint32_t node;
	int phase;
	int cut;
	int match;
	uint64_t pins;

	bool operator<(const RealizationKey &o) const
	{
		return std::tie(node, phase, cut, match, pins) <
				std::tie(o.node, o.phase, o.cut, o.match, o.pins);
	}
};

uint64_t pack_pins(const std::array<uint8_t, TruthTable::kMaxVars> &pp)
{
	uint64_t v = 0;
	for (int i = 0; i < TruthTable::kMaxVars; i++)
		v = v << 8 | pp[i];
	return v;
}

} // namespace

MappedNetwork recover_cover(const MatchTable &table, const SubjectGraph &graph,
		const std::vector<CutSet> &cuts, Matcher &matcher)
{
	const CellLibrary &lib = matcher.library();
	int inv = lib.inverter_index();

	MappedNetwork net;
	net.lib = &lib;
	for (const std::string &name : graph.pi_names)
		net.add_pi(name);

	std::map<RealizationKey, int> realized; // -> net id
	std::map<int, int> inverter_of;         // source net -> inverted net
	std::vector<int> pi_net_of(graph.num_nodes(), -1);
	for (size_t i = 0; i < graph.pis.size(); i++)
		pi_net_of[graph.pis[i]] = net.pi_nets[i];

	auto invert_net = [&](int source) -> int {
		auto it = inverter_of.find(source);
		if (it != inverter_of.end())
			return it->second;
		if (inv < 0)
			throw map_error("a needed phase requires an inverter but the "
							"library has none");
		int out = net.add_cell(CellKind::LIBGATE, inv, {source});
		inverter_of[source] = out;
		return out;
	};

	// Realizes the gate (or wire) identified by (node, phase, point
	// fields); INVERT points resolve their source first, then wrap it.
	struct Frame {
		uint32_t node;
		int phase;
		SolutionPoint point;
	};
	auto key_of = [](const Frame &f) {
		// INVERT realizations share identity with their source in the
		// opposite phase plus the wrap, handled via inverter_of.
		int phase = f.point.kind == SolutionPoint::INVERT ? 1 - f.phase : f.phase;
		return RealizationKey{f.node, phase, f.point.cut, f.point.match,
				pack_pins(f.point.pin_point)};
	};

	auto realize = [&](uint32_t root, Phase root_phase) -> int {
		const NodeSolutions &root_sols = table.at(root, root_phase);
		if (!root_sols.reachable())
			throw map_error("no realization for phase of node " +
					std::to_string(root));
		std::vector<Frame> stack{{root, (int)root_phase, root_sols.best()}};
		int result = -1;
		while (!stack.empty()) {
			Frame f = stack.back();
			RealizationKey key = key_of(f);

			auto done = [&](int source_net) {
				int out = f.point.kind == SolutionPoint::INVERT
						? invert_net(source_net)
						: source_net;
				result = out;
				stack.pop_back();
			};

			auto it = realized.find(key);
			if (it != realized.end()) {
				done(it->second);
				continue;
			}

			if (f.point.kind == SolutionPoint::PI_WIRE ||
					(f.point.kind == SolutionPoint::INVERT && f.point.cut < 0)) {
				realized[key] = pi_net_of[f.node];
				done(pi_net_of[f.node]);
				continue;
			}

			const Cut &cut = cuts[f.node].cuts[f.point.cut];
			const Match &m = matcher.match_cut(cut.function)[f.point.match];
			int realized_phase =
					f.point.kind == SolutionPoint::INVERT ? 1 - f.phase : f.phase;

			bool ready = true;
			std::vector<int> fanins(cut.size());
			for (int j = 0; j < cut.size(); j++) {
				uint32_t leaf = cut.leaves[m.pins[j].leaf_var];
				int ph = m.pins[j].negated ? 1 : 0;
				const NodeSolutions &ls = table.at(leaf, (Phase)ph);
				if (f.point.pin_point[j] >= ls.points.size())
					throw map_error("dangling solution point at node " +
							std::to_string(leaf));
				Frame dep{leaf, ph, ls.points[f.point.pin_point[j]]};
				RealizationKey dep_key = key_of(dep);
				auto dit = realized.find(dep_key);
				int source;
				if (dit == realized.end()) {
					stack.push_back(dep);
					ready = false;
					continue;
				}
				source = dit->second;
				// wrap with the inverter when the dep point is INVERT
				fanins[j] = dep.point.kind == SolutionPoint::INVERT
						? invert_net(source)
						: source;
			}
			if (!ready)
				continue;

			(void)realized_phase;
			int out = net.add_cell(CellKind::LIBGATE, m.gate, std::move(fanins));
			realized[key] = out;
			done(out);
		}
		return result;
	};

	auto realize_const = [&](bool value) -> int {
		RealizationKey key{0, value ? 0 : 1, -3, -3, 0};
		auto it = realized.find(key);
		if (it != realized.end())
			return it->second;
		int g = lib.constant_index(value);
		if (g < 0)
			throw map_error(std::string("constant-") + (value ? "1" : "0") +
					" output needs a constant cell the library lacks");
		int result = net.add_cell(CellKind::LIBGATE, g, {});
		realized[key] = result;
		return result;
	};

	for (const SubjectGraph::Output &o : graph.outputs) {
		int out_net;
		if (graph.is_const(o.edge.node()))
			out_net = realize_const(!o.edge.complemented());
		else
			out_net = realize(o.edge.node(),
					o.edge.complemented() ? Phase::NEG : Phase::POS);
		net.outputs.push_back({o.name, out_net});
	}
	return net;
}

} // namespace sfqmap
