#include "sfqmap/subject_graph.hpp"

#include <algorithm>
#include <cassert>

namespace sfqmap {

Edge SubjectGraph::add_pi(const std::string &name)
{
	uint32_t id = (uint32_t)nodes.size();
	nodes.push_back({NodeKind::PI, {}, {}});
	pis.push_back(id);
	pi_names.push_back(name);
	Edge e(id, false);
	name_map[name] = e;
	return e;
}

Edge SubjectGraph::add_and(Edge a, Edge b)
{
	if (b < a)
		std::swap(a, b);
	if (a == const0() || b == const0())
		return const0();
	if (a == const1())
		return b;
	if (b == const1())
		return a;
	if (a == b)
		return a;
	if (a == !b)
		return const0();

	uint64_t key = (uint64_t)a.lit << 32 | b.lit;
	auto it = strash_.find(key);
	if (it != strash_.end())
		return Edge(it->second, false);

	uint32_t id = (uint32_t)nodes.size();
	nodes.push_back({NodeKind::AND2, a, b});
	strash_[key] = id;
	return Edge(id, false);
}

Edge SubjectGraph::add_and_balanced(std::vector<Edge> terms)
{
	if (terms.empty())
		return const1();
	while (terms.size() > 1) {
		std::vector<Edge> next;
		next.reserve((terms.size() + 1) / 2);
		for (size_t i = 0; i + 1 < terms.size(); i += 2)
			next.push_back(add_and(terms[i], terms[i + 1]));
		if (terms.size() & 1)
			next.push_back(terms.back());
		terms = std::move(next);
	}
	return terms[0];
}

size_t SubjectGraph::num_ands() const
{
	size_t n = 0;
	for (const Node &node : nodes)
		if (node.kind == NodeKind::AND2)
			n++;
	return n;
}

std::vector<uint64_t> SubjectGraph::eval_words(const std::vector<uint64_t> &pattern_words) const
{
	assert(pattern_words.size() == pis.size());
	std::vector<uint64_t> value(nodes.size(), 0);
	value[0] = ~0ull; // constant 1
	for (size_t i = 0; i < pis.size(); i++)
		value[pis[i]] = pattern_words[i];
	for (uint32_t n = 1; n < nodes.size(); n++) {
		const Node &node = nodes[n];
		if (node.kind != NodeKind::AND2)
			continue;
		uint64_t a = value[node.fanin0.node()];
		if (node.fanin0.complemented())
			a = ~a;
		uint64_t b = value[node.fanin1.node()];
		if (node.fanin1.complemented())
			b = ~b;
		value[n] = a & b;
	}
	std::vector<uint64_t> out;
	out.reserve(outputs.size());
	for (const Output &o : outputs) {
		uint64_t v = value[o.edge.node()];
		out.push_back(o.edge.complemented() ? ~v : v);
	}
	return out;
}

std::vector<bool> SubjectGraph::eval(const std::vector<bool> &pattern) const
{
	std::vector<uint64_t> words(pattern.size());
	for (size_t i = 0; i < pattern.size(); i++)
		words[i] = pattern[i] ? ~0ull : 0;
	std::vector<uint64_t> out_words = eval_words(words);
	std::vector<bool> out(out_words.size());
	for (size_t i = 0; i < out_words.size(); i++)
		out[i] = out_words[i] & 1;
	return out;
}

SubjectGraph build_subject_graph(const RawNetlist &net)
{
	SubjectGraph graph;
	for (const std::string &name : net.inputs)
		graph.add_pi(name);

	for (int t : net.topo_table_order()) {
		const CoverTable &table = net.tables[t];
		std::vector<Edge> fanin_edges;
		fanin_edges.reserve(table.inputs.size());
		for (const std::string &in : table.inputs)
			fanin_edges.push_back(graph.name_map.at(in));

		// Cover = OR of cubes; build the OR as the complement of a
		// balanced AND of complemented cube edges.
		std::vector<Edge> cube_edges;
		cube_edges.reserve(table.cube_rows.size());
		for (const std::string &row : table.cube_rows) {
			std::vector<Edge> literals;
			for (size_t i = 0; i < row.size(); i++) {
				if (row[i] == '-')
					continue;
				Edge e = fanin_edges[i];
				literals.push_back(row[i] == '1' ? e : !e);
			}
			cube_edges.push_back(!graph.add_and_balanced(std::move(literals)));
		}
		Edge result;
		if (cube_edges.empty())
			result = SubjectGraph::const0();
		else
			result = !graph.add_and_balanced(std::move(cube_edges));
		if (!table.output_value)
			result = !result;

		if (result.node() == 0)
			graph.warnings.push_back("output table '" + table.output +
					"' is constant " + (result == SubjectGraph::const1() ? "1" : "0"));
		graph.name_map[table.output] = result;
	}

	for (const std::string &name : net.outputs)
		graph.outputs.push_back({graph.name_map.at(name), name});
	return graph;
}

SubjectLevels compute_levels(const SubjectGraph &graph)
{
	SubjectLevels lv;
	lv.level.assign(graph.nodes.size(), 0);
	for (uint32_t n = 1; n < graph.nodes.size(); n++) {
		const SubjectGraph::Node &node = graph.nodes[n];
		if (node.kind != NodeKind::AND2)
			continue;
		lv.level[n] = 1 + std::max(lv.level[node.fanin0.node()],
						  lv.level[node.fanin1.node()]);
	}
	for (const SubjectGraph::Output &o : graph.outputs)
		lv.depth = std::max(lv.depth, lv.level[o.edge.node()]);
	return lv;
}

} // namespace sfqmap
