//
// sfqmap -- two-input AND graph with complement edges, the mapping substrate
//

#pragma once

#include "sfqmap/netlist.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace sfqmap {

// Edge literal: node id shifted left once, low bit is the complement flag.
// Literal 0 is the constant-1 node uncomplemented, literal 1 is constant 0.
struct Edge {
	uint32_t lit = 0;

	Edge() = default;
	Edge(uint32_t node, bool compl_) : lit(node << 1 | (compl_ ? 1u : 0u)) {}

	uint32_t node() const { return lit >> 1; }
	bool complemented() const { return lit & 1; }
	Edge operator!() const { return Edge{nullptr_tag{}, lit ^ 1u}; }
	bool operator==(const Edge &o) const { return lit == o.lit; }
	bool operator!=(const Edge &o) const { return lit != o.lit; }
	bool operator<(const Edge &o) const { return lit < o.lit; }

private:
	struct nullptr_tag {};
	Edge(nullptr_tag, uint32_t raw) : lit(raw) {}
};

enum class NodeKind : uint8_t { CONST1, PI, AND2 };

struct SubjectGraph {
	struct Node {
		NodeKind kind;
		Edge fanin0, fanin1; // meaningful for AND2 only; fanin0 <= fanin1
	};

	struct Output {
		Edge edge;
		std::string name;
	};

	std::vector<Node> nodes; // node 0 is CONST1; fanin ids < own id
	std::vector<uint32_t> pis;
	std::vector<std::string> pi_names;
	std::vector<Output> outputs;
	std::map<std::string, Edge> name_map; // net name -> defining edge
	std::vector<std::string> warnings;

	SubjectGraph() { nodes.push_back({NodeKind::CONST1, {}, {}}); }

	static Edge const1() { return Edge(0, false); }
	static Edge const0() { return Edge(0, true); }

	uint32_t num_nodes() const { return (uint32_t)nodes.size(); }
	bool is_pi(uint32_t n) const { return nodes[n].kind == NodeKind::PI; }
	bool is_and(uint32_t n) const { return nodes[n].kind == NodeKind::AND2; }
	bool is_const(uint32_t n) const { return nodes[n].kind == NodeKind::CONST1; }

	Edge add_pi(const std::string &name);
	// Structurally hashed AND with constant folding; commutative operands
	// are stored in sorted order.
	Edge add_and(Edge a, Edge b);
	Edge add_or(Edge a, Edge b) { return !add_and(!a, !b); }

	// Balanced reduction of a list of conjuncts (empty list gives const 1).
	Edge add_and_balanced(std::vector<Edge> terms);

	size_t num_ands() const;

	// 64 patterns at once; `pattern_words[i]` carries PI i across lanes.
	std::vector<uint64_t> eval_words(const std::vector<uint64_t> &pattern_words) const;
	// Single-pattern convenience wrapper.
	std::vector<bool> eval(const std::vector<bool> &pattern) const;

private:
	std::unordered_map<uint64_t, uint32_t> strash_;
};

// Converts every cover table into AND2/complement-edge form (cubes as
// balanced AND trees, covers as OR via De Morgan), with structural hashing
// and constant folding. Constant-valued outputs fold to the constant node
// with a warning recorded on the graph.
SubjectGraph build_subject_graph(const RawNetlist &net);

// AND-node levels: PIs and constants at 0, AND nodes one above their
// deepest fanin. Complement edges are free.
struct SubjectLevels {
	std::vector<int> level;
	int depth = 0;
};
SubjectLevels compute_levels(const SubjectGraph &graph);

} // namespace sfqmap
