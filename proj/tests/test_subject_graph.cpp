#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "sfqmap/netlist.hpp"
#include "sfqmap/subject_graph.hpp"

#include <random>
#include <set>

using namespace sfqmap;

TEST_CASE("buffer netlist gives a wire")
{
	RawNetlist net = parse_blif(".model buf\n.inputs a\n.outputs y\n"
								".names a y\n1 1\n.end");
	SubjectGraph g = build_subject_graph(net);
	CHECK(g.num_ands() == 0);
	REQUIRE(g.outputs.size() == 1);
	CHECK(g.outputs[0].edge.complemented() == false);
	CHECK(g.is_pi(g.outputs[0].edge.node()));
}

TEST_CASE("single cube decomposes into a balanced tree of three ANDs")
{
	RawNetlist net = parse_blif(".model f\n.inputs a b c d\n.outputs F\n"
								".names a b c d F\n1101 1\n.end");
	SubjectGraph g = build_subject_graph(net);
	CHECK(g.num_ands() == 3);
	SubjectLevels lv = compute_levels(g);
	CHECK(lv.depth == 2); // balanced, not a chain
	// simulate the defining pattern and a falsifying one
	CHECK(g.eval({true, true, false, true}) == std::vector<bool>{true});
	CHECK(g.eval({true, true, true, true}) == std::vector<bool>{false});
}

TEST_CASE("structural hashing merges duplicate ANDs")
{
	SubjectGraph g;
	Edge a = g.add_pi("a"), b = g.add_pi("b");
	Edge x = g.add_and(a, b);
	Edge y = g.add_and(b, a); // commuted
	CHECK(x == y);
	Edge z = g.add_and(a, !b);
	CHECK(z != x);
	CHECK(g.num_ands() == 2);

	// invariant: no two AND nodes share an ordered fanin pair
	std::set<std::pair<uint32_t, uint32_t>> seen;
	for (uint32_t n = 0; n < g.num_nodes(); n++)
		if (g.is_and(n)) {
			auto key = std::make_pair(g.nodes[n].fanin0.lit, g.nodes[n].fanin1.lit);
			CHECK(seen.insert({key.first, key.second}).second);
		}
}

TEST_CASE("constant folding")
{
	SubjectGraph g;
	Edge a = g.add_pi("a");
	CHECK(g.add_and(a, SubjectGraph::const1()) == a);
	CHECK(g.add_and(a, SubjectGraph::const0()) == SubjectGraph::const0());
	CHECK(g.add_and(a, a) == a);
	CHECK(g.add_and(a, !a) == SubjectGraph::const0());
	CHECK(g.num_ands() == 0);
}

TEST_CASE("constant output tables fold with a warning")
{
	RawNetlist net = parse_blif(".model k\n.inputs a\n.outputs y\n"
								".names a q\n1 1\n"
								".names a q y\n11 1\n00 1\n.end");
	// y = (a AND q) OR (!a AND !q) with q == a: constant 1
	SubjectGraph g = build_subject_graph(net);
	CHECK(g.outputs[0].edge == SubjectGraph::const1());
	CHECK(!g.warnings.empty());
}

TEST_CASE("simulation agrees with cover semantics exhaustively on random netlists")
{
	std::mt19937_64 rng(42);
	for (int trial = 0; trial < 30; trial++) {
		// random netlist over 8 inputs: a few cover tables of random cubes
		int num_inputs = 8;
		std::vector<std::string> nets;
		for (int i = 0; i < num_inputs; i++)
			nets.push_back("x" + std::to_string(i));
		std::string text = ".model r\n.inputs";
		for (const std::string &n : nets)
			text += " " + n;
		text += "\n.outputs f\n";
		int tables = 1 + (int)(rng() % 5);
		for (int t = 0; t < tables; t++) {
			std::string out = t + 1 == tables ? "f" : "n" + std::to_string(t);
			int ins = 2 + (int)(rng() % 3);
			std::vector<int> picks;
			for (int i = 0; i < ins; i++)
				picks.push_back((int)(rng() % nets.size()));
			text += ".names";
			for (int p : picks)
				text += " " + nets[p];
			text += " " + out + "\n";
			int rows = 1 + (int)(rng() % 3);
			for (int r = 0; r < rows; r++) {
				std::string row;
				for (int i = 0; i < ins; i++)
					row += "01-"[rng() % 3];
				text += row + " 1\n";
			}
			nets.push_back(out);
		}
		text += ".end\n";

		RawNetlist net = parse_blif(text);
		SubjectGraph g = build_subject_graph(net);
		for (uint32_t v = 0; v < 256; v++) {
			std::vector<bool> in(num_inputs);
			for (int i = 0; i < num_inputs; i++)
				in[i] = (v >> i) & 1;
			INFO("trial ", trial, " pattern ", v);
			std::vector<bool> want = net.eval(in);
			std::vector<bool> got;
			if (g.outputs[0].edge.node() == 0)
				got = {!g.outputs[0].edge.complemented()};
			else
				got = g.eval(in);
			REQUIRE(want == got);
		}
	}
}

TEST_CASE("fanin ids precede their node (topological numbering)")
{
	std::mt19937_64 rng(7);
	SubjectGraph g = testutil::random_dag(rng, 20);
	for (uint32_t n = 0; n < g.num_nodes(); n++)
		if (g.is_and(n)) {
			CHECK(g.nodes[n].fanin0.node() < n);
			CHECK(g.nodes[n].fanin1.node() < n);
		}
}

TEST_CASE("levels: PI-only and simple chains")
{
	SubjectGraph g;
	Edge a = g.add_pi("a"), b = g.add_pi("b"), c = g.add_pi("c");
	g.outputs.push_back({a, "pa"});
	CHECK(compute_levels(g).depth == 0);

	Edge ab = g.add_and(a, b);
	Edge abc = g.add_and(ab, c);
	g.outputs.push_back({abc, "y"});
	CHECK(compute_levels(g).depth == 2);
}
