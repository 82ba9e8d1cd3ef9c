//
// shared test fixtures: small libraries, random instance generators
//

#pragma once

#include "sfqmap/genlib.hpp"
#include "sfqmap/subject_graph.hpp"

#include <random>
#include <string>
#include <vector>

namespace testutil {

// AND2 + inverter only: every cover of an AND tree is forced.
inline const char *kAndInvLib = R"(
GATE zero 0 O=CONST0;
GATE one 0 O=CONST1;
GATE inv1 1 O=!a; PIN * INV 1 999 1.0 0 1.0 0
GATE and2 2 O=a*b; PIN * NONINV 1 999 1.0 0 1.0 0
)";

// AND family up to 4 inputs; and4 is cheaper than and3+and2, so an
// area-first tie-break prefers wide skewed covers.
inline const char *kAndFamilyLib = R"(
GATE zero 0 O=CONST0;
GATE one 0 O=CONST1;
GATE inv1 1 O=!a; PIN * INV 1 999 1.0 0 1.0 0
GATE and2 2 O=a*b; PIN * NONINV 1 999 1.0 0 1.0 0
GATE and3 3 O=a*b*c; PIN * NONINV 1 999 1.0 0 1.0 0
GATE and4 4 O=a*b*c*d; PIN * NONINV 1 999 1.0 0 1.0 0
)";

// Small library A for oracle-agreement runs.
inline const char *kSmallLibA = R"(
GATE zero 0 O=CONST0;
GATE one 0 O=CONST1;
GATE inv1 1 O=!a; PIN * INV 1 999 1.0 0 1.0 0
GATE and2 2 O=a*b; PIN * NONINV 1 999 1.2 0 1.1 0
GATE and3 3 O=a*b*c; PIN * NONINV 1 999 1.6 0 1.4 0
)";

// Small library B: inverting gates only, so phases matter everywhere.
inline const char *kSmallLibB = R"(
GATE zero 0 O=CONST0;
GATE one 0 O=CONST1;
GATE inv1 1 O=!a; PIN * INV 1 999 1.0 0 1.0 0
GATE nand2 2 O=!(a*b); PIN * INV 1 999 1.0 0 1.0 0
GATE nor2 2 O=!(a+b); PIN * INV 1 999 1.4 0 1.4 0
)";

inline sfqmap::CellLibrary lib(const char *text)
{
	return sfqmap::parse_genlib(text);
}

// Random AND tree over distinct inputs with random complement edges;
// at most `max_nodes` AND nodes, single output.
inline sfqmap::SubjectGraph random_tree(std::mt19937_64 &rng, int max_nodes)
{
	sfqmap::SubjectGraph g;
	int ands = 1 + (int)(rng() % max_nodes);
	int leaves = ands + 1;
	std::vector<sfqmap::Edge> pool;
	for (int i = 0; i < leaves; i++) {
		sfqmap::Edge e = g.add_pi("x" + std::to_string(i));
		pool.push_back(rng() & 1 ? !e : e);
	}
	while (pool.size() > 1) {
		// combine two random entries; tree shape varies with the draw
		size_t i = rng() % pool.size();
		sfqmap::Edge a = pool[i];
		pool.erase(pool.begin() + i);
		size_t j = rng() % pool.size();
		sfqmap::Edge b = pool[j];
		pool.erase(pool.begin() + j);
		sfqmap::Edge y = g.add_and(a, b);
		pool.push_back(rng() & 1 ? !y : y);
	}
	g.outputs.push_back({pool[0], "f"});
	return g;
}

// Random DAG with sharing: each new AND picks fanins anywhere earlier.
inline sfqmap::SubjectGraph random_dag(std::mt19937_64 &rng, int max_nodes,
		int inputs = 5, int outputs = 2)
{
	sfqmap::SubjectGraph g;
	std::vector<sfqmap::Edge> pool;
	for (int i = 0; i < inputs; i++)
		pool.push_back(g.add_pi("x" + std::to_string(i)));
	int ands = 1 + (int)(rng() % max_nodes);
	for (int i = 0; i < ands; i++) {
		sfqmap::Edge a = pool[rng() % pool.size()];
		sfqmap::Edge b = pool[rng() % pool.size()];
		if (rng() & 1)
			a = !a;
		if (rng() & 1)
			b = !b;
		sfqmap::Edge y = g.add_and(a, b);
		pool.push_back(y);
	}
	for (int i = 0; i < outputs; i++) {
		sfqmap::Edge e = pool[pool.size() - 1 - (rng() % std::min<size_t>(pool.size(), 4))];
		g.outputs.push_back({rng() & 1 ? !e : e, "f" + std::to_string(i)});
	}
	return g;
}

} // namespace testutil
