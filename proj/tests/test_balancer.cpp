#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "sfqmap/balancer.hpp"
#include "sfqmap/cut_enum.hpp"
#include "sfqmap/dp_mapper.hpp"
#include "sfqmap/oracle.hpp"

#include <random>

using namespace sfqmap;

namespace {

// Hand-built network: cells wired over explicit nets.
struct Builder {
	CellLibrary lib;
	MappedNetwork net;

	explicit Builder(const char *libtext) : lib(testutil::lib(libtext))
	{
		net.lib = &lib;
	}

	int pi(const std::string &name) { return net.add_pi(name); }

	int gate(const std::string &name, std::vector<int> fanins)
	{
		for (size_t g = 0; g < lib.gates.size(); g++)
			if (lib.gates[g].name == name)
				return net.add_cell(CellKind::LIBGATE, (int)g, std::move(fanins));
		FAIL("no gate ", name);
		return -1;
	}

	void output(const std::string &name, int n) { net.outputs.push_back({name, n}); }
};

MappedNetwork mapped_cover(const SubjectGraph &g, const CellLibrary &lib, int k)
{
	auto cuts = enumerate_cuts(g, {k, 16});
	Matcher matcher(lib);
	MatchTable table = minimize_depth_pb(g, cuts, matcher, {});
	return recover_cover(table, g, cuts, matcher);
}

} // namespace

TEST_CASE("equal fanin levels need no DFFs; a one-level gap needs one")
{
	Builder b(testutil::kAndInvLib);
	int a = b.pi("a"), c = b.pi("c"), d = b.pi("d");
	int ab = b.gate("and2", {a, c});
	int equal = b.gate("and2", {a, c});
	int both = b.gate("and2", {ab, equal});
	b.output("y", both);
	MappedNetwork balanced = insert_dffs(b.net);
	int64_t gates, dffs, splitters;
	balanced.count_cells(gates, dffs, splitters);
	CHECK(dffs == 0);
	CHECK(check_balanced(balanced).empty());

	// now with inputs at levels (1, 0): one DFF
	Builder b2(testutil::kAndInvLib);
	int x = b2.pi("x"), y = b2.pi("y"), z = b2.pi("z");
	int xy = b2.gate("and2", {x, y});
	int skew = b2.gate("and2", {xy, z});
	b2.output("f", skew);
	(void)d;
	MappedNetwork balanced2 = insert_dffs(b2.net);
	balanced2.count_cells(gates, dffs, splitters);
	CHECK(dffs == 1);
	CHECK(check_balanced(balanced2).empty());
}

TEST_CASE("chain cover of the motivating function needs three DFFs")
{
	// Chain cover of F = a b !c d at depth three: the c inversion is
	// absorbed into a gate pin, so the skews of the chain topology alone
	// set the DFF count.
	static const char *chain_lib = R"(
GATE inv1 1 O=!a; PIN * INV 1 999 1.0 0 1.0 0
GATE and2 2 O=a*b; PIN * NONINV 1 999 1.0 0 1.0 0
GATE andb2 2 O=a*!b; PIN * UNKNOWN 1 999 1.0 0 1.0 0
)";
	Builder b(chain_lib);
	int a = b.pi("a"), bb = b.pi("b"), c = b.pi("c"), d = b.pi("d");
	int ab = b.gate("and2", {a, bb});
	int abc = b.gate("andb2", {ab, c});
	int abcd = b.gate("and2", {abc, d});
	b.output("F", abcd);

	LevelMap lm = compute_levels(b.net);
	CHECK(lm.depth == 3);
	// conservation: dffs inserted == sum of balance costs before insertion
	int64_t expected = 0;
	for (const auto &cell : b.net.cells) {
		std::vector<int> levels;
		for (int f : cell.fanins)
			levels.push_back(lm.net_level[f]);
		if (b.net.cell_is_clocked(cell) && levels.size() > 1)
			expected += balance_cost(levels);
	}
	CHECK(expected == 3);

	MappedNetwork balanced = insert_dffs(b.net);
	int64_t gates, dffs, splitters;
	balanced.count_cells(gates, dffs, splitters);
	CHECK(dffs == 3);
	CHECK(check_balanced(balanced).empty());
	CHECK(compute_levels(balanced).depth == 3);
}

TEST_CASE("hand-built gap of two reports one violation with gap 2")
{
	Builder b(testutil::kAndInvLib);
	int a = b.pi("a"), x = b.pi("x"), y = b.pi("y");
	int l1 = b.gate("and2", {x, y});
	int l2 = b.gate("and2", {l1, l1});
	int bad = b.gate("and2", {a, l2}); // levels (0, 2)
	b.output("f", bad);
	auto violations = check_balanced(b.net);
	REQUIRE(violations.size() == 1);
	CHECK(violations[0].gap == 2);
	CHECK(violations[0].cell == b.net.nets[bad].driver_cell);
	CHECK(!violations[0].describe(b.net).empty());
}

TEST_CASE("fanout trees: 1, 2, 4 sinks")
{
	for (int sinks : {1, 2, 4}) {
		Builder b(testutil::kAndInvLib);
		int x = b.pi("x"), y = b.pi("y");
		int src = b.gate("and2", {x, y});
		for (int i = 0; i < sinks; i++)
			b.output("o" + std::to_string(i), b.gate("inv1", {src}));
		MappedNetwork done = insert_splitters(insert_dffs(b.net));
		int64_t gates, dffs, splitters;
		done.count_cells(gates, dffs, splitters);
		CHECK(splitters == sinks - 1);
		CHECK(check_splitter_legal(done).empty());
		CHECK(check_balanced(done).empty());
		// tree depth: ceil(log2 sinks) splitter levels below the and2
		auto sl = done.sink_lists();
		int want = sinks == 1 ? 0 : sinks == 2 ? 1 : 2;
		for (size_t c = 0; c < done.cells.size(); c++)
			if (done.cells[c].kind == CellKind::LIBGATE &&
					done.lib->gates[done.cells[c].gate].name == "and2")
				CHECK(splitter_levels_after(done, sl, done.cells[c].out_net) ==
						want);
	}
}

TEST_CASE("levels unchanged by splitters; splitter legality catches violations")
{
	Builder b(testutil::kAndInvLib);
	int x = b.pi("x"), y = b.pi("y");
	int src = b.gate("and2", {x, y});
	int s1 = b.gate("inv1", {src});
	int s2 = b.gate("inv1", {src});
	b.output("a", s1);
	b.output("b", s2);

	CHECK(!check_splitter_legal(b.net).empty()); // fanout 2 unsplit

	MappedNetwork before = insert_dffs(b.net);
	LevelMap lm_before = compute_levels(before);
	MappedNetwork after = insert_splitters(before);
	LevelMap lm_after = compute_levels(after);
	CHECK(lm_before.depth == lm_after.depth);
	CHECK(check_splitter_legal(after).empty());

	// functional preservation
	for (uint32_t v = 0; v < 4; v++) {
		std::vector<bool> in{bool(v & 1), bool(v & 2)};
		CHECK(b.net.eval(in) == after.eval(in));
	}
}

TEST_CASE("balancing is idempotent and conserves the balance-cost sum")
{
	std::mt19937_64 rng(1234);
	CellLibrary libs[2] = {testutil::lib(testutil::kSmallLibA),
			testutil::lib(testutil::kSmallLibB)};
	for (int trial = 0; trial < 200; trial++) {
		SubjectGraph g = testutil::random_dag(rng, 20, 5, 2);
		const CellLibrary &lib = libs[trial % 2];
		MappedNetwork cover = mapped_cover(g, lib, 3);

		LevelMap lm = compute_levels(cover);
		int64_t expected = 0;
		for (const auto &cell : cover.cells) {
			if (!cover.cell_is_clocked(cell) || cell.fanins.size() < 2)
				continue;
			std::vector<int> levels;
			for (int f : cell.fanins)
				levels.push_back(lm.net_level[f]);
			expected += balance_cost(levels);
		}

		MappedNetwork balanced = insert_dffs(cover);
		int64_t gates, dffs, splitters;
		balanced.count_cells(gates, dffs, splitters);
		INFO("trial ", trial);
		REQUIRE(check_balanced(balanced).empty());
		REQUIRE(dffs == expected);
		REQUIRE(compute_levels(balanced).depth == lm.depth);

		// idempotence: balancing a balanced network adds nothing
		MappedNetwork again = insert_dffs(balanced);
		int64_t gates2, dffs2, splitters2;
		again.count_cells(gates2, dffs2, splitters2);
		REQUIRE(dffs2 == dffs);

		// splitter legalization: per-net splitter count = sinks - 1
		MappedNetwork legal = insert_splitters(balanced);
		auto counts = balanced.fanout_counts();
		int64_t want_splitters = 0;
		for (size_t n = 0; n < balanced.nets.size(); n++)
			want_splitters += std::max(0, counts[n] - 1);
		legal.count_cells(gates2, dffs2, splitters2);
		REQUIRE(splitters2 == want_splitters);
		REQUIRE(check_splitter_legal(legal).empty());
		REQUIRE(check_balanced(legal).empty());

		// end-to-end functional preservation (sampled)
		auto eq = oracle::check_equivalence(cover, legal, 4096);
		REQUIRE(eq.equivalent);
	}
}

TEST_CASE("output balancing raises every PO to the common level")
{
	Builder b(testutil::kAndInvLib);
	int x = b.pi("x"), y = b.pi("y"), z = b.pi("z");
	int xy = b.gate("and2", {x, y});
	int xyz = b.gate("and2", {xy, z});
	b.output("short", xy);
	b.output("long", xyz);

	MappedNetwork plain = insert_dffs(b.net, false);
	CHECK(!check_balanced(plain, true).empty()); // POs differ
	CHECK(check_balanced(plain, false).empty());

	MappedNetwork po_balanced = insert_dffs(b.net, true);
	CHECK(check_balanced(po_balanced, true).empty());
	int64_t gates, dffs, splitters;
	po_balanced.count_cells(gates, dffs, splitters);
	CHECK(dffs == 2); // gap of 1 at xyz's z pin, plus 1 on the short PO
}

TEST_CASE("mapped network round-trips through strip_pipeline")
{
	std::mt19937_64 rng(555);
	CellLibrary lib = testutil::lib(testutil::kSmallLibA);
	for (int trial = 0; trial < 50; trial++) {
		SubjectGraph g = testutil::random_dag(rng, 15, 4, 2);
		MappedNetwork cover = mapped_cover(g, lib, 3);
		MappedNetwork full = insert_splitters(insert_dffs(cover));
		MappedNetwork stripped = full.strip_pipeline();
		int64_t gates_a, x, y, gates_b;
		cover.count_cells(gates_a, x, y);
		stripped.count_cells(gates_b, x, y);
		CHECK(gates_a == gates_b);
		CHECK(x == 0);
		CHECK(y == 0);
		auto eq = oracle::check_equivalence(cover, stripped, 4096);
		CHECK(eq.equivalent);
	}
}
