#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "sfqmap/genlib.hpp"
#include "sfqmap/netlist.hpp"
#include "sfqmap/report.hpp"

#include <map>
#include <sstream>

using namespace sfqmap;

TEST_CASE("identity table parses")
{
	RawNetlist net = parse_blif(".model buf\n.inputs a\n.outputs y\n"
								".names a y\n1 1\n.end");
	CHECK(net.model_name == "buf");
	REQUIRE(net.tables.size() == 1);
	CHECK(net.tables[0].inputs == std::vector<std::string>{"a"});
	CHECK(net.eval({true}) == std::vector<bool>{true});
	CHECK(net.eval({false}) == std::vector<bool>{false});
}

TEST_CASE("four-input AND as a single cover row")
{
	RawNetlist net = parse_blif(
			".model and4\n.inputs a b c d\n.outputs y\n"
			".names a b c d y\n1111 1\n.end\n");
	REQUIRE(net.tables.size() == 1);
	CHECK(net.tables[0].inputs.size() == 4);
	for (int v = 0; v < 16; v++) {
		std::vector<bool> in{bool(v & 1), bool(v & 2), bool(v & 4), bool(v & 8)};
		CHECK(net.eval(in)[0] == (v == 15));
	}
}

TEST_CASE("OR-of-cubes cover against exhaustive cover-evaluation oracle")
{
	// f(a,b) = (a) + (!a b): rows "1- 1" and "01 1"
	RawNetlist net = parse_blif(
			".model cover\n.inputs a b\n.outputs y\n"
			".names a b y\n1- 1\n01 1\n.end\n");
	// independent oracle: walk rows directly per pattern
	auto oracle = [](bool a, bool b) {
		bool row1 = a;         // "1-"
		bool row2 = !a && b;   // "01"
		return row1 || row2;
	};
	for (int v = 0; v < 4; v++) {
		bool a = v & 1, b = v & 2;
		CHECK(net.eval({a, b})[0] == oracle(a, b));
	}
}

TEST_CASE("off-set cover and constants")
{
	RawNetlist net = parse_blif(
			".model k\n.inputs a b\n.outputs y z0 z1\n"
			".names a b y\n11 0\n"  // y = !(a b)
			".names z0\n"           // constant 0 (empty cover)
			".names z1\n1\n"        // constant 1
			".end\n");
	CHECK(net.eval({true, true}) == std::vector<bool>{false, false, true});
	CHECK(net.eval({true, false}) == std::vector<bool>{true, false, true});
}

TEST_CASE("parse errors carry positions")
{
	CHECK_THROWS_WITH_AS(parse_blif(".model m\n.inputs a\n.outputs y\n"
									".names a y\n2 1\n.end\n"),
			doctest::Contains("bad cube literal"), parse_error);
	CHECK_THROWS_AS(parse_blif(".model m\n.inputs a\n.outputs y\n"
							   ".latch a y\n.end\n"),
			parse_error);
	CHECK_THROWS_WITH_AS(parse_blif(".model m\n.inputs a\n.outputs y\n"
									".names q y\n1 1\n.end\n"),
			doctest::Contains("undefined net"), parse_error);
	// cycle: x depends on y depends on x
	CHECK_THROWS_WITH_AS(parse_blif(".model m\n.inputs a\n.outputs y\n"
									".names y x\n1 1\n.names x y\n1 1\n.end\n"),
			doctest::Contains("cyclic"), parse_error);
	CHECK_THROWS_WITH_AS(parse_blif(".model m\n.inputs a\n.outputs y\n"
									".names a y\n1 1\n.names a y\n1 1\n.end\n"),
			doctest::Contains("driven more than once"), parse_error);
}

TEST_CASE("line continuation and comments")
{
	RawNetlist net = parse_blif(
			".model c # trailing comment\n.inputs a \\\nb\n.outputs y\n"
			".names a b y\n11 1\n.end\n");
	CHECK(net.inputs == std::vector<std::string>{"a", "b"});
}

// -------------------------------------------------------------- genlib

TEST_CASE("inverter gate: table and delay")
{
	CellLibrary lib = parse_genlib(
			"GATE inv 1 Y=!a; PIN * INV 1 999 1 0 1 0\n");
	REQUIRE(lib.gates.size() == 1);
	CHECK(lib.gates[0].fanin_count() == 1);
	CHECK(lib.gates[0].function.bits == 0b01);
	CHECK(lib.gates[0].delay == 1.0);
	CHECK(lib.inverter_present);
}

TEST_CASE("and2 delay is the max of rise and fall blocks")
{
	CellLibrary lib = parse_genlib(
			"GATE and2 2 Y=a*b; PIN * NONINV 1 999 1.9 0.2 1.5 0.1\n");
	REQUIRE(lib.gates.size() == 1);
	CHECK(lib.gates[0].delay == 1.9);
	CHECK(lib.gates[0].function.bits == 0b1000);
	CHECK(lib.gates[0].function.to_string() == "1000");
}

namespace {

// Independent recursive-descent evaluator: re-parses the expression text
// and evaluates it for one assignment, sharing nothing with the library
// parser's table construction.
struct ExprEval {
	std::string text;
	size_t pos = 0;
	const std::map<std::string, bool> &env;

	void skip()
	{
		while (pos < text.size() && isspace((unsigned char)text[pos]))
			pos++;
	}

	bool parse_or()
	{
		bool v = parse_and();
		for (skip(); pos < text.size() && text[pos] == '+'; skip()) {
			pos++;
			v = parse_and() || v;
		}
		return v;
	}

	bool parse_and()
	{
		bool v = parse_not();
		for (;;) {
			skip();
			if (pos < text.size() && text[pos] == '*') {
				pos++;
				v = parse_not() && v;
			} else if (pos < text.size() &&
					(isalnum((unsigned char)text[pos]) || text[pos] == '_' ||
							text[pos] == '(' || text[pos] == '!')) {
				v = parse_not() && v;
			} else {
				break;
			}
		}
		return v;
	}

	bool parse_not()
	{
		skip();
		if (pos < text.size() && text[pos] == '!') {
			pos++;
			return !parse_not();
		}
		bool v = parse_atom();
		for (skip(); pos < text.size() && text[pos] == '\''; skip()) {
			pos++;
			v = !v;
		}
		return v;
	}

	bool parse_atom()
	{
		skip();
		if (text[pos] == '(') {
			pos++;
			bool v = parse_or();
			skip();
			pos++; // ')'
			return v;
		}
		std::string name;
		while (pos < text.size() &&
				(isalnum((unsigned char)text[pos]) || text[pos] == '_'))
			name += text[pos++];
		if (name == "CONST0" || name == "0")
			return false;
		if (name == "CONST1" || name == "1")
			return true;
		return env.at(name);
	}
};

} // namespace

TEST_CASE("every mcnc-style table equals independent expression evaluation")
{
	// A library exercising all operators, juxtaposition and priorities.
	struct GateSpec {
		const char *name;
		const char *expr;
	};
	std::vector<GateSpec> specs = {
			{"inv", "!a"},
			{"buf", "a"},
			{"nand2", "!(a*b)"},
			{"nor3", "!(a+b+c)"},
			{"aoi21", "!(a*b+c)"},
			{"oai22", "!((a+b)*(c+d))"},
			{"xor2", "a*!b+!a*b"},
			{"mux", "s*a+!s b"},
			{"prime", "(a+b)'*c"},
	};
	std::string text;
	for (const GateSpec &s : specs)
		text += "GATE " + std::string(s.name) + " 1 O=" + s.expr +
				"; PIN * UNKNOWN 1 999 1 0 1 0\n";

	CellLibrary lib = parse_genlib(text);
	REQUIRE(lib.gates.size() == specs.size());
	for (size_t g = 0; g < specs.size(); g++) {
		const LibGate &gate = lib.gates[g];
		for (uint32_t v = 0; v < (1u << gate.fanin_count()); v++) {
			std::map<std::string, bool> env;
			for (int p = 0; p < gate.fanin_count(); p++)
				env[gate.pin_names[p]] = (v >> p) & 1;
			ExprEval ev{specs[g].expr, 0, env};
			INFO("gate ", gate.name, " assignment ", v);
			CHECK(gate.function.get(v) == ev.parse_or());
		}
	}
}

TEST_CASE("gate with more than six inputs is skipped with a warning")
{
	CellLibrary lib = parse_genlib(
			"GATE wide 1 O=a*b*c*d*e*f*g; PIN * NONINV 1 999 1 0 1 0\n"
			"GATE and2 2 O=a*b; PIN * NONINV 1 999 1 0 1 0\n");
	CHECK(lib.gates.size() == 1);
	REQUIRE(lib.warnings.size() == 1);
	CHECK(lib.warnings[0].find("wide") != std::string::npos);
}

TEST_CASE("genlib errors")
{
	CHECK_THROWS_AS(parse_genlib(""), parse_error);
	CHECK_THROWS_AS(parse_genlib("GATE bad 1 O=a*(b; PIN * INV 1 999 1 0 1 0\n"),
			parse_error);
	CHECK_THROWS_AS(parse_genlib("GATE dff 1 O=a; PIN * NONINV 1 999 1 0 1 0\n"),
			parse_error);
}

TEST_CASE("pin declaration order fixes the table variable order")
{
	// f = a * !b with explicit PIN lines reversing the appearance order.
	CellLibrary lib = parse_genlib(
			"GATE andb 2 O=a*!b;\n"
			"PIN b INV 1 999 1 0 2.5 0\n"
			"PIN a NONINV 1 999 1 0 1 0\n");
	const LibGate &g = lib.gates[0];
	REQUIRE(g.pin_names == std::vector<std::string>{"b", "a"});
	// pin0 = b, pin1 = a: f=1 iff a=1, b=0 -> assignment index 2
	CHECK(g.function.bits == 0b0100);
	CHECK(g.delay == 2.5);
}

TEST_CASE("built-in dff and splitter parameters")
{
	BuiltinParams params{0.5, 2.0, 0.25, 3.0};
	CellLibrary lib = parse_genlib(testutil::kAndInvLib, params);
	CHECK(lib.dff.delay == 0.5);
	CHECK(lib.dff.area == 2.0);
	CHECK(lib.splitter.delay == 0.25);
	CHECK(lib.splitter.area == 3.0);
	CHECK(lib.dff.function.bits == 0b10);
}

// -------------------------------------------------------------- report

TEST_CASE("report record round-trips and psd is definitional")
{
	MapStats stats;
	stats.gate_count = 7;
	stats.dff_count = 3;
	stats.splitter_count = 2;
	stats.depth = 2;
	stats.worst_stage_delay = 6.0;
	stats.psd = stats.worst_stage_delay * stats.depth;
	stats.runtime_seconds = 0.125;
	stats.iterations = 5;

	std::string text = write_report(stats);
	auto kv = parse_report(text);
	CHECK(kv.size() == 8);
	CHECK(kv.at("gates") == "7");
	CHECK(kv.at("dffs") == "3");
	CHECK(kv.at("splitters") == "2");
	CHECK(kv.at("depth") == "2");
	CHECK(std::stod(kv.at("psd")) == 12.0);
	CHECK(std::stod(kv.at("worst_stage_delay")) * std::stod(kv.at("depth")) ==
			std::stod(kv.at("psd")));
	CHECK(kv.at("iterations") == "5");

	auto prefixed = parse_report(write_report(stats, "phase1_"));
	CHECK(prefixed.count("phase1_psd") == 1);
}
