#include "sfqmap/genlib.hpp"

#include "sfqmap/netlist.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace sfqmap {

int CellLibrary::max_fanin() const
{
	int m = 0;
	for (const LibGate &g : gates)
		m = std::max(m, g.fanin_count());
	return m;
}

int CellLibrary::inverter_index() const
{
	for (size_t i = 0; i < gates.size(); i++)
		if (gates[i].fanin_count() == 1 && gates[i].function.bits == 0b01)
			return (int)i;
	return -1;
}

int CellLibrary::constant_index(bool value) const
{
	for (size_t i = 0; i < gates.size(); i++)
		if (gates[i].is_constant() && gates[i].function.get(0) == value)
			return (int)i;
	return -1;
}

const LibGate *CellLibrary::find(const std::string &name) const
{
	for (const LibGate &g : gates)
		if (g.name == name)
			return &g;
	if (dff.name == name)
		return &dff;
	if (splitter.name == name)
		return &splitter;
	return nullptr;
}

namespace {

struct Token {
	std::string text;
	int line;
	int column;
	bool is_symbol;
};

std::vector<Token> tokenize(const std::string &text)
{
	std::vector<Token> toks;
	int line = 1, column = 1;
	size_t i = 0;
	while (i < text.size()) {
		char c = text[i];
		if (c == '#') {
			while (i < text.size() && text[i] != '\n')
				i++;
			continue;
		}
		if (c == '\n') {
			i++;
			line++;
			column = 1;
			continue;
		}
		if (isspace((unsigned char)c)) {
			i++;
			column++;
			continue;
		}
		if (std::string("!'*+()=;").find(c) != std::string::npos) {
			toks.push_back({std::string(1, c), line, column, true});
			i++;
			column++;
			continue;
		}
		int start_col = column;
		std::string tok;
		while (i < text.size() && !isspace((unsigned char)text[i]) &&
				std::string("!'*+()=;#").find(text[i]) == std::string::npos) {
			tok += text[i++];
			column++;
		}
		toks.push_back({tok, line, start_col, false});
	}
	return toks;
}

// Boolean expression tree; leaves index into the gate's variable list.
struct Expr {
	enum Kind { VAR, NOT, AND, OR, CONST } kind;
	int var = 0;
	bool value = false;
	int a = -1, b = -1;
};

struct ExprParser {
	const std::vector<Token> &toks;
	size_t pos;
	std::vector<Expr> nodes;
	std::vector<std::string> vars; // appearance order
	std::map<std::string, int> var_index;

	ExprParser(const std::vector<Token> &toks, size_t pos) : toks(toks), pos(pos) {}

	[[noreturn]] void fail(const std::string &msg)
	{
		if (pos < toks.size())
			throw parse_error(msg + " near '" + toks[pos].text + "'",
					toks[pos].line, toks[pos].column);
		throw parse_error(msg + " at end of input");
	}

	bool at_symbol(const char *s) const
	{
		return pos < toks.size() && toks[pos].is_symbol && toks[pos].text == s;
	}

	int mk(Expr e)
	{
		nodes.push_back(e);
		return (int)nodes.size() - 1;
	}

	int parse_or()
	{
		int lhs = parse_and();
		while (at_symbol("+")) {
			pos++;
			int rhs = parse_and();
			lhs = mk({Expr::OR, 0, false, lhs, rhs});
		}
		return lhs;
	}

	bool starts_atom() const
	{
		if (pos >= toks.size())
			return false;
		if (!toks[pos].is_symbol)
			return true;
		return toks[pos].text == "(" || toks[pos].text == "!";
	}

	int parse_and()
	{
		int lhs = parse_not();
		for (;;) {
			if (at_symbol("*")) {
				pos++;
			} else if (!starts_atom()) {
				break; // juxtaposition only continues at an atom
			}
			int rhs = parse_not();
			lhs = mk({Expr::AND, 0, false, lhs, rhs});
		}
		return lhs;
	}

	int parse_not()
	{
		if (at_symbol("!")) {
			pos++;
			int a = parse_not();
			return mk({Expr::NOT, 0, false, a});
		}
		int a = parse_atom();
		while (at_symbol("'")) {
			pos++;
			a = mk({Expr::NOT, 0, false, a});
		}
		return a;
	}

	int parse_atom()
	{
		if (at_symbol("(")) {
			pos++;
			int e = parse_or();
			if (!at_symbol(")"))
				fail("expected ')'");
			pos++;
			while (at_symbol("'")) {
				pos++;
				e = mk({Expr::NOT, 0, false, e});
			}
			return e;
		}
		if (pos >= toks.size() || toks[pos].is_symbol)
			fail("expected operand");
		const std::string &name = toks[pos].text;
		pos++;
		if (name == "CONST0" || name == "0")
			return mk({Expr::CONST, 0, false});
		if (name == "CONST1" || name == "1")
			return mk({Expr::CONST, 0, true});
		auto it = var_index.find(name);
		int idx;
		if (it == var_index.end()) {
			idx = (int)vars.size();
			vars.push_back(name);
			var_index[name] = idx;
		} else {
			idx = it->second;
		}
		return mk({Expr::VAR, idx});
	}

	TruthTable eval(int node, const std::vector<int> &var_to_pin, int pins) const
	{
		const Expr &e = nodes[node];
		switch (e.kind) {
		case Expr::VAR:
			return TruthTable::variable(var_to_pin[e.var], pins);
		case Expr::CONST:
			return TruthTable::constant(e.value, pins);
		case Expr::NOT:
			return ~eval(e.a, var_to_pin, pins);
		case Expr::AND:
			return eval(e.a, var_to_pin, pins) & eval(e.b, var_to_pin, pins);
		case Expr::OR:
			return eval(e.a, var_to_pin, pins) | eval(e.b, var_to_pin, pins);
		}
		return {};
	}
};

LibGate make_identity_cell(const std::string &name, double delay, double area)
{
	LibGate g;
	g.name = name;
	g.area = area;
	g.delay = delay;
	g.output_name = "O";
	g.pin_names = {"a"};
	g.function = {0b10, 1};
	return g;
}

} // namespace

CellLibrary parse_genlib(const std::string &text, const BuiltinParams &builtins)
{
	CellLibrary lib;
	auto toks = tokenize(text);
	size_t pos = 0;

	auto expect_word = [&](const char *what) -> const Token & {
		if (pos >= toks.size() || toks[pos].is_symbol)
			throw parse_error(std::string("expected ") + what,
					pos < toks.size() ? toks[pos].line : 0,
					pos < toks.size() ? toks[pos].column : 0);
		return toks[pos++];
	};
	auto parse_number = [&](const char *what) -> double {
		const Token &t = expect_word(what);
		try {
			size_t used = 0;
			double v = std::stod(t.text, &used);
			if (used != t.text.size())
				throw std::invalid_argument("");
			return v;
		} catch (...) {
			throw parse_error(std::string("expected number for ") + what +
							", got '" + t.text + "'",
					t.line, t.column);
		}
	};

	while (pos < toks.size()) {
		const Token &head = toks[pos];
		if (head.is_symbol)
			throw parse_error("unexpected '" + head.text + "'", head.line, head.column);
		if (head.text != "GATE") {
			// Tolerate LATCH/SEQ style records by skipping to the next GATE.
			lib.warnings.push_back("skipping unsupported record '" + head.text + "'");
			while (pos < toks.size() && toks[pos].text != "GATE")
				pos++;
			continue;
		}
		pos++;

		LibGate gate;
		gate.name = expect_word("gate name").text;
		gate.area = parse_number("gate area");
		gate.output_name = expect_word("gate output").text;
		if (pos >= toks.size() || !toks[pos].is_symbol || toks[pos].text != "=")
			throw parse_error("expected '=' after gate output name",
					pos < toks.size() ? toks[pos].line : 0,
					pos < toks.size() ? toks[pos].column : 0);
		pos++;

		ExprParser ep(toks, pos);
		int root = ep.parse_or();
		pos = ep.pos;
		if (pos >= toks.size() || !toks[pos].is_symbol || toks[pos].text != ";")
			throw parse_error("expected ';' after gate expression",
					pos < toks.size() ? toks[pos].line : 0,
					pos < toks.size() ? toks[pos].column : 0);
		pos++;

		// PIN lines: 'PIN <name|*> <phase> <load> <max-load> <rise-block>
		// <rise-fanout> <fall-block> <fall-fanout>'.
		std::vector<std::string> pin_order;
		bool pin_star = false;
		double delay = 0.0;
		while (pos < toks.size() && toks[pos].text == "PIN") {
			pos++;
			std::string pin_name;
			if (pos < toks.size() && toks[pos].is_symbol && toks[pos].text == "*") {
				pin_name = "*";
				pos++;
			} else {
				pin_name = expect_word("pin name").text;
			}
			expect_word("pin phase");
			parse_number("input load");
			parse_number("max load");
			double rise = parse_number("rise block delay");
			parse_number("rise fanout delay");
			double fall = parse_number("fall block delay");
			parse_number("fall fanout delay");
			delay = std::max(delay, std::max(rise, fall));
			if (pin_name == "*")
				pin_star = true;
			else
				pin_order.push_back(pin_name);
		}
		gate.delay = delay;

		// Pin order: explicit PIN declarations first, remaining expression
		// variables in order of appearance.
		for (const std::string &p : pin_order)
			if (!ep.var_index.count(p))
				throw parse_error("PIN '" + p + "' not used by gate '" + gate.name + "'");
		for (const std::string &v : ep.vars)
			if (std::find(pin_order.begin(), pin_order.end(), v) == pin_order.end())
				pin_order.push_back(v);
		(void)pin_star;

		if ((int)pin_order.size() > TruthTable::kMaxVars) {
			lib.warnings.push_back("skipping gate '" + gate.name + "': more than " +
					std::to_string(TruthTable::kMaxVars) + " inputs");
			continue;
		}

		gate.pin_names = pin_order;
		std::vector<int> var_to_pin(ep.vars.size());
		for (size_t v = 0; v < ep.vars.size(); v++)
			var_to_pin[v] = (int)(std::find(pin_order.begin(), pin_order.end(),
								  ep.vars[v]) -
					pin_order.begin());
		gate.function = ep.eval(root, var_to_pin, (int)pin_order.size());

		lib.gates.push_back(std::move(gate));
	}

	if (lib.gates.empty())
		throw parse_error("empty library");

	for (const LibGate &g : lib.gates)
		if (g.name == "dff" || g.name == "splitter")
			throw parse_error("gate name '" + g.name +
					"' collides with a built-in cell; rename it");

	lib.dff = make_identity_cell("dff", builtins.dff_delay, builtins.dff_area);
	lib.splitter = make_identity_cell("splitter", builtins.splitter_delay,
			builtins.splitter_area);
	lib.inverter_present = lib.inverter_index() >= 0;
	return lib;
}

} // namespace sfqmap
