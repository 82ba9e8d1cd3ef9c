//
// genbench -- emits the benchmark netlists used by the test suites
//

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Blif {
	std::string model;
	std::vector<std::string> inputs, outputs;
	std::ostringstream body;

	std::string in(const std::string &name)
	{
		inputs.push_back(name);
		return name;
	}

	void out(const std::string &name) { outputs.push_back(name); }

	void table(const std::vector<std::string> &ins, const std::string &output,
			const std::vector<std::string> &rows)
	{
		body << ".names";
		for (const std::string &i : ins)
			body << " " << i;
		body << " " << output << "\n";
		for (const std::string &r : rows)
			body << r << "\n";
	}

	void and2(const std::string &a, const std::string &b, const std::string &y)
	{
		table({a, b}, y, {"11 1"});
	}
	void or2(const std::string &a, const std::string &b, const std::string &y)
	{
		table({a, b}, y, {"1- 1", "-1 1"});
	}
	void xor2(const std::string &a, const std::string &b, const std::string &y)
	{
		table({a, b}, y, {"10 1", "01 1"});
	}
	void xor3(const std::string &a, const std::string &b, const std::string &c,
			const std::string &y)
	{
		table({a, b, c}, y, {"100 1", "010 1", "001 1", "111 1"});
	}
	void maj3(const std::string &a, const std::string &b, const std::string &c,
			const std::string &y)
	{
		table({a, b, c}, y, {"11- 1", "1-1 1", "-11 1"});
	}

	std::string text() const
	{
		std::ostringstream out;
		out << ".model " << model << "\n.inputs";
		for (const std::string &i : inputs)
			out << " " << i;
		out << "\n.outputs";
		for (const std::string &o : outputs)
			out << " " << o;
		out << "\n" << body.str() << ".end\n";
		return out.str();
	}
};

std::string idx(const std::string &base, int i) { return base + std::to_string(i); }

Blif ripple_adder(int n)
{
	Blif b;
	b.model = "rca" + std::to_string(n);
	for (int i = 0; i < n; i++)
		b.in(idx("a", i));
	for (int i = 0; i < n; i++)
		b.in(idx("b", i));
	b.in("cin");
	std::string carry = "cin";
	for (int i = 0; i < n; i++) {
		b.xor3(idx("a", i), idx("b", i), carry, idx("s", i));
		std::string next = i + 1 == n ? "cout" : idx("c", i + 1);
		b.maj3(idx("a", i), idx("b", i), carry, next);
		carry = next;
	}
	for (int i = 0; i < n; i++)
		b.out(idx("s", i));
	b.out("cout");
	return b;
}

Blif lookahead_adder(int n)
{
	Blif b;
	b.model = "cla" + std::to_string(n);
	for (int i = 0; i < n; i++)
		b.in(idx("a", i));
	for (int i = 0; i < n; i++)
		b.in(idx("b", i));
	b.in("cin");
	for (int i = 0; i < n; i++) {
		b.xor2(idx("a", i), idx("b", i), idx("p", i));
		b.and2(idx("a", i), idx("b", i), idx("g", i));
	}
	// c[i+1] = g[i] + p[i]g[i-1] + ... + p[i..0]cin, written as one cover:
	// the generate/propagate nets fan out heavily.
	for (int i = 0; i < n; i++) {
		std::vector<std::string> ins;
		for (int j = i; j >= 0; j--)
			ins.push_back(idx("g", j));
		for (int j = i; j >= 0; j--)
			ins.push_back(idx("p", j));
		ins.push_back("cin");
		std::vector<std::string> rows;
		int width = (int)ins.size();
		for (int j = i; j >= 0; j--) {
			// term p[i]..p[j+1] g[j]
			std::string row(width, '-');
			row[i - j] = '1'; // g[j] position
			for (int t = i; t > j; t--)
				row[(i + 1) + (i - t)] = '1';
			rows.push_back(row + " 1");
		}
		{
			std::string row(width, '-');
			for (int t = i; t >= 0; t--)
				row[(i + 1) + (i - t)] = '1';
			row[width - 1] = '1'; // cin
			rows.push_back(row + " 1");
		}
		b.table(ins, i + 1 == n ? "cout" : idx("c", i + 1), rows);
	}
	b.xor2(idx("p", 0), "cin", idx("s", 0));
	for (int i = 1; i < n; i++)
		b.xor2(idx("p", i), idx("c", i), idx("s", i));
	for (int i = 0; i < n; i++)
		b.out(idx("s", i));
	b.out("cout");
	return b;
}

Blif array_multiplier(int n)
{
	Blif b;
	b.model = "mul" + std::to_string(n);
	for (int i = 0; i < n; i++)
		b.in(idx("a", i));
	for (int i = 0; i < n; i++)
		b.in(idx("b", i));
	// partial products
	for (int i = 0; i < n; i++)
		for (int j = 0; j < n; j++)
			b.and2(idx("a", i), idx("b", j),
					"pp" + std::to_string(i) + "_" + std::to_string(j));
	// column compression, ripple style (extra slots absorb structural
	// carries out of the top column, which are logically zero)
	int t = 0;
	std::vector<std::vector<std::string>> columns(2 * n + 2);
	for (int i = 0; i < n; i++)
		for (int j = 0; j < n; j++)
			columns[i + j].push_back(
					"pp" + std::to_string(i) + "_" + std::to_string(j));
	for (int col = 0; col < 2 * n + 1; col++) {
		while (columns[col].size() > 1) {
			if (columns[col].size() == 2) {
				std::string x = columns[col][0], y = columns[col][1];
				columns[col].erase(columns[col].begin(), columns[col].begin() + 2);
				std::string s = "t" + std::to_string(t++);
				std::string c = "t" + std::to_string(t++);
				b.xor2(x, y, s);
				b.and2(x, y, c);
				columns[col].push_back(s);
				columns[col + 1].push_back(c);
			} else {
				std::string x = columns[col][0], y = columns[col][1],
							z = columns[col][2];
				columns[col].erase(columns[col].begin(), columns[col].begin() + 3);
				std::string s = "t" + std::to_string(t++);
				std::string c = "t" + std::to_string(t++);
				b.xor3(x, y, z, s);
				b.maj3(x, y, z, c);
				columns[col].push_back(s);
				columns[col + 1].push_back(c);
			}
		}
	}
	for (int col = 0; col < 2 * n; col++) {
		std::string p = idx("m", col);
		if (columns[col].empty())
			b.table({}, p, {}); // constant 0 column
		else
			b.table({columns[col][0]}, p, {"1 1"});
		b.out(p);
	}
	return b;
}

Blif parity(int n)
{
	Blif b;
	b.model = "parity" + std::to_string(n);
	std::vector<std::string> layer;
	for (int i = 0; i < n; i++)
		layer.push_back(b.in(idx("x", i)));
	int t = 0;
	while (layer.size() > 1) {
		std::vector<std::string> next;
		for (size_t i = 0; i + 1 < layer.size(); i += 2) {
			std::string y = "t" + std::to_string(t++);
			b.xor2(layer[i], layer[i + 1], y);
			next.push_back(y);
		}
		if (layer.size() & 1)
			next.push_back(layer.back());
		layer = next;
	}
	b.table({layer[0]}, "par", {"1 1"});
	b.out("par");
	return b;
}

Blif decoder(int n)
{
	Blif b;
	b.model = "dec" + std::to_string(n);
	for (int i = 0; i < n; i++)
		b.in(idx("s", i));
	b.in("en");
	for (int v = 0; v < (1 << n); v++) {
		std::vector<std::string> ins;
		for (int i = 0; i < n; i++)
			ins.push_back(idx("s", i));
		ins.push_back("en");
		std::string row;
		for (int i = 0; i < n; i++)
			row += ((v >> i) & 1) ? '1' : '0';
		row += "1";
		std::string o = idx("y", v);
		b.table(ins, o, {row + " 1"});
		b.out(o);
	}
	return b;
}

Blif mux(int selects)
{
	Blif b;
	int n = 1 << selects;
	b.model = "mux" + std::to_string(n);
	for (int i = 0; i < n; i++)
		b.in(idx("d", i));
	for (int i = 0; i < selects; i++)
		b.in(idx("s", i));
	std::vector<std::string> ins;
	for (int i = 0; i < selects; i++)
		ins.push_back(idx("s", i));
	for (int i = 0; i < n; i++)
		ins.push_back(idx("d", i));
	std::vector<std::string> rows;
	for (int v = 0; v < n; v++) {
		std::string row;
		for (int i = 0; i < selects; i++)
			row += ((v >> i) & 1) ? '1' : '0';
		row += std::string(n, '-');
		row[selects + v] = '1';
		rows.push_back(row + " 1");
	}
	b.table(ins, "y", rows);
	b.out("y");
	return b;
}

Blif alu(int n)
{
	Blif b;
	b.model = "alu" + std::to_string(n);
	for (int i = 0; i < n; i++)
		b.in(idx("a", i));
	for (int i = 0; i < n; i++)
		b.in(idx("b", i));
	b.in("op0");
	b.in("op1");
	std::string carry;
	for (int i = 0; i < n; i++) {
		b.and2(idx("a", i), idx("b", i), idx("and", i));
		b.or2(idx("a", i), idx("b", i), idx("or", i));
		b.xor2(idx("a", i), idx("b", i), idx("xor", i));
		if (i == 0) {
			b.table({idx("xor", 0)}, idx("sum", 0), {"1 1"});
			b.and2(idx("a", 0), idx("b", 0), idx("cc", 0));
			carry = idx("cc", 0);
		} else {
			b.xor2(idx("xor", i), carry, idx("sum", i));
			b.maj3(idx("a", i), idx("b", i), carry, idx("cc", i));
			carry = idx("cc", i);
		}
		b.table({"op0", "op1", idx("and", i), idx("or", i), idx("xor", i),
						idx("sum", i)},
				idx("f", i),
				{"001--- 1", "10-1-- 1", "01--1- 1", "11---1 1"});
		b.out(idx("f", i));
	}
	return b;
}

// Random layered netlist with local fanin windows; and/or/xor mix.
Blif random_logic(int n, uint64_t seed)
{
	Blif b;
	b.model = "rand" + std::to_string(n);
	std::mt19937_64 rng(seed);
	int num_inputs = std::max(4, n / 16);
	std::vector<std::string> pool;
	for (int i = 0; i < num_inputs; i++)
		pool.push_back(b.in(idx("x", i)));

	int window = 48;
	for (int i = 0; i < n; i++) {
		std::string y = "w" + std::to_string(i);
		size_t lo = pool.size() > (size_t)window ? pool.size() - window : 0;
		auto pick = [&]() {
			return pool[lo + rng() % (pool.size() - lo)];
		};
		std::string a = pick(), c = pick();
		while (c == a)
			c = pick();
		switch (rng() % 3) {
		case 0:
			b.and2(a, c, y);
			break;
		case 1:
			b.or2(a, c, y);
			break;
		default:
			b.xor2(a, c, y);
			break;
		}
		pool.push_back(y);
	}
	// last few wires become outputs
	int outs = std::max(1, n / 32);
	for (int i = 0; i < outs; i++)
		b.out("w" + std::to_string(n - 1 - i));
	return b;
}

void write(const std::string &dir, const Blif &b)
{
	std::string path = dir + "/" + b.model + ".blif";
	std::ofstream out(path);
	if (!out) {
		std::cerr << "cannot write " << path << "\n";
		exit(1);
	}
	out << b.text();
	std::cout << path << "\n";
}

} // namespace

int main(int argc, char **argv)
{
	std::vector<std::string> args(argv + 1, argv + argc);
	if (args.size() == 2 && args[0] == "--dir") {
		const std::string &dir = args[1];
		write(dir, ripple_adder(8));
		write(dir, lookahead_adder(8));
		write(dir, array_multiplier(4));
		write(dir, parity(16));
		write(dir, decoder(5));
		write(dir, mux(3));
		write(dir, alu(4));
		return 0;
	}
	if (args.size() == 4 && args[0] == "rand") {
		int n = std::stoi(args[1]);
		uint64_t seed = std::stoull(args[2]);
		std::ofstream out(args[3]);
		out << random_logic(n, seed).text();
		return 0;
	}
	std::cerr << "usage: genbench --dir <directory>\n"
			  << "       genbench rand <nodes> <seed> <output.blif>\n";
	return 1;
}
