#include "sfqmap/report.hpp"

#include <charconv>
#include <sstream>

namespace sfqmap {

namespace {

// Shortest round-trip decimal form.
std::string format_double(double v)
{
	char buf[64];
	auto res = std::to_chars(buf, buf + sizeof(buf), v);
	return std::string(buf, res.ptr);
}

} // namespace

std::string write_report(const MapStats &stats, const std::string &key_prefix)
{
	std::ostringstream out;
	auto emit = [&](const char *key, const std::string &value) {
		out << key_prefix << key << " " << value << "\n";
	};
	emit("gates", std::to_string(stats.gate_count));
	emit("dffs", std::to_string(stats.dff_count));
	emit("splitters", std::to_string(stats.splitter_count));
	emit("depth", std::to_string(stats.depth));
	emit("worst_stage_delay", format_double(stats.worst_stage_delay));
	emit("psd", format_double(stats.psd));
	emit("runtime_seconds", format_double(stats.runtime_seconds));
	emit("iterations", std::to_string(stats.iterations));
	return out.str();
}

std::map<std::string, std::string> parse_report(const std::string &text)
{
	std::map<std::string, std::string> out;
	std::istringstream in(text);
	std::string line;
	while (std::getline(in, line)) {
		size_t space = line.find(' ');
		if (space == std::string::npos)
			continue;
		out[line.substr(0, space)] = line.substr(space + 1);
	}
	return out;
}

} // namespace sfqmap
