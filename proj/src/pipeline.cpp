#include "sfqmap/pipeline.hpp"

#include "sfqmap/balancer.hpp"
#include "sfqmap/cut_enum.hpp"
#include "sfqmap/dp_mapper.hpp"
#include "sfqmap/mapped_io.hpp"
#include "sfqmap/oracle.hpp"
#include "sfqmap/report.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace sfqmap {

namespace {

MapStats collect_stats(const MappedNetwork &net, const StageDelayModel &model)
{
	MapStats s;
	net.count_cells(s.gate_count, s.dff_count, s.splitter_count);
	s.depth = compute_levels(net).depth;
	s.worst_stage_delay = worst_stage_delay(net, model);
	s.psd = s.worst_stage_delay * s.depth;
	return s;
}

} // namespace

RunResult run_pipeline(const RawNetlist &net, const CellLibrary &lib, const RunConfig &cfg)
{
	auto t0 = std::chrono::steady_clock::now();
	auto elapsed = [&t0]() {
		return std::chrono::duration<double>(
				std::chrono::steady_clock::now() - t0)
				.count();
	};

	RunResult result;
	result.model_name = net.model_name.empty() ? "mapped" : net.model_name;

	SubjectGraph graph = build_subject_graph(net);

	CutParams cut_params;
	cut_params.k = cfg.k > 0 ? cfg.k
							 : std::min(TruthTable::kMaxVars,
									   std::max(2, lib.max_fanin()));
	std::vector<CutSet> cuts = enumerate_cuts(graph, cut_params);

	Matcher matcher(lib);
	MapperOptions map_options;
	map_options.baseline = cfg.baseline;
	MatchTable table = minimize_depth_pb(graph, cuts, matcher, map_options);
	MappedNetwork cover = recover_cover(table, graph, cuts, matcher);

	StageDelayModel model = StageDelayModel::from(lib);
	result.phase1 = insert_splitters(insert_dffs(cover, cfg.balance_outputs));
	result.phase1_stats = collect_stats(result.phase1, model);
	result.phase1_stats.iterations = 0;
	result.phase1_stats.runtime_seconds = elapsed();

	PeepholeConfig peephole;
	peephole.iterations = cfg.iterations;
	peephole.balance_outputs = cfg.balance_outputs;
	int used = 0;
	result.tuned = tune_psd(result.phase1, peephole, model, &used);

	result.tuned_stats = collect_stats(result.tuned, model);
	result.tuned_stats.iterations = used;
	result.tuned_stats.runtime_seconds = elapsed();

	result.mapped_blif = write_mapped_blif(result.tuned, result.model_name);
	result.report = write_report(result.phase1_stats, "phase1_") +
			write_report(result.tuned_stats, "final_");
	return result;
}

int run_files(const RunConfig &cfg)
{
	try {
		auto slurp = [](const std::string &path, const char *what) {
			std::ifstream in(path);
			if (!in)
				throw std::runtime_error(std::string("cannot open ") + what +
						" file '" + path + "'");
			std::ostringstream buf;
			buf << in.rdbuf();
			return buf.str();
		};

		RawNetlist net = parse_blif(slurp(cfg.input_path, "input"));
		BuiltinParams builtins{cfg.dff_delay, cfg.dff_area, cfg.splitter_delay,
				cfg.splitter_area};
		CellLibrary lib = parse_genlib(slurp(cfg.lib_path, "library"), builtins);
		for (const std::string &w : lib.warnings)
			std::cerr << "warning: " << w << "\n";

		RunResult result = run_pipeline(net, lib, cfg);

		if (cfg.verify) {
			auto eq = oracle::check_equivalence(net, result.tuned);
			if (!eq.equivalent) {
				std::cerr << "error: mapped network is not equivalent to the "
							 "input (counterexample found over "
						  << eq.patterns_checked << " patterns)\n";
				return 1;
			}
		}

		if (!cfg.output_path.empty()) {
			std::ofstream out(cfg.output_path);
			if (!out)
				throw std::runtime_error("cannot write output file '" +
						cfg.output_path + "'");
			out << result.mapped_blif;
		}
		if (!cfg.report_path.empty()) {
			std::ofstream out(cfg.report_path);
			if (!out)
				throw std::runtime_error("cannot write report file '" +
						cfg.report_path + "'");
			out << result.report;
		}
		return 0;
	} catch (const std::exception &e) {
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	}
}

} // namespace sfqmap
