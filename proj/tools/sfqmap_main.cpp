//
// sfqmap -- technology mapper for single-flux-quantum logic
//

#include "sfqmap/pipeline.hpp"

#include <CLI11.hpp>

int main(int argc, char **argv)
{
	CLI::App app{"sfqmap: depth-minimizing, path-balancing technology mapper "
				 "for SFQ logic"};

	sfqmap::RunConfig cfg;
	app.add_option("--input", cfg.input_path, "input BLIF netlist")->required();
	app.add_option("--lib", cfg.lib_path, "genlib cell library")->required();
	app.add_option("--output", cfg.output_path, "mapped BLIF to write");
	app.add_option("--report", cfg.report_path, "run report to write");
	app.add_option("-i", cfg.iterations, "peephole optimization iterations")
			->check(CLI::NonNegativeNumber);
	app.add_option("-k", cfg.k, "cut size (default: min(6, max library fanin))")
			->check(CLI::Range(2, 6));
	app.add_option("--dff-delay", cfg.dff_delay, "built-in DFF delay");
	app.add_option("--dff-area", cfg.dff_area, "built-in DFF area");
	app.add_option("--splitter-delay", cfg.splitter_delay, "built-in splitter delay");
	app.add_option("--splitter-area", cfg.splitter_area, "built-in splitter area");
	app.add_flag("--balance-outputs", cfg.balance_outputs,
			"raise every primary output to a common level");
	app.add_flag("--baseline", cfg.baseline,
			"balancing-unaware mode: break depth ties by area instead of DFFs");
	app.add_flag("--verify", cfg.verify,
			"check mapped-vs-input equivalence before writing");

	CLI11_PARSE(app, argc, argv);
	return sfqmap::run_files(cfg);
}
