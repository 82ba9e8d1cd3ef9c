//
// sfqmap -- end-to-end mapping pipeline
//

#pragma once

#include "sfqmap/genlib.hpp"
#include "sfqmap/mapped_network.hpp"
#include "sfqmap/netlist.hpp"
#include "sfqmap/peephole.hpp"

#include <string>

namespace sfqmap {

struct RunConfig {
	std::string input_path;
	std::string lib_path;
	std::string output_path;
	std::string report_path;
	int iterations = 5; // -i
	int k = 0;          // 0 selects min(6, max library fanin)
	double dff_delay = 1.0;
	double dff_area = 1.0;
	double splitter_delay = 1.0;
	double splitter_area = 1.0;
	bool balance_outputs = false;
	bool baseline = false;
	bool verify = false;
};

struct RunResult {
	std::string model_name;
	MappedNetwork phase1;    // balanced, legalized, before peephole tuning
	MappedNetwork tuned;     // after tune_psd
	MapStats phase1_stats;
	MapStats tuned_stats;
	std::string mapped_blif; // emission of `tuned`
	std::string report;      // phase1_* and final_* records
};

// parse -> subject graph -> cuts -> depth/balancing DP -> cover recovery
// -> DFF insertion -> splitter legalization -> PSD tuning -> emission.
// The returned networks reference `lib`; it must outlive them.
RunResult run_pipeline(const RawNetlist &net, const CellLibrary &lib, const RunConfig &cfg);

// File-level driver: reads input/library, runs, writes artifacts.
// Returns a process exit code and prints diagnostics to stderr on failure.
int run_files(const RunConfig &cfg);

} // namespace sfqmap
