#pragma once

#include <string>

namespace morsetw {

// Runs the pipeline over every *.tri file in dir (sorted by filename) and
// returns a CSV report. Dimension-2 files get er, dimension-3 files the
// optimal critical-face count cM; both get the widths of the decompositions
// used and per-stage wall times in milliseconds. A file that fails is
// reported in its `error` column instead of aborting the run. Three summary
// rows (min, max, mean over the files that produced each value) close the
// table. MORSETW_THREADS sets the number of worker threads (default 1); the
// row order does not depend on it.
std::string run_experiment(const std::string& dir);

} // namespace morsetw
