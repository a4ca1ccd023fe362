#pragma once

#include <json.hpp>

#include "sdcwalk/harness/run_spec.hpp"

namespace sdcwalk::harness {

// Runs the experiment, writes its data files (and plots for svg) under
// spec.out_dir and returns the run summary. Data files depend only on the
// spec; the summary additionally carries the wall time.
//
// Library errors propagate unchanged; failed writes raise IoError.
nlohmann::ordered_json run(const RunSpec& spec);

}  // namespace sdcwalk::harness
