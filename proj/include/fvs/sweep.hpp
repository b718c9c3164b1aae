#pragma once

#include <functional>
#include <string>
#include <vector>

namespace fvs {

// Campaign executor: evaluates fn(trial) for trial = 0..trials-1 and
// returns the per-trial result lines in trial order. Trials must be
// independent; each owns its instances.

// Reference implementation: a plain loop.
std::vector<std::string> run_sweep_serial(int trials, const std::function<std::string(int)>& fn);

// OpenMP worker pool when compiled with OpenMP, otherwise falls back to the
// serial reference. Output is merged in trial order, so both executors
// produce identical results.
std::vector<std::string> run_sweep_parallel(int trials, const std::function<std::string(int)>& fn);

}  // namespace fvs
