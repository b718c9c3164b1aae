#include "fvs/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fvs {

std::vector<std::string> run_sweep_serial(int trials,
                                          const std::function<std::string(int)>& fn) {
    std::vector<std::string> rows(trials);
    for (int t = 0; t < trials; ++t) rows[t] = fn(t);
    return rows;
}

std::vector<std::string> run_sweep_parallel(int trials,
                                            const std::function<std::string(int)>& fn) {
#ifdef _OPENMP
    std::vector<std::string> rows(trials);
#pragma omp parallel for schedule(dynamic, 16)
    for (int t = 0; t < trials; ++t) rows[t] = fn(t);
    return rows;
#else
    return run_sweep_serial(trials, fn);
#endif
}

}  // namespace fvs
