// Compares the serial reference sweep executor against the OpenMP one on a
// realistic campaign (degree-5 pipeline over random orgraphs) and checks
// that both produce identical rows.

#include <chrono>
#include <iostream>

#include "fvs/bounds.hpp"
#include "fvs/instances.hpp"
#include "fvs/sweep.hpp"

using namespace fvs;

namespace {

std::string trial_row(int t) {
    SplitMix64 rng(0x5eedULL + 0x9e3779b97f4a7c15ULL * (t + 1));
    int n = 6 + static_cast<int>(rng.below(12));
    Digraph d = rand_bounded(n, 5, true, rng.next(), true);
    FeedbackVertexSet f = fvs_orgraph_delta5(d);
    return std::to_string(t) + "," + std::to_string(d.order()) + "," +
           std::to_string(f.vertices.size());
}

template <typename F>
double timed(F&& f, std::vector<std::string>& out) {
    auto t0 = std::chrono::steady_clock::now();
    out = f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    int trials = argc > 1 ? std::atoi(argv[1]) : 20000;
    std::vector<std::string> serial_rows, parallel_rows;
    double ts = timed([&] { return run_sweep_serial(trials, trial_row); }, serial_rows);
    double tp = timed([&] { return run_sweep_parallel(trials, trial_row); }, parallel_rows);
    bool same = serial_rows == parallel_rows;
    std::cout << "trials " << trials << '\n';
    std::cout << "serial_s " << ts << '\n';
    std::cout << "parallel_s " << tp << '\n';
    std::cout << "speedup " << (tp > 0 ? ts / tp : 0.0) << '\n';
    std::cout << "identical " << (same ? 1 : 0) << '\n';
    return same ? 0 : 1;
}
