#include "doctest.h"
#include "fvs/bounds.hpp"
#include "fvs/instances.hpp"
#include "fvs/sweep.hpp"

using namespace fvs;

TEST_SUITE_BEGIN("sweep");

TEST_CASE("parallel executor reproduces the serial reference") {
    auto row = [](int t) {
        SplitMix64 rng(100 + t);
        Digraph d = rand_bounded(5 + t % 9, 5, t % 2 == 0, rng.next());
        int size = static_cast<int>(fvs_digraph_delta5(d).vertices.size());
        return std::to_string(t) + ":" + std::to_string(size);
    };
    auto serial = run_sweep_serial(500, row);
    auto parallel = run_sweep_parallel(500, row);
    CHECK(serial == parallel);
    CHECK(serial.size() == 500);
}

TEST_CASE("zero trials produce an empty row set") {
    auto rows = run_sweep_parallel(0, [](int) { return std::string("x"); });
    CHECK(rows.empty());
}

TEST_SUITE_END();
