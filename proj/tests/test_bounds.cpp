#include <algorithm>

#include "doctest.h"
#include "fvs/bounds.hpp"
#include "fvs/instances.hpp"
#include "fvs/oracle.hpp"
#include "test_support.hpp"

using namespace fvs;

TEST_SUITE_BEGIN("bounds");

TEST_CASE("bidirected odd cycle recognition") {
    CHECK(is_bidirected_odd_cycle(bidirected_odd_cycle(2)) == 5);
    CHECK(is_bidirected_odd_cycle(bidirected_odd_cycle(4)) == 9);
    // Even bidirected cycle.
    std::vector<Arc> arcs;
    for (int i = 0; i < 4; ++i) {
        arcs.emplace_back(i, (i + 1) % 4);
        arcs.emplace_back((i + 1) % 4, i);
    }
    CHECK_FALSE(is_bidirected_odd_cycle(Digraph::from_arcs(4, arcs)).has_value());
    CHECK_FALSE(is_bidirected_odd_cycle(fig10()).has_value());
}

TEST_CASE("degree-5 orgraph pipeline meets the half bound") {
    FeedbackVertexSet f = fvs_orgraph_delta5(fig12());
    CHECK(f.vertices.size() <= 3);
    auto exact = fvs_exact(fig12());
    CHECK(exact->vertices.size() == 3);  // bound met with equality

    CHECK(fvs_orgraph_delta5(fig4()).vertices.size() <= 3);

    Digraph dag = Digraph::from_arcs(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
    CHECK(fvs_orgraph_delta5(dag).vertices.empty());

    CHECK_THROWS_AS(fvs_orgraph_delta5(fig10()), PreconditionError);
    CHECK_THROWS_AS(fvs_orgraph_delta5(paley7()), PreconditionError);
}

TEST_CASE("degree-5 digraph pipeline meets the two-thirds bound") {
    FeedbackVertexSet f = fvs_digraph_delta5(fig14());
    CHECK(f.vertices.size() <= 4);

    Digraph two = Digraph::from_arcs(2, {{0, 1}, {1, 0}});
    CHECK(fvs_digraph_delta5(two).vertices.size() == 1);

    // Disjoint bidirected triangles: two deletions per triangle.
    std::vector<Arc> arcs;
    for (int base : {0, 3})
        for (int i = 0; i < 3; ++i) {
            int a = base + i, b = base + (i + 1) % 3;
            arcs.emplace_back(a, b);
            arcs.emplace_back(b, a);
        }
    Digraph tris = Digraph::from_arcs(6, arcs);
    CHECK(fvs_digraph_delta5(tris).vertices.size() == 4);
}

TEST_CASE("degree-4 digraph pipeline and the exceptional class") {
    Delta4DigraphResult co = fvs_digraph_delta4(bidirected_odd_cycle(2));
    CHECK(co.status == Delta4DigraphResult::Status::CoExact);
    CHECK(co.fvs.vertices.size() == 3);

    Delta4DigraphResult f10 = fvs_digraph_delta4(fig10());
    CHECK(f10.status == Delta4DigraphResult::Status::Ok);
    CHECK(f10.fvs.vertices.size() <= 2);

    Delta4DigraphResult tri = fvs_digraph_delta4(test::pattern_graph(HKind::H1));
    CHECK(tri.fvs.vertices.size() == 1);

    CHECK_THROWS_AS(fvs_digraph_delta4(Digraph::from_arcs(4, {{0, 1}, {2, 3}})),
                    PreconditionError);
}

TEST_CASE("exceptional odd cycles sit strictly above the half bound") {
    for (int k = 1; k <= 4; ++k) {
        Digraph co = bidirected_odd_cycle(k);
        auto exact = fvs_exact(co);
        REQUIRE(exact);
        CHECK(static_cast<int>(exact->vertices.size()) == k + 1);
        CHECK(2 * (k + 1) > co.order());
    }
}

TEST_CASE("degree-4 orgraph pipeline hits the seventh bound") {
    OrgraphDelta4Result r = fvs_orgraph_delta4(fig4());
    REQUIRE(r.status == EngineStatus::Ok);
    CHECK(r.fvs.vertices.size() == 3);

    OrgraphDelta4Result h3 = fvs_orgraph_delta4(test::pattern_graph(HKind::H3));
    CHECK(h3.fvs.vertices.size() == 2);

    Digraph dag = Digraph::from_arcs(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(fvs_orgraph_delta4(dag).fvs.vertices.empty());

    // Disconnected inputs are handled per component here.
    std::vector<Arc> arcs{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
    OrgraphDelta4Result two = fvs_orgraph_delta4(Digraph::from_arcs(6, arcs));
    CHECK(two.fvs.vertices.size() == 2);
}

TEST_CASE("pipelines on random instances stay certified and bounded") {
    for (uint64_t seed = 0; seed < 300; ++seed) {
        Digraph d3 = rand_bounded(4 + seed % 12, 5, true, seed * 83 + 1, true);
        auto f3 = fvs_orgraph_delta5(d3);
        CHECK(static_cast<int>(f3.vertices.size()) <= d3.order() / 2);

        Digraph d4 = rand_bounded(4 + seed % 12, 5, false, seed * 89 + 2);
        auto f4 = fvs_digraph_delta5(d4);
        CHECK(3 * static_cast<int>(f4.vertices.size()) <= 2 * d4.order());

        Digraph d2 = rand_bounded(4 + seed % 12, 4, false, seed * 97 + 3, true);
        if (!is_bidirected_odd_cycle(d2)) {
            Delta4DigraphResult r2 = fvs_digraph_delta4(d2);
            REQUIRE(r2.status == Delta4DigraphResult::Status::Ok);
            CHECK(static_cast<int>(r2.fvs.vertices.size()) <= d2.order() / 2);
        }
    }
}

TEST_CASE("bound reports") {
    BoundReport r1 = bound_report(fig4(), Method::Thm1, 3, 3, "fig4");
    CHECK(r1.bound_num == 3);  // (7 + 14 + 0) / 7 reduced
    CHECK(r1.bound_den == 1);
    CHECK(r1.floor_bound() == 3);
    CHECK(r1.tight);

    BoundReport r4 = bound_report(fig14(), Method::Thm4, 4, 4, "fig14");
    CHECK(r4.floor_bound() == 4);
    CHECK(r4.tight);

    Digraph dag = Digraph::from_arcs(10, {{0, 1}, {1, 2}, {2, 3}});
    BoundReport r3 = bound_report(dag, Method::Thm3, 0, 0, "dag10");
    CHECK(r3.bound_num == 5);
    CHECK(r3.floor_bound() == 5);
    CHECK_FALSE(r3.tight);

    CHECK(BoundReport::csv_header() == "instance,method,n,m,h,bound,achieved,exact,tight");
    CHECK(r1.csv_row() == "fig4,thm1,7,14,0,3/1,3,3,1");
}

TEST_SUITE_END();
