#include <algorithm>

#include "doctest.h"
#include "fvs/hclass.hpp"
#include "fvs/instances.hpp"
#include "fvs/oracle.hpp"
#include "test_support.hpp"

using namespace fvs;

TEST_SUITE_BEGIN("hclass");

TEST_CASE("patterns are recognized as single blocks") {
    for (HKind kind : {HKind::H1, HKind::H2, HKind::H3}) {
        Digraph d = test::pattern_graph(kind);
        auto dec = recognize_h(d);
        REQUIRE(dec);
        REQUIRE(dec->blocks.size() == 1);
        CHECK(dec->blocks[0].kind == kind);
        CHECK(dec->tree_arcs.empty());
        CHECK(validate_decomposition(d, *dec));
    }
}

TEST_CASE("composite member decomposes into four blocks") {
    Digraph d = test::composite_h16();
    auto dec = recognize_h(d);
    REQUIRE(dec);
    CHECK(dec->blocks.size() == 4);
    CHECK(dec->tree_arcs.size() == 3);
    std::vector<int> kinds;
    for (const auto& b : dec->blocks) kinds.push_back(static_cast<int>(b.kind));
    std::sort(kinds.begin(), kinds.end());
    CHECK(kinds == std::vector<int>{0, 0, 1, 2});  // two H1, one H2, one H3
    CHECK(validate_decomposition(d, *dec));
}

TEST_CASE("non-members are rejected") {
    CHECK_FALSE(recognize_h(fig4()).has_value());
    CHECK_FALSE(recognize_h(Digraph::from_arcs(2, {{0, 1}})).has_value());
    CHECK_FALSE(recognize_h(bidirected_odd_cycle(1)).has_value());
    // Two blocks joined by two arcs is not a member.
    std::vector<Arc> arcs{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}};
    CHECK_FALSE(recognize_h(Digraph::from_arcs(6, arcs)).has_value());
    // Disjoint union of two members is connected-only territory.
    std::vector<Arc> dis{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
    CHECK_FALSE(recognize_h(Digraph::from_arcs(6, dis)).has_value());
}

TEST_CASE("component counting") {
    std::vector<Arc> arcs{{0, 1}, {1, 2}, {2, 0}};
    for (auto [a, b] : h_pattern_arcs(HKind::H2)) arcs.emplace_back(a + 3, b + 3);
    Digraph h1_h2 = Digraph::from_arcs(8, arcs);
    CHECK(h_count(h1_h2) == 2);

    Digraph dag = Digraph::from_arcs(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(h_count(dag) == 0);
    CHECK(h_count(fig4()) == 0);
}

TEST_CASE("closed-form minimum sets per block") {
    Digraph h1 = test::pattern_graph(HKind::H1);
    auto d1 = recognize_h(h1);
    CHECK(fvs_of_h(h1, *d1).vertices.size() == 1);

    Digraph h2 = test::pattern_graph(HKind::H2);
    auto d2 = recognize_h(h2);
    CHECK(fvs_of_h(h2, *d2).vertices.size() == 2);

    Digraph comp = test::composite_h16();
    auto dc = recognize_h(comp);
    FeedbackVertexSet f = fvs_of_h(comp, *dc);
    CHECK(f.vertices.size() == 6);  // (16 + 25 + 1) / 7
    auto exact = fvs_exact(comp);
    REQUIRE(exact);
    CHECK(exact->vertices.size() == 6);
}

TEST_CASE("forced vertices stay in a minimum set") {
    Digraph h2 = test::pattern_graph(HKind::H2);
    auto dec = recognize_h(h2);
    REQUIRE(dec);
    int y = dec->blocks[0].role[kRoleY];
    FeedbackVertexSet f = fvs_of_h_containing(h2, *dec, {y});
    CHECK(f.vertices.size() == 2);
    CHECK(std::binary_search(f.vertices.begin(), f.vertices.end(), y));

    // Every single vertex of H2 and H3 can be forced at optimum size.
    for (HKind kind : {HKind::H2, HKind::H3}) {
        Digraph d = test::pattern_graph(kind);
        auto dd = recognize_h(d);
        for (int v = 0; v < 5; ++v) {
            FeedbackVertexSet g = fvs_of_h_containing(d, *dd, {v});
            CHECK(g.vertices.size() == 2);
            CHECK(std::binary_search(g.vertices.begin(), g.vertices.end(), v));
        }
    }

    Digraph h1 = test::pattern_graph(HKind::H1);
    auto d1 = recognize_h(h1);
    FeedbackVertexSet g = fvs_of_h_containing(h1, *d1, {2});
    CHECK(g.vertices == std::vector<int>{2});

    // One forced vertex per block of the composite keeps the optimum.
    Digraph comp = test::composite_h16();
    auto dc = recognize_h(comp);
    std::vector<int> forced;
    for (const auto& b : dc->blocks) forced.push_back(b.vertices.front());
    FeedbackVertexSet fc = fvs_of_h_containing(comp, *dc, forced);
    CHECK(fc.vertices.size() == 6);
    for (int v : forced) CHECK(std::binary_search(fc.vertices.begin(), fc.vertices.end(), v));

    // Two forced vertices in one block violate the contract.
    CHECK_THROWS_AS(
        fvs_of_h_containing(comp, *dc,
                            {dc->blocks[0].vertices[0], dc->blocks[0].vertices[1]}),
        PreconditionError);
}

TEST_CASE("degree deficiency sums") {
    CHECK(deficiency_sum(test::pattern_graph(HKind::H1)) == 6);
    CHECK(deficiency_sum(test::pattern_graph(HKind::H2)) == 4);
    CHECK(deficiency_sum(test::pattern_graph(HKind::H3)) == 4);
    CHECK(deficiency_sum(fig4()) == 0);  // 2-regular
}

TEST_CASE("recognizer is sound on random graphs") {
    for (uint64_t seed = 0; seed < 2000; ++seed) {
        Digraph d = rand_bounded(3 + seed % 10, 4, true, seed * 29 + 11);
        auto dec = recognize_h(d);
        if (dec) {
            CHECK(validate_decomposition(d, *dec));
            FeedbackVertexSet f = fvs_of_h(d, *dec);
            CHECK(7 * f.vertices.size() == size_t(d.order() + d.size() + 1));
        }
    }
}

TEST_SUITE_END();
