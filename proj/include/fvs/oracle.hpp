#pragma once

#include <optional>

#include "fvs/graph.hpp"

namespace fvs {

inline constexpr long long kDefaultOracleBudget = 400'000'000;

// Minimum feedback vertex set by branch and bound: branch over the vertices
// of a shortest directed cycle, prune with a greedy vertex-disjoint-cycle
// lower bound. Ties between minimum sets are broken towards the
// lexicographically smallest set under vertex order. The budget counts
// search nodes; when it runs out the result is nullopt, never a wrong set.
std::optional<FeedbackVertexSet> fvs_exact(const Digraph& d,
                                           long long budget = kDefaultOracleBudget);

// Reference mode: enumerate vertex subsets by increasing cardinality
// (lexicographic within a cardinality) and return the first feedback vertex
// set found. Identical tie-break to fvs_exact. Guarded to order() <= 20.
FeedbackVertexSet fvs_exact_enum(const Digraph& d);

// Minimum feedback arc set via a dynamic program over vertex subsets
// (minimising backward arcs over all vertex orderings). Guarded to
// order() <= 20.
std::vector<Arc> fas_exact(const Digraph& d);

// Reference mode for fas_exact: enumerate arc subsets by increasing
// cardinality; first acyclic remainder wins. Guarded to size() <= 24.
std::vector<Arc> fas_exact_subsets(const Digraph& d);

// Exact minimum vertex cover for graphs of maximum degree <= 2 (disjoint
// paths, cycles and isolated vertices). Deterministic: paths alternate from
// the lowest-id endpoint, cycles from the lowest-id vertex.
std::vector<int> vertex_cover_maxdeg2(const UndirectedView& g);

}  // namespace fvs
