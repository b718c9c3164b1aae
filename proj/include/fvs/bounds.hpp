#pragma once

#include <optional>
#include <string>

#include "fvs/delta4_engine.hpp"
#include "fvs/fas_engine.hpp"
#include "fvs/graph.hpp"

namespace fvs {

// Some(length) iff d is an undirected odd cycle with every edge replaced by
// a 2-cycle: connected, every vertex balanced of degree 4, every arc paired
// with its reverse, underlying graph a single odd cycle.
std::optional<int> is_bidirected_odd_cycle(const Digraph& d);

// Pipeline for oriented graphs with max degree <= 5: saturate a feedback
// arc set, repair odd cycles, take the smaller bipartition side per
// component. Result size is at most floor(n/2).
FeedbackVertexSet fvs_orgraph_delta5(const Digraph& d, const FasOptions& opt = {});

// Pipeline for digraphs with max degree <= 5: saturate, then cover the
// induced simple graph exactly. Result size is at most floor(2n/3).
FeedbackVertexSet fvs_digraph_delta5(const Digraph& d, const FasOptions& opt = {});

struct Delta4DigraphResult {
    enum class Status { Ok, CoExact, Stuck };
    Status status = Status::Ok;
    FeedbackVertexSet fvs;  // valid unless status == Stuck
};

// Pipeline for connected digraphs with max degree <= 4. Bidirected odd
// cycles are solved exactly (size (n+1)/2, flagged CoExact); everything
// else comes out at size <= floor(n/2). Throws on disconnected input.
Delta4DigraphResult fvs_digraph_delta4(const Digraph& d, const FasOptions& opt = {});

struct OrgraphDelta4Result {
    EngineStatus status = EngineStatus::Ok;
    FeedbackVertexSet fvs;  // valid when status == Ok
    std::vector<TraceEntry> trace;
    std::optional<Digraph> gap;
};

// Reduction-engine pipeline for oriented graphs with max degree <= 4, run
// per connected component. Size is at most floor((n+m+h)/7) <= floor(3n/7).
OrgraphDelta4Result fvs_orgraph_delta4(const Digraph& d, const EngineOptions& opt = {});

enum class Method { Exact, Thm1, Thm2, Thm3, Thm4 };

const char* method_name(Method m);
std::optional<Method> method_from_name(const std::string& name);

// Evaluated bound with exact rational value and tightness flags.
struct BoundReport {
    std::string instance_id;
    Method method = Method::Exact;
    int n = 0, m = 0, h = 0;
    long long bound_num = 0, bound_den = 1;
    int achieved = 0;
    std::optional<int> exact;
    bool tight = false;

    long long floor_bound() const { return bound_num / bound_den; }
    std::string csv_row() const;
    static std::string csv_header();
};

BoundReport bound_report(const Digraph& d, Method method, int achieved,
                         std::optional<int> exact = std::nullopt,
                         const std::string& instance_id = "");

}  // namespace fvs
