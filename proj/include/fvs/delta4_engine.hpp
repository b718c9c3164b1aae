#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fvs/graph.hpp"

namespace fvs {

// Priority-ordered reduction rules for connected oriented graphs with
// maximum degree <= 4. Each rule removes or rewires a small pattern, adds a
// fixed vertex set to the feedback vertex set, and recurses on the strictly
// smaller remainder. The combined set stays within
// floor((order + size + h) / 7) where h is 1 for H members and 0 otherwise.
enum class Rule {
    HMember,      // R-H    : the graph is an H member; solve in closed form
    Trivial,      // R-TRIV : at most 3 vertices and no cycle
    BridgeSplit,  // R-CUT  : split at a bridge of the underlying graph
    SourceSink,   // R-SRC  : remove a vertex with no in- or no out-arcs
    TwoPathBypass,    // R-D2a : degree-2 vertex, ends non-adjacent; bypass it
    TwoPathTriangle,  // R-D2b : degree-2 vertex on a triangle, one unbalanced end
    TwoPathPair,      // R-D2c : degree-2 vertex on a triangle, both ends balanced
    DegreeRepair,     // R-NR  : a vertex with in- or out-degree 1 (several sub-cases)
    TransTriangle,    // R-TT  : transitive triangle
    QPattern,         // R-Q   : two length-2 paths sharing both endpoints
    TwinTriangles,    // R-2C3 : an arc lying on two directed triangles
    FourCycle,        // R-C4  : 4-cycle in the underlying graph
    FiveCycle,        // R-C5  : non-directed 5-cycle in the underlying graph
    FinalPattern,     // R-FIN : out-pair whose in-neighbourhoods need 3 vertices
};

// Serialized rule ids, stable across versions ("R-H", "R-TRIV", ...).
const char* rule_name(Rule r);
inline constexpr int kRuleCount = 14;

struct TraceEntry {
    Rule rule;
    std::vector<int> vertices;  // matched vertices, in original ids
    int n_before, m_before;      // size of the graph the rule fired on
};

// One JSON object per entry: {"rule":...,"vertices":[...],"n_before":...,"m_before":...}
std::string trace_to_jsonl(const std::vector<TraceEntry>& trace);

enum class EngineStatus {
    Ok,
    NoRuleApplies,   // no guard fired; the offending subgraph is attached
    BoundViolation,  // a combined set exceeded its bound; subgraph attached
};

const char* engine_status_name(EngineStatus s);

struct EngineOptions {
    // Re-verify each intermediate feedback vertex set with a certificate.
    bool paranoid = false;
};

struct EngineResult {
    EngineStatus status = EngineStatus::Ok;
    std::vector<int> fvs;  // sorted, original ids; valid only when status == Ok
    std::vector<TraceEntry> trace;
    std::optional<Digraph> gap;  // subgraph (local ids) attached on error
};

// Runs the rule system. Preconditions: oriented, maximum degree <= 4,
// connected; throws PreconditionError otherwise.
EngineResult reduce(const Digraph& d, const EngineOptions& opt = {});

// Oracle-backed check of one surgery step: the union of exact solutions of
// the after-graphs with the added set X must be a feedback vertex set of
// the before-graph. after_ids give each after-graph's vertex ids in
// before-graph terms. Intended for before-graphs of order <= 14.
bool verify_reduction_step(const Digraph& before,
                           const std::vector<std::pair<Digraph, std::vector<int>>>& afters,
                           const std::vector<int>& x_set);

}  // namespace fvs
