#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fvs {

using Arc = std::pair<int, int>;

// Thrown when an operation is called on a graph that does not meet its
// stated preconditions (degree caps, orientedness, connectivity, ...).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Immutable directed graph over dense vertex ids 0..n-1.
// Invariants: no self-loops, no duplicate arcs. A pair of opposite arcs
// (u,v),(v,u) is allowed and forms a 2-cycle. Adjacency lists are kept
// sorted so that all traversals are deterministic.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n) : out_(n), in_(n) {}

    // Validating constructor; throws std::invalid_argument on bad ids,
    // self-loops or duplicate arcs.
    static Digraph from_arcs(int n, const std::vector<Arc>& arcs);

    int order() const { return static_cast<int>(out_.size()); }
    int size() const { return m_; }

    const std::vector<int>& out(int v) const { return out_[v]; }
    const std::vector<int>& in(int v) const { return in_[v]; }
    int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
    int in_degree(int v) const { return static_cast<int>(in_[v].size()); }
    int degree(int v) const { return out_degree(v) + in_degree(v); }

    bool has_arc(int u, int v) const;

    // All arcs in sorted (u,v) order.
    std::vector<Arc> arcs() const;

    bool operator==(const Digraph& other) const = default;

private:
    std::vector<std::vector<int>> out_, in_;
    int m_ = 0;
};

struct DegreeProfile {
    struct Entry {
        int out, in, total;
    };
    std::vector<Entry> per_vertex;
    int max_degree = 0;
};

// Outcome of an acyclicity check: either a topological order of all
// vertices, or a directed cycle as witness.
struct TopoCheck {
    bool acyclic = false;
    std::vector<int> order;  // filled iff acyclic
    std::vector<int> cycle;  // filled iff not acyclic; vertices in cycle order
};

struct SccPartition {
    std::vector<int> comp_of;                // vertex -> component id
    std::vector<std::vector<int>> components;  // sorted vertex lists, components in topological order
    struct CondensationArc {
        int from, to;
        int multiplicity;  // number of original arcs between the component pair
    };
    std::vector<CondensationArc> condensation;
};

// Simple undirected graph; 2-cycles of the source digraph collapse to a
// single edge.
struct UndirectedView {
    int n = 0;
    std::vector<Arc> edges;  // sorted pairs with first < second
    std::vector<std::vector<int>> adj;

    static UndirectedView from_edges(int n, std::vector<Arc> edges);
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    int max_degree() const;
};

struct UnderlyingInfo {
    UndirectedView graph;
    std::vector<int> comp_of;  // connected component id per vertex (by lowest contained vertex order)
    int comp_count = 0;
    std::vector<Arc> bridges;  // bridge edges, sorted
};

// Result of deleting or keeping vertices: the remapped graph plus both
// directions of the id translation.
struct ReducedGraph {
    Digraph graph;
    std::vector<int> old_id;  // new id -> old id
    std::vector<int> new_id;  // old id -> new id, -1 if deleted
};

// A feedback vertex set together with its acyclicity certificate: a
// topological order of the graph minus the set.
struct FeedbackVertexSet {
    std::vector<int> vertices;     // sorted
    std::vector<int> certificate;  // topological order of the remaining vertices
};

DegreeProfile degree_profile(const Digraph& d);
bool is_oriented(const Digraph& d);
TopoCheck check_acyclic(const Digraph& d);
SccPartition strong_components(const Digraph& d);

// Underlying graph UG(D) with connected components and bridges.
UnderlyingInfo underlying(const Digraph& d);

UndirectedView underlying_view(const Digraph& d);

// New graph without the listed vertices; ids are remapped contiguously.
ReducedGraph delete_vertices(const Digraph& d, const std::vector<int>& doomed);
ReducedGraph induced_subgraph(const Digraph& d, const std::vector<int>& keep);

Digraph reverse(const Digraph& d);

bool is_feedback_vertex_set(const Digraph& d, const std::vector<int>& vertices);

// Builds the certificate for a verified feedback vertex set; throws
// std::logic_error if the remainder is not acyclic.
FeedbackVertexSet certify_fvs(const Digraph& d, std::vector<int> vertices);

}  // namespace fvs
