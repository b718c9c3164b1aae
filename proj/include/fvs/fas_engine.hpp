#pragma once

#include <cstdint>
#include <vector>

#include "fvs/graph.hpp"

namespace fvs {

// A feedback arc set F over a fixed digraph, kept feasible (D - F acyclic)
// by every operation below. Exposes the induced arc-subgraph D[F] through
// per-vertex membership lists and its underlying simple graph.
class FeedbackArcSet {
public:
    explicit FeedbackArcSet(const Digraph& d)
        : d_(&d), fout_(d.order()), fin_(d.order()) {}
    // The host graph is referenced, not copied; temporaries would dangle.
    explicit FeedbackArcSet(Digraph&&) = delete;

    const Digraph& graph() const { return *d_; }
    int size() const { return m_; }

    const std::vector<int>& f_out(int v) const { return fout_[v]; }
    const std::vector<int>& f_in(int v) const { return fin_[v]; }
    int degree(int v) const {
        return static_cast<int>(fout_[v].size() + fin_[v].size());
    }

    bool contains(int u, int v) const;
    void insert(int u, int v);
    void erase(int u, int v);

    std::vector<Arc> arcs() const;  // sorted

    // Vertices incident to at least one F-arc.
    std::vector<int> support() const;

    // Underlying simple graph of D[F]; a 2-cycle collapses to one edge.
    UndirectedView simple_view() const;

    // Digraph with vertex set V(D) and arc set F.
    Digraph induced_digraph() const;

private:
    const Digraph* d_;
    std::vector<std::vector<int>> fout_, fin_;
    int m_ = 0;
};

struct FasMove {
    enum class Kind { Swap, OddRepair, ParitySwap };
    Kind kind;
    int vertex;
    int f_size;          // |F| after the move (after any re-saturation)
    int odd_components;  // odd cycle components after the move
};

const char* move_kind_name(FasMove::Kind k);

struct FasOptions {
    // Verify D - F acyclicity after every single move instead of only at
    // operation exit. Expensive; meant for tests on small instances.
    bool paranoid = false;
    std::vector<FasMove>* trace = nullptr;
};

struct ParityReport {
    int odd_components = 0;  // components of the simple view containing an odd cycle
    int c_value = 0;         // number of odd cycles in D[F]
};

// Feasible starting set: backward arcs of a greedy vertex ordering
// (repeatedly place the remaining vertex maximising out-degree minus
// in-degree, ties towards the lower id).
FeedbackArcSet fas_init(const Digraph& d);
FeedbackArcSet fas_init(Digraph&&) = delete;

// Local improvement until the degree conditions hold: every vertex has
// total F-degree at most 2, and when the host graph has maximum degree <= 4
// every vertex with F-degree exactly 2 is balanced (2 in, 2 out in D).
// Each accepted move replaces the F-arcs on one side of a vertex with all
// host arcs of the other side and strictly shrinks F. Requires max degree
// <= 5.
void swap_saturate(const Digraph& d, FeedbackArcSet& f, const FasOptions& opt = {});

// Removes odd cycle components from the simple view of D[F] for oriented
// hosts with max degree <= 5. Precondition: f is swap-saturated.
void odd_cycle_repair(const Digraph& d, FeedbackArcSet& f, const FasOptions& opt = {});

enum class ParityStatus {
    Bipartite,          // simple view of D[F] has no odd cycle
    BidirectedOddCycle, // host graph is a bidirected odd cycle; no repair possible
    Stuck,              // move sequence revisited a state on a non-member; test artifact
};

// Odd-cycle elimination for digraphs with max degree <= 4 (2-cycles
// allowed). Precondition: f swap-saturated including the balance condition.
// Moves keep |F| constant or shrink it; a revisited state triggers the
// bidirected-odd-cycle check.
ParityStatus parity_repair_delta4(const Digraph& d, FeedbackArcSet& f,
                                  const FasOptions& opt = {});

// Smaller colour class per component of the simple view of D[F], unioned.
// Throws PreconditionError if some component is not bipartite. The result
// covers every F-arc, hence is a feedback vertex set of the host graph.
std::vector<int> bipartition_smaller_side(const FeedbackArcSet& f);

ParityReport parity_report(const FeedbackArcSet& f);

}  // namespace fvs
