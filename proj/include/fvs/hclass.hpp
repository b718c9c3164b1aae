#pragma once

#include <array>
#include <optional>

#include "fvs/graph.hpp"

namespace fvs {

// The H family: digraphs assembled from the three strongly connected
// patterns below by repeatedly joining two members with a single arc.
//
//   H1: directed triangle on roles {x,y,z}.
//   H2: 5 vertices, 8 arcs:  xy yz zx ab bx xa bz za
//   H3: 5 vertices, 8 arcs:  xy yz zx ab bx ya bz za
//
// Members are exactly the connected digraphs whose strong components are
// all pattern copies and whose inter-component arcs form a tree on the
// components with one arc per tree edge.
enum class HKind { H1, H2, H3 };

inline constexpr int kRoleX = 0, kRoleY = 1, kRoleZ = 2, kRoleA = 3, kRoleB = 4;

const std::vector<Arc>& h_pattern_arcs(HKind kind);
int h_pattern_size(HKind kind);

struct HBlock {
    HKind kind;
    std::vector<int> vertices;  // sorted
    // role[i] = vertex playing pattern role i (x,y,z,a,b); H1 uses 3 roles.
    std::array<int, 5> role{-1, -1, -1, -1, -1};
};

struct HDecomposition {
    std::vector<HBlock> blocks;
    std::vector<int> block_of;     // vertex -> block index
    std::vector<Arc> tree_arcs;    // the single connecting arcs, sorted
};

// Some(decomposition) iff d is in the H family. Works on any digraph;
// disconnected inputs are rejected.
std::optional<HDecomposition> recognize_h(const Digraph& d);

// Number of connected components of d that are H members.
int h_count(const Digraph& d);

// Minimum feedback vertex set of an H member; size is exactly
// (order + size + 1) / 7. Per block: H1 contributes its lowest vertex,
// H2/H3 contribute the images of {x,b}.
FeedbackVertexSet fvs_of_h(const Digraph& d, const HDecomposition& dec);

// Minimum feedback vertex set containing all of X. Requires at most one
// X-vertex per block; throws PreconditionError otherwise. Block choices:
// H1 admits any single vertex; H2/H3 admit {x,b}, {z,a}, {y,a}.
FeedbackVertexSet fvs_of_h_containing(const Digraph& d, const HDecomposition& dec,
                                      const std::vector<int>& x_set);

// Sum over vertices of (4 - degree).
long long deficiency_sum(const Digraph& d);

// Consistency check used by tests: blocks partition V, each block induces
// its pattern exactly, tree arcs form a tree over blocks.
bool validate_decomposition(const Digraph& d, const HDecomposition& dec);

}  // namespace fvs
