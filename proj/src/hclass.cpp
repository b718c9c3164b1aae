#include "fvs/hclass.hpp"

#include <algorithm>
#include <cassert>

namespace fvs {

const std::vector<Arc>& h_pattern_arcs(HKind kind) {
    static const std::vector<Arc> h1{{0, 1}, {1, 2}, {2, 0}};
    static const std::vector<Arc> h2{{0, 1}, {1, 2}, {2, 0}, {3, 4},
                                     {4, 0}, {0, 3}, {4, 2}, {2, 3}};
    static const std::vector<Arc> h3{{0, 1}, {1, 2}, {2, 0}, {3, 4},
                                     {4, 0}, {1, 3}, {4, 2}, {2, 3}};
    switch (kind) {
        case HKind::H1: return h1;
        case HKind::H2: return h2;
        default: return h3;
    }
}

int h_pattern_size(HKind kind) { return kind == HKind::H1 ? 3 : 5; }

namespace {

// Tries to match the subgraph induced by `verts` (sorted) against the
// pattern; on success fills `role` with the first matching assignment in
// lexicographic order of the permutation.
bool match_pattern(const Digraph& d, const std::vector<int>& verts, HKind kind,
                   std::array<int, 5>& role) {
    int k = h_pattern_size(kind);
    if (static_cast<int>(verts.size()) != k) return false;
    // The induced arc count must match exactly.
    int arcs = 0;
    for (int u : verts)
        for (int v : verts)
            if (u != v && d.has_arc(u, v)) ++arcs;
    if (arcs != static_cast<int>(h_pattern_arcs(kind).size())) return false;
    std::vector<int> perm(verts.begin(), verts.end());
    std::sort(perm.begin(), perm.end());
    do {
        bool ok = true;
        for (auto [a, b] : h_pattern_arcs(kind))
            if (!d.has_arc(perm[a], perm[b])) {
                ok = false;
                break;
            }
        if (ok) {
            role.fill(-1);
            for (int i = 0; i < k; ++i) role[i] = perm[i];
            return true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

std::optional<HDecomposition> recognize_h(const Digraph& d) {
    if (d.order() == 0) return std::nullopt;
    UnderlyingInfo und = underlying(d);
    if (und.comp_count != 1) return std::nullopt;
    SccPartition scc = strong_components(d);
    HDecomposition dec;
    dec.block_of.assign(d.order(), -1);
    for (const auto& comp : scc.components) {
        HBlock block;
        block.vertices = comp;
        size_t sz = comp.size();
        if (sz == 3 && match_pattern(d, comp, HKind::H1, block.role))
            block.kind = HKind::H1;
        else if (sz == 5 && match_pattern(d, comp, HKind::H2, block.role))
            block.kind = HKind::H2;
        else if (sz == 5 && match_pattern(d, comp, HKind::H3, block.role))
            block.kind = HKind::H3;
        else
            return std::nullopt;
        for (int v : comp) dec.block_of[v] = static_cast<int>(dec.blocks.size());
        dec.blocks.push_back(std::move(block));
    }
    for (auto [u, v] : d.arcs())
        if (dec.block_of[u] != dec.block_of[v]) dec.tree_arcs.emplace_back(u, v);
    // Connected + one-arc-per-tree-edge forces the block graph to be a tree.
    if (dec.tree_arcs.size() + 1 != dec.blocks.size()) return std::nullopt;
    return dec;
}

int h_count(const Digraph& d) {
    UnderlyingInfo und = underlying(d);
    std::vector<std::vector<int>> comps(und.comp_count);
    for (int v = 0; v < d.order(); ++v) comps[und.comp_of[v]].push_back(v);
    int count = 0;
    for (const auto& comp : comps)
        if (recognize_h(induced_subgraph(d, comp).graph)) ++count;
    return count;
}

namespace {

void append_block_default(const HBlock& b, std::vector<int>& out) {
    if (b.kind == HKind::H1)
        out.push_back(b.vertices.front());
    else {
        out.push_back(b.role[kRoleX]);
        out.push_back(b.role[kRoleB]);
    }
}

}  // namespace

FeedbackVertexSet fvs_of_h(const Digraph& d, const HDecomposition& dec) {
    std::vector<int> picks;
    for (const auto& b : dec.blocks) append_block_default(b, picks);
    return certify_fvs(d, picks);
}

FeedbackVertexSet fvs_of_h_containing(const Digraph& d, const HDecomposition& dec,
                                      const std::vector<int>& x_set) {
    std::vector<int> forced(dec.blocks.size(), -1);
    for (int v : x_set) {
        if (v < 0 || v >= d.order()) throw PreconditionError("forced vertex out of range");
        int b = dec.block_of[v];
        if (forced[b] >= 0 && forced[b] != v)
            throw PreconditionError("two forced vertices in one block");
        forced[b] = v;
    }
    std::vector<int> picks;
    for (size_t i = 0; i < dec.blocks.size(); ++i) {
        const HBlock& b = dec.blocks[i];
        if (forced[i] < 0) {
            append_block_default(b, picks);
            continue;
        }
        if (b.kind == HKind::H1) {
            picks.push_back(forced[i]);
            continue;
        }
        // The pattern minimum sets {x,b}, {z,a}, {y,a} cover every role.
        static constexpr std::array<std::array<int, 2>, 3> kChoices{
            {{kRoleX, kRoleB}, {kRoleZ, kRoleA}, {kRoleY, kRoleA}}};
        int role = -1;
        for (int r = 0; r < 5; ++r)
            if (b.role[r] == forced[i]) role = r;
        for (const auto& choice : kChoices)
            if (choice[0] == role || choice[1] == role) {
                picks.push_back(b.role[choice[0]]);
                picks.push_back(b.role[choice[1]]);
                role = -2;
                break;
            }
        assert(role == -2);
    }
    return certify_fvs(d, picks);
}

long long deficiency_sum(const Digraph& d) {
    long long sum = 0;
    for (int v = 0; v < d.order(); ++v) sum += 4 - d.degree(v);
    return sum;
}

bool validate_decomposition(const Digraph& d, const HDecomposition& dec) {
    std::vector<char> seen(d.order(), 0);
    for (const auto& b : dec.blocks) {
        for (int v : b.vertices) {
            if (v < 0 || v >= d.order() || seen[v]) return false;
            seen[v] = 1;
        }
        int k = h_pattern_size(b.kind);
        // Roles must be a bijection onto the block inducing the pattern.
        std::vector<int> sorted_roles(b.role.begin(), b.role.begin() + k);
        std::sort(sorted_roles.begin(), sorted_roles.end());
        if (sorted_roles != b.vertices) return false;
        int induced = 0;
        for (int u : b.vertices)
            for (int v : b.vertices)
                if (u != v && d.has_arc(u, v)) ++induced;
        if (induced != static_cast<int>(h_pattern_arcs(b.kind).size())) return false;
        for (auto [a, c] : h_pattern_arcs(b.kind))
            if (!d.has_arc(b.role[a], b.role[c])) return false;
    }
    for (char s : seen)
        if (!s) return false;
    if (dec.tree_arcs.size() + 1 != dec.blocks.size()) return false;
    std::vector<Arc> cross;
    for (auto [u, v] : d.arcs())
        if (dec.block_of[u] != dec.block_of[v]) cross.emplace_back(u, v);
    std::vector<Arc> declared = dec.tree_arcs;
    std::sort(declared.begin(), declared.end());
    std::sort(cross.begin(), cross.end());
    return declared == cross && underlying(d).comp_count == 1;
}

}  // namespace fvs
