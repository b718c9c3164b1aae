#include "fvs/graph.hpp"

#include <algorithm>
#include <cassert>

namespace fvs {

Digraph Digraph::from_arcs(int n, const std::vector<Arc>& arcs) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Digraph g(n);
    std::vector<Arc> sorted = arcs;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i) {
        auto [u, v] = sorted[i];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("arc endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop");
        if (i > 0 && sorted[i] == sorted[i - 1])
            throw std::invalid_argument("duplicate arc");
        g.out_[u].push_back(v);
        g.in_[v].push_back(u);
    }
    for (auto& a : g.in_) std::sort(a.begin(), a.end());
    g.m_ = static_cast<int>(sorted.size());
    return g;
}

bool Digraph::has_arc(int u, int v) const {
    const auto& a = out_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> r;
    r.reserve(m_);
    for (int u = 0; u < order(); ++u)
        for (int v : out_[u]) r.emplace_back(u, v);
    return r;
}

DegreeProfile degree_profile(const Digraph& d) {
    DegreeProfile p;
    p.per_vertex.reserve(d.order());
    for (int v = 0; v < d.order(); ++v) {
        int o = d.out_degree(v), i = d.in_degree(v);
        p.per_vertex.push_back({o, i, o + i});
        p.max_degree = std::max(p.max_degree, o + i);
    }
    return p;
}

bool is_oriented(const Digraph& d) {
    for (int u = 0; u < d.order(); ++u)
        for (int v : d.out(u))
            if (u < v && d.has_arc(v, u)) return false;
    return true;
}

TopoCheck check_acyclic(const Digraph& d) {
    int n = d.order();
    std::vector<int> indeg(n);
    for (int v = 0; v < n; ++v) indeg[v] = d.in_degree(v);
    std::vector<int> frontier;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) frontier.push_back(v);
    TopoCheck r;
    r.order.reserve(n);
    size_t head = 0;
    while (head < frontier.size()) {
        int v = frontier[head++];
        r.order.push_back(v);
        for (int w : d.out(v))
            if (--indeg[w] == 0) frontier.push_back(w);
    }
    if (static_cast<int>(r.order.size()) == n) {
        r.acyclic = true;
        return r;
    }
    r.order.clear();
    // Every leftover vertex keeps an in-arc from another leftover vertex, so
    // walking in-arcs must eventually revisit one; that closes a cycle.
    std::vector<char> remains(n, 1);
    for (size_t i = 0; i < head; ++i) remains[frontier[i]] = 0;
    int start = 0;
    while (!remains[start]) ++start;
    std::vector<int> path;
    std::vector<int> pos(n, -1);
    int cur = start;
    while (pos[cur] < 0) {
        pos[cur] = static_cast<int>(path.size());
        path.push_back(cur);
        for (int w : d.in(cur))
            if (remains[w]) {
                cur = w;
                break;
            }
    }
    // The walk followed arcs backwards; reverse the closed part.
    r.cycle.assign(path.begin() + pos[cur], path.end());
    std::reverse(r.cycle.begin(), r.cycle.end());
    return r;
}

namespace {

// Iterative Tarjan; recursion depth would be a hazard at fuzzing sizes.
struct TarjanState {
    const Digraph& d;
    std::vector<int> index, low, stack;
    std::vector<char> on_stack;
    std::vector<int> comp_of;
    int next_index = 0, comp_count = 0;

    explicit TarjanState(const Digraph& g)
        : d(g),
          index(g.order(), -1),
          low(g.order(), 0),
          on_stack(g.order(), 0),
          comp_of(g.order(), -1) {}

    void run(int root) {
        struct Frame {
            int v;
            size_t next_arc;
        };
        std::vector<Frame> frames{{root, 0}};
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!frames.empty()) {
            auto& [v, next_arc] = frames.back();
            if (next_arc < d.out(v).size()) {
                int w = d.out(v)[next_arc++];
                if (index[w] < 0) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
            } else {
                if (low[v] == index[v]) {
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp_of[w] = comp_count;
                    } while (w != v);
                    ++comp_count;
                }
                int done = v;
                frames.pop_back();
                if (!frames.empty())
                    low[frames.back().v] = std::min(low[frames.back().v], low[done]);
            }
        }
    }
};

}  // namespace

SccPartition strong_components(const Digraph& d) {
    TarjanState t(d);
    for (int v = 0; v < d.order(); ++v)
        if (t.index[v] < 0) t.run(v);
    SccPartition p;
    // Tarjan emits components in reverse topological order; flip so the
    // condensation arcs run from lower to higher component ids.
    p.comp_of.resize(d.order());
    for (int v = 0; v < d.order(); ++v)
        p.comp_of[v] = t.comp_count - 1 - t.comp_of[v];
    p.components.resize(t.comp_count);
    for (int v = 0; v < d.order(); ++v) p.components[p.comp_of[v]].push_back(v);
    std::vector<std::pair<Arc, int>> cross;
    for (int u = 0; u < d.order(); ++u)
        for (int v : d.out(u))
            if (p.comp_of[u] != p.comp_of[v])
                cross.push_back({{p.comp_of[u], p.comp_of[v]}, 1});
    std::sort(cross.begin(), cross.end());
    for (auto& [arc, cnt] : cross) {
        if (!p.condensation.empty() && p.condensation.back().from == arc.first &&
            p.condensation.back().to == arc.second)
            p.condensation.back().multiplicity += cnt;
        else
            p.condensation.push_back({arc.first, arc.second, cnt});
    }
    return p;
}

UndirectedView UndirectedView::from_edges(int n, std::vector<Arc> edges) {
    UndirectedView u;
    u.n = n;
    for (auto& [a, b] : edges) {
        if (a > b) std::swap(a, b);
        if (a == b || a < 0 || b >= n) throw std::invalid_argument("bad edge");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    u.edges = std::move(edges);
    u.adj.resize(n);
    for (auto [a, b] : u.edges) {
        u.adj[a].push_back(b);
        u.adj[b].push_back(a);
    }
    for (auto& a : u.adj) std::sort(a.begin(), a.end());
    return u;
}

int UndirectedView::max_degree() const {
    int m = 0;
    for (int v = 0; v < n; ++v) m = std::max(m, degree(v));
    return m;
}

UndirectedView underlying_view(const Digraph& d) {
    return UndirectedView::from_edges(d.order(), d.arcs());
}

namespace {

// Iterative bridge search (lowpoint numbering on the simple graph).
void find_bridges(const UndirectedView& g, std::vector<Arc>& bridges) {
    int n = g.n;
    // Edge ids let us skip the one parent edge without banning parallel paths.
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge id)
    for (size_t e = 0; e < g.edges.size(); ++e) {
        auto [a, b] = g.edges[e];
        adj[a].push_back({b, static_cast<int>(e)});
        adj[b].push_back({a, static_cast<int>(e)});
    }
    std::vector<int> num(n, -1), low(n, 0);
    int timer = 0;
    struct Frame {
        int v, parent_edge;
        size_t next;
    };
    for (int root = 0; root < n; ++root) {
        if (num[root] >= 0) continue;
        std::vector<Frame> st{{root, -1, 0}};
        num[root] = low[root] = timer++;
        while (!st.empty()) {
            auto& [v, pe, next] = st.back();
            if (next < adj[v].size()) {
                auto [w, e] = adj[v][next++];
                if (e == pe) continue;
                if (num[w] < 0) {
                    num[w] = low[w] = timer++;
                    st.push_back({w, e, 0});
                } else {
                    low[v] = std::min(low[v], num[w]);
                }
            } else {
                int v_done = v, pe_done = pe;
                st.pop_back();
                if (!st.empty()) {
                    int p = st.back().v;
                    low[p] = std::min(low[p], low[v_done]);
                    if (low[v_done] > num[p]) bridges.push_back(g.edges[pe_done]);
                }
            }
        }
    }
    std::sort(bridges.begin(), bridges.end());
}

}  // namespace

UnderlyingInfo underlying(const Digraph& d) {
    UnderlyingInfo info;
    info.graph = underlying_view(d);
    int n = d.order();
    info.comp_of.assign(n, -1);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (info.comp_of[s] >= 0) continue;
        int id = info.comp_count++;
        queue.assign(1, s);
        info.comp_of[s] = id;
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            for (int w : info.graph.adj[v])
                if (info.comp_of[w] < 0) {
                    info.comp_of[w] = id;
                    queue.push_back(w);
                }
        }
    }
    find_bridges(info.graph, info.bridges);
    return info;
}

ReducedGraph delete_vertices(const Digraph& d, const std::vector<int>& doomed) {
    std::vector<char> gone(d.order(), 0);
    for (int v : doomed) gone[v] = 1;
    std::vector<int> keep;
    for (int v = 0; v < d.order(); ++v)
        if (!gone[v]) keep.push_back(v);
    return induced_subgraph(d, keep);
}

ReducedGraph induced_subgraph(const Digraph& d, const std::vector<int>& keep) {
    ReducedGraph r;
    r.old_id = keep;
    std::sort(r.old_id.begin(), r.old_id.end());
    r.new_id.assign(d.order(), -1);
    for (size_t i = 0; i < r.old_id.size(); ++i) r.new_id[r.old_id[i]] = static_cast<int>(i);
    std::vector<Arc> arcs;
    for (int u : r.old_id)
        for (int v : d.out(u))
            if (r.new_id[v] >= 0) arcs.emplace_back(r.new_id[u], r.new_id[v]);
    r.graph = Digraph::from_arcs(static_cast<int>(r.old_id.size()), arcs);
    return r;
}

Digraph reverse(const Digraph& d) {
    std::vector<Arc> arcs;
    arcs.reserve(d.size());
    for (auto [u, v] : d.arcs()) arcs.emplace_back(v, u);
    return Digraph::from_arcs(d.order(), arcs);
}

bool is_feedback_vertex_set(const Digraph& d, const std::vector<int>& vertices) {
    return check_acyclic(delete_vertices(d, vertices).graph).acyclic;
}

FeedbackVertexSet certify_fvs(const Digraph& d, std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    ReducedGraph rest = delete_vertices(d, vertices);
    TopoCheck t = check_acyclic(rest.graph);
    if (!t.acyclic) throw std::logic_error("claimed feedback vertex set leaves a cycle");
    FeedbackVertexSet f;
    f.vertices = std::move(vertices);
    f.certificate.reserve(t.order.size());
    for (int v : t.order) f.certificate.push_back(rest.old_id[v]);
    return f;
}

}  // namespace fvs
