#include "fvs/oracle.hpp"

#include <algorithm>
#include <cassert>

namespace fvs {

namespace {

struct BudgetHit {};

// Branch-and-bound working state over a fixed digraph with a removal mask.
struct Solver {
    const Digraph& d;
    long long budget;
    long long nodes = 0;
    std::vector<char> removed;

    explicit Solver(const Digraph& g, long long b) : d(g), budget(b), removed(g.order(), 0) {}

    void tick() {
        if (++nodes > budget) throw BudgetHit{};
    }

    // Shortest directed cycle in the live graph, empty if acyclic.
    // BFS from every live vertex; ties resolved towards the lower start id.
    std::vector<int> shortest_cycle(const std::vector<char>& dead) const {
        std::vector<int> best;
        int n = d.order();
        std::vector<int> dist(n), parent(n), queue;
        for (int s = 0; s < n; ++s) {
            if (dead[s]) continue;
            std::fill(dist.begin(), dist.end(), -1);
            dist[s] = 0;
            parent[s] = -1;
            queue.assign(1, s);
            size_t head = 0;
            int found = -1;
            while (head < queue.size() && found < 0) {
                int u = queue[head++];
                if (!best.empty() && dist[u] + 1 >= static_cast<int>(best.size())) break;
                for (int v : d.out(u)) {
                    if (dead[v]) continue;
                    if (v == s) {
                        found = u;
                        break;
                    }
                    if (dist[v] < 0) {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    }
                }
            }
            if (found >= 0) {
                std::vector<int> cyc;
                for (int u = found; u != -1; u = parent[u]) cyc.push_back(u);
                std::reverse(cyc.begin(), cyc.end());
                if (best.empty() || cyc.size() < best.size()) best = std::move(cyc);
                if (best.size() == 2) break;  // cannot beat a 2-cycle
            }
        }
        return best;
    }

    // Greedy vertex-disjoint cycle packing; each packed cycle forces one
    // deletion, so the count lower-bounds the remaining solution size.
    int disjoint_cycle_bound(std::vector<char> dead) const {
        int count = 0;
        for (;;) {
            std::vector<int> cyc = shortest_cycle(dead);
            if (cyc.empty()) return count;
            ++count;
            for (int v : cyc) dead[v] = 1;
        }
    }

    // Decision search: does the live graph have a feedback vertex set of
    // size at most k?
    bool exists(int k) {
        tick();
        std::vector<int> cyc = shortest_cycle(removed);
        if (cyc.empty()) return true;
        if (k <= 0) return false;
        if (k >= 2 && disjoint_cycle_bound(removed) > k) return false;
        std::sort(cyc.begin(), cyc.end());
        for (int v : cyc) {
            removed[v] = 1;
            bool ok = exists(k - 1);
            removed[v] = 0;
            if (ok) return true;
        }
        return false;
    }
};

}  // namespace

std::optional<FeedbackVertexSet> fvs_exact(const Digraph& d, long long budget) {
    Solver s(d, budget);
    try {
        int k = s.disjoint_cycle_bound(s.removed);
        while (!s.exists(k)) ++k;
        // Lexicographic tie-break: force vertices in id order whenever a
        // minimum solution through the forced prefix still exists.
        std::vector<int> chosen;
        for (int v = 0; v < d.order() && static_cast<int>(chosen.size()) < k; ++v) {
            s.removed[v] = 1;
            if (s.exists(k - static_cast<int>(chosen.size()) - 1))
                chosen.push_back(v);
            else
                s.removed[v] = 0;
        }
        assert(static_cast<int>(chosen.size()) == k);
        return certify_fvs(d, chosen);
    } catch (const BudgetHit&) {
        return std::nullopt;
    }
}

FeedbackVertexSet fvs_exact_enum(const Digraph& d) {
    int n = d.order();
    if (n > 20) throw PreconditionError("fvs_exact_enum: order too large");
    if (check_acyclic(d).acyclic) return certify_fvs(d, {});
    std::vector<int> pick;
    for (int k = 1; k <= n; ++k) {
        // Classic lexicographic k-combinations of {0..n-1}.
        pick.resize(k);
        for (int i = 0; i < k; ++i) pick[i] = i;
        for (;;) {
            if (is_feedback_vertex_set(d, pick)) return certify_fvs(d, pick);
            int i = k - 1;
            while (i >= 0 && pick[i] == n - k + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    throw std::logic_error("unreachable: V(D) is always a feedback vertex set");
}

std::vector<Arc> fas_exact(const Digraph& d) {
    int n = d.order();
    if (n > 20) throw PreconditionError("fas_exact: order too large");
    if (n == 0) return {};
    // out_mask[v]: bitmask of heads of v's out-arcs. Placing v after a set S
    // turns every arc from v into S into a backward arc.
    std::vector<uint32_t> out_mask(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : d.out(v)) out_mask[v] |= 1u << w;
    uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    std::vector<int> cost(full + 1, 1 << 30);
    cost[0] = 0;
    for (uint32_t s = 0; s <= full; ++s) {
        if (cost[s] >= (1 << 30)) continue;
        for (int v = 0; v < n; ++v) {
            if (s & (1u << v)) continue;
            uint32_t t = s | (1u << v);
            int c = cost[s] + __builtin_popcount(out_mask[v] & s);
            if (c < cost[t]) cost[t] = c;
        }
        if (s == full) break;
    }
    // Reconstruct one optimal ordering, preferring the smallest vertex at
    // each step so the answer is deterministic.
    std::vector<int> order;
    uint32_t s = full;
    while (s) {
        for (int v = 0; v < n; ++v) {
            if (!(s & (1u << v))) continue;
            uint32_t prev = s & ~(1u << v);
            if (cost[prev] + __builtin_popcount(out_mask[v] & prev) == cost[s]) {
                order.push_back(v);
                s = prev;
                break;
            }
        }
    }
    std::reverse(order.begin(), order.end());
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<Arc> fas;
    for (auto [u, v] : d.arcs())
        if (pos[u] > pos[v]) fas.emplace_back(u, v);
    return fas;
}

std::vector<Arc> fas_exact_subsets(const Digraph& d) {
    int m = d.size();
    if (m > 24) throw PreconditionError("fas_exact_subsets: too many arcs");
    std::vector<Arc> arcs = d.arcs();
    std::vector<int> pick;
    for (int k = 0; k <= m; ++k) {
        pick.resize(k);
        for (int i = 0; i < k; ++i) pick[i] = i;
        for (;;) {
            std::vector<char> cut(m, 0);
            for (int i : pick) cut[i] = 1;
            std::vector<Arc> rest;
            for (int i = 0; i < m; ++i)
                if (!cut[i]) rest.push_back(arcs[i]);
            if (check_acyclic(Digraph::from_arcs(d.order(), rest)).acyclic) {
                std::vector<Arc> fas;
                for (int i : pick) fas.push_back(arcs[i]);
                return fas;
            }
            if (k == 0) break;
            int i = k - 1;
            while (i >= 0 && pick[i] == m - k + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    throw std::logic_error("unreachable: A(D) is always a feedback arc set");
}

std::vector<int> vertex_cover_maxdeg2(const UndirectedView& g) {
    if (g.max_degree() > 2)
        throw PreconditionError("vertex_cover_maxdeg2: maximum degree exceeds 2");
    std::vector<char> seen(g.n, 0);
    std::vector<int> cover;
    for (int s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        // Collect the component as a walk. s is its lowest id.
        std::vector<int> comp{s};
        seen[s] = 1;
        bool cycle = false;
        if (g.degree(s) == 2) {
            // Possibly a cycle; walk towards the lower-id neighbour first.
            int prev = s, cur = g.adj[s][0];
            while (cur != s) {
                seen[cur] = 1;
                comp.push_back(cur);
                int next = -1;
                for (int w : g.adj[cur])
                    if (w != prev) next = w;
                if (next == -1) break;  // hit a path endpoint
                prev = cur;
                cur = next;
            }
            if (cur == s)
                cycle = true;
            else {
                // s was interior after all; rebuild the walk from the far
                // endpoint with the lower id.
                int other_end = comp.back();
                std::vector<int> tail{s};
                prev = s;
                for (int cur2 = g.adj[s][1]; ;) {
                    seen[cur2] = 1;
                    tail.push_back(cur2);
                    int next = -1;
                    for (int w : g.adj[cur2])
                        if (w != prev) next = w;
                    if (next == -1) break;
                    prev = cur2;
                    cur2 = next;
                }
                std::reverse(comp.begin(), comp.end());
                comp.insert(comp.end(), tail.begin() + 1, tail.end());
                if (other_end > comp.back()) std::reverse(comp.begin(), comp.end());
            }
        } else if (g.degree(s) == 1) {
            int prev = s, cur = g.adj[s][0];
            for (;;) {
                seen[cur] = 1;
                comp.push_back(cur);
                int next = -1;
                for (int w : g.adj[cur])
                    if (w != prev) next = w;
                if (next == -1) break;
                prev = cur;
                cur = next;
            }
        }
        if (cycle) {
            // ceil(k/2) vertices: every second one starting at s, walking
            // towards s's lower neighbour (comp is already in that order).
            // For odd k the last pick is adjacent to s; unavoidable.
            int k = static_cast<int>(comp.size());
            for (int i = 0; i < k; i += 2) cover.push_back(comp[i]);
        } else {
            // Path (possibly a single vertex): floor(k/2) interior picks
            // counted from the lower-id endpoint.
            if (comp.size() > 1 && comp.front() > comp.back())
                std::reverse(comp.begin(), comp.end());
            for (size_t i = 1; i < comp.size(); i += 2) cover.push_back(comp[i]);
        }
    }
    std::sort(cover.begin(), cover.end());
    return cover;
}

}  // namespace fvs
