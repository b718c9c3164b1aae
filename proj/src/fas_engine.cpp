#include "fvs/fas_engine.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "fvs/bounds.hpp"

namespace fvs {

namespace {

bool sorted_contains(const std::vector<int>& v, int x) {
    return std::binary_search(v.begin(), v.end(), x);
}

void sorted_insert(std::vector<int>& v, int x) {
    v.insert(std::lower_bound(v.begin(), v.end(), x), x);
}

void sorted_erase(std::vector<int>& v, int x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it != v.end() && *it == x) v.erase(it);
}

Digraph remainder_of(const FeedbackArcSet& f) {
    const Digraph& d = f.graph();
    std::vector<Arc> rest;
    rest.reserve(d.size() - f.size());
    for (auto [u, v] : d.arcs())
        if (!f.contains(u, v)) rest.emplace_back(u, v);
    return Digraph::from_arcs(d.order(), rest);
}

void check_feasible(const FeedbackArcSet& f, const char* where) {
    if (!check_acyclic(remainder_of(f)).acyclic)
        throw std::logic_error(std::string("feedback arc set became infeasible in ") + where);
}

// Number of components of the simple view that contain an odd cycle, i.e.
// are not bipartite. Valid in any state, not only after saturation.
int odd_component_count(const FeedbackArcSet& f) {
    UndirectedView g = f.simple_view();
    std::vector<int> colour(g.n, -1);
    int count = 0;
    std::vector<int> queue;
    for (int s = 0; s < g.n; ++s) {
        if (colour[s] >= 0 || g.degree(s) == 0) continue;
        bool odd = false;
        colour[s] = 0;
        queue.assign(1, s);
        size_t head = 0;
        while (head < queue.size()) {
            int v = queue[head++];
            for (int w : g.adj[v]) {
                if (colour[w] < 0) {
                    colour[w] = 1 - colour[v];
                    queue.push_back(w);
                } else if (colour[w] == colour[v]) {
                    odd = true;
                }
            }
        }
        count += odd;
    }
    return count;
}

// Connected components of the simple view classified as cycles; meaningful
// once every degree is at most 2.
struct SimpleComponents {
    std::vector<std::vector<int>> comps;
    std::vector<char> is_odd_cycle;
};

SimpleComponents split_components(const UndirectedView& g) {
    SimpleComponents sc;
    std::vector<char> seen(g.n, 0);
    for (int s = 0; s < g.n; ++s) {
        if (seen[s] || g.degree(s) == 0) continue;
        std::vector<int> comp{s};
        seen[s] = 1;
        size_t head = 0;
        int edge_ends = g.degree(s);
        while (head < comp.size()) {
            int v = comp[head++];
            for (int w : g.adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    edge_ends += g.degree(w);
                    comp.push_back(w);
                }
        }
        bool cyc = edge_ends / 2 == static_cast<int>(comp.size()) && comp.size() >= 3;
        sc.comps.push_back(std::move(comp));
        sc.is_odd_cycle.push_back(cyc && sc.comps.back().size() % 2 == 1);
    }
    return sc;
}

}  // namespace

bool FeedbackArcSet::contains(int u, int v) const { return sorted_contains(fout_[u], v); }

void FeedbackArcSet::insert(int u, int v) {
    if (contains(u, v)) return;
    if (!d_->has_arc(u, v)) throw std::logic_error("F must stay within A(D)");
    sorted_insert(fout_[u], v);
    sorted_insert(fin_[v], u);
    ++m_;
}

void FeedbackArcSet::erase(int u, int v) {
    if (!contains(u, v)) return;
    sorted_erase(fout_[u], v);
    sorted_erase(fin_[v], u);
    --m_;
}

std::vector<Arc> FeedbackArcSet::arcs() const {
    std::vector<Arc> r;
    r.reserve(m_);
    for (int u = 0; u < d_->order(); ++u)
        for (int v : fout_[u]) r.emplace_back(u, v);
    return r;
}

std::vector<int> FeedbackArcSet::support() const {
    std::vector<int> r;
    for (int v = 0; v < d_->order(); ++v)
        if (degree(v) > 0) r.push_back(v);
    return r;
}

UndirectedView FeedbackArcSet::simple_view() const {
    return UndirectedView::from_edges(d_->order(), arcs());
}

Digraph FeedbackArcSet::induced_digraph() const {
    return Digraph::from_arcs(d_->order(), arcs());
}

const char* move_kind_name(FasMove::Kind k) {
    switch (k) {
        case FasMove::Kind::Swap: return "swap";
        case FasMove::Kind::OddRepair: return "odd-repair";
        default: return "parity-swap";
    }
}

FeedbackArcSet fas_init(const Digraph& d) {
    int n = d.order();
    // Greedy linear arrangement on a shrinking residual graph; backward arcs
    // of the produced order form the starting set.
    std::vector<int> out_deg(n), in_deg(n);
    for (int v = 0; v < n; ++v) {
        out_deg[v] = d.out_degree(v);
        in_deg[v] = d.in_degree(v);
    }
    std::vector<char> placed(n, 0);
    std::vector<int> pos(n, -1);
    for (int step = 0; step < n; ++step) {
        int best = -1, best_score = 0;
        for (int v = 0; v < n; ++v) {
            if (placed[v]) continue;
            int score = out_deg[v] - in_deg[v];
            if (best < 0 || score > best_score) {
                best = v;
                best_score = score;
            }
        }
        placed[best] = 1;
        pos[best] = step;
        for (int w : d.out(best))
            if (!placed[w]) --in_deg[w];
        for (int w : d.in(best))
            if (!placed[w]) --out_deg[w];
    }
    FeedbackArcSet f(d);
    for (auto [u, v] : d.arcs())
        if (pos[u] > pos[v]) f.insert(u, v);
    return f;
}

namespace {

// One degree-repair move: drop the F-arcs on one side of v and take all
// host arcs of the other side. Side choice follows the smaller host degree,
// ties towards in-arcs. Returns the change in |F|.
int apply_side_swap(const Digraph& d, FeedbackArcSet& f, int v) {
    int before = f.size();
    if (d.in_degree(v) <= d.out_degree(v)) {
        std::vector<int> outs = f.f_out(v);
        for (int w : outs) f.erase(v, w);
        for (int u : d.in(v)) f.insert(u, v);
    } else {
        std::vector<int> ins = f.f_in(v);
        for (int u : ins) f.erase(u, v);
        for (int w : d.out(v)) f.insert(v, w);
    }
    return f.size() - before;
}

bool needs_swap(const Digraph& d, const FeedbackArcSet& f, int v, bool balance_rule) {
    if (f.degree(v) >= 3) return true;
    if (!balance_rule) return false;
    return f.degree(v) == 2 && !(d.out_degree(v) == 2 && d.in_degree(v) == 2);
}

void saturate(const Digraph& d, FeedbackArcSet& f, const FasOptions& opt, bool balance_rule) {
    for (;;) {
        int v = -1;
        for (int u = 0; u < d.order(); ++u)
            if (needs_swap(d, f, u, balance_rule)) {
                v = u;
                break;
            }
        if (v < 0) break;
        int delta = apply_side_swap(d, f, v);
        if (delta >= 0) throw std::logic_error("degree-repair move failed to shrink F");
        if (opt.paranoid) check_feasible(f, "swap_saturate");
        if (opt.trace)
            opt.trace->push_back({FasMove::Kind::Swap, v, f.size(), odd_component_count(f)});
    }
}

// Lowest-id odd cycle component, sorted; empty if the view is bipartite.
std::vector<int> pick_odd_component(const FeedbackArcSet& f) {
    SimpleComponents sc = split_components(f.simple_view());
    std::vector<int> best;
    int best_min = -1;
    for (size_t i = 0; i < sc.comps.size(); ++i) {
        if (!sc.is_odd_cycle[i]) continue;
        int mn = *std::min_element(sc.comps[i].begin(), sc.comps[i].end());
        if (best_min < 0 || mn < best_min) {
            best_min = mn;
            best = sc.comps[i];
        }
    }
    std::sort(best.begin(), best.end());
    return best;
}

}  // namespace

void swap_saturate(const Digraph& d, FeedbackArcSet& f, const FasOptions& opt) {
    int delta = degree_profile(d).max_degree;
    if (delta > 5) throw PreconditionError("swap_saturate: maximum degree exceeds 5");
    saturate(d, f, opt, /*balance_rule=*/delta <= 4);
    check_feasible(f, "swap_saturate exit");
}

void odd_cycle_repair(const Digraph& d, FeedbackArcSet& f, const FasOptions& opt) {
    if (!is_oriented(d))
        throw PreconditionError("odd_cycle_repair: host graph has a 2-cycle");
    if (degree_profile(d).max_degree > 5)
        throw PreconditionError("odd_cycle_repair: maximum degree exceeds 5");
    for (int v = 0; v < d.order(); ++v)
        if (f.degree(v) > 2)
            throw PreconditionError("odd_cycle_repair: feedback arc set is not saturated");
    for (;;) {
        std::vector<int> comp = pick_odd_component(f);
        if (comp.empty()) break;
        // An odd cycle always has a vertex traversed by F (one in, one out).
        int v = -1;
        for (int u : comp)
            if (f.f_in(u).size() == 1 && f.f_out(u).size() == 1) {
                v = u;
                break;
            }
        if (v < 0) throw std::logic_error("odd cycle without a through-vertex");
        int in_tail = f.f_in(v)[0], out_head = f.f_out(v)[0];
        f.erase(in_tail, v);
        f.erase(v, out_head);
        if (d.in_degree(v) <= d.out_degree(v))
            for (int u : d.in(v)) f.insert(u, v);
        else
            for (int w : d.out(v)) f.insert(v, w);
        if (opt.paranoid) check_feasible(f, "odd_cycle_repair");
        saturate(d, f, opt, /*balance_rule=*/false);
        if (opt.trace)
            opt.trace->push_back(
                {FasMove::Kind::OddRepair, v, f.size(), odd_component_count(f)});
    }
    check_feasible(f, "odd_cycle_repair exit");
}

ParityStatus parity_repair_delta4(const Digraph& d, FeedbackArcSet& f, const FasOptions& opt) {
    if (degree_profile(d).max_degree > 4)
        throw PreconditionError("parity_repair_delta4: maximum degree exceeds 4");
    for (int v = 0; v < d.order(); ++v)
        if (f.degree(v) > 2 ||
            (f.degree(v) == 2 && !(d.out_degree(v) == 2 && d.in_degree(v) == 2)))
            throw PreconditionError("parity_repair_delta4: feedback arc set is not saturated");
    // Plateau moves toggle 2-cycle orientations without changing |F| or the
    // odd count, so progress is enforced by exact state memory: each step
    // commits the first candidate move that reaches an unseen state. When
    // every candidate is exhausted the component's vertices all sit on two
    // 2-cycles, which is exactly the bidirected-odd-cycle shape.
    constexpr size_t kStateCap = 1 << 17;
    std::set<std::vector<Arc>> seen;
    seen.insert(f.arcs());
    for (;;) {
        SimpleComponents sc = split_components(f.simple_view());
        std::vector<std::vector<int>> odd;
        for (size_t i = 0; i < sc.comps.size(); ++i)
            if (sc.is_odd_cycle[i]) {
                std::sort(sc.comps[i].begin(), sc.comps[i].end());
                odd.push_back(std::move(sc.comps[i]));
            }
        if (odd.empty()) return ParityStatus::Bipartite;
        std::sort(odd.begin(), odd.end());
        bool committed = false;
        for (const auto& comp : odd) {
            for (int x : comp) {
                if (f.f_in(x).size() != 1 || f.f_out(x).size() != 1) continue;
                int x_prev = f.f_in(x)[0];
                int x_next = f.f_out(x)[0];
                // The balance condition guarantees the second host arcs.
                int x_minus = -1, x_plus = -1;
                for (int u : d.in(x))
                    if (u != x_prev) x_minus = u;
                for (int w : d.out(x))
                    if (w != x_next) x_plus = w;
                if (x_minus < 0 || x_plus < 0)
                    throw std::logic_error("balance condition violated");
                for (int side = 0; side < 2 && !committed; ++side) {
                    FeedbackArcSet trial = f;
                    if (side == 0) {
                        // Cover the in-arcs of x instead of its out-arc.
                        trial.erase(x, x_next);
                        trial.insert(x_minus, x);
                    } else {
                        // Mirrored: cover the out-arcs of x instead.
                        trial.erase(x_prev, x);
                        trial.insert(x, x_plus);
                    }
                    FasOptions quiet = opt;
                    quiet.trace = nullptr;
                    saturate(d, trial, quiet, /*balance_rule=*/true);
                    auto state = trial.arcs();
                    if (seen.count(state)) continue;
                    f = std::move(trial);
                    if (opt.paranoid) check_feasible(f, "parity_repair_delta4");
                    if (opt.trace)
                        opt.trace->push_back(
                            {FasMove::Kind::ParitySwap, x, f.size(), odd_component_count(f)});
                    committed = true;
                    if (seen.size() < kStateCap) seen.insert(std::move(state));
                }
                if (committed) break;
            }
            if (committed) break;
        }
        if (!committed || seen.size() >= kStateCap) {
            check_feasible(f, "parity_repair_delta4 exit");
            return is_bidirected_odd_cycle(d) ? ParityStatus::BidirectedOddCycle
                                              : ParityStatus::Stuck;
        }
    }
}

std::vector<int> bipartition_smaller_side(const FeedbackArcSet& f) {
    UndirectedView g = f.simple_view();
    std::vector<int> colour(g.n, -1);
    std::vector<int> result;
    std::vector<int> queue;
    for (int s = 0; s < g.n; ++s) {
        if (colour[s] >= 0 || g.degree(s) == 0) continue;
        std::vector<int> side[2];
        colour[s] = 0;
        side[0].push_back(s);
        queue.assign(1, s);
        size_t head = 0;
        while (head < queue.size()) {
            int v = queue[head++];
            for (int w : g.adj[v]) {
                if (colour[w] < 0) {
                    colour[w] = 1 - colour[v];
                    side[colour[w]].push_back(w);
                    queue.push_back(w);
                } else if (colour[w] == colour[v]) {
                    throw PreconditionError("bipartition_smaller_side: odd cycle present");
                }
            }
        }
        // Smaller side per component; ties go to the class of the lowest id
        // (colour 0, because each component is rooted at its lowest vertex).
        const auto& pick = side[1].size() < side[0].size() ? side[1] : side[0];
        result.insert(result.end(), pick.begin(), pick.end());
    }
    std::sort(result.begin(), result.end());
    return result;
}

ParityReport parity_report(const FeedbackArcSet& f) {
    SimpleComponents sc = split_components(f.simple_view());
    ParityReport r;
    for (char c : sc.is_odd_cycle) {
        r.odd_components += c;
        r.c_value += c;
    }
    return r;
}

}  // namespace fvs
