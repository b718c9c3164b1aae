#include "fvs/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "fvs/hclass.hpp"
#include "fvs/oracle.hpp"

namespace fvs {

std::optional<int> is_bidirected_odd_cycle(const Digraph& d) {
    int n = d.order();
    if (n < 3 || n % 2 == 0) return std::nullopt;
    for (int v = 0; v < n; ++v) {
        if (d.out_degree(v) != 2 || d.in_degree(v) != 2) return std::nullopt;
        for (int w : d.out(v))
            if (!d.has_arc(w, v)) return std::nullopt;
    }
    UnderlyingInfo und = underlying(d);
    if (und.comp_count != 1) return std::nullopt;
    // Balanced of degree 4 with all arcs paired and connected: the simple
    // graph is 2-regular and connected, i.e. a single n-cycle.
    if (static_cast<int>(und.graph.edges.size()) != n) return std::nullopt;
    return n;
}

namespace {

// Vertices outside any strong component of size >= 2 lie on no cycle, so
// the arc-set pipelines run per nontrivial strong component and skip the
// rest. The reduction engine instead works per connected component.
std::vector<std::vector<int>> nontrivial_sccs(const Digraph& d) {
    SccPartition scc = strong_components(d);
    std::vector<std::vector<int>> out;
    for (auto& comp : scc.components)
        if (comp.size() >= 2) out.push_back(std::move(comp));
    return out;
}

std::vector<std::vector<int>> component_lists(const Digraph& d) {
    UnderlyingInfo und = underlying(d);
    std::vector<std::vector<int>> comps(und.comp_count);
    for (int v = 0; v < d.order(); ++v) comps[und.comp_of[v]].push_back(v);
    return comps;
}

void map_into(const std::vector<int>& local, const std::vector<int>& old_id,
              std::vector<int>& out) {
    for (int v : local) out.push_back(old_id[v]);
}

}  // namespace

FeedbackVertexSet fvs_orgraph_delta5(const Digraph& d, const FasOptions& opt) {
    if (!is_oriented(d)) throw PreconditionError("fvs_orgraph_delta5: input has a 2-cycle");
    if (degree_profile(d).max_degree > 5)
        throw PreconditionError("fvs_orgraph_delta5: maximum degree exceeds 5");
    std::vector<int> picks;
    for (const auto& comp : nontrivial_sccs(d)) {
        ReducedGraph sub = induced_subgraph(d, comp);
        FeedbackArcSet f = fas_init(sub.graph);
        swap_saturate(sub.graph, f, opt);
        odd_cycle_repair(sub.graph, f, opt);
        map_into(bipartition_smaller_side(f), sub.old_id, picks);
    }
    return certify_fvs(d, picks);
}

FeedbackVertexSet fvs_digraph_delta5(const Digraph& d, const FasOptions& opt) {
    if (degree_profile(d).max_degree > 5)
        throw PreconditionError("fvs_digraph_delta5: maximum degree exceeds 5");
    std::vector<int> picks;
    for (const auto& comp : nontrivial_sccs(d)) {
        ReducedGraph sub = induced_subgraph(d, comp);
        FeedbackArcSet f = fas_init(sub.graph);
        swap_saturate(sub.graph, f, opt);
        map_into(vertex_cover_maxdeg2(f.simple_view()), sub.old_id, picks);
    }
    return certify_fvs(d, picks);
}

Delta4DigraphResult fvs_digraph_delta4(const Digraph& d, const FasOptions& opt) {
    if (degree_profile(d).max_degree > 4)
        throw PreconditionError("fvs_digraph_delta4: maximum degree exceeds 4");
    if (underlying(d).comp_count != 1)
        throw PreconditionError("fvs_digraph_delta4: input is disconnected");
    Delta4DigraphResult r;
    if (is_bidirected_odd_cycle(d)) {
        // Exact optimum: a minimum vertex cover of the underlying odd cycle.
        r.status = Delta4DigraphResult::Status::CoExact;
        r.fvs = certify_fvs(d, vertex_cover_maxdeg2(underlying_view(d)));
        return r;
    }
    // A bidirected odd cycle never embeds as a proper strong component
    // (its vertices have no spare degree), so the components here are
    // ordinary and the repair loop terminates or reports itself stuck.
    std::vector<int> picks;
    for (const auto& comp : nontrivial_sccs(d)) {
        ReducedGraph sub = induced_subgraph(d, comp);
        FeedbackArcSet f = fas_init(sub.graph);
        swap_saturate(sub.graph, f, opt);
        switch (parity_repair_delta4(sub.graph, f, opt)) {
            case ParityStatus::Bipartite:
                map_into(bipartition_smaller_side(f), sub.old_id, picks);
                break;
            case ParityStatus::BidirectedOddCycle:
                map_into(vertex_cover_maxdeg2(underlying_view(sub.graph)), sub.old_id,
                         picks);
                break;
            default:
                r.status = Delta4DigraphResult::Status::Stuck;
                return r;
        }
    }
    r.fvs = certify_fvs(d, picks);
    return r;
}

OrgraphDelta4Result fvs_orgraph_delta4(const Digraph& d, const EngineOptions& opt) {
    if (!is_oriented(d)) throw PreconditionError("fvs_orgraph_delta4: input has a 2-cycle");
    if (degree_profile(d).max_degree > 4)
        throw PreconditionError("fvs_orgraph_delta4: maximum degree exceeds 4");
    OrgraphDelta4Result r;
    std::vector<int> picks;
    for (const auto& comp : component_lists(d)) {
        ReducedGraph sub = induced_subgraph(d, comp);
        EngineResult er = reduce(sub.graph, opt);
        for (auto& entry : er.trace) {
            for (int& v : entry.vertices) v = sub.old_id[v];
            r.trace.push_back(std::move(entry));
        }
        if (er.status != EngineStatus::Ok) {
            r.status = er.status;
            r.gap = std::move(er.gap);
            return r;
        }
        map_into(er.fvs, sub.old_id, picks);
    }
    r.fvs = certify_fvs(d, picks);
    return r;
}

const char* method_name(Method m) {
    switch (m) {
        case Method::Exact: return "exact";
        case Method::Thm1: return "thm1";
        case Method::Thm2: return "thm2";
        case Method::Thm3: return "thm3";
        default: return "thm4";
    }
}

std::optional<Method> method_from_name(const std::string& name) {
    for (Method m : {Method::Exact, Method::Thm1, Method::Thm2, Method::Thm3, Method::Thm4})
        if (name == method_name(m)) return m;
    return std::nullopt;
}

std::string BoundReport::csv_header() {
    return "instance,method,n,m,h,bound,achieved,exact,tight";
}

std::string BoundReport::csv_row() const {
    std::ostringstream out;
    out << instance_id << ',' << method_name(method) << ',' << n << ',' << m << ',' << h << ','
        << bound_num << '/' << bound_den << ',' << achieved << ',';
    if (exact) out << *exact;
    out << ',' << (tight ? "1" : "0");
    return out.str();
}

BoundReport bound_report(const Digraph& d, Method method, int achieved,
                         std::optional<int> exact, const std::string& instance_id) {
    BoundReport r;
    r.instance_id = instance_id;
    r.method = method;
    r.n = d.order();
    r.m = d.size();
    r.h = h_count(d);
    r.achieved = achieved;
    r.exact = exact;
    switch (method) {
        case Method::Thm1:
            r.bound_num = r.n + r.m + r.h;
            r.bound_den = 7;
            break;
        case Method::Thm2:
        case Method::Thm3:
            r.bound_num = r.n;
            r.bound_den = 2;
            break;
        case Method::Thm4:
            r.bound_num = 2LL * r.n;
            r.bound_den = 3;
            break;
        case Method::Exact:
            r.bound_num = r.n;
            r.bound_den = 1;
            break;
    }
    long long g = std::gcd(r.bound_num, r.bound_den);
    if (g > 1) {
        r.bound_num /= g;
        r.bound_den /= g;
    }
    r.tight = achieved == r.floor_bound() && (!exact || achieved == *exact);
    return r;
}

}  // namespace fvs
