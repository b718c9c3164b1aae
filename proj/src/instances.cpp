#include "fvs/instances.hpp"

#include <algorithm>
#include <sstream>

namespace fvs {

Digraph fig4() {
    std::vector<Arc> arcs;
    for (int i = 0; i < 7; ++i) {
        arcs.emplace_back(i, (i + 1) % 7);
        arcs.emplace_back(i, (i + 5) % 7);
    }
    return Digraph::from_arcs(7, arcs);
}

Digraph fig10() {
    std::vector<Arc> arcs{{0, 1}};
    for (int i = 1; i < 5; ++i) {
        int j = (i + 1) % 5;
        arcs.emplace_back(i, j);
        arcs.emplace_back(j, i);
    }
    return Digraph::from_arcs(5, arcs);
}

Digraph fig12() {
    std::vector<Arc> arcs{{0, 1}, {2, 0}, {3, 0}, {0, 4}, {5, 0}, {2, 1}, {1, 3}, {4, 1},
                          {1, 5}, {2, 3}, {4, 2}, {5, 2}, {3, 4}, {3, 5}, {4, 5}};
    return Digraph::from_arcs(6, arcs);
}

Digraph fig14() {
    std::vector<Arc> arcs;
    for (int base : {0, 3})
        for (int i = 0; i < 3; ++i) {
            int a = base + i, b = base + (i + 1) % 3;
            arcs.emplace_back(a, b);
            arcs.emplace_back(b, a);
        }
    for (int i = 0; i < 3; ++i) arcs.emplace_back(i, i + 3);
    return Digraph::from_arcs(6, arcs);
}

Digraph paley7() {
    std::vector<Arc> arcs;
    for (int i = 0; i < 7; ++i)
        for (int s : {1, 2, 4}) arcs.emplace_back(i, (i + s) % 7);
    return Digraph::from_arcs(7, arcs);
}

Digraph bidirected_odd_cycle(int k) {
    if (k < 1) throw PreconditionError("bidirected_odd_cycle: k must be positive");
    int n = 2 * k + 1;
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        arcs.emplace_back(i, j);
        arcs.emplace_back(j, i);
    }
    return Digraph::from_arcs(n, arcs);
}

GeneratedH generate_h(uint64_t seed, int block_budget) {
    if (block_budget < 1) throw PreconditionError("generate_h: block budget must be positive");
    SplitMix64 rng(seed);
    std::vector<Arc> arcs;
    std::vector<int> degree;
    HDecomposition dec;
    // Members are sets of block indices; each join merges two of them.
    std::vector<std::vector<int>> members;
    for (int b = 0; b < block_budget; ++b) {
        HKind kind = static_cast<HKind>(rng.below(3));
        int base = static_cast<int>(degree.size());
        HBlock block;
        block.kind = kind;
        for (int i = 0; i < h_pattern_size(kind); ++i) {
            block.vertices.push_back(base + i);
            block.role[i] = base + i;
            degree.push_back(0);
        }
        for (auto [a, c] : h_pattern_arcs(kind)) {
            arcs.emplace_back(base + a, base + c);
            degree[base + a]++;
            degree[base + c]++;
        }
        dec.blocks.push_back(std::move(block));
        members.push_back({b});
    }
    dec.block_of.assign(degree.size(), -1);
    for (size_t b = 0; b < dec.blocks.size(); ++b)
        for (int v : dec.blocks[b].vertices) dec.block_of[v] = static_cast<int>(b);
    while (members.size() > 1) {
        size_t i = rng.below(members.size());
        size_t j = rng.below(members.size() - 1);
        if (j >= i) ++j;
        auto spare_vertices = [&](const std::vector<int>& blocks) {
            std::vector<int> vs;
            for (int b : blocks)
                for (int v : dec.blocks[b].vertices)
                    if (degree[v] < 4) vs.push_back(v);
            return vs;
        };
        std::vector<int> from = spare_vertices(members[i]);
        std::vector<int> to = spare_vertices(members[j]);
        // Every member keeps at least four spare degree slots, so both
        // candidate lists are nonempty.
        int u = from[rng.below(from.size())];
        int v = to[rng.below(to.size())];
        arcs.emplace_back(u, v);
        degree[u]++;
        degree[v]++;
        dec.tree_arcs.emplace_back(u, v);
        members[i].insert(members[i].end(), members[j].begin(), members[j].end());
        members.erase(members.begin() + j);
    }
    std::sort(dec.tree_arcs.begin(), dec.tree_arcs.end());
    GeneratedH g;
    g.graph = Digraph::from_arcs(static_cast<int>(degree.size()), arcs);
    g.decomposition = std::move(dec);
    return g;
}

namespace {

Digraph rand_bounded_once(int n, int max_degree, bool oriented, SplitMix64& rng) {
    std::vector<std::vector<int>> out(n), in(n);
    std::vector<int> degree(n, 0);
    int arcs = 0;
    if (n > 1 && max_degree > 0) {
        uint64_t span = 4ULL * n * max_degree;
        uint64_t attempts = rng.below(span + 1);
        auto has = [&](int u, int v) {
            return std::find(out[u].begin(), out[u].end(), v) != out[u].end();
        };
        for (uint64_t t = 0; t < attempts; ++t) {
            int u = static_cast<int>(rng.below(n));
            int v = static_cast<int>(rng.below(n));
            if (u == v || degree[u] >= max_degree || degree[v] >= max_degree) continue;
            if (has(u, v)) continue;
            if (oriented && has(v, u)) continue;
            out[u].push_back(v);
            in[v].push_back(u);
            degree[u]++;
            degree[v]++;
            ++arcs;
        }
    }
    std::vector<Arc> list;
    list.reserve(arcs);
    for (int u = 0; u < n; ++u)
        for (int v : out[u]) list.emplace_back(u, v);
    return Digraph::from_arcs(n, list);
}

}  // namespace

Digraph rand_bounded(int n, int max_degree, bool oriented, uint64_t seed, bool connected) {
    if (n < 1) throw PreconditionError("rand_bounded: need at least one vertex");
    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Digraph d = rand_bounded_once(n, max_degree, oriented, rng);
        if (!connected || underlying(d).comp_count <= 1) return d;
    }
    throw std::runtime_error("rand_bounded: could not sample a connected graph");
}

void enum_small(int n, int max_degree, bool oriented,
                const std::function<void(const Digraph&)>& visit) {
    if (n < 1 || n > 5) throw PreconditionError("enum_small: n must be in 1..5");
    std::vector<Arc> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    int base = oriented ? 3 : 4;  // states per unordered pair
    long long total = 1;
    for (size_t i = 0; i < pairs.size(); ++i) total *= base;
    std::vector<int> state(pairs.size(), 0);
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        for (size_t i = 0; i < pairs.size(); ++i) {
            state[i] = static_cast<int>(c % base);
            c /= base;
        }
        std::vector<Arc> arcs;
        for (size_t i = 0; i < pairs.size(); ++i) {
            auto [u, v] = pairs[i];
            if (state[i] == 1 || state[i] == 3) arcs.emplace_back(u, v);
            if (state[i] == 2 || state[i] == 3) arcs.emplace_back(v, u);
        }
        Digraph d = Digraph::from_arcs(n, arcs);
        if (degree_profile(d).max_degree > max_degree) continue;
        if (underlying(d).comp_count != 1) continue;
        visit(d);
    }
}

std::optional<InstanceSpec> InstanceSpec::parse(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.empty()) return std::nullopt;
    const std::string& kind = parts[0];
    auto want = [&](size_t lo, size_t hi) { return parts.size() >= lo && parts.size() <= hi; };
    auto numeric = [&](size_t i) {
        return !parts[i].empty() &&
               parts[i].find_first_not_of("0123456789") == std::string::npos;
    };
    bool ok = false;
    if (kind == "fig4" || kind == "fig10" || kind == "fig12" || kind == "fig14" ||
        kind == "paley7")
        ok = want(1, 1);
    else if (kind == "co" || kind == "h")
        ok = want(2, 3);
    else if (kind == "rand_orgraph" || kind == "rand_digraph")
        ok = want(4, 5) && (parts.size() == 4 || parts[4] == "c");
    if (!ok) return std::nullopt;
    for (size_t i = 1; i < parts.size(); ++i)
        if (!(i == 4 && parts[i] == "c") && !numeric(i)) return std::nullopt;
    return InstanceSpec{text};
}

Digraph InstanceSpec::build() const {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    const std::string& kind = parts[0];
    if (kind == "fig4") return fig4();
    if (kind == "fig10") return fig10();
    if (kind == "fig12") return fig12();
    if (kind == "fig14") return fig14();
    if (kind == "paley7") return paley7();
    if (kind == "co") return bidirected_odd_cycle(std::stoi(parts[1]));
    if (kind == "h") {
        int budget = parts.size() > 2 ? std::stoi(parts[2]) : 4;
        return generate_h(std::stoull(parts[1]), budget).graph;
    }
    bool oriented = kind == "rand_orgraph";
    bool connected = parts.size() > 4 && parts[4] == "c";
    return rand_bounded(std::stoi(parts[1]), std::stoi(parts[2]), oriented,
                        std::stoull(parts[3]), connected);
}

}  // namespace fvs
