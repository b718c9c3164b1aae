// Command-line front end: solve single instances, generate instances,
// run seeded fuzz/bound-check campaigns, and audit the reduction engine.
//
// Exit codes: 0 = certified output, 2 = usage or precondition error,
// 3 = algorithmic gap (artifact written).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "fvs/bounds.hpp"
#include "fvs/hclass.hpp"
#include "fvs/instances.hpp"
#include "fvs/io.hpp"
#include "fvs/oracle.hpp"
#include "fvs/sweep.hpp"

namespace {

using namespace fvs;

uint64_t trial_seed(uint64_t campaign_seed, int trial) {
    return SplitMix64(campaign_seed + 0x9e3779b97f4a7c15ULL * (trial + 1)).next();
}

Digraph resolve_instance(const std::string& arg) {
    if (std::filesystem::exists(arg)) return read_instance_file(arg);
    if (auto spec = InstanceSpec::parse(arg)) return spec->build();
    if (const char* dir = std::getenv("FVS_GOLDEN_DIR")) {
        std::string path = std::string(dir) + "/" + arg + ".graph";
        if (std::filesystem::exists(path)) return read_instance_file(path);
    }
    throw std::runtime_error("cannot resolve instance '" + arg +
                             "' (not a file, spec, or golden name)");
}

struct MethodRun {
    bool ok = false;
    std::string gap_kind;  // NO_RULE_APPLIES / RULE_BOUND_VIOLATION / REPAIR_STUCK / BUDGET
    FeedbackVertexSet fvs;
    bool co_flag = false;
    std::vector<TraceEntry> trace;   // rule firings (thm1)
    std::vector<FasMove> fas_trace;  // local-search moves (thm2/3/4)
    std::optional<Digraph> gap_graph;
};

MethodRun run_method(const Digraph& d, Method m, long long budget, bool want_trace = false) {
    MethodRun r;
    FasOptions fas_opt;
    if (want_trace) fas_opt.trace = &r.fas_trace;
    switch (m) {
        case Method::Exact: {
            auto sol = fvs_exact(d, budget);
            if (!sol) {
                r.gap_kind = "BUDGET";
                return r;
            }
            r.ok = true;
            r.fvs = std::move(*sol);
            return r;
        }
        case Method::Thm1: {
            OrgraphDelta4Result er = fvs_orgraph_delta4(d);
            if (er.status != EngineStatus::Ok) {
                r.gap_kind = engine_status_name(er.status);
                r.gap_graph = std::move(er.gap);
                r.trace = std::move(er.trace);
                return r;
            }
            r.ok = true;
            r.fvs = std::move(er.fvs);
            r.trace = std::move(er.trace);
            return r;
        }
        case Method::Thm2: {
            Delta4DigraphResult dr = fvs_digraph_delta4(d, fas_opt);
            if (dr.status == Delta4DigraphResult::Status::Stuck) {
                r.gap_kind = "REPAIR_STUCK";
                r.gap_graph = d;
                return r;
            }
            r.ok = true;
            r.co_flag = dr.status == Delta4DigraphResult::Status::CoExact;
            r.fvs = std::move(dr.fvs);
            return r;
        }
        case Method::Thm3:
            r.ok = true;
            r.fvs = fvs_orgraph_delta5(d, fas_opt);
            return r;
        default:
            r.ok = true;
            r.fvs = fvs_digraph_delta5(d, fas_opt);
            return r;
    }
}

uint64_t instance_hash(const Digraph& d) {
    // FNV-1a over the canonical emission.
    uint64_t h = 1469598103934665603ULL;
    for (char c : emit_instance(d)) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex16(uint64_t x) {
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
    return buf;
}

std::string dump_artifact(const std::string& out_dir, const std::string& stem,
                          const Digraph& d, const std::string& note) {
    std::filesystem::create_directories(out_dir);
    std::string path = out_dir + "/" + stem + ".graph";
    write_instance_file(path, d, note);
    return path;
}

// Greedily deletes vertices while the predicate keeps holding; the result
// is a smaller graph that still exhibits the property.
Digraph minimize_repro(Digraph d, const std::function<bool(const Digraph&)>& violates) {
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (int v = 0; v < d.order(); ++v) {
            Digraph smaller = delete_vertices(d, {v}).graph;
            bool still = false;
            try {
                still = violates(smaller);
            } catch (const std::exception&) {
                still = false;  // left the method's precondition space
            }
            if (still) {
                d = std::move(smaller);
                shrunk = true;
                break;
            }
        }
    }
    return d;
}

Digraph random_dag_orgraph(int n, int max_degree, uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<int> degree(n, 0);
    std::vector<Arc> arcs;
    uint64_t attempts = 2ULL * n * std::max(max_degree, 1);
    for (uint64_t t = 0; t < attempts; ++t) {
        int u = static_cast<int>(rng.below(n));
        int v = static_cast<int>(rng.below(n));
        if (u >= v || degree[u] >= max_degree || degree[v] >= max_degree) continue;
        if (std::find(arcs.begin(), arcs.end(), Arc{u, v}) != arcs.end()) continue;
        arcs.emplace_back(u, v);
        degree[u]++;
        degree[v]++;
    }
    return Digraph::from_arcs(n, arcs);
}

struct FuzzConfig {
    Method method = Method::Thm3;
    int trials = 1000;
    uint64_t seed = 1;
    int n_max = 18;
    int delta = -1;  // -1: method default
    bool oriented = false;
    long long budget = kDefaultOracleBudget;
    std::string out_path;  // empty: stdout
    std::string artifact_dir = "artifacts";
    bool serial = false;
    bool with_exact = false;
};

int method_default_delta(Method m) {
    return (m == Method::Thm1 || m == Method::Thm2) ? 4 : 5;
}

Digraph fuzz_instance(const FuzzConfig& cfg, int trial) {
    uint64_t seed = trial_seed(cfg.seed, trial);
    SplitMix64 rng(seed);
    int n = 3 + static_cast<int>(rng.below(std::max(1, cfg.n_max - 2)));
    int delta = cfg.delta > 0 ? cfg.delta : method_default_delta(cfg.method);
    switch (cfg.method) {
        case Method::Thm1:
            return rand_bounded(n, std::min(delta, 4), true, rng.next(), true);
        case Method::Thm2:
            for (uint64_t k = 0;; ++k) {
                Digraph d = rand_bounded(n, std::min(delta, 4), false, rng.next() + k, true);
                if (!is_bidirected_odd_cycle(d)) return d;
            }
        case Method::Thm3:
            return rand_bounded(n, delta, true, rng.next(), true);
        case Method::Thm4:
            return rand_bounded(n, delta, false, rng.next(), false);
        default:
            return rand_bounded(n, delta, cfg.oriented, rng.next(), false);
    }
}

int cmd_fuzz(const FuzzConfig& cfg) {
    std::ostringstream csv;
    csv << "# fvsb-fuzz-csv-v1\n";
    csv << "# config: method=" << method_name(cfg.method) << " trials=" << cfg.trials
        << " seed=" << cfg.seed << " n-max=" << cfg.n_max << " delta=" << cfg.delta
        << " oriented=" << cfg.oriented << " with-exact=" << cfg.with_exact << '\n';
    csv << "trial,instance,n,m,delta,method,size,bound_floor,exact,certified,violation\n";
    std::vector<double> max_ratio_by_delta(8, 0.0);
    auto row_of = [&](int t) -> std::string {
        Digraph d = fuzz_instance(cfg, t);
        int delta = degree_profile(d).max_degree;
        std::ostringstream row;
        row << t << ',' << hex16(instance_hash(d)) << ',' << d.order() << ',' << d.size()
            << ',' << delta << ',' << method_name(cfg.method) << ',';
        std::string violation;
        int size = -1;
        MethodRun run;
        try {
            run = run_method(d, cfg.method, cfg.budget);
        } catch (const std::exception& e) {
            violation = std::string("exception: ") + e.what();
        }
        long long bound = -1;
        std::string exact_field;
        if (run.ok) {
            size = static_cast<int>(run.fvs.vertices.size());
            bound = bound_report(d, cfg.method, size).floor_bound();
            if (cfg.method != Method::Exact && size > bound && !run.co_flag)
                violation = "bound";
            if (cfg.with_exact) {
                if (auto ex = fvs_exact(d, cfg.budget)) {
                    exact_field = std::to_string(ex->vertices.size());
                    if (cfg.method != Method::Exact &&
                        static_cast<long long>(ex->vertices.size()) > bound && !run.co_flag)
                        violation = "exact-exceeds-bound";
                }
            }
        } else if (violation.empty()) {
            violation = run.gap_kind;
        }
        row << (size >= 0 ? std::to_string(size) : "") << ','
            << (bound >= 0 ? std::to_string(bound) : "") << ',' << exact_field << ','
            << (run.ok ? "1" : "0") << ',' << violation;
        return row.str();
    };
    auto rows = cfg.serial ? run_sweep_serial(cfg.trials, row_of)
                           : run_sweep_parallel(cfg.trials, row_of);
    int violations = 0;
    for (int t = 0; t < cfg.trials; ++t) {
        csv << rows[t] << '\n';
        // Re-derive the instance for summary stats and artifacts.
        std::string row = rows[t];
        bool violating = !row.empty() && row.back() != ',';
        if (violating) {
            ++violations;
            Digraph d = fuzz_instance(cfg, t);
            auto bad = [&](const Digraph& g) {
                MethodRun r = run_method(g, cfg.method, cfg.budget);
                if (!r.ok) return true;
                long long b =
                    bound_report(g, cfg.method, static_cast<int>(r.fvs.vertices.size()))
                        .floor_bound();
                return !r.co_flag &&
                       static_cast<long long>(r.fvs.vertices.size()) > b;
            };
            Digraph mini = minimize_repro(d, bad);
            std::string path = dump_artifact(
                cfg.artifact_dir, "fuzz_" + std::string(method_name(cfg.method)) + "_t" +
                                      std::to_string(t),
                mini, "repro trial " + std::to_string(t));
            std::cerr << "violation at trial " << t << "; repro: " << path << '\n';
        } else {
            Digraph d = fuzz_instance(cfg, t);
            MethodRun r = run_method(d, cfg.method, cfg.budget);
            if (r.ok && d.order() > 0) {
                int delta = std::min(degree_profile(d).max_degree, 7);
                double ratio = double(r.fvs.vertices.size()) / d.order();
                max_ratio_by_delta[delta] = std::max(max_ratio_by_delta[delta], ratio);
            }
        }
    }
    for (int delta = 0; delta < 8; ++delta)
        if (max_ratio_by_delta[delta] > 0)
            csv << "# max fvs/n at delta " << delta << ": " << max_ratio_by_delta[delta]
                << '\n';
    csv << "# violations: " << violations << '\n';
    if (cfg.out_path.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(cfg.out_path);
        out << csv.str();
    }
    return 0;
}

int cmd_solve(const std::string& instance_arg, Method method, long long budget,
              bool want_trace, const std::string& out_dir) {
    Digraph d = resolve_instance(instance_arg);
    MethodRun run;
    try {
        run = run_method(d, method, budget, want_trace);
    } catch (const PreconditionError& e) {
        std::cerr << "precondition: " << e.what() << '\n';
        return 2;
    }
    if (!run.ok) {
        std::string path =
            dump_artifact(out_dir, "gap_" + std::string(method_name(method)),
                          run.gap_graph ? *run.gap_graph : d, run.gap_kind);
        std::cerr << run.gap_kind << "; artifact: " << path << '\n';
        return 3;
    }
    int size = static_cast<int>(run.fvs.vertices.size());
    std::cout << "n " << d.order() << " m " << d.size() << '\n';
    std::cout << "method " << method_name(method) << '\n';
    std::cout << "fvs_size " << size << '\n';
    std::cout << "fvs";
    for (int v : run.fvs.vertices) std::cout << ' ' << v;
    std::cout << '\n';
    if (method != Method::Exact) {
        BoundReport br = bound_report(d, method, size);
        std::cout << "bound " << br.bound_num << '/' << br.bound_den << " floor "
                  << br.floor_bound() << '\n';
    }
    if (run.co_flag) std::cout << "co_member 1\n";
    // The pipelines certify on construction; re-check for the exit code.
    bool certified = is_feedback_vertex_set(d, run.fvs.vertices);
    std::cout << "certified " << (certified ? 1 : 0) << '\n';
    if (want_trace) {
        for (const auto& e : run.trace)
            std::cout << "trace " << rule_name(e.rule) << " n=" << e.n_before
                      << " m=" << e.m_before << '\n';
        for (const auto& m : run.fas_trace)
            std::cout << "move " << move_kind_name(m.kind) << ' ' << m.vertex << ' '
                      << m.f_size << ' ' << m.odd_components << '\n';
    }
    return certified ? 0 : 3;
}

int cmd_gen(const std::string& spec_arg, const std::string& out_path) {
    auto spec = InstanceSpec::parse(spec_arg);
    if (!spec) {
        std::cerr << "bad instance spec: " << spec_arg << '\n';
        return 2;
    }
    Digraph d = spec->build();
    std::string body = "# spec: " + spec->text + "\n" + emit_instance(d);
    if (out_path.empty())
        std::cout << body;
    else {
        std::ofstream out(out_path);
        out << body;
    }
    return 0;
}

int cmd_bound_check(int n_max, int trials, uint64_t seed, int rand_n_max,
                    const std::string& out_path, const std::string& artifact_dir) {
    std::ostringstream csv;
    csv << "# fvsb-bound-check-csv-v1\n";
    csv << "# config: n-max=" << n_max << " trials=" << trials << " seed=" << seed
        << " rand-n-max=" << rand_n_max << '\n';
    csv << "phase,index,n,m,h,bound_floor,engine,exact,violation\n";
    long long checked = 0, violations = 0;
    for (int n = 1; n <= std::min(n_max, 5); ++n) {
        long long idx = 0;
        enum_small(n, 4, true, [&](const Digraph& d) {
            auto exact = fvs_exact(d);
            int h = h_count(d);
            long long bound = (d.order() + d.size() + h) / 7;
            EngineResult er = reduce(d);
            bool bad = !exact || static_cast<long long>(exact->vertices.size()) > bound ||
                       er.status != EngineStatus::Ok ||
                       static_cast<long long>(er.fvs.size()) > bound;
            ++checked;
            if (bad) {
                ++violations;
                csv << "exhaustive," << idx << ',' << d.order() << ',' << d.size() << ',' << h
                    << ',' << bound << ','
                    << (er.status == EngineStatus::Ok ? std::to_string(er.fvs.size())
                                                      : engine_status_name(er.status))
                    << ',' << (exact ? std::to_string(exact->vertices.size()) : "?")
                    << ",1\n";
                dump_artifact(artifact_dir, "bound_exh_" + std::to_string(idx), d,
                              "exhaustive bound violation");
            }
            ++idx;
        });
    }
    auto row_of = [&](int t) -> std::string {
        uint64_t s = trial_seed(seed, t);
        SplitMix64 rng(s);
        int n = 4 + static_cast<int>(rng.below(std::max(1, rand_n_max - 3)));
        Digraph d = rand_bounded(n, 4, true, rng.next(), true);
        auto exact = fvs_exact(d);
        int h = h_count(d);
        long long bound = (d.order() + d.size() + h) / 7;
        EngineResult er = reduce(d);
        bool bad = !exact || static_cast<long long>(exact->vertices.size()) > bound ||
                   er.status != EngineStatus::Ok ||
                   static_cast<long long>(er.fvs.size()) > bound;
        std::ostringstream row;
        if (bad)
            row << "random," << t << ',' << d.order() << ',' << d.size() << ',' << h << ','
                << bound << ','
                << (er.status == EngineStatus::Ok ? std::to_string(er.fvs.size())
                                                  : engine_status_name(er.status))
                << ',' << (exact ? std::to_string(exact->vertices.size()) : "?") << ",1";
        return row.str();
    };
    auto rows = run_sweep_parallel(trials, row_of);
    for (int t = 0; t < trials; ++t) {
        ++checked;
        if (!rows[t].empty()) {
            ++violations;
            csv << rows[t] << '\n';
            uint64_t s = trial_seed(seed, t);
            SplitMix64 rng(s);
            int n = 4 + static_cast<int>(rng.below(std::max(1, rand_n_max - 3)));
            Digraph d = rand_bounded(n, 4, true, rng.next(), true);
            dump_artifact(artifact_dir, "bound_rand_" + std::to_string(t), d,
                          "random bound violation");
        }
    }
    csv << "# checked: " << checked << '\n';
    csv << "# violations: " << violations << '\n';
    if (out_path.empty())
        std::cout << csv.str();
    else {
        std::ofstream out(out_path);
        out << csv.str();
    }
    return 0;
}

int cmd_engine_audit(int trials, uint64_t seed, int n_max, const std::string& family,
                     const std::string& out_path, const std::string& artifact_dir) {
    auto row_of = [&](int t) -> std::string {
        uint64_t s = trial_seed(seed, t);
        SplitMix64 rng(s);
        Digraph d(0);
        if (family == "h") {
            d = generate_h(rng.next(), 1 + static_cast<int>(rng.below(6))).graph;
        } else if (family == "dag") {
            int n = 4 + static_cast<int>(rng.below(std::max(1, n_max - 3)));
            d = random_dag_orgraph(n, 4, rng.next());
        } else {
            int n = 4 + static_cast<int>(rng.below(std::max(1, n_max - 3)));
            d = rand_bounded(n, 4, true, rng.next(), true);
        }
        OrgraphDelta4Result er = fvs_orgraph_delta4(d);
        std::map<std::string, int> hist;
        for (const auto& e : er.trace) hist[rule_name(e.rule)]++;
        std::ostringstream line;
        line << "{\"trial\":" << t << ",\"n\":" << d.order() << ",\"m\":" << d.size()
             << ",\"status\":\"" << engine_status_name(er.status) << "\"";
        if (er.status == EngineStatus::Ok) line << ",\"fvs_size\":" << er.fvs.vertices.size();
        line << ",\"rules\":{";
        bool first = true;
        for (const auto& [k, v] : hist) {
            if (!first) line << ',';
            first = false;
            line << '"' << k << "\":" << v;
        }
        line << "}}";
        return line.str();
    };
    auto rows = run_sweep_parallel(trials, row_of);
    std::ostringstream out;
    int gaps = 0;
    std::map<std::string, long long> totals;
    for (int t = 0; t < trials; ++t) {
        out << rows[t] << '\n';
        if (rows[t].find("\"status\":\"OK\"") == std::string::npos) {
            ++gaps;
            uint64_t s = trial_seed(seed, t);
            SplitMix64 rng(s);
            if (family == "rand") {
                int n = 4 + static_cast<int>(rng.below(std::max(1, n_max - 3)));
                Digraph d = rand_bounded(n, 4, true, rng.next(), true);
                dump_artifact(artifact_dir, "audit_gap_" + std::to_string(t), d,
                              "engine gap");
            }
        }
        // Accumulate the per-rule counts from the JSON line.
        size_t pos = rows[t].find("\"rules\":{");
        if (pos != std::string::npos) {
            std::string rest = rows[t].substr(pos + 9);
            std::stringstream ss(rest);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                auto colon = tok.find("\":");
                if (colon == std::string::npos) break;
                std::string key = tok.substr(1, colon - 1);
                totals[key] += std::atoll(tok.c_str() + colon + 2);
            }
        }
    }
    out << "{\"summary\":{\"trials\":" << trials << ",\"gaps\":" << gaps
        << ",\"gap_rate\":" << (trials ? double(gaps) / trials : 0.0) << ",\"rule_totals\":{";
    bool first = true;
    for (const auto& [k, v] : totals) {
        if (!first) out << ',';
        first = false;
        out << '"' << k << "\":" << v;
    }
    out << "}}}\n";
    if (out_path.empty())
        std::cout << out.str();
    else {
        std::ofstream f(out_path);
        f << out.str();
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"feedback vertex set bounds for low-degree digraphs"};
    app.require_subcommand(1);

    std::string instance_arg, method_str = "exact", out_path, artifact_dir = "artifacts";
    long long budget = kDefaultOracleBudget;
    bool want_trace = false, oriented = false, serial = false, with_exact = false;
    int trials = 1000, n_max = 16, delta = -1, rand_n_max = 14;
    uint64_t seed = 1;
    std::string family = "rand";

    auto* solve = app.add_subcommand("solve", "solve one instance and certify the result");
    solve->add_option("instance", instance_arg, "file path, spec, or golden name")->required();
    solve->add_option("--method", method_str, "exact|thm1|thm2|thm3|thm4");
    solve->add_option("--oracle-budget", budget, "search node budget");
    solve->add_flag("--trace", want_trace, "print rule firings");
    solve->add_option("--out", artifact_dir, "artifact directory for gaps");

    auto* gen = app.add_subcommand("gen", "emit an instance file");
    gen->add_option("spec", instance_arg, "instance spec, e.g. fig4 or rand_orgraph:12:4:7")
        ->required();
    gen->add_option("--out", out_path, "output file (default stdout)");

    auto* fuzz = app.add_subcommand("fuzz", "seeded campaign through one method");
    fuzz->add_option("--method", method_str, "exact|thm1|thm2|thm3|thm4");
    fuzz->add_option("--trials", trials, "number of instances");
    fuzz->add_option("--seed", seed, "campaign seed");
    fuzz->add_option("--n-max", n_max, "maximum instance order");
    fuzz->add_option("--delta", delta, "degree cap override");
    fuzz->add_flag("--oriented", oriented, "oriented instances (method exact only)");
    fuzz->add_option("--oracle-budget", budget, "search node budget");
    fuzz->add_option("--out", out_path, "CSV path (default stdout)");
    fuzz->add_option("--artifacts", artifact_dir, "repro directory");
    fuzz->add_flag("--serial", serial, "use the serial reference executor");
    fuzz->add_flag("--with-exact", with_exact, "also run the exact oracle per trial");

    int bc_n_max = 5;
    auto* bc = app.add_subcommand("bound-check",
                                  "exhaustive + randomized bound verification (degree 4, oriented)");
    bc->add_option("--n-max", bc_n_max, "exhaustive enumeration limit (<= 5)");
    bc->add_option("--trials", trials, "randomized trials");
    bc->add_option("--seed", seed, "campaign seed");
    bc->add_option("--rand-n-max", rand_n_max, "max order of random instances");
    bc->add_option("--out", out_path, "CSV path (default stdout)");
    bc->add_option("--artifacts", artifact_dir, "repro directory");

    auto* audit = app.add_subcommand("engine-audit", "rule telemetry over an instance stream");
    audit->add_option("--trials", trials, "number of instances");
    audit->add_option("--seed", seed, "campaign seed");
    audit->add_option("--n-max", n_max, "maximum instance order");
    audit->add_option("--family", family, "rand|h|dag");
    audit->add_option("--out", out_path, "JSONL path (default stdout)");
    audit->add_option("--artifacts", artifact_dir, "gap instance directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed() || fuzz->parsed()) {
            auto method = method_from_name(method_str);
            if (!method) {
                std::cerr << "unknown method: " << method_str << '\n';
                return 2;
            }
            if (solve->parsed())
                return cmd_solve(instance_arg, *method, budget, want_trace, artifact_dir);
            FuzzConfig cfg;
            cfg.method = *method;
            cfg.trials = trials;
            cfg.seed = seed;
            cfg.n_max = n_max;
            cfg.delta = delta;
            cfg.oriented = oriented;
            cfg.budget = budget;
            cfg.out_path = out_path;
            cfg.artifact_dir = artifact_dir;
            cfg.serial = serial;
            cfg.with_exact = with_exact;
            return cmd_fuzz(cfg);
        }
        if (gen->parsed()) return cmd_gen(instance_arg, out_path);
        if (bc->parsed())
            return cmd_bound_check(bc_n_max, trials, seed, rand_n_max, out_path, artifact_dir);
        if (audit->parsed())
            return cmd_engine_audit(trials, seed, n_max, family, out_path, artifact_dir);
    } catch (const PreconditionError& e) {
        std::cerr << "precondition: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
