// minenum: approximate enumeration of minimal sets for monotone properties.
//
// Subcommands:
//   run     stream the enumerated family for one instance
//   audit   enumerate-then-audit against the brute-force oracle
//   oracle  dump the brute-force family

#include <cmath>
#include <csignal>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "minenum/cks.hpp"
#include "minenum/eds.hpp"
#include "minenum/engine.hpp"
#include "minenum/hitting.hpp"
#include "minenum/oracle.hpp"
#include "minenum/property.hpp"
#include "minenum/randgen.hpp"
#include "minenum/seeds.hpp"
#include "minenum/steiner.hpp"

using namespace minenum;
using ordered_json = nlohmann::ordered_json;

namespace {

volatile std::sig_atomic_t interrupted = 0;
void handle_interrupt(int) { interrupted = 1; }

struct RunConfig {
    std::string property;
    std::string input;
    int k = 0;
    int degree_bound = -1;
    int rank = -1;
    std::string terminals;  // comma-separated, 1-based
    std::string seed_file;
    bool cap_inclusive = false;
    bool force = false;
    std::string format = "jsonl";
    long long max_solutions = -1;
    long long ds_work_limit = 1'000'000;
    // audit extras
    unsigned long long rng_seed = 1;
    std::vector<long long> random_spec;  // n m count
    double factor_claim = -1;
    int audit_k = -1;
    bool verbose = false;
};

ElementSet parse_terminal_list(const std::string& text, int n) {
    std::vector<int> ids;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        int v = std::stoi(tok);
        if (v < 1 || v > n) throw Error("terminal " + tok + " out of range 1.." + std::to_string(n));
        ids.push_back(v - 1);
    }
    if (ids.empty()) throw Error("empty terminal list");
    return canonicalize(std::move(ids), GroundKind::vertex);
}

struct Instance {
    std::shared_ptr<const Graph> graph;
    std::shared_ptr<const Hypergraph> hypergraph;
    std::optional<ElementSet> terminals;
};

Instance load_instance(const RunConfig& cfg) {
    ParsedInstance parsed = parse_instance_file(cfg.input);
    Instance inst;
    if (parsed.graph) inst.graph = std::make_shared<Graph>(std::move(*parsed.graph));
    if (parsed.hypergraph) {
        inst.hypergraph = std::make_shared<Hypergraph>(std::move(*parsed.hypergraph));
    }
    inst.terminals = parsed.terminals;
    return inst;
}

PropertyInstance build_property(const RunConfig& cfg, const Instance& inst) {
    const std::string& name = cfg.property;
    auto need_graph = [&]() {
        if (!inst.graph) throw Error(name + " expects a graph instance ('g' file)");
        return inst.graph;
    };
    if (name == "vc") return make_vc_property(need_graph());
    if (name == "bdd") {
        if (cfg.degree_bound < 0) throw Error("bdd requires --degree-bound");
        return make_bdd_property(need_graph(), cfg.degree_bound);
    }
    if (name == "sfed") return make_sfed_property(need_graph());
    if (name == "ds") {
        auto g = need_graph();
        double bound = std::pow(g->max_degree() + 1.0, g->max_degree() + 1.0);
        if (bound > static_cast<double>(cfg.ds_work_limit)) {
            std::cerr << "warning: ds restricted-family bound (Delta+1)^(Delta+1) = " << bound
                      << " exceeds the work limit " << cfg.ds_work_limit << "\n";
        }
        PropertyLimits limits;
        limits.ds_work_limit = cfg.ds_work_limit;
        return make_ds_property(g, limits);
    }
    if (name == "eds") return make_eds_property(need_graph());
    if (name == "steiner") {
        auto g = need_graph();
        ElementSet terms;
        if (!cfg.terminals.empty()) {
            terms = parse_terminal_list(cfg.terminals, g->vertex_count());
        } else if (inst.terminals) {
            terms = *inst.terminals;
        } else {
            throw Error("steiner requires --terminals or a 't' line in the input");
        }
        return make_steiner_property(g, std::move(terms));
    }
    if (name == "hs") {
        if (!inst.hypergraph) throw Error("hs expects a hypergraph instance ('h' file)");
        return make_hs_property(inst.hypergraph, cfg.rank);
    }
    throw Error("unknown property '" + name + "'");
}

ElementSet load_seed_file(const std::string& path, const PropertyInstance& p) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open seed file " + path);
    std::vector<int> ids;
    int v;
    while (in >> v) {
        if (v < 1 || v > p.ground_size) {
            throw Error("seed file: identifier " + std::to_string(v) + " out of range");
        }
        ids.push_back(v - 1);
    }
    ElementSet seed = canonicalize(std::move(ids), p.kind);
    if (!is_minimal_pi_set(p, seed)) {
        throw Error("seed file: not a minimal Pi-set for property " + p.name);
    }
    return seed;
}

void print_solution(std::ostream& out, const std::string& format, const SolutionRecord& rec) {
    if (format == "plain") {
        bool first = true;
        for (int e : rec.solution) {
            if (!first) out << ' ';
            out << (e + 1);
            first = false;
        }
        out << '\n';
    } else {
        out << "{\"solution\":[";
        bool first = true;
        for (int e : rec.solution) {
            if (!first) out << ',';
            out << (e + 1);
            first = false;
        }
        out << "],\"size\":" << rec.size << ",\"within_k\":" << (rec.within_budget ? "true" : "false")
            << "}\n";
    }
    out.flush();  // unbuffered per solution so consumers can truncate early
}

void print_summary(const RunSummary& s, double factor_used) {
    ordered_json j;
    j["solutions"] = s.emitted;
    j["within_k"] = s.within_budget;
    j["max_size"] = s.max_size;
    j["factor_bound"] = factor_used;
    j["expansions"] = s.expansions;
    j["max_gap_work"] = s.max_gap_work;
    j["membership_calls"] = s.total_work.membership;
    j["comp_calls"] = s.total_work.comp;
    j["solver_calls"] = s.total_work.solver;
    j["truncated"] = s.truncated;
    std::cerr << j.dump() << std::endl;
}

int print_certificate(const SeedResult& sr, int k) {
    ordered_json j;
    j["infeasible"] = true;
    j["k"] = k;
    if (sr.structurally_infeasible) {
        j["reason"] = "no solution exists for this instance";
    } else {
        j["reason"] = "approximation certificate: no solution of size <= k";
        j["raw_seed_size"] = sr.raw_size;
        j["seed_factor"] = sr.factor;
    }
    std::cerr << j.dump() << std::endl;
    return 2;
}

struct EngineOutcome {
    RunSummary summary;
    std::optional<SeedResult> certificate;
    std::vector<ElementSet> emitted;  // only collected when requested
};

// Shared enumeration path for run and audit.
EngineOutcome run_enumeration(const RunConfig& cfg, const PropertyInstance& p,
                              const Instance& inst, int k, bool collect,
                              const std::function<void(const SolutionRecord&)>& on_solution) {
    EngineOutcome out;
    long long limit = cfg.max_solutions;
    long long seen = 0;
    EmitFn sink = [&](const SolutionRecord& rec) {
        if (collect) out.emitted.push_back(rec.solution);
        if (on_solution) on_solution(rec);
        ++seen;
        if (interrupted) return false;
        return limit < 0 || seen < limit;
    };
    EngineOptions opts;
    opts.cap_inclusive = cfg.cap_inclusive;

    if (p.name == "eds") {
        EdsOptions eopts;
        eopts.force = cfg.force;
        if (!cfg.seed_file.empty()) eopts.seed_override = load_seed_file(cfg.seed_file, p);
        EdsRun run = enumerate_eds(*inst.graph, k, sink, eopts);
        out.summary = run.summary;
        out.certificate = run.certificate;
        return out;
    }
    if (p.name == "hs") {
        std::optional<ElementSet> seed_override;
        if (!cfg.seed_file.empty()) seed_override = load_seed_file(cfg.seed_file, p);
        HsRun run = enumerate_hs(*p.hypergraph, k, sink, opts, cfg.force, seed_override);
        out.summary = run.summary;
        out.certificate = run.certificate;
        return out;
    }

    ElementSet seed;
    if (!cfg.seed_file.empty()) {
        seed = load_seed_file(cfg.seed_file, p);
    } else {
        SeedResult sr = p.seed_strategy(k);
        if (!sr.feasible) {
            out.certificate = sr;
            if (!cfg.force || sr.structurally_infeasible) return out;
        }
        seed = sr.seed;
    }
    if (p.name == "steiner") {
        out.summary = enumerate_incremental(p, k, seed, sink, opts);
    } else {
        out.summary = enumerate_poly_delay(p, k, seed, sink, opts);
    }
    return out;
}

int cmd_run(const RunConfig& cfg) {
    Instance inst = load_instance(cfg);
    PropertyInstance p = build_property(cfg, inst);
    EngineOutcome out = run_enumeration(cfg, p, inst, cfg.k, /*collect=*/false,
                                        [&](const SolutionRecord& rec) {
                                            print_solution(std::cout, cfg.format, rec);
                                        });
    if (out.certificate && !cfg.force) return print_certificate(*out.certificate, cfg.k);
    if (out.certificate && out.certificate->structurally_infeasible) {
        return print_certificate(*out.certificate, cfg.k);
    }
    double factor = out.summary.factor_bound > 0 ? out.summary.factor_bound : p.output_factor;
    print_summary(out.summary, factor);
    if (interrupted) return 130;
    return 0;
}

int cmd_oracle(const RunConfig& cfg) {
    Instance inst = load_instance(cfg);
    PropertyInstance p = build_property(cfg, inst);
    std::optional<int> cap;
    if (cfg.k > 0) cap = cfg.k;
    for (const auto& s : brute_minimal_sets(p, cap)) {
        SolutionRecord rec;
        rec.solution = s;
        rec.size = s.size();
        rec.within_budget = cap ? s.size() <= *cap : true;
        print_solution(std::cout, cfg.format, rec);
    }
    return 0;
}

int cmd_audit(const RunConfig& cfg) {
    std::vector<Instance> instances;
    if (!cfg.input.empty()) {
        instances.push_back(load_instance(cfg));
    } else if (cfg.random_spec.size() == 3) {
        long long n = cfg.random_spec[0];
        long long m = cfg.random_spec[1];
        long long count = cfg.random_spec[2];
        std::mt19937_64 rng(cfg.rng_seed);
        for (long long i = 0; i < count; ++i) {
            Instance inst;
            if (cfg.property == "hs") {
                int rank = cfg.rank > 0 ? cfg.rank : 3;
                inst.hypergraph = std::make_shared<Hypergraph>(
                    random_hypergraph(rng, static_cast<int>(n), static_cast<int>(m), rank));
            } else if (cfg.property == "steiner") {
                auto g = std::make_shared<Graph>(
                    random_connected_graph(rng, static_cast<int>(n), static_cast<int>(m)));
                int t = std::uniform_int_distribution<int>(2, std::min<int>(4, g->vertex_count()))(rng);
                std::vector<int> ids(g->vertex_count());
                for (std::size_t j = 0; j < ids.size(); ++j) ids[j] = static_cast<int>(j);
                std::shuffle(ids.begin(), ids.end(), rng);
                ids.resize(t);
                inst.terminals = canonicalize(std::move(ids), GroundKind::vertex);
                inst.graph = g;
            } else {
                inst.graph = std::make_shared<Graph>(
                    random_graph(rng, static_cast<int>(n), static_cast<int>(m)));
            }
            instances.push_back(std::move(inst));
        }
    } else {
        throw Error("audit needs --input or --random n m count");
    }

    long long checked = 0, failures = 0;
    const RunConfig& local = cfg;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const Instance& inst = instances[i];
        PropertyInstance p = build_property(local, inst);
        int n = p.graph ? p.graph->vertex_count() : p.hypergraph->vertex_count();
        std::vector<int> ks;
        if (cfg.audit_k >= 0) {
            ks.push_back(cfg.audit_k);
        } else {
            for (int k = 1; k <= n; ++k) ks.push_back(k);
        }
        for (int k : ks) {
            EngineOutcome out = run_enumeration(local, p, inst, k, /*collect=*/true, nullptr);
            double claim = cfg.factor_claim > 0 ? cfg.factor_claim : p.output_factor;
            AuditReport report = audit_run(p, k, claim, out.emitted);
            ++checked;
            if (!report.all_green()) {
                ++failures;
                std::cerr << "audit FAIL instance=" << i << " property=" << p.name << " k=" << k
                          << " " << report.describe(1) << "\n";
            } else if (cfg.verbose) {
                std::cerr << "audit ok instance=" << i << " k=" << k << " emitted="
                          << out.emitted.size() << "\n";
            }
            if (interrupted) break;
        }
        if (interrupted) break;
    }
    ordered_json j;
    j["instances"] = instances.size();
    j["runs"] = checked;
    j["failures"] = failures;
    std::cerr << j.dump() << std::endl;
    return failures == 0 && !interrupted ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    std::signal(SIGINT, handle_interrupt);
    CLI::App app{"approximate enumeration of minimal sets for monotone properties"};
    app.require_subcommand(1);

    RunConfig cfg;
    auto add_common = [&](CLI::App* sub, bool need_input) {
        sub->add_option("--property", cfg.property,
                        "one of vc|bdd|sfed|ds|eds|steiner|hs")->required();
        auto* in = sub->add_option("--input", cfg.input, "instance file");
        if (need_input) in->required();
        sub->add_option("--degree-bound", cfg.degree_bound, "degree bound d (bdd)");
        sub->add_option("--rank", cfg.rank, "rank d (hs)");
        sub->add_option("--terminals", cfg.terminals, "comma-separated 1-based terminals (steiner)");
        sub->add_option("--ds-work-limit", cfg.ds_work_limit,
                        "work limit for the ds restricted family");
        sub->add_flag("--cap-inclusive", cfg.cap_inclusive,
                      "use |X'| <= |S|+k instead of the strict rule");
        sub->add_option("--format", cfg.format, "jsonl|plain")
            ->check(CLI::IsMember({"jsonl", "plain"}));
    };

    CLI::App* run_cmd = app.add_subcommand("run", "enumerate one instance");
    add_common(run_cmd, true);
    run_cmd->add_option("--k", cfg.k, "budget k")->required();
    run_cmd->add_option("--seed-file", cfg.seed_file, "user-supplied minimal seed (1-based ids)");
    run_cmd->add_flag("--force", cfg.force, "enumerate even when the seed certifies infeasibility");
    run_cmd->add_option("--max-solutions", cfg.max_solutions, "stop after N emissions");

    CLI::App* audit_cmd = app.add_subcommand("audit", "enumerate-then-audit with the oracle");
    add_common(audit_cmd, false);
    audit_cmd->add_option("--k", cfg.audit_k, "audit only this k (default: sweep 1..n)");
    audit_cmd->add_option("--random", cfg.random_spec, "n m count")->expected(3);
    audit_cmd->add_option("--rng-seed", cfg.rng_seed, "random generator seed");
    audit_cmd->add_option("--factor-claim", cfg.factor_claim,
                          "override the claimed approximation factor");
    audit_cmd->add_flag("--verbose", cfg.verbose, "report every audit, not just failures");

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "dump the brute-force family");
    add_common(oracle_cmd, true);
    oracle_cmd->add_option("--k", cfg.k, "size cap (0 = all minimal sets)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) return cmd_run(cfg);
        if (audit_cmd->parsed()) return cmd_audit(cfg);
        if (oracle_cmd->parsed()) return cmd_oracle(cfg);
    } catch (const InfeasibleInstanceError& e) {
        ordered_json j;
        j["infeasible"] = true;
        j["reason"] = e.what();
        std::cerr << j.dump() << std::endl;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
