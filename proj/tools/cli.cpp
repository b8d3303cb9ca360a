#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "majcol/error.hpp"
#include "majcol/instances.hpp"
#include "majcol/schemes.hpp"
#include "majcol/text_format.hpp"

namespace majcol::cli {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

std::string fraction(const Rational& r) { return std::to_string(r.num()) + "/" + std::to_string(r.den()); }

Json witness_json(const MajorityVerdict& verdict) {
    if (!verdict.witness) return nullptr;
    const auto& w = *verdict.witness;
    return Json{{"vertex", w.vertex}, {"colour", w.colour}, {"count", w.count}, {"cap", w.cap}};
}

Json verdict_json(const MajorityVerdict& verdict) {
    return Json{{"pass", verdict.pass}, {"witness", witness_json(verdict)}};
}

Json rounds_json(const std::vector<RoundRecord>& rounds) {
    Json out = Json::array();
    for (const auto& r : rounds) {
        out.push_back({{"colour", r.colour},
                       {"weight", fraction(r.weight)},
                       {"edges", r.edges_coloured},
                       {"exceptional", r.exceptional},
                       {"max_class_degree", r.max_class_degree},
                       {"max_residual_degree", r.max_residual_degree}});
    }
    return out;
}

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

/// Common report skeleton; fields a command does not produce stay null.
Json base_report(const std::string& command, unsigned k) {
    return Json{{"command", command}, {"k", k},          {"algorithm", nullptr}, {"params", nullptr},
                {"verdict", nullptr}, {"oracle", nullptr}, {"seed", nullptr},      {"duration_ms", 0.0},
                {"input_digest", nullptr}};
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw InputError("cannot open " + path + " for writing");
    file << text;
    if (!file) throw InputError("write to " + path + " failed");
}

void write_report(const std::optional<std::string>& path, const Json& report) {
    if (path) write_text(*path, report.dump(2) + "\n");
}

Json scheme_params(const Graph& g, const SchemeReport& report) {
    Json alpha = Json::array();
    for (const auto& a : report.alpha) alpha.push_back(fraction(a));
    Json params{{"n", g.vertex_count()}, {"m", g.edge_count()}, {"alpha", alpha}, {"delta", report.delta}};
    if (report.algorithm == Algorithm::refined) {
        params["refined"] = {{"n", report.n},
                             {"m", report.m},
                             {"rule_a_components", report.rule_a_components},
                             {"rule_a_max_vertices", report.rule_a_max_vertices},
                             {"special_vertices", report.special_vertices}};
    }
    if (report.algorithm == Algorithm::small_k) {
        params["reduction"] = {{"vertices", report.reduced_vertices},
                               {"edges", report.reduced_edges},
                               {"doublings", report.doublings},
                               {"elimination_histories", report.elimination_histories}};
    }
    return params;
}

Json oracle_json(const SearchOutcome& outcome) {
    return Json{{"nodes", outcome.node_count}, {"limit_hit", outcome.limit_hit}};
}

std::string outcome_name(const SearchOutcome& outcome) {
    if (outcome.colouring) return "found";
    return outcome.limit_hit ? "limit" : "infeasible";
}

// ---- colour ---------------------------------------------------------------

struct ColourArgs {
    unsigned k = 0;
    std::string input;
    std::string output;
    std::string algorithm = "auto";
    std::optional<std::string> report;
    bool oracle_fallback = false;
    std::uint64_t node_limit = default_node_limit;
};

int run_colour(const ColourArgs& a, std::ostream& out) {
    const auto start = Clock::now();
    Graph g = load_graph(a.input);
    Json report = base_report("colour", a.k);
    report["input_digest"] = file_digest(a.input);

    std::optional<SchemeResult> result;
    if (a.algorithm == "auto") {
        auto outcome = colour_auto(g, a.k);
        if (outcome.result) {
            result = std::move(outcome.result);
        } else if (a.oracle_fallback) {
            auto search = exhaustive_search(g, a.k, a.k + 1, a.node_limit);
            report["algorithm"] = "oracle";
            report["params"] = {{"n", g.vertex_count()}, {"m", g.edge_count()}, {"alpha", Json::array()}};
            report["oracle"] = oracle_json(search);
            int code = unmet;
            if (search.colouring) {
                auto verdict = check_majority(g, *search.colouring, a.k);
                report["verdict"] = verdict_json(verdict);
                if (!verdict.pass) throw InvariantViolation("oracle colouring failed verification");
                save_colouring(a.output, *search.colouring);
                code = ok;
            } else {
                report["verdict"] = {{"pass", false}, {"witness", nullptr}};
                code = search.limit_hit ? unmet : failed;
                out << (search.limit_hit ? "oracle: node limit reached\n" : "oracle: no colouring exists\n");
            }
            report["duration_ms"] = elapsed_ms(start);
            write_report(a.report, report);
            return code;
        } else {
            out << "no scheme applies: " << outcome.reason << "\n";
            report["reason"] = outcome.reason;
            report["duration_ms"] = elapsed_ms(start);
            write_report(a.report, report);
            return unmet;
        }
    } else {
        auto algorithm = parse_algorithm(a.algorithm);
        if (!algorithm) throw InputError("unknown algorithm '" + a.algorithm + "'");
        result = colour_with(*algorithm, g, a.k);
    }

    // The schemes certify internally; check again so the report's verdict is
    // computed from the colouring actually written.
    auto verdict = check_majority(g, result->colouring, a.k);
    if (!verdict.pass) throw InvariantViolation("scheme output failed verification");
    save_colouring(a.output, result->colouring);

    report["algorithm"] = algorithm_name(result->report.algorithm);
    report["params"] = scheme_params(g, result->report);
    report["verdict"] = verdict_json(verdict);
    report["rounds"] = rounds_json(result->report.rounds);
    report["duration_ms"] = elapsed_ms(start);
    write_report(a.report, report);
    return ok;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
    unsigned k = 0;
    std::string graph;
    std::string colouring;
    bool json = false;
};

int run_verify(const VerifyArgs& a, std::ostream& out) {
    Graph g = load_graph(a.graph);
    EdgeColouring c = load_colouring(a.colouring);
    if (c.colours.size() != g.edge_count()) {
        throw InputError("colouring has " + std::to_string(c.colours.size()) + " edges, graph has " +
                         std::to_string(g.edge_count()));
    }
    auto verdict = check_majority(g, c, a.k);
    if (a.json) {
        Json report = base_report("verify", a.k);
        report.erase("duration_ms");
        report["params"] = {{"n", g.vertex_count()}, {"m", g.edge_count()}, {"colours", c.colour_count}};
        report["verdict"] = verdict_json(verdict);
        report["input_digest"] = {{"graph", file_digest(a.graph)}, {"colouring", file_digest(a.colouring)}};
        out << report.dump(2) << "\n";
    } else if (verdict.pass) {
        out << "pass\n";
    } else {
        const auto& w = *verdict.witness;
        out << "fail: vertex " << w.vertex << " has " << w.count << " edges of colour " << w.colour << " (cap "
            << w.cap << ")\n";
    }
    return verdict.pass ? ok : failed;
}

// ---- construct ------------------------------------------------------------

struct ConstructArgs {
    std::string family;
    unsigned k = 2;
    std::size_t n = 0;
    std::size_t delta = 0;
    std::size_t extra = 0;
    bool bipartite = false;
    std::uint64_t seed = 0;
    std::optional<std::string> output;
};

int run_construct(const ConstructArgs& a, std::ostream& out) {
    Graph g;
    if (a.family == "bipartite-lower") {
        g = bipartite_lower_bound(a.k);
    } else if (a.family == "general-lower") {
        g = general_lower_bound(a.k);
    } else {
        g = random_min_degree_graph({a.n, a.delta, a.bipartite, a.extra, a.seed});
    }
    if (a.output) {
        save_graph(*a.output, g);
    } else {
        write_graph(out, g);
    }
    return ok;
}

// ---- oracle ---------------------------------------------------------------

struct OracleArgs {
    unsigned k = 0;
    std::string input;
    std::optional<unsigned> colours;
    std::uint64_t node_limit = default_node_limit;
    std::optional<std::string> output;
    std::optional<std::string> report;
};

int run_oracle(const OracleArgs& a, std::ostream& out) {
    const auto start = Clock::now();
    Graph g = load_graph(a.input);
    const Colour colours = a.colours.value_or(a.k + 1);
    auto search = exhaustive_search(g, a.k, colours, a.node_limit);

    Json report = base_report("oracle", a.k);
    report["algorithm"] = "oracle";
    report["params"] = {{"n", g.vertex_count()}, {"m", g.edge_count()}, {"alpha", Json::array()}, {"colours", colours}};
    report["oracle"] = oracle_json(search);
    report["input_digest"] = file_digest(a.input);

    int code = ok;
    if (search.colouring) {
        auto verdict = check_majority(g, *search.colouring, a.k);
        if (!verdict.pass) throw InvariantViolation("oracle colouring failed verification");
        report["verdict"] = verdict_json(verdict);
        if (a.output) save_colouring(*a.output, *search.colouring);
        out << "found (" << search.node_count << " nodes)\n";
    } else {
        report["verdict"] = {{"pass", false}, {"witness", nullptr}};
        code = search.limit_hit ? unmet : failed;
        out << (search.limit_hit ? "limit" : "infeasible") << " (" << search.node_count << " nodes)\n";
    }
    report["result"] = outcome_name(search);
    report["duration_ms"] = elapsed_ms(start);
    write_report(a.report, report);
    return code;
}

// ---- sweep ----------------------------------------------------------------

struct SweepArgs {
    unsigned k = 0;
    std::size_t delta = 0;
    std::size_t n = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::optional<unsigned> oracle_colours;
    std::uint64_t node_limit = default_node_limit;
    bool bipartite = false;
    unsigned threads = 0;
    std::optional<std::string> output;
};

struct SweepRow {
    std::size_t m = 0;
    std::size_t delta_actual = 0;
    std::string algorithm;
    bool pass = false;
    std::optional<std::uint64_t> oracle_nodes;
    std::string oracle_result = "skipped";
    std::string error;
};

SweepRow sweep_trial(const SweepArgs& a, std::size_t trial) {
    SweepRow row;
    Graph g = random_min_degree_graph({a.n, a.delta, a.bipartite, 0, splitmix64(a.seed + trial)});
    row.m = g.edge_count();
    row.delta_actual = g.min_degree();
    try {
        auto outcome = colour_auto(g, a.k);
        if (outcome.result) {
            row.algorithm = algorithm_name(outcome.result->report.algorithm);
            row.pass = check_majority(g, outcome.result->colouring, a.k).pass;
            return row;
        }
        row.algorithm = "none";
        auto search = exhaustive_search(g, a.k, a.oracle_colours.value_or(a.k + 1), a.node_limit);
        row.oracle_nodes = search.node_count;
        row.oracle_result = outcome_name(search);
        row.pass = search.colouring && check_majority(g, *search.colouring, a.k).pass;
    } catch (const InvariantViolation& e) {
        row.error = e.what();
    }
    return row;
}

int run_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
    std::vector<SweepRow> rows(a.trials);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t t = next++; t < a.trials; t = next++) {
            try {
                rows[t] = sweep_trial(a, t);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    unsigned threads = a.threads != 0 ? a.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(a.trials, 1)));
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    std::ostringstream csv;
    csv << "# majcol sweep csv v1\n";
    csv << "trial,n,m,delta_actual,algorithm,pass,oracle_nodes,oracle_result\n";
    bool violated = false;
    for (std::size_t t = 0; t < rows.size(); ++t) {
        const auto& r = rows[t];
        if (!r.error.empty()) {
            violated = true;
            err << "trial " << t << ": " << r.error << "\n";
        }
        csv << t << ',' << a.n << ',' << r.m << ',' << r.delta_actual << ','
            << (r.error.empty() ? r.algorithm : "error") << ',' << (r.pass ? 1 : 0) << ','
            << (r.oracle_nodes ? std::to_string(*r.oracle_nodes) : "") << ',' << r.oracle_result << '\n';
    }
    if (a.output) {
        write_text(*a.output, csv.str());
    } else {
        out << csv.str();
    }
    return violated ? internal : ok;
}

}  // namespace

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto it = std::istreambuf_iterator<char>(in); it != std::istreambuf_iterator<char>(); ++it) {
        h ^= static_cast<unsigned char>(*it);
        h *= 0x100000001b3ULL;
    }
    std::ostringstream hex;
    hex << std::hex << std::setw(16) << std::setfill('0') << h;
    return hex.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Majority edge colourings: construct, verify and search."};
    app.name("majcol");
    app.require_subcommand(1);

    ColourArgs colour;
    auto* c = app.add_subcommand("colour", "Colour a graph with k+1 colours using one of the schemes");
    c->add_option("--k", colour.k, "Majority parameter")->required()->check(CLI::Range(2u, 1000u));
    c->add_option("--input", colour.input, "Graph file")->required();
    c->add_option("--output", colour.output, "Colouring file to write")->required();
    c->add_option("--algorithm", colour.algorithm)
        ->check(CLI::IsMember({"auto", "bipartite", "general", "refined", "small-k"}));
    c->add_option("--report", colour.report, "JSON report file");
    c->add_flag("--oracle-fallback", colour.oracle_fallback, "With auto: search exhaustively when no scheme applies");
    c->add_option("--node-limit", colour.node_limit, "Branch-node limit for the fallback search");

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "Check a colouring against the 1/k-majority condition");
    v->add_option("--k", verify.k)->required()->check(CLI::Range(2u, 1000u));
    v->add_option("--graph", verify.graph)->required();
    v->add_option("--colouring", verify.colouring)->required();
    v->add_flag("--json", verify.json, "Print the verdict as JSON");

    ConstructArgs construct;
    auto* b = app.add_subcommand("construct", "Write a lower-bound or random graph");
    b->add_option("--family", construct.family)
        ->required()
        ->check(CLI::IsMember({"bipartite-lower", "general-lower", "random"}));
    b->add_option("--k", construct.k)->check(CLI::Range(2u, 1000u));
    b->add_option("--n", construct.n, "Vertices (random)");
    b->add_option("--delta", construct.delta, "Minimum degree (random)");
    b->add_option("--extra", construct.extra, "Extra random edges (random)");
    b->add_flag("--bipartite", construct.bipartite, "Bipartite random graph");
    b->add_option("--seed", construct.seed);
    b->add_option("--output", construct.output, "Graph file (default: stdout)");

    OracleArgs oracle;
    auto* o = app.add_subcommand("oracle", "Exhaustive search for a majority colouring");
    o->add_option("--k", oracle.k)->required()->check(CLI::Range(2u, 1000u));
    o->add_option("--input", oracle.input)->required();
    o->add_option("--colours", oracle.colours, "Number of colours (default k+1)")->check(CLI::Range(1u, 1000u));
    o->add_option("--node-limit", oracle.node_limit);
    o->add_option("--output", oracle.output, "Colouring file to write when found");
    o->add_option("--report", oracle.report, "JSON report file");

    SweepArgs sweep;
    auto* s = app.add_subcommand("sweep", "Random trials: schemes first, oracle when none applies");
    s->add_option("--k", sweep.k)->required()->check(CLI::Range(2u, 1000u));
    s->add_option("--delta", sweep.delta)->required();
    s->add_option("--n", sweep.n)->required();
    s->add_option("--trials", sweep.trials)->required();
    s->add_option("--seed", sweep.seed)->required();
    s->add_option("--oracle-colours", sweep.oracle_colours)->check(CLI::Range(1u, 1000u));
    s->add_option("--node-limit", sweep.node_limit);
    s->add_flag("--bipartite", sweep.bipartite, "Generate bipartite graphs");
    s->add_option("--threads", sweep.threads, "Worker threads (default: hardware)");
    s->add_option("--output", sweep.output, "CSV file (default: stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    try {
        if (*c) return run_colour(colour, out);
        if (*v) return run_verify(verify, out);
        if (*b) {
            if (construct.family == "random" && (b->count("--n") == 0 || b->count("--delta") == 0)) {
                err << "construct --family random needs --n and --delta\n";
                return usage;
            }
            return run_construct(construct, out);
        }
        if (*o) return run_oracle(oracle, out);
        return run_sweep(sweep, out, err);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const PreconditionError& e) {
        err << "precondition: " << e.what() << "\n";
        return unmet;
    } catch (const InvariantViolation& e) {
        err << "invariant violation: " << e.what() << "\n";
        return internal;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return internal;
    }
}

}  // namespace majcol::cli
