// zyclone command line front end: generators, stats, searches, exact and
// stochastic extremal runs, and the structural check suite.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include <zyclone/zyclone.hpp>

namespace {

using nlohmann::json;
using namespace zyclone;

constexpr int exit_ok = 0;
constexpr int exit_absent = 1;
constexpr int exit_usage = 2;
constexpr int exit_budget = 3;
constexpr int exit_inconclusive = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << content;
}

Hypergraph load_graph(const std::string& path) { return read_hypergraph(read_file(path)); }

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
}

int default_jobs() {
    if (const char* env = std::getenv("ZYCLONE_JOBS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

struct GenOptions {
    std::string family;
    int k = 3;
    int ell = -1;
    int p = -1;
    int n = -1;
    int c = -1;
    std::string input;
    std::string out;
};

int run_gen(const GenOptions& o) {
    auto need = [&](int value, const char* flag) {
        if (value < 0) throw InvalidParameter(std::string("gen ") + o.family +
                                              ": missing required option " + flag);
        return value;
    };
    Hypergraph h;
    if (o.family == "zycle") {
        h = zycle(o.k, need(o.ell, "--ell/-l"));
    } else if (o.family == "zycle-minus") {
        h = zycle_minus(o.k, need(o.ell, "--ell/-l"));
        if (o.k > 3)
            std::cerr << "note: zycle-minus with k > 3 extrapolates the k = 3 definition\n";
    } else if (o.family == "algebraic") {
        h = algebraic(o.k, need(o.p, "-p"), need(o.n, "-n"));
    } else if (o.family == "reduced-algebraic") {
        h = reduced_algebraic(o.k, need(o.p, "-p"));
    } else if (o.family == "tripartite") {
        h = tripartite_iterated(need(o.n, "-n"));
    } else if (o.family == "quadripartite") {
        h = quadripartite(need(o.n, "-n"));
    } else if (o.family == "complete") {
        h = complete_graph(need(o.n, "-n"), o.k);
    } else if (o.family == "blowup") {
        if (o.input.empty())
            throw InvalidParameter("gen blowup: missing required option --input");
        h = blow_up(load_graph(o.input), need(o.c, "-c"));
    } else {
        throw InvalidParameter("unknown family '" + o.family + "'");
    }
    emit(write_khg(h), o.out);
    return exit_ok;
}

int run_stats(const std::string& file) {
    Hypergraph h = load_graph(file);
    std::cout << "n: " << h.n() << "\n";
    std::cout << "k: " << h.k() << "\n";
    std::cout << "edges: " << h.edge_count() << "\n";
    CodegreeProfile prof = h.min_codegree();
    std::cout << "min_codegree: " << prof.minimum << "\n";
    std::cout << "argmin:";
    for (Vertex v : prof.argmin) std::cout << ' ' << v;
    std::cout << "\n";
    std::cout << "histogram:";
    for (const auto& [d, count] : prof.histogram) std::cout << ' ' << d << ':' << count;
    std::cout << "\n";
    return exit_ok;
}

struct SearchOptions {
    std::string file;
    int ell = -1;
    std::string pattern_file;
    std::uint64_t budget_nodes = 10'000'000;
    double budget_seconds = 60.0;
    bool deterministic = false;
    int jobs = 0;
};

int run_search(const SearchOptions& o) {
    if ((o.ell < 0) == o.pattern_file.empty())
        throw InvalidParameter("search: exactly one of --zycle or --pattern is required");
    Hypergraph host = load_graph(o.file);
    SearchBudget budget;
    budget.node_limit = o.budget_nodes;
    budget.time_limit_seconds = o.budget_seconds;
    budget.deterministic = o.deterministic;
    budget.jobs = o.jobs > 0 ? o.jobs : default_jobs();

    if (o.ell >= 0) {
        ZycleSearchResult r = find_zycle(host, o.ell, budget);
        if (r.status == SearchStatus::found) {
            std::cout << to_json(*r.certificate).dump() << "\n";
            return exit_ok;
        }
        if (r.status == SearchStatus::budget_exhausted) {
            std::cerr << "budget exhausted after " << r.nodes_expanded << " nodes\n";
            return exit_budget;
        }
        std::cerr << "no copy of Z_" << o.ell << " (exhaustive)\n";
        return exit_absent;
    }
    Hypergraph pattern = load_graph(o.pattern_file);
    EmbeddingSearchResult r = contains_pattern(host, pattern, budget);
    if (r.status == SearchStatus::found) {
        std::cout << to_json(*r.embedding).dump() << "\n";
        return exit_ok;
    }
    if (r.status == SearchStatus::budget_exhausted) {
        std::cerr << "budget exhausted after " << r.nodes_expanded << " nodes\n";
        return exit_budget;
    }
    std::cerr << "no copy of the pattern (exhaustive)\n";
    return exit_absent;
}

struct ExcoOptions {
    int n = 0;
    int k = 3;
    std::vector<std::string> forbid_files;
    bool local = false;
    std::uint64_t budget_nodes = 10'000'000;
    double budget_seconds = 600.0;
    bool has_seed = false;
    std::uint64_t seed = 0;
    int restarts = 4;
    int steps = 20000;
    std::string start_file;
    int jobs = 0;
};

int run_exco(const ExcoOptions& o) {
    std::vector<Hypergraph> patterns;
    for (const auto& f : o.forbid_files) patterns.push_back(load_graph(f));
    if (!o.local) {
        SearchBudget budget;
        budget.node_limit = o.budget_nodes;
        budget.time_limit_seconds = o.budget_seconds;
        ExtremalResult r = exco_exact(o.n, o.k, patterns, budget);
        std::cout << to_json(r).dump() << "\n";
        return r.exhaustive ? exit_ok : exit_budget;
    }
    LocalSearchConfig cfg;
    if (o.has_seed) {
        cfg.seed = o.seed;
    } else {
        cfg.seed = std::random_device{}();
        std::cerr << "seed: " << cfg.seed << "\n";
    }
    cfg.restarts = o.restarts;
    cfg.steps = o.steps;
    cfg.jobs = o.jobs > 0 ? o.jobs : default_jobs();
    std::optional<Hypergraph> start;
    if (!o.start_file.empty()) start = load_graph(o.start_file);
    ExtremalResult r = exco_local_search(o.n, o.k, patterns, cfg, start);
    std::cout << to_json(r).dump() << "\n";
    return exit_ok;
}

struct VerifyOptions {
    bool all = false;
    std::string check;
    std::string out_dir;
    bool deterministic = false;
    std::uint64_t budget_nodes = 10'000'000;
    double budget_seconds = 300.0;
    int k = 3;
    int ell = -1;
    int r = 3;
    int c = 2;
    int cluster_size = -1;
    int n3 = 9;
    int n4 = 8;
    int max_ell = 6;
    int p = 5;
    int n = 6;
};

std::string report_file_name(const CheckReport& rep) {
    std::string name = rep.check_id;
    for (const auto& [key, value] : rep.parameters.items())
        name += "." + key + std::string(1, '=') + value.dump();
    name += ".json";
    return name;
}

int run_verify(const VerifyOptions& o) {
    SearchBudget budget;
    budget.node_limit = o.budget_nodes;
    budget.time_limit_seconds = o.budget_seconds;

    std::vector<CheckReport> reports;
    if (o.all) {
        reports = run_default_check_suite(budget);
    } else if (!o.check.empty()) {
        int ell = o.ell;
        if (o.check == "blowup-fact") {
            reports.push_back(check_blowup_fact(o.k, o.r, o.c, budget));
        } else if (o.check == "algebraic-construction") {
            if (ell < 0) ell = 2;
            int cs = o.cluster_size > 0 ? o.cluster_size : o.k - 1;
            reports.push_back(check_algebraic_construction(o.k, ell, cs, budget));
        } else if (o.check == "cluster-trapping") {
            if (ell < 0) ell = 2;
            int cs = o.cluster_size > 0 ? o.cluster_size : o.k - 1;
            reports.push_back(check_cluster_trapping(o.k, ell, cs, budget));
        } else if (o.check == "partite-constructions") {
            reports.push_back(check_partite_constructions(o.n3, o.n4, o.max_ell, budget));
        } else if (o.check == "reduced-chain") {
            reports.push_back(check_reduced_chain(o.k, o.p, budget));
        } else if (o.check == "zycle-minus-density") {
            if (ell < 0) ell = 3;
            reports.push_back(check_zycle_minus_density_witnesses(ell, o.n, budget));
        } else {
            throw InvalidParameter("unknown check '" + o.check + "'");
        }
    } else {
        throw InvalidParameter("verify: pass --all or --check NAME");
    }

    bool any_fail = false, any_inconclusive = false;
    for (const auto& rep : reports) {
        std::string doc = to_json(rep, o.deterministic).dump() + "\n";
        if (o.out_dir.empty()) {
            std::cout << doc;
        } else {
            std::filesystem::create_directories(o.out_dir);
            write_file((std::filesystem::path(o.out_dir) / report_file_name(rep)).string(), doc);
        }
        if (rep.status == CheckStatus::fail) any_fail = true;
        if (rep.status == CheckStatus::inconclusive) any_inconclusive = true;
    }
    if (any_fail) return exit_absent;
    if (any_inconclusive) return exit_inconclusive;
    return exit_ok;
}

int run_export(const std::string& file, const std::string& format, const std::string& out) {
    Hypergraph h = load_graph(file);
    std::ostringstream ss;
    if (format == "khg") {
        write_khg(ss, h);
    } else if (format == "json") {
        ss << to_json(h).dump() << "\n";
    } else if (format == "edge-list") {
        write_edge_list(ss, h);
    } else {
        throw InvalidParameter("unknown format '" + format + "'");
    }
    emit(ss.str(), out);
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zyclone: k-uniform hypergraph construction, search and verification"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand(
        "gen", "generate a named hypergraph family and write it as .khg");
    gen_cmd->add_option("family", gen.family,
                        "zycle | zycle-minus | algebraic | reduced-algebraic | "
                        "tripartite | quadripartite | complete | blowup")
        ->required();
    gen_cmd->add_option("-k,--uniformity", gen.k, "edge size k");
    gen_cmd->add_option("-l,--ell", gen.ell, "zycle length");
    gen_cmd->add_option("-p,--prime", gen.p, "prime modulus");
    gen_cmd->add_option("-n,--vertices", gen.n, "vertex count");
    gen_cmd->add_option("-c,--multiplicity", gen.c, "blow-up multiplicity");
    gen_cmd->add_option("-i,--input", gen.input, "input .khg/.json file (blowup)");
    gen_cmd->add_option("-o,--output", gen.out, "output file (default stdout)");

    std::string stats_file;
    auto* stats_cmd = app.add_subcommand("stats", "print size and codegree statistics");
    stats_cmd->add_option("file", stats_file, "input .khg/.json file")->required();

    SearchOptions search;
    auto* search_cmd = app.add_subcommand("search", "search for zycles or patterns");
    search_cmd->add_option("file", search.file, "host .khg/.json file")->required();
    search_cmd->add_option("--zycle", search.ell, "zycle length to search for");
    search_cmd->add_option("--pattern", search.pattern_file, "pattern file to embed");
    search_cmd->add_option("--budget-nodes", search.budget_nodes, "node budget");
    search_cmd->add_option("--budget-seconds", search.budget_seconds, "time budget");
    search_cmd->add_flag("--deterministic", search.deterministic,
                         "byte-stable output across runs and worker counts");
    search_cmd->add_option("-j,--jobs", search.jobs, "worker cap (env ZYCLONE_JOBS)");

    ExcoOptions exco;
    auto* exco_cmd = app.add_subcommand("exco", "codegree Turan number computation");
    exco_cmd->add_option("-n,--vertices", exco.n, "instance size")->required();
    exco_cmd->add_option("-k,--uniformity", exco.k, "edge size k");
    exco_cmd->add_option("--forbid", exco.forbid_files, "forbidden pattern file(s)")
        ->required()
        ->expected(-1);
    bool exact_flag = false;
    exco_cmd->add_flag("--exact", exact_flag, "exact solver (default)");
    exco_cmd->add_flag("--local", exco.local, "simulated-annealing witness finder");
    exco_cmd->add_option("--budget-nodes", exco.budget_nodes, "node budget (exact)");
    exco_cmd->add_option("--budget-seconds", exco.budget_seconds, "time budget (exact)");
    auto* seed_opt = exco_cmd->add_option("--seed", exco.seed, "RNG seed (local)");
    exco_cmd->add_option("--restarts", exco.restarts, "annealing restarts (local)");
    exco_cmd->add_option("--steps", exco.steps, "flips per restart (local)");
    exco_cmd->add_option("--start", exco.start_file, "initial witness file (local)");
    exco_cmd->add_option("-j,--jobs", exco.jobs, "worker cap (env ZYCLONE_JOBS)");

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "run structural checks");
    verify_cmd->add_flag("--all", verify.all, "run the default check matrix");
    verify_cmd->add_option("--check", verify.check,
                           "blowup-fact | algebraic-construction | cluster-trapping | "
                           "partite-constructions | reduced-chain | zycle-minus-density");
    verify_cmd->add_option("--out", verify.out_dir, "directory for JSON reports");
    verify_cmd->add_flag("--deterministic", verify.deterministic,
                         "byte-stable reports (zeroed runtimes)");
    verify_cmd->add_option("--budget-nodes", verify.budget_nodes, "node budget per search");
    verify_cmd->add_option("--budget-seconds", verify.budget_seconds, "time budget per search");
    verify_cmd->add_option("-k,--uniformity", verify.k, "uniformity parameter");
    verify_cmd->add_option("-l,--ell", verify.ell, "length parameter");
    verify_cmd->add_option("-r,--zycle-length", verify.r, "base zycle length (blowup-fact)");
    verify_cmd->add_option("-c,--multiplicity", verify.c, "blow-up multiplicity");
    verify_cmd->add_option("--cluster-size", verify.cluster_size, "vertices per cluster");
    verify_cmd->add_option("--n3", verify.n3, "tripartite instance size");
    verify_cmd->add_option("--n4", verify.n4, "quadripartite instance size");
    verify_cmd->add_option("--max-ell", verify.max_ell, "freeness sweep bound");
    verify_cmd->add_option("-p,--prime", verify.p, "prime (reduced-chain)");
    verify_cmd->add_option("-n,--vertices", verify.n, "instance size (zycle-minus-density)");

    std::string export_file, export_format = "khg", export_out;
    auto* export_cmd = app.add_subcommand("export", "convert between file formats");
    export_cmd->add_option("file", export_file, "input .khg/.json file")->required();
    export_cmd->add_option("--format", export_format, "khg | json | edge-list")->required();
    export_cmd->add_option("-o,--output", export_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (*gen_cmd) return run_gen(gen);
        if (*stats_cmd) return run_stats(stats_file);
        if (*search_cmd) return run_search(search);
        if (*exco_cmd) {
            exco.has_seed = seed_opt->count() > 0;
            return run_exco(exco);
        }
        if (*verify_cmd) return run_verify(verify);
        if (*export_cmd) return run_export(export_file, export_format, export_out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
