// hyperk: bounds, extraction, and exact solving for k-independent sets of uniform hypergraphs.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hyperk/bounds.hpp"
#include "hyperk/exact.hpp"
#include "hyperk/extract.hpp"
#include "hyperk/hypergraph.hpp"
#include "hyperk/serialize.hpp"
#include "hyperk/verify.hpp"

namespace {

using namespace hyperk;

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

std::string summary(const Hypergraph &h)
{
    const auto p = degree_profile(h);
    std::ostringstream out;
    out << "n=" << h.n() << " m=" << h.e() << " s=" << h.s() << " delta=" << p.max_degree << " d=" << p.avg_degree;
    return out.str();
}

Hypergraph load(const std::string &path)
{
    if (path.empty())
        throw UsageError("no input file given");
    try {
        return read_hg_file(path);
    } catch (const std::exception &e) {
        throw UsageError(path + ": " + e.what());
    }
}

// Writes to `path`, or stdout when empty.
void emit(const std::string &path, const std::string &text)
{
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw UsageError("cannot write '" + path + "'");
    out << text;
}

std::string fmt_double(double v)
{
    std::ostringstream out;
    out << std::setprecision(12) << v;
    return out.str();
}

std::string bounds_table(const BoundReport &r)
{
    std::ostringstream out;
    out << "n=" << r.n << " e=" << r.e << " s=" << r.s << " k=" << r.k << " delta=" << r.delta << " d=" << r.d << '\n';
    for (const auto &b : r.bounds) {
        out << std::left << std::setw(20) << b.name;
        if (!b.applicable) {
            out << "n/a  (" << b.reason << ")\n";
            continue;
        }
        out << std::setw(18) << fmt_double(b.to_double());
        if (b.exact)
            out << b.exact->str();
        if (b.supplementary)
            out << "  [" << b.reason << "]";
        out << '\n';
    }
    out << "best " << r.best << '\n';
    return out.str();
}

std::vector<int> parse_k_list(const std::string &text)
{
    VerifyConfig tmp;
    try {
        apply_config_entry(tmp, "k", text);
    } catch (const ConfigError &e) {
        throw UsageError(e.what());
    }
    return tmp.ks;
}

// ------------------------------------------------------------------ commands

struct GenArgs
{
    bool complete = false;
    bool random = false;
    int n = 0;
    long long m = 0;
    int s = 0;
    std::uint64_t seed = 0;
    std::string output;
};

int cmd_gen(const GenArgs &a)
{
    if (a.complete == a.random)
        throw UsageError("choose exactly one of --complete or --random");
    Hypergraph h = [&] {
        try {
            return a.complete ? gen_complete(a.n, a.s) : gen_random_uniform(a.n, a.m, a.s, a.seed);
        } catch (const std::invalid_argument &e) {
            throw UsageError(e.what());
        }
    }();
    if (a.output.empty()) {
        write_hg(std::cout, h);
        std::cerr << summary(h) << '\n';
    } else {
        write_hg_file(a.output, h);
        std::cout << summary(h) << '\n';
    }
    return exit_ok;
}

int cmd_bounds(const std::string &file, int k, bool table, const std::string &output)
{
    if (k < 0)
        throw UsageError("k must be >= 0");
    const auto report = bound_report(load(file), k);
    emit(output, table ? bounds_table(report) : to_json(report).dump(2) + "\n");
    return exit_ok;
}

int cmd_extract(const std::string &file, int k, const std::string &algo, const std::string &output)
{
    if (k < 0)
        throw UsageError("k must be >= 0");
    if (algo == "partition" && k == 0)
        throw UsageError("--algo partition needs k >= 1");
    const auto h = load(file);
    try {
        ExtractionResult r;
        if (algo == "greedy")
            r = greedy_peel(h, k);
        else if (algo == "thm37")
            r = thm37_extract(h, k);
        else if (algo == "partition")
            r = partition_extract(h, k);
        else
            r = best_extract(h, k);
        emit(output, to_json(r).dump(2) + "\n");
    } catch (const VerificationFailure &e) {
        std::cerr << "verification failure: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_ok;
}

int cmd_exact(const std::string &file, int k, const std::string &quantity, std::uint64_t budget,
              const std::string &output)
{
    if (k < 0 || (quantity == "chi" && k < 1))
        throw UsageError(quantity == "chi" ? "chi needs k >= 1" : "k must be >= 0");
    const auto h = load(file);
    if (h.n() > 64)
        throw UsageError("exact solving supports n <= 64");
    const auto r = quantity == "chi" ? chi_k_exact(h, k, budget) : alpha_k_exact(h, k, budget);
    emit(output, to_json(r).dump(2) + "\n");
    return exit_ok;
}

struct VerifyArgs
{
    std::string config;
    std::vector<std::string> overrides;
    std::vector<std::string> instances;
    std::string output;
    std::string report;
    std::uint64_t seed = 0;
    std::uint64_t budget = 0;
};

VerifyConfig load_config(const std::string &path, const std::vector<std::string> &overrides)
{
    VerifyConfig cfg = path.empty() ? VerifyConfig{} : read_verify_config(path);
    if (path.empty()) {
        cfg.exhaustive = true;
        cfg.random_count = 500;
    }
    for (const auto &kv : overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw ConfigError("--set expects key=value, got '" + kv + "'");
        apply_config_entry(cfg, kv.substr(0, eq), kv.substr(eq + 1));
    }
    return cfg;
}

int cmd_verify(const VerifyArgs &a, bool seed_given, bool budget_given)
{
    VerifyConfig cfg;
    try {
        cfg = load_config(a.config, a.overrides);
        if (!a.instances.empty()) {
            cfg.exhaustive = false;
            cfg.random_count = 0;
            cfg.replication_count = 0;
            cfg.files = a.instances;
        }
        if (!a.output.empty())
            cfg.output_dir = a.output;
        if (seed_given)
            cfg.seed = a.seed;
        if (budget_given)
            cfg.budget = a.budget;
        const auto report = run_verify(cfg);
        const auto text = report.render();
        std::cout << text;
        if (!a.report.empty())
            emit(a.report, text);
        return report.ok() ? exit_ok : exit_failure;
    } catch (const ConfigError &e) {
        throw UsageError(e.what());
    } catch (const ParseError &e) {
        throw UsageError(e.what());
    }
}

struct CompareArgs
{
    std::string config;
    std::vector<std::string> files;
    std::string ks = "0,1,2,3";
    std::string output;
    std::uint64_t budget = 2'000'000;
};

int cmd_compare(const CompareArgs &a)
{
    VerifyConfig cfg;
    try {
        if (!a.config.empty())
            cfg = read_verify_config(a.config);
        cfg.files.insert(cfg.files.end(), a.files.begin(), a.files.end());
    } catch (const ConfigError &e) {
        throw UsageError(e.what());
    }
    const auto ks = parse_k_list(a.ks);
    std::vector<CorpusInstance> corpus;
    try {
        corpus = build_corpus(cfg);
    } catch (const std::exception &e) {
        throw UsageError(e.what());
    }
    if (corpus.empty())
        throw UsageError("no instances");

    std::ostringstream out;
    static const std::vector<std::string> names{
        bound_names::max_degree, bound_names::edge_count, bound_names::avg_degree,
        bound_names::avg_degree_simple, bound_names::caro_tuza_alpha, bound_names::cps,
        bound_names::caro_tuza_k, bound_names::caro_tuza_k_diag};
    out << "instance,n,m,s,k,delta,d,d_exact";
    for (const auto &name : names)
        out << ',' << name << ',' << name << "_exact";
    out << ",best_bound,alpha,greedy,avg_degree_extract,partition,best_extract\n";

    for (const auto &inst : corpus) {
        const auto &h = inst.h;
        for (int k : ks) {
            const auto r = bound_report(h, k);
            out << inst.id << ',' << h.n() << ',' << h.e() << ',' << h.s() << ',' << k << ',' << r.delta << ','
                << fmt_double(r.d.to_double()) << ',' << r.d.str();
            for (const auto &name : names) {
                const auto *b = r.find(name);
                out << ',';
                if (b && b->applicable)
                    out << fmt_double(b->to_double());
                out << ',';
                if (b && b->applicable && b->exact)
                    out << b->exact->str();
            }
            out << ',' << r.best << ',';
            if (h.n() <= 64) {
                const auto alpha = alpha_k_exact(h, k, a.budget);
                if (alpha.complete())
                    out << *alpha.value;
            }
            out << ',' << greedy_peel(h, k).size() << ',' << thm37_extract(h, k).size() << ',';
            if (k >= 1)
                out << partition_extract(h, k).size();
            out << ',' << best_extract(h, k).size() << '\n';
        }
    }
    emit(a.output, out.str());
    return exit_ok;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"k-independence bounds, extraction, and exact solving for s-uniform hypergraphs"};
    app.require_subcommand(1);

    GenArgs gen;
    auto *gen_cmd = app.add_subcommand("gen", "Generate a hypergraph in .hg format");
    gen_cmd->add_flag("--complete", gen.complete, "All C(n,s) edges");
    gen_cmd->add_flag("--random", gen.random, "m distinct random edges");
    gen_cmd->add_option("-n", gen.n, "Vertex count")->required();
    gen_cmd->add_option("-m", gen.m, "Edge count (random)");
    gen_cmd->add_option("-s", gen.s, "Uniformity")->required();
    gen_cmd->add_option("--seed", gen.seed, "RNG seed (random)");
    gen_cmd->add_option("-o,--output", gen.output, "Output .hg path (stdout if omitted)");

    std::string file;
    int k = 0;
    bool table = false;
    bool json = false;
    std::string output;
    auto *bounds_cmd = app.add_subcommand("bounds", "Evaluate every lower bound on alpha_k");
    bounds_cmd->add_option("file", file, ".hg input")->required();
    bounds_cmd->add_option("-k", k, "k")->required();
    bounds_cmd->add_flag("--table", table, "Aligned text instead of JSON");
    bounds_cmd->add_flag("--json", json, "JSON output (default)");
    bounds_cmd->add_option("-o,--output", output, "Output path");

    std::string algo = "best";
    auto *extract_cmd = app.add_subcommand("extract", "Construct a k-independent set");
    extract_cmd->add_option("file", file, ".hg input")->required();
    extract_cmd->add_option("-k", k, "k")->required();
    extract_cmd->add_option("--algo", algo, "greedy | thm37 | partition | best")
        ->check(CLI::IsMember({"greedy", "thm37", "partition", "best"}));
    extract_cmd->add_option("-o,--output", output, "Output path");

    std::string quantity = "alpha";
    std::uint64_t budget = default_node_budget;
    auto *exact_cmd = app.add_subcommand("exact", "Exact alpha_k or chi_k");
    exact_cmd->add_option("file", file, ".hg input")->required();
    exact_cmd->add_option("-k", k, "k")->required();
    exact_cmd->add_option("--quantity", quantity, "alpha | chi")->check(CLI::IsMember({"alpha", "chi"}));
    exact_cmd->add_option("--budget", budget, "Search node budget");
    exact_cmd->add_option("-o,--output", output, "Output path");

    VerifyArgs verify;
    auto *verify_cmd = app.add_subcommand("verify", "Run property checks over a corpus");
    verify_cmd->add_option("config", verify.config, "Config file (key = value lines)");
    verify_cmd->add_option("--set", verify.overrides, "Override a config entry, key=value");
    verify_cmd->add_option("--instance", verify.instances, "Check these .hg files instead of the configured corpus");
    verify_cmd->add_option("-o,--output", verify.output, "Directory for counterexample dumps");
    verify_cmd->add_option("--report", verify.report, "Also write the report to this path");
    auto *seed_opt = verify_cmd->add_option("--seed", verify.seed, "Master seed");
    auto *budget_opt = verify_cmd->add_option("--budget", verify.budget, "Oracle node budget");

    CompareArgs compare;
    auto *compare_cmd = app.add_subcommand("compare", "CSV of bounds, exact values and extraction sizes");
    compare_cmd->add_option("files", compare.files, ".hg inputs");
    compare_cmd->add_option("--config", compare.config, "Corpus config file");
    compare_cmd->add_option("--k", compare.ks, "Comma-separated k values");
    compare_cmd->add_option("--budget", compare.budget, "Oracle node budget per row");
    compare_cmd->add_option("-o,--output", compare.output, "CSV path (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (gen_cmd->parsed())
            return cmd_gen(gen);
        if (bounds_cmd->parsed())
            return cmd_bounds(file, k, table && !json, output);
        if (extract_cmd->parsed())
            return cmd_extract(file, k, algo, output);
        if (exact_cmd->parsed())
            return cmd_exact(file, k, quantity, budget, output);
        if (verify_cmd->parsed())
            return cmd_verify(verify, seed_opt->count() > 0, budget_opt->count() > 0);
        if (compare_cmd->parsed())
            return cmd_compare(compare);
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const VerificationFailure &e) {
        std::cerr << "verification failure: " << e.what() << '\n';
        return exit_failure;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
