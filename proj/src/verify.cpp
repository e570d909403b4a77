#include "hyperk/verify.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "hyperk/bounds.hpp"
#include "hyperk/extract.hpp"
#include "hyperk/random.hpp"
#include "hyperk/serialize.hpp"

namespace hyperk {

const std::vector<Check> &all_checks()
{
    static const std::vector<Check> checks{Check::soundness, Check::achievement, Check::fg, Check::replication,
                                           Check::partition, Check::oracle, Check::remark};
    return checks;
}

std::string check_name(Check c)
{
    switch (c) {
    case Check::soundness: return "soundness";
    case Check::achievement: return "achievement";
    case Check::fg: return "fg";
    case Check::replication: return "replication";
    case Check::partition: return "partition";
    case Check::oracle: return "oracle";
    case Check::remark: return "remark";
    }
    return "?";
}

std::optional<Check> parse_check(const std::string &name)
{
    for (Check c : all_checks())
        if (check_name(c) == name)
            return c;
    return std::nullopt;
}

bool VerifyConfig::has(Check c) const
{
    return std::find(checks.begin(), checks.end(), c) != checks.end();
}

// ---------------------------------------------------------------- config

namespace {

std::string trim(const std::string &s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos)
        return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string &value)
{
    std::vector<std::string> out;
    std::stringstream ss(value);
    for (std::string item; std::getline(ss, item, ',');) {
        item = trim(item);
        if (!item.empty())
            out.push_back(item);
    }
    return out;
}

long long parse_int(const std::string &key, const std::string &value)
{
    try {
        std::size_t used = 0;
        const long long v = std::stoll(value, &used);
        if (used != value.size())
            throw std::invalid_argument(value);
        return v;
    } catch (const std::exception &) {
        throw ConfigError("'" + key + "': expected an integer, got '" + value + "'");
    }
}

int parse_small(const std::string &key, const std::string &value, long long lo, long long hi)
{
    const long long v = parse_int(key, value);
    if (v < lo || v > hi)
        throw ConfigError("'" + key + "': " + value + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return static_cast<int>(v);
}

std::vector<int> parse_int_list(const std::string &key, const std::string &value, long long lo, long long hi)
{
    std::vector<int> out;
    for (const auto &item : split_list(value))
        out.push_back(parse_small(key, item, lo, hi));
    if (out.empty())
        throw ConfigError("'" + key + "': empty list");
    return out;
}

bool parse_bool(const std::string &key, const std::string &value)
{
    if (value == "true" || value == "1" || value == "yes")
        return true;
    if (value == "false" || value == "0" || value == "no")
        return false;
    throw ConfigError("'" + key + "': expected true/false, got '" + value + "'");
}

// "a..b" or "a"
std::pair<int, int> parse_range(const std::string &key, const std::string &value, long long lo, long long hi)
{
    const auto dots = value.find("..");
    if (dots == std::string::npos) {
        const int v = parse_small(key, value, lo, hi);
        return {v, v};
    }
    const int a = parse_small(key, trim(value.substr(0, dots)), lo, hi);
    const int b = parse_small(key, trim(value.substr(dots + 2)), lo, hi);
    if (a > b)
        throw ConfigError("'" + key + "': empty range " + value);
    return {a, b};
}

} // namespace

void apply_config_entry(VerifyConfig &cfg, const std::string &key, const std::string &value)
{
    if (key == "exhaustive") {
        cfg.exhaustive = parse_bool(key, value);
    } else if (key == "exhaustive.n") {
        std::tie(cfg.exhaustive_n_min, cfg.exhaustive_n_max) = parse_range(key, value, 1, 64);
    } else if (key == "exhaustive.s") {
        std::tie(cfg.exhaustive_s_min, cfg.exhaustive_s_max) = parse_range(key, value, 2, 64);
    } else if (key == "random.count") {
        cfg.random_count = parse_small(key, value, 0, 10'000'000);
    } else if (key == "random.n") {
        std::tie(cfg.random_n_min, cfg.random_n_max) = parse_range(key, value, 2, 64);
    } else if (key == "random.m_min") {
        cfg.random_m_min = parse_small(key, value, 0, 1'000'000);
    } else if (key == "random.m_per_n") {
        cfg.random_m_per_n = parse_small(key, value, 0, 1'000'000);
    } else if (key == "random.s") {
        cfg.random_s = parse_int_list(key, value, 2, 64);
    } else if (key == "files") {
        cfg.files = split_list(value);
    } else if (key == "k") {
        cfg.ks = parse_int_list(key, value, 0, 1'000'000);
    } else if (key == "seed") {
        const long long v = parse_int(key, value);
        if (v < 0)
            throw ConfigError("'seed' must be non-negative");
        cfg.seed = static_cast<std::uint64_t>(v);
    } else if (key == "replication.count") {
        cfg.replication_count = parse_small(key, value, 0, 1'000'000);
    } else if (key == "replication.n_max") {
        cfg.replication_n_max = parse_small(key, value, 2, 21);
    } else if (key == "replication.c") {
        cfg.replication_c = parse_int_list(key, value, 1, 64);
    } else if (key == "checks") {
        cfg.checks.clear();
        for (const auto &name : split_list(value)) {
            const auto c = parse_check(name);
            if (!c)
                throw ConfigError("unknown check '" + name + "'");
            cfg.checks.push_back(*c);
        }
        if (cfg.checks.empty())
            throw ConfigError("'checks': empty list");
    } else if (key == "budget") {
        const long long v = parse_int(key, value);
        if (v < 1)
            throw ConfigError("'budget' must be positive");
        cfg.budget = static_cast<std::uint64_t>(v);
    } else if (key == "sweep_max_n") {
        cfg.sweep_max_n = parse_small(key, value, 0, 24);
    } else if (key == "output") {
        cfg.output_dir = value;
    } else if (key == "fault") {
        if (value == "none")
            cfg.fault = Fault::none;
        else if (value == "edge_count_plus_one")
            cfg.fault = Fault::edge_count_plus_one;
        else
            throw ConfigError("unknown fault '" + value + "'");
    } else {
        throw ConfigError("unknown key '" + key + "'");
    }
}

VerifyConfig parse_verify_config(std::istream &in)
{
    VerifyConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
        try {
            apply_config_entry(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
        } catch (const ConfigError &e) {
            throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return cfg;
}

VerifyConfig read_verify_config(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config '" + path + "'");
    return parse_verify_config(in);
}

// ---------------------------------------------------------------- corpus

namespace {

Hypergraph seeded_instance(std::uint64_t instance_seed, int n_min, int n_max, int m_min, int m_per_n,
                           const std::vector<int> &s_choices)
{
    std::mt19937_64 rng(instance_seed);
    const int s = s_choices[uniform_below(rng, s_choices.size())];
    const int n = static_cast<int>(uniform_between(rng, std::max(n_min, s), std::max(n_max, s)));
    const auto total = to_int64(binomial(static_cast<unsigned>(n), static_cast<unsigned>(s)));
    const std::int64_t cap = std::min<std::int64_t>(total.value_or(INT64_MAX), static_cast<std::int64_t>(m_per_n) * n);
    const std::int64_t lo = std::min<std::int64_t>(m_min, cap);
    const std::int64_t m = uniform_between(rng, lo, cap);
    return gen_random_uniform(n, m, s, rng());
}

} // namespace

Hypergraph random_instance(const VerifyConfig &cfg, int index)
{
    const std::uint64_t seed = splitmix64(cfg.seed + 2 * static_cast<std::uint64_t>(index));
    return seeded_instance(seed, cfg.random_n_min, cfg.random_n_max, cfg.random_m_min, cfg.random_m_per_n,
                           cfg.random_s);
}

Hypergraph replication_instance(const VerifyConfig &cfg, int index)
{
    const std::uint64_t seed = splitmix64(cfg.seed + 2 * static_cast<std::uint64_t>(index) + 1);
    std::vector<int> s_choices;
    for (int s : cfg.random_s)
        if (s <= cfg.replication_n_max)
            s_choices.push_back(s);
    if (s_choices.empty())
        s_choices.push_back(2);
    return seeded_instance(seed, 2, cfg.replication_n_max, 0, 2, s_choices);
}

std::vector<CorpusInstance> build_corpus(const VerifyConfig &cfg)
{
    std::vector<CorpusInstance> corpus;
    if (cfg.exhaustive) {
        for (int n = cfg.exhaustive_n_min; n <= cfg.exhaustive_n_max; ++n) {
            for (int s = cfg.exhaustive_s_min; s <= std::min(cfg.exhaustive_s_max, n); ++s) {
                const auto slots = gen_complete(n, s).edges();
                if (slots.size() > 20)
                    throw ConfigError("exhaustive corpus with C(" + std::to_string(n) + "," + std::to_string(s)
                                      + ") > 20 edge slots is too large");
                const std::uint64_t count = std::uint64_t{1} << slots.size();
                for (std::uint64_t mask = 0; mask < count; ++mask) {
                    std::vector<Edge> edges;
                    for (std::size_t i = 0; i < slots.size(); ++i)
                        if (mask >> i & 1)
                            edges.push_back(slots[i]);
                    corpus.push_back({"ex-n" + std::to_string(n) + "-s" + std::to_string(s) + "-" + std::to_string(mask),
                                      Hypergraph(n, s, std::move(edges))});
                }
            }
        }
    }
    for (int i = 0; i < cfg.random_count; ++i)
        corpus.push_back({"rnd-" + std::to_string(i), random_instance(cfg, i)});
    for (const auto &path : cfg.files)
        corpus.push_back({"file:" + path, read_hg_file(path)});
    return corpus;
}

// ---------------------------------------------------------------- checks

namespace {

class Runner
{
public:
    explicit Runner(const VerifyConfig &cfg)
        : cfg_(cfg)
    {}

    VerifyReport run()
    {
        const auto corpus = build_corpus(cfg_);
        if (corpus.empty())
            throw ConfigError("no instances");
        report_.instances = static_cast<long long>(corpus.size());

        if (cfg_.has(Check::fg))
            check_fg();
        for (const auto &inst : corpus)
            check_instance(inst);
        if (cfg_.has(Check::replication))
            check_replication();
        return std::move(report_);
    }

private:
    void expect(const std::string &sub, bool ok, const std::string &instance, int k, const Hypergraph *h,
                const std::string &message)
    {
        auto &st = report_.stats[sub];
        ++st.checked;
        if (ok) {
            ++st.passed;
            return;
        }
        Violation v{sub, instance, k, message, {}};
        if (h)
            v.dump_path = dump(v, *h);
        report_.violations.push_back(std::move(v));
    }

    void note(const std::string &key, long long by = 1) { report_.notes[key] += by; }

    std::string dump(const Violation &v, const Hypergraph &h)
    {
        namespace fs = std::filesystem;
        std::string stem = v.check + "__" + v.instance + "__k" + std::to_string(v.k);
        std::replace_if(stem.begin(), stem.end(), [](char c) { return c == '/' || c == ':' || c == '\\'; }, '_');
        fs::create_directories(cfg_.output_dir);
        const fs::path base = fs::path(cfg_.output_dir) / stem;
        write_hg_file(base.string() + ".hg", h);
        Json diag;
        diag["check"] = v.check;
        diag["instance"] = v.instance;
        diag["k"] = v.k;
        diag["message"] = v.message;
        diag["seed"] = cfg_.seed;
        diag["fault"] = cfg_.fault == Fault::none ? "none" : "edge_count_plus_one";
        std::ofstream(base.string() + ".json") << diag.dump(2) << '\n';
        return base.string() + ".hg";
    }

    void check_fg()
    {
        std::set<Rational> grid;
        for (int p = 0; p <= 40; ++p)
            for (int q = 1; q <= 12; ++q)
                grid.insert(Rational(p, q));
        std::vector<Rational> xs(grid.begin(), grid.end());
        std::vector<Rational> fs;
        for (const auto &x : xs)
            fs.push_back(eval_f(x));

        for (std::size_t i = 0; i < xs.size(); ++i) {
            const auto &x = xs[i];
            const std::string where = "x=" + x.str();
            if (!x.is_zero())
                expect("fg.f_equals_g", fs[i] == eval_g(x), "grid", 0, nullptr, where);
            const Rational floor_value = Rational(1) / (Rational(1) + x);
            const bool ok = fs[i] >= floor_value && ((fs[i] == floor_value) == x.is_integer());
            expect("fg.reciprocal_floor", ok, "grid", 0, nullptr, where);
        }
        for (std::size_t i = 0; i < xs.size(); ++i) {
            for (std::size_t j = i + 1; j < xs.size(); ++j) {
                const std::string where = "x1=" + xs[i].str() + " x2=" + xs[j].str();
                expect("fg.monotone", fs[i] >= fs[j], "grid", 0, nullptr, where);
                const Rational mid = eval_f((xs[i] + xs[j]) / Rational(2));
                expect("fg.midpoint_convex", mid <= (fs[i] + fs[j]) / Rational(2), "grid", 0, nullptr, where);
            }
        }
    }

    void check_instance(const CorpusInstance &inst)
    {
        const auto &h = inst.h;
        const auto profile = degree_profile(h);
        std::map<int, int> alpha_by_k;

        for (int k : cfg_.ks) {
            const bool need_alpha = cfg_.has(Check::soundness) || cfg_.has(Check::oracle)
                                 || cfg_.has(Check::partition) || cfg_.has(Check::achievement);
            std::optional<int> alpha;
            if (need_alpha) {
                const auto oracle = alpha_k_exact(h, k, cfg_.budget);
                if (oracle.complete()) {
                    alpha = oracle.value;
                    alpha_by_k[k] = *alpha;
                } else {
                    ++report_.oracle_incomplete;
                }
            }

            const auto report = bound_report(h, k);
            if (cfg_.has(Check::soundness) && alpha)
                check_soundness(inst, k, report, *alpha);
            if (cfg_.has(Check::achievement))
                check_achievement(inst, k, alpha);
            if (cfg_.has(Check::partition) && k >= 1)
                check_partition(inst, k, profile.max_degree, alpha);
            if (cfg_.has(Check::oracle) && alpha && h.n() <= cfg_.sweep_max_n) {
                const auto sweep = alpha_k_sweep(h, k);
                expect("oracle.sweep_agreement", sweep.value == alpha, inst.id, k, &h,
                       "branch and bound " + std::to_string(*alpha) + " vs sweep " + std::to_string(*sweep.value));
            }
            if (cfg_.has(Check::remark))
                check_remark(inst, k, profile.max_degree, report);
        }

        if (cfg_.has(Check::oracle)) {
            int previous = -1;
            for (const auto &[k, alpha] : alpha_by_k) {
                expect("oracle.monotone", alpha >= previous, inst.id, k, &h, "alpha_k decreased as k grew");
                previous = alpha;
                if (k >= profile.max_degree)
                    expect("oracle.saturated", alpha == h.n(), inst.id, k, &h, "alpha_k != n although k >= delta");
            }
        }
    }

    void check_soundness(const CorpusInstance &inst, int k, const BoundReport &report, int alpha)
    {
        for (const auto &b : report.bounds) {
            if (!b.applicable)
                continue;
            long long certified = b.ceiling();
            if (cfg_.fault == Fault::edge_count_plus_one && b.name == bound_names::edge_count)
                certified = (*b.exact + Rational(1)).ceil().get_si();
            const bool ok = certified <= alpha;
            if (b.name == bound_names::caro_tuza_k_diag) {
                note("soundness.caro_tuza_k_diag.checked");
                if (!ok)
                    note("soundness.caro_tuza_k_diag.violations");
                continue;
            }
            expect("soundness.bounds", ok, inst.id, k, &inst.h,
                   b.name + ": ceil(bound) = " + std::to_string(certified) + " > alpha_k = " + std::to_string(alpha));
        }
    }

    void check_achievement(const CorpusInstance &inst, int k, std::optional<int> alpha)
    {
        const auto &h = inst.h;
        const Rational n(h.n());

        const auto greedy = greedy_peel(h, k);
        expect("achievement.greedy_size", Rational(static_cast<std::int64_t>(greedy.size())) >= n - Rational(h.e(), k + 1),
               inst.id, k, &h, "greedy size " + std::to_string(greedy.size()) + " below n - e/(k+1)");
        expect("achievement.greedy_steps", static_cast<int>(greedy.trace.size()) <= h.e() / (k + 1), inst.id, k, &h,
               "greedy used " + std::to_string(greedy.trace.size()) + " removals, more than floor(e/(k+1))");

        const auto avg = thm37_extract(h, k);
        const long long target = bound_avg_degree(h, k).ceiling();
        expect("achievement.avg_degree", static_cast<long long>(avg.size()) >= target, inst.id, k, &h,
               "average-degree extraction size " + std::to_string(avg.size()) + " below " + std::to_string(target));
        check_phases(inst, k, avg);

        if (k >= 1) {
            const auto part = partition_extract(h, k);
            const int classes = partition_class_count(degree_profile(h).max_degree, k);
            const long long need = (h.n() + classes - 1) / classes;
            expect("achievement.partition_size", static_cast<long long>(part.size()) >= need, inst.id, k, &h,
                   "partition extraction size " + std::to_string(part.size()) + " below " + std::to_string(need));
        }

        const auto best = best_extract(h, k);
        bool maximal = true;
        for (Vertex v = 0; v < h.n() && maximal; ++v) {
            if (best.set.contains(v))
                continue;
            auto members = best.set.members();
            members.push_back(v);
            maximal = !is_k_independent(h, VertexSet(std::move(members)), k).independent;
        }
        expect("achievement.best_maximal", maximal, inst.id, k, &h, "best extraction is not maximal");
        if (alpha)
            expect("achievement.best_le_alpha", static_cast<int>(best.size()) <= *alpha, inst.id, k, &h,
                   "extraction larger than the exact optimum");
    }

    // Reported diagnostics for the two unproven steps of the band argument.
    void check_phases(const CorpusInstance &inst, int k, const ExtractionResult &avg)
    {
        for (const auto &phase : avg.phases) {
            const Rational target = (Rational(phase.n) - phase.t) / Rational(phase.band + 1);
            if (phase.full_phase) {
                note("avg_degree.full_phases");
                if (!phase.remainder_in_lower_band)
                    note("avg_degree.full_phase_band_exceptions");
            } else {
                note("avg_degree.short_phases");
                if (phase.survivors.empty())
                    continue;
                const auto sub = induced(inst.h, VertexSet(phase.survivors));
                const auto oracle = alpha_k_exact(sub, k, cfg_.budget);
                if (!oracle.complete())
                    continue;
                note("avg_degree.short_phases_checked");
                if (Rational(*oracle.value) < target)
                    note("avg_degree.short_phase_exceptions");
            }
        }
    }

    void check_partition(const CorpusInstance &inst, int k, int delta, std::optional<int> alpha)
    {
        const auto &h = inst.h;
        const int classes = partition_class_count(delta, k);
        const auto part = k_partition(h, k);
        if (part.degraded() && delta % k == 0)
            note("partition.fallback_when_k_divides_delta");
        const bool ok = static_cast<int>(part.classes.size()) == classes && part.fallback_events == 0
                     && part.moves <= h.e();
        expect("partition.class_count", ok, inst.id, k, &h,
               std::to_string(part.classes.size()) + " classes (want " + std::to_string(classes) + "), "
                   + std::to_string(part.fallback_events) + " fallback events, " + std::to_string(part.moves)
                   + " moves");

        const auto chi = chi_k_exact(h, k, cfg_.budget);
        if (!chi.complete()) {
            note("partition.chi_incomplete");
            return;
        }
        expect("partition.chi_upper", *chi.value <= classes, inst.id, k, &h,
               "chi_k = " + std::to_string(*chi.value) + " > " + std::to_string(classes));
        if (alpha)
            expect("partition.pigeonhole_link", *alpha >= (h.n() + *chi.value - 1) / *chi.value, inst.id, k, &h,
                   "alpha_k below ceil(n / chi_k)");
    }

    void check_remark(const CorpusInstance &inst, int k, int delta, const BoundReport &report)
    {
        if (k < 1 || delta < k * (k + 1))
            return;
        const auto &simple = *report.find(bound_names::avg_degree_simple)->exact;
        const auto &by_max = *report.find(bound_names::max_degree)->exact;
        expect("remark.dominance", simple >= by_max, inst.id, k, &inst.h,
               "avg_degree_simple " + simple.str() + " < max_degree " + by_max.str());
        if (delta % k != 0) {
            note("remark.rows_k_not_dividing_delta");
            if (simple > by_max)
                note("remark.strict_rows");
        }
    }

    void check_replication()
    {
        for (int i = 0; i < cfg_.replication_count; ++i) {
            const auto h = replication_instance(cfg_, i);
            const std::string id = "rep-" + std::to_string(i);
            for (int c : cfg_.replication_c) {
                const auto copies = replicate(h, c);
                const std::string cid = id + "-x" + std::to_string(c);
                for (int k : cfg_.ks) {
                    const auto base = alpha_k_exact(h, k, cfg_.budget);
                    const auto big = alpha_k_exact(copies, k, cfg_.budget);
                    if (!base.complete() || !big.complete()) {
                        ++report_.oracle_incomplete;
                        continue;
                    }
                    expect("replication.alpha", *big.value == c * *base.value, cid, k, &h,
                           "alpha_k(cH) = " + std::to_string(*big.value) + " vs c * alpha_k(H) = "
                               + std::to_string(c * *base.value));
                    check_per_vertex(h, copies, c, k, cid);
                }
            }
        }
    }

    void check_per_vertex(const Hypergraph &h, const Hypergraph &copies, int c, int k, const std::string &id)
    {
        const auto a = bound_report(h, k);
        const auto b = bound_report(copies, k);
        for (std::size_t i = 0; i < a.bounds.size(); ++i) {
            const auto &x = a.bounds[i];
            const auto &y = b.bounds[i];
            bool ok = x.applicable == y.applicable;
            if (ok && x.exact)
                ok = y.exact && *x.exact * Rational(c) == *y.exact;
            else if (ok && x.approx)
                ok = y.approx && std::abs(*x.approx * c - *y.approx) <= 1e-12 * std::max(1.0, std::abs(*y.approx));
            expect("replication.per_vertex_bounds", ok, id, k, &h, x.name + " per-vertex value changed");
        }
    }

    const VerifyConfig &cfg_;
    VerifyReport report_;
};

} // namespace

VerifyReport run_verify(const VerifyConfig &cfg)
{
    return Runner(cfg).run();
}

std::string VerifyReport::render() const
{
    std::ostringstream out;
    out << "instances " << instances << '\n';
    for (const auto &[name, st] : stats)
        out << (st.failed() == 0 ? "PASS " : "FAIL ") << name << ' ' << st.passed << '/' << st.checked << '\n';
    for (const auto &[name, count] : notes)
        out << "note " << name << ' ' << count << '\n';
    if (oracle_incomplete)
        out << "note oracle_budget_exceeded " << oracle_incomplete << '\n';
    for (const auto &v : violations) {
        out << "violation " << v.check << ' ' << v.instance << " k=" << v.k << ": " << v.message;
        if (!v.dump_path.empty())
            out << " [" << v.dump_path << ']';
        out << '\n';
    }
    out << (ok() ? "result PASS" : "result FAIL") << '\n';
    return out.str();
}

} // namespace hyperk
