#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperk/exact.hpp"
#include "hyperk/hypergraph.hpp"

namespace hyperk {

enum class Check { soundness, achievement, fg, replication, partition, oracle, remark };

const std::vector<Check> &all_checks();
std::string check_name(Check c);
std::optional<Check> parse_check(const std::string &name);

/// Deliberate defects used to prove the harness catches violations.
enum class Fault { none, edge_count_plus_one };

class ConfigError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Corpus and check selection. Together with `seed` it fully determines the run.
struct VerifyConfig
{
    // Every s-uniform hypergraph on n vertices for n, s in the ranges (C(n,s) <= 20).
    bool exhaustive = false;
    int exhaustive_n_min = 5, exhaustive_n_max = 5;
    int exhaustive_s_min = 3, exhaustive_s_max = 3;

    // Random instances: s from `random_s`, n in [n_min, n_max], m in [m_min, m_per_n * n] capped at C(n,s).
    int random_count = 0;
    int random_n_min = 8, random_n_max = 14;
    int random_m_min = 0, random_m_per_n = 3;
    std::vector<int> random_s{2, 3, 4};

    std::vector<std::string> files;

    std::vector<int> ks{0, 1, 2, 3};
    std::uint64_t seed = 20240917;

    int replication_count = 20;
    int replication_n_max = 7;
    std::vector<int> replication_c{2, 3};

    std::vector<Check> checks = all_checks();
    std::uint64_t budget = 20'000'000;
    int sweep_max_n = 12;
    std::string output_dir = "verify-out";
    Fault fault = Fault::none;

    bool has(Check c) const;
};

/// Flat `key = value` text; `#` starts a comment. Unknown keys are errors.
VerifyConfig parse_verify_config(std::istream &in);
VerifyConfig read_verify_config(const std::string &path);
void apply_config_entry(VerifyConfig &cfg, const std::string &key, const std::string &value);

struct CorpusInstance
{
    std::string id;
    Hypergraph h;
};

/// Materializes the corpus in a fixed order: exhaustive, random, files.
std::vector<CorpusInstance> build_corpus(const VerifyConfig &cfg);

/// The i-th random instance, reconstructible from (cfg, i) alone.
Hypergraph random_instance(const VerifyConfig &cfg, int index);
Hypergraph replication_instance(const VerifyConfig &cfg, int index);

struct CheckStats
{
    long long checked = 0;
    long long passed = 0;
    long long failed() const { return checked - passed; }
};

struct Violation
{
    std::string check;
    std::string instance;
    int k = 0;
    std::string message;
    std::string dump_path;  ///< .hg written for this violation, empty if none
};

struct VerifyReport
{
    std::map<std::string, CheckStats> stats;  ///< keyed by sub-check name
    std::map<std::string, long long> notes;   ///< reported-only diagnostics
    std::vector<Violation> violations;
    long long instances = 0;
    long long oracle_incomplete = 0;

    bool ok() const { return violations.empty(); }
    /// Deterministic text rendering (no timings).
    std::string render() const;
};

/// Runs the configured checks. Throws ConfigError when the corpus is empty.
/// Writes a .hg plus .json diagnosis per violation into cfg.output_dir.
VerifyReport run_verify(const VerifyConfig &cfg);

} // namespace hyperk
