#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "hyperk/verify.hpp"

using namespace hyperk;

namespace {

VerifyConfig parse(const std::string &text)
{
    std::istringstream in(text);
    return parse_verify_config(in);
}

} // namespace

TEST_CASE("config parsing")
{
    const auto cfg = parse("# comment\nexhaustive = true\nexhaustive.n = 4..5\nrandom.count = 3\nrandom.s = 2, 3\n"
                           "k = 0,2\nchecks = soundness, oracle\nseed = 9\n");
    CHECK(cfg.exhaustive);
    CHECK(cfg.exhaustive_n_min == 4);
    CHECK(cfg.exhaustive_n_max == 5);
    CHECK(cfg.random_count == 3);
    CHECK(cfg.random_s == std::vector<int>{2, 3});
    CHECK(cfg.ks == std::vector<int>{0, 2});
    CHECK(cfg.checks == std::vector<Check>{Check::soundness, Check::oracle});
    CHECK(cfg.seed == 9);

    CHECK_THROWS_AS(parse("bogus = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse("k = x\n"), ConfigError);
    CHECK_THROWS_AS(parse("checks = nope\n"), ConfigError);
    CHECK_THROWS_AS(parse("no equals sign\n"), ConfigError);
    CHECK_THROWS_AS(parse("exhaustive.n = 6..5\n"), ConfigError);
}

TEST_CASE("corpus is reconstructible from (config, index)")
{
    VerifyConfig cfg;
    cfg.random_count = 30;
    const auto corpus = build_corpus(cfg);
    REQUIRE(corpus.size() == 30);
    for (int i = 0; i < 30; ++i) {
        CHECK(corpus[static_cast<std::size_t>(i)].h == random_instance(cfg, i));
        const auto &h = corpus[static_cast<std::size_t>(i)].h;
        CHECK(h.n() >= 8);
        CHECK(h.n() <= 14);
        CHECK(h.e() <= 3 * h.n());
    }
    VerifyConfig other = cfg;
    other.seed += 1;
    CHECK_FALSE(build_corpus(other)[0].h == corpus[0].h);
}

TEST_CASE("exhaustive corpus enumerates every edge subset")
{
    VerifyConfig cfg;
    cfg.exhaustive = true;
    cfg.exhaustive_n_min = cfg.exhaustive_n_max = 4;
    const auto corpus = build_corpus(cfg);
    CHECK(corpus.size() == 16);
}

TEST_CASE("empty corpus is a configuration error")
{
    VerifyConfig cfg;
    CHECK_THROWS_AS(run_verify(cfg), ConfigError);
}

TEST_CASE("small verify run passes and is deterministic")
{
    VerifyConfig cfg;
    cfg.exhaustive = true;
    cfg.exhaustive_n_min = cfg.exhaustive_n_max = 4;
    cfg.random_count = 5;
    cfg.random_n_min = 6;
    cfg.random_n_max = 8;
    cfg.replication_count = 2;
    cfg.replication_n_max = 5;
    cfg.checks = {Check::soundness, Check::achievement, Check::partition, Check::oracle, Check::remark,
                  Check::replication};
    const auto a = run_verify(cfg);
    CHECK(a.ok());
    CHECK(a.oracle_incomplete == 0);
    CHECK(a.render() == run_verify(cfg).render());
}

TEST_CASE("fault injection is caught and the dump reproduces it")
{
    namespace fs = std::filesystem;
    const fs::path out = fs::temp_directory_path() / "hyperk_fault_test";
    fs::remove_all(out);

    VerifyConfig cfg;
    cfg.exhaustive = true;
    cfg.exhaustive_n_min = cfg.exhaustive_n_max = 4;
    cfg.checks = {Check::soundness};
    cfg.fault = Fault::edge_count_plus_one;
    cfg.output_dir = out.string();
    const auto report = run_verify(cfg);
    REQUIRE_FALSE(report.ok());
    const auto &first = report.violations.front();
    REQUIRE_FALSE(first.dump_path.empty());
    CHECK(fs::exists(first.dump_path));
    CHECK(fs::exists(fs::path(first.dump_path).replace_extension(".json")));

    VerifyConfig replay = cfg;
    replay.exhaustive = false;
    replay.files = {first.dump_path};
    replay.ks = {first.k};
    replay.output_dir = (out / "replay").string();
    CHECK_FALSE(run_verify(replay).ok());

    replay.fault = Fault::none;
    CHECK(run_verify(replay).ok());
    fs::remove_all(out);
}
