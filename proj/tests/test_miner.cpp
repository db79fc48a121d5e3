#include <doctest.h>

#include <algorithm>

#include "husp/miner.hpp"
#include "husp/oracle.hpp"
#include "husp/result_io.hpp"
#include "test_util.hpp"

using namespace husp;

namespace {

Pattern pat(const char* text) { return pattern_from_string(text); }

MinerConfig config(const char* ratio, BoundMode mode = BoundMode::Peu, bool las = true,
                   bool ips = true) {
    MinerConfig cfg;
    cfg.minUtilRatio = ratio;
    cfg.boundMode = mode;
    cfg.lasEnabled = las;
    cfg.ipsEnabled = ips;
    return cfg;
}

std::vector<HUSPResult> as_results(const std::vector<OracleHUSP>& oracle) {
    std::vector<HUSPResult> out;
    for (const auto& r : oracle) out.push_back(HUSPResult{r.pattern, r.utility});
    return out;
}

const std::vector<MinerConfig>& all_configs(const char* ratio) {
    static std::vector<MinerConfig> grid;
    grid.clear();
    for (const auto mode : {BoundMode::Peu, BoundMode::Seu, BoundMode::Swu})
        for (const bool las : {true, false})
            for (const bool ips : {true, false}) grid.push_back(config(ratio, mode, las, ips));
    return grid;
}

}  // namespace

TEST_CASE("running example at delta 0.1") {
    const auto db = husptest::table1();
    const auto out = mine(db, config("0.1"));
    CHECK(out.minUtil == money_from_string("44.1"));

    const auto it = std::find_if(out.results.begin(), out.results.end(),
                                 [&](const HUSPResult& r) { return r.pattern == pat("1 -1 2"); });
    REQUIRE(it != out.results.end());
    CHECK(it->utility == money_from_units(160));

    CHECK(out.results == as_results(oracle_mine(db, out.minUtil)));
    CHECK(out.stats.huspCount == static_cast<std::int64_t>(out.results.size()));
    CHECK(out.stats.huspCount <= out.stats.candidatesGenerated);
    CHECK(std::is_sorted(out.results.begin(), out.results.end(),
                         [](const HUSPResult& a, const HUSPResult& b) {
                             return pattern_less(a.pattern, b.pattern);
                         }));
}

TEST_CASE("threshold above the database utility yields nothing") {
    const auto db = husptest::table1();
    CHECK(mine(db, config("1.01")).results.empty());
}

TEST_CASE("empty database mines to an empty result") {
    const auto db = parse_database(std::string(""),
                                   parse_profit_table(std::string(husptest::kTable1Profits)));
    const auto out = mine(db, config("0.1"));
    CHECK(out.results.empty());
    CHECK(out.stats.candidatesGenerated == 0);
}

TEST_CASE("judge recurses into <[a],[b]> at delta 0.1") {
    const auto db = husptest::table1();
    MiningAudit audit;
    const auto out = mine(db, config("0.1"), &audit);
    // nodes with u below the threshold but bound above it must exist and be
    // expanded rather than emitted
    CHECK(audit.recursedBelowUtility > 0);
    CHECK(out.stats.nodesVisited > 0);
}

TEST_CASE("exact agreement with the oracle across the whole config grid") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        const auto db = husptest::random_db(seed);
        for (const char* ratio : {"0.05", "0.1", "0.2"}) {
            MinerConfig probe = config(ratio);
            const Money minUtil = resolve_min_util(db, probe);
            const auto expected = as_results(oracle_mine(db, minUtil));
            for (const auto& cfg : all_configs(ratio)) {
                const auto got = mine(db, cfg);
                CHECK(got.minUtil == minUtil);
                CHECK(got.results == expected);
            }
        }
    }
}

TEST_CASE("bound hierarchy and anti-monotonicity audit on random data") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        const auto db = husptest::random_db(seed);
        for (const auto& cfg : all_configs("0.05")) {
            MiningAudit audit;
            mine(db, cfg, &audit);
            CHECK(audit.chainViolations == 0);
            CHECK(audit.antiMonotoneViolations == 0);
            if (audit.chainViolations || audit.antiMonotoneViolations)
                for (const auto& note : audit.notes) MESSAGE(note);
        }
    }
}

TEST_CASE("look-ahead pruning is sound (one-step oracle check)") {
    std::int64_t pruneEvents = 0;
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        const auto db = husptest::random_db(seed);
        MiningAudit audit;
        audit.recordLasPrunes = true;
        const auto out = mine(db, config("0.1"), &audit);
        pruneEvents += static_cast<std::int64_t>(audit.lasPruned.size());
        for (const auto& rec : audit.lasPruned) {
            Pattern extended = rec.prefix;
            if (rec.sConcat)
                extended.itemsets.push_back({rec.item});
            else
                extended.itemsets.back().push_back(rec.item);
            CHECK(naive_pattern_utility(extended, db) < out.minUtil);
        }
    }
    CHECK(pruneEvents > 0);
}

TEST_CASE("candidate counts order by bound tightness; pruning never adds work") {
    const auto count = [](const QSeqDatabase& db, const char* ratio, BoundMode mode, bool las,
                          bool ips) { return mine(db, config(ratio, mode, las, ips)).stats; };
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto db = husptest::random_db(seed);
        for (const char* ratio : {"0.05", "0.2"}) {
            for (const bool las : {true, false})
                for (const bool ips : {true, false}) {
                    const auto peu = count(db, ratio, BoundMode::Peu, las, ips);
                    const auto seu = count(db, ratio, BoundMode::Seu, las, ips);
                    const auto swu = count(db, ratio, BoundMode::Swu, las, ips);
                    CHECK(peu.candidatesGenerated <= seu.candidatesGenerated);
                    CHECK(seu.candidatesGenerated <= swu.candidatesGenerated);
                }
            for (const auto mode : {BoundMode::Peu, BoundMode::Seu, BoundMode::Swu}) {
                const auto base = count(db, ratio, mode, false, false);
                CHECK(count(db, ratio, mode, true, false).candidatesGenerated <=
                      base.candidatesGenerated);
                CHECK(count(db, ratio, mode, false, true).candidatesGenerated <=
                      base.candidatesGenerated);
                CHECK(count(db, ratio, mode, true, true).candidatesGenerated <=
                      base.candidatesGenerated);
            }
        }
    }
}

TEST_CASE("byte-identical reruns") {
    const auto db = husptest::table1();
    for (const auto& cfg : all_configs("0.05")) {
        const auto a = mine(db, cfg);
        const auto b = mine(db, cfg);
        CHECK(results_to_string(a.results) == results_to_string(b.results));
        CHECK(a.stats.candidatesGenerated == b.stats.candidatesGenerated);
        CHECK(a.stats.nodesVisited == b.stats.nodesVisited);
        CHECK(a.stats.peakProjectedEntries == b.stats.peakProjectedEntries);
        CHECK(a.stats.lasPrunedItems == b.stats.lasPrunedItems);
        CHECK(a.stats.ipsRemovedItems == b.stats.ipsRemovedItems);
    }
}

TEST_CASE("max pattern length caps both miner and oracle the same way") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const auto db = husptest::random_db(seed);
        MinerConfig cfg = config("0.05");
        cfg.maxPatternLength = 3;
        const Money minUtil = resolve_min_util(db, cfg);
        CHECK(mine(db, cfg).results == as_results(oracle_mine(db, minUtil, 3)));
    }
}

TEST_CASE("absolute threshold form") {
    const auto db = husptest::table1();
    MinerConfig cfg;
    cfg.minUtilAbsolute = money_from_string("44.1");
    const auto viaAbsolute = mine(db, cfg);
    const auto viaRatio = mine(db, config("0.1"));
    CHECK(viaAbsolute.results == viaRatio.results);

    MinerConfig both = config("0.1");
    both.minUtilAbsolute = money_from_units(10);
    CHECK_THROWS_AS(mine(db, both), std::invalid_argument);
    MinerConfig neither;
    CHECK_THROWS_AS(mine(db, neither), std::invalid_argument);
}

TEST_CASE("reported utilities are exact") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto db = husptest::random_db(seed);
        for (const auto& r : mine(db, config("0.1")).results)
            CHECK(r.utility == naive_pattern_utility(r.pattern, db));
    }
}

TEST_CASE("time budget aborts with a timeout") {
    const auto db = husptest::table1();
    MinerConfig cfg = config("0.0001");
    cfg.timeBudgetMillis = 0;
    CHECK_THROWS_AS(mine(db, cfg), MiningTimeout);
}
