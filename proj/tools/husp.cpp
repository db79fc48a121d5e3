// husp: mine high-utility sequential patterns from quantitative sequence
// databases, plus the supporting oracle/gen/inspect/bounds/bench commands.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "husp/bench.hpp"
#include "husp/datagen.hpp"
#include "husp/oracle.hpp"
#include "husp/result_io.hpp"

namespace {

// Exit codes, sysexits-flavored so each failure class is distinct:
//   64 usage error, 65 input data malformed, 66 file unreadable,
//   70 internal error, 75 budget/time limit exceeded.
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitNoInput = 66;
constexpr int kExitInternal = 70;
constexpr int kExitBudget = 75;

struct CliError {
    int code;
    std::string message;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError{kExitNoInput, "cannot read file: " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spill(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CliError{kExitNoInput, "cannot write file: " + path};
    out << content;
}

husp::QSeqDatabase load_database(const std::string& dbPath, const std::string& profitsPath) {
    try {
        auto profits = husp::parse_profit_table(slurp(profitsPath));
        return husp::parse_database(slurp(dbPath), std::move(profits));
    } catch (const husp::ParseError& e) {
        throw CliError{kExitData, e.what()};
    } catch (const std::invalid_argument& e) {
        throw CliError{kExitData, e.what()};
    }
}

struct ThresholdArgs {
    std::string ratio;
    std::string absolute;

    void attach(CLI::App* cmd) {
        auto* r = cmd->add_option("--min-util-ratio", ratio, "threshold as a fraction of the database utility");
        auto* a = cmd->add_option("--min-util", absolute, "absolute utility threshold");
        r->excludes(a);
        a->excludes(r);
    }

    void apply(husp::MinerConfig& cfg) const {
        if (!ratio.empty()) cfg.minUtilRatio = ratio;
        if (!absolute.empty()) {
            try {
                cfg.minUtilAbsolute = husp::money_from_string(absolute);
            } catch (const std::exception& e) {
                throw CliError{kExitUsage, std::string("--min-util: ") + e.what()};
            }
        }
        if (!cfg.minUtilRatio && !cfg.minUtilAbsolute)
            throw CliError{kExitUsage, "one of --min-util-ratio / --min-util is required"};
    }
};

void emit(const std::string& outPath, const std::string& content) {
    if (outPath.empty())
        std::cout << content;
    else
        spill(outPath, content);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"high-utility sequential pattern mining over utility-linked lists"};
    app.require_subcommand(1);

    // --- mine ---
    auto* mineCmd = app.add_subcommand("mine", "mine the exact HUSP set");
    std::string dbPath, profitsPath, outPath, boundName = "peu", patternText, planPath;
    ThresholdArgs threshold;
    bool noLas = false, noIps = false, printStats = false;
    std::optional<std::int32_t> maxLen;
    std::optional<std::int64_t> timeBudget;
    mineCmd->add_option("--db", dbPath, "database file")->required();
    mineCmd->add_option("--profits", profitsPath, "profit table file")->required();
    threshold.attach(mineCmd);
    mineCmd->add_option("--bound", boundName, "pruning bound: peu (default), seu or swu");
    mineCmd->add_flag("--no-las", noLas, "disable look-ahead candidate filtering");
    mineCmd->add_flag("--no-ips", noIps, "disable irrelevant item pruning");
    mineCmd->add_option("--max-len", maxLen, "cap on pattern length");
    mineCmd->add_option("--time-budget-ms", timeBudget, "abort after this many milliseconds");
    mineCmd->add_option("--out", outPath, "result file (default: stdout)");
    mineCmd->add_flag("--stats", printStats, "print a stats record to stderr");

    // --- oracle ---
    auto* oracleCmd = app.add_subcommand("oracle", "brute-force reference miner");
    std::string oDbPath, oProfitsPath, oOutPath;
    ThresholdArgs oThreshold;
    std::optional<std::int32_t> oMaxLen;
    std::int64_t nodeCap = husp::kDefaultOracleNodeCap;
    oracleCmd->add_option("--db", oDbPath, "database file")->required();
    oracleCmd->add_option("--profits", oProfitsPath, "profit table file")->required();
    oThreshold.attach(oracleCmd);
    oracleCmd->add_option("--max-len", oMaxLen, "cap on pattern length");
    oracleCmd->add_option("--node-cap", nodeCap, "enumeration budget");
    oracleCmd->add_option("--out", oOutPath, "result file (default: stdout)");

    // --- gen ---
    auto* genCmd = app.add_subcommand("gen", "generate a synthetic database");
    husp::GenParams gp;
    std::string genDbPath, genProfitsPath, profitLowText = "0.01", profitHighText = "10.00";
    genCmd->add_option("--out-db", genDbPath, "output database file")->required();
    genCmd->add_option("--out-profits", genProfitsPath, "output profit table file")->required();
    genCmd->add_option("--sequences", gp.numSequences, "number of sequences (D)");
    genCmd->add_option("--items", gp.numItems, "number of distinct items (N)");
    genCmd->add_option("--avg-itemsets", gp.avgItemsetsPerSeq, "average itemsets per sequence (C)");
    genCmd->add_option("--avg-items", gp.avgItemsPerItemset, "average items per itemset (T)");
    genCmd->add_option("--max-seq-len", gp.maxLen, "max items per sequence");
    genCmd->add_option("--quantity-low", gp.quantityLow, "minimum quantity");
    genCmd->add_option("--quantity-high", gp.quantityHigh, "maximum quantity");
    genCmd->add_option("--profit-low", profitLowText, "minimum profit");
    genCmd->add_option("--profit-high", profitHighText, "maximum profit");
    genCmd->add_option("--mu", gp.logNormalMu, "log-normal mu");
    genCmd->add_option("--sigma", gp.logNormalSigma, "log-normal sigma");
    genCmd->add_option("--seed", gp.rngSeed, "RNG seed");

    // --- inspect ---
    auto* inspectCmd = app.add_subcommand("inspect", "dump utility-linked lists");
    std::string iDbPath, iProfitsPath;
    std::optional<int> sid;
    inspectCmd->add_option("--db", iDbPath, "database file")->required();
    inspectCmd->add_option("--profits", iProfitsPath, "profit table file")->required();
    inspectCmd->add_option("--sid", sid, "only this sequence id");

    // --- bounds ---
    auto* boundsCmd = app.add_subcommand("bounds", "print u/SWU/SEU/PEU of a pattern");
    std::string bDbPath, bProfitsPath;
    boundsCmd->add_option("--db", bDbPath, "database file")->required();
    boundsCmd->add_option("--profits", bProfitsPath, "profit table file")->required();
    boundsCmd->add_option("--pattern", patternText, "pattern, e.g. \"1 -1 2\"")->required();

    // --- bench ---
    auto* benchCmd = app.add_subcommand("bench", "run a benchmark plan, emit CSV");
    std::string benchOutPath;
    unsigned jobs = 1;
    benchCmd->add_option("--plan", planPath, "JSON benchmark plan")->required();
    benchCmd->add_option("--out", benchOutPath, "CSV output file (default: stdout)");
    benchCmd->add_option("--jobs", jobs, "cells run in parallel (each cell stays sequential)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*mineCmd) {
            husp::MinerConfig cfg;
            threshold.apply(cfg);
            const auto mode = husp::bound_mode_from_name(boundName);
            if (!mode) throw CliError{kExitUsage, "unknown bound '" + boundName + "'"};
            cfg.boundMode = *mode;
            cfg.lasEnabled = !noLas;
            cfg.ipsEnabled = !noIps;
            cfg.maxPatternLength = maxLen;
            cfg.timeBudgetMillis = timeBudget;
            const auto db = load_database(dbPath, profitsPath);
            const auto out = husp::mine(db, cfg);
            emit(outPath, husp::results_to_string(out.results));
            if (printStats) std::cerr << husp::format_stats(out.stats) << '\n';
        } else if (*oracleCmd) {
            husp::MinerConfig cfg;
            oThreshold.apply(cfg);
            const auto db = load_database(oDbPath, oProfitsPath);
            const auto minUtil = husp::resolve_min_util(db, cfg);
            std::vector<husp::HUSPResult> results;
            for (const auto& r : husp::oracle_mine(db, minUtil, oMaxLen.value_or(0), nodeCap))
                results.push_back(husp::HUSPResult{r.pattern, r.utility});
            emit(oOutPath, husp::results_to_string(results));
        } else if (*genCmd) {
            try {
                gp.profitLow = husp::money_from_string(profitLowText);
                gp.profitHigh = husp::money_from_string(profitHighText);
                const auto data = husp::generate(gp);
                spill(genDbPath, data.databaseText);
                spill(genProfitsPath, data.profitText);
            } catch (const std::invalid_argument& e) {
                throw CliError{kExitUsage, e.what()};
            }
        } else if (*inspectCmd) {
            const auto db = load_database(iDbPath, iProfitsPath);
            std::ostringstream out;
            for (const auto& s : db.sequences) {
                if (sid && s.sid != *sid) continue;
                out << husp::format_ul_list(husp::build_ul_list(s, db.profits));
            }
            std::cout << out.str();
        } else if (*boundsCmd) {
            const auto db = load_database(bDbPath, bProfitsPath);
            husp::Pattern pattern;
            try {
                pattern = husp::pattern_from_string(patternText);
            } catch (const husp::ParseError& e) {
                throw CliError{kExitUsage, e.what()};
            }
            const auto lists = husp::build_ul_lists(db);
            const std::span<const husp::ULList> span{lists.data(), lists.size()};
            const auto pd = husp::project_pattern(span, pattern);
            std::cout << "pattern: " << husp::pattern_to_string(pattern) << '\n'
                      << "u: " << husp::money_to_string(husp::utility_of(pd)) << '\n'
                      << "SWU: " << husp::money_to_string(husp::swu_of(span, pd)) << '\n'
                      << "SEU: " << husp::money_to_string(husp::seu_of(span, pd)) << '\n'
                      << "PEU: " << husp::money_to_string(husp::peu_of(span, pd)) << '\n';
        } else if (*benchCmd) {
            husp::BenchPlan plan;
            try {
                plan = husp::parse_plan(slurp(planPath));
            } catch (const std::runtime_error& e) {
                throw CliError{kExitData, e.what()};
            }
            const auto rows = husp::run_bench(plan, jobs);
            emit(benchOutPath, husp::bench_to_csv(rows));
        }
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << '\n';
        return e.code;
    } catch (const husp::MiningTimeout& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const husp::BudgetError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const husp::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInternal;
    }
    return 0;
}
