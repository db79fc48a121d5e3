#pragma once

#include <optional>
#include <string>
#include <vector>

#include "husp/miner.hpp"

namespace husp {

inline constexpr const char* kBenchCsvHeader = "dataset,delta,bound,las,ips,ms,candidates,husps,peak_entries";

struct BenchDataset {
    std::string id;
    std::string dbPath;
    std::string profitsPath;
};

// Declarative benchmark grid: every (dataset, delta, bound, las, ips) cell
// becomes one CSV row. Cells over the time budget get `-` sentinels.
struct BenchPlan {
    std::vector<BenchDataset> datasets;
    std::vector<std::string> deltas;  // exact decimal text
    std::vector<BoundMode> bounds = {BoundMode::Peu, BoundMode::Seu, BoundMode::Swu};
    std::vector<bool> lasOptions = {true, false};
    std::vector<bool> ipsOptions = {true, false};
    std::optional<std::int64_t> timeoutMillis;
};

struct BenchRow {
    std::string datasetId;
    std::string delta;
    BoundMode boundMode = BoundMode::Peu;
    bool lasEnabled = true;
    bool ipsEnabled = true;
    bool timedOut = false;
    std::int64_t elapsedMillis = 0;
    std::int64_t candidatesGenerated = 0;
    std::int64_t huspCount = 0;
    std::size_t peakProjectedEntries = 0;
};

BenchPlan parse_plan(const std::string& jsonText);
BenchPlan load_plan(const std::string& path);

std::string format_bench_row(const BenchRow& row);

// Runs every cell (optionally `jobs` cells at a time, each cell sequential)
// and returns the rows in plan order.
std::vector<BenchRow> run_bench(const BenchPlan& plan, unsigned jobs = 1);

std::string bench_to_csv(const std::vector<BenchRow>& rows);

}  // namespace husp
