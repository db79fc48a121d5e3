#include "husp/bench.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "husp/database.hpp"

namespace husp {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string delta_text(const nlohmann::json& v) {
    // Deltas are echoed into the CSV, so keep the plan's own spelling.
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number()) {
        std::ostringstream ss;
        ss << v;
        return ss.str();
    }
    throw std::runtime_error("plan: delta must be a string or number");
}

}  // namespace

BenchPlan parse_plan(const std::string& jsonText) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(jsonText);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("plan parse failure: ") + e.what());
    }
    BenchPlan plan;
    for (const auto& d : j.value("datasets", nlohmann::json::array())) {
        BenchDataset ds;
        ds.id = d.at("id").get<std::string>();
        ds.dbPath = d.at("db").get<std::string>();
        ds.profitsPath = d.at("profits").get<std::string>();
        plan.datasets.push_back(std::move(ds));
    }
    for (const auto& v : j.value("deltas", nlohmann::json::array()))
        plan.deltas.push_back(delta_text(v));
    if (j.contains("bounds")) {
        plan.bounds.clear();
        for (const auto& b : j["bounds"]) {
            const auto mode = bound_mode_from_name(b.get<std::string>());
            if (!mode) throw std::runtime_error("plan: unknown bound '" + b.get<std::string>() + "'");
            plan.bounds.push_back(*mode);
        }
    }
    if (j.contains("las")) {
        plan.lasOptions.clear();
        for (const auto& v : j["las"]) plan.lasOptions.push_back(v.get<bool>());
    }
    if (j.contains("ips")) {
        plan.ipsOptions.clear();
        for (const auto& v : j["ips"]) plan.ipsOptions.push_back(v.get<bool>());
    }
    if (j.contains("timeout_ms")) plan.timeoutMillis = j["timeout_ms"].get<std::int64_t>();
    return plan;
}

BenchPlan load_plan(const std::string& path) { return parse_plan(slurp(path)); }

std::string format_bench_row(const BenchRow& row) {
    std::ostringstream out;
    out << row.datasetId << ',' << row.delta << ',' << bound_mode_name(row.boundMode) << ','
        << (row.lasEnabled ? 1 : 0) << ',' << (row.ipsEnabled ? 1 : 0) << ',';
    if (row.timedOut)
        out << "-,-,-,-";
    else
        out << row.elapsedMillis << ',' << row.candidatesGenerated << ',' << row.huspCount << ','
            << row.peakProjectedEntries;
    return out.str();
}

std::vector<BenchRow> run_bench(const BenchPlan& plan, unsigned jobs) {
    struct Cell {
        std::size_t dataset;
        std::string delta;
        BoundMode bound;
        bool las;
        bool ips;
    };
    std::vector<Cell> cells;
    for (std::size_t d = 0; d < plan.datasets.size(); ++d)
        for (const auto& delta : plan.deltas)
            for (const auto bound : plan.bounds)
                for (const bool las : plan.lasOptions)
                    for (const bool ips : plan.ipsOptions)
                        cells.push_back(Cell{d, delta, bound, las, ips});

    // Parse each dataset once; mining only reads it.
    std::vector<QSeqDatabase> parsed;
    parsed.reserve(plan.datasets.size());
    for (const auto& ds : plan.datasets)
        parsed.push_back(parse_database(slurp(ds.dbPath), parse_profit_table(slurp(ds.profitsPath))));

    std::vector<BenchRow> rows(cells.size());
    std::atomic<std::size_t> nextCell{0};
    auto worker = [&]() {
        while (true) {
            const std::size_t k = nextCell.fetch_add(1);
            if (k >= cells.size()) return;
            const Cell& c = cells[k];
            BenchRow row;
            row.datasetId = plan.datasets[c.dataset].id;
            row.delta = c.delta;
            row.boundMode = c.bound;
            row.lasEnabled = c.las;
            row.ipsEnabled = c.ips;
            MinerConfig cfg;
            cfg.minUtilRatio = c.delta;
            cfg.boundMode = c.bound;
            cfg.lasEnabled = c.las;
            cfg.ipsEnabled = c.ips;
            cfg.timeBudgetMillis = plan.timeoutMillis;
            try {
                const MiningOutput out = mine(parsed[c.dataset], cfg);
                row.elapsedMillis = out.stats.elapsedMillis;
                row.candidatesGenerated = out.stats.candidatesGenerated;
                row.huspCount = out.stats.huspCount;
                row.peakProjectedEntries = out.stats.peakProjectedEntries;
            } catch (const MiningTimeout&) {
                row.timedOut = true;
            }
            rows[k] = std::move(row);
        }
    };

    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return rows;
}

std::string bench_to_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << kBenchCsvHeader << '\n';
    for (const auto& row : rows) out << format_bench_row(row) << '\n';
    return out.str();
}

}  // namespace husp
