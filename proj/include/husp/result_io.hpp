#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "husp/miner.hpp"

namespace husp {

// One line per result: `1 -1 2 -2 #UTIL: 160`.
std::string format_result_line(const HUSPResult& r);
void write_results(std::ostream& out, const std::vector<HUSPResult>& results);
std::string results_to_string(const std::vector<HUSPResult>& results);

// Inverse of write_results; used to round-trip result files.
std::vector<HUSPResult> parse_results(std::istream& in);
std::vector<HUSPResult> parse_results(const std::string& text);

// Single-line stats record, stable key order.
std::string format_stats(const MiningStats& stats);

}  // namespace husp
