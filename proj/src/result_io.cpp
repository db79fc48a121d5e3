#include "husp/result_io.hpp"

#include <sstream>

namespace husp {

std::string format_result_line(const HUSPResult& r) {
    return pattern_to_string(r.pattern) + " #UTIL: " + money_to_string(r.utility);
}

void write_results(std::ostream& out, const std::vector<HUSPResult>& results) {
    for (const auto& r : results) out << format_result_line(r) << '\n';
}

std::string results_to_string(const std::vector<HUSPResult>& results) {
    std::ostringstream out;
    write_results(out, results);
    return out.str();
}

std::vector<HUSPResult> parse_results(std::istream& in) {
    std::vector<HUSPResult> results;
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto mark = line.find("#UTIL:");
        if (mark == std::string::npos)
            throw ParseError("result line " + std::to_string(lineNo) + ": missing #UTIL:");
        HUSPResult r;
        r.pattern = pattern_from_string(line.substr(0, mark));
        std::string utilText = line.substr(mark + 6);
        const auto first = utilText.find_first_not_of(' ');
        if (first == std::string::npos)
            throw ParseError("result line " + std::to_string(lineNo) + ": missing utility");
        r.utility = money_from_string(utilText.substr(first));
        results.push_back(std::move(r));
    }
    return results;
}

std::vector<HUSPResult> parse_results(const std::string& text) {
    std::istringstream ss(text);
    return parse_results(ss);
}

std::string format_stats(const MiningStats& stats) {
    std::ostringstream out;
    out << "{\"nodes\": " << stats.nodesVisited
        << ", \"candidates\": " << stats.candidatesGenerated
        << ", \"las_pruned\": " << stats.lasPrunedItems
        << ", \"ips_removed\": " << stats.ipsRemovedItems
        << ", \"husps\": " << stats.huspCount
        << ", \"ms\": " << stats.elapsedMillis
        << ", \"peak_entries\": " << stats.peakProjectedEntries << '}';
    return out.str();
}

}  // namespace husp
