#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "husp/projection.hpp"

namespace husp {

enum class BoundMode { Peu, Seu, Swu };

const char* bound_mode_name(BoundMode mode);
std::optional<BoundMode> bound_mode_from_name(const std::string& name);

struct MinerConfig {
    // Exactly one of the two threshold forms must be set.
    std::optional<std::string> minUtilRatio;  // exact decimal text, e.g. "0.1"
    std::optional<Money> minUtilAbsolute;
    BoundMode boundMode = BoundMode::Peu;
    bool lasEnabled = true;
    bool ipsEnabled = true;
    std::optional<std::int32_t> maxPatternLength;
    std::optional<std::int64_t> timeBudgetMillis;
};

struct MiningStats {
    std::int64_t nodesVisited = 0;         // expanded LS-tree nodes
    std::int64_t candidatesGenerated = 0;  // examined 1-sequences + judged extensions
    std::int64_t lasPrunedItems = 0;
    std::int64_t ipsRemovedItems = 0;
    std::int64_t huspCount = 0;
    std::int64_t elapsedMillis = 0;
    std::size_t peakProjectedEntries = 0;
};

struct HUSPResult {
    Pattern pattern;
    Money utility = 0;

    bool operator==(const HUSPResult&) const = default;
};

struct MiningOutput {
    std::vector<HUSPResult> results;  // canonical order
    MiningStats stats;
    Money minUtil = 0;
};

// Exact utility/bound values of one explored node, computed on the pristine
// rest utilities (no pruning adjustments). seu is the monotone envelope the
// miner uses as its middle bound.
struct NodeBounds {
    Money utility = 0;
    Money peu = 0;
    Money seu = 0;
    Money swu = 0;
};

struct LasPruneRecord {
    Pattern prefix;
    ItemId item = 0;
    bool sConcat = false;
};

// Debug-mode instrumentation: bound-hierarchy assertions over every visited
// node plus the raw material for the pruning-soundness checks.
struct MiningAudit {
    std::int64_t chainViolations = 0;         // u <= PEU <= SEU <= SWU failures
    std::int64_t antiMonotoneViolations = 0;  // child bound above parent bound
    std::int64_t recursedBelowUtility = 0;    // nodes with u < minUtil <= bound
    bool recordLasPrunes = false;
    std::vector<LasPruneRecord> lasPruned;
    std::vector<std::string> notes;  // first few violations, for diagnostics
};

class MiningTimeout : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Money resolve_min_util(const QSeqDatabase& db, const MinerConfig& cfg);

MiningOutput mine(const QSeqDatabase& db, const MinerConfig& cfg, MiningAudit* audit = nullptr);

}  // namespace husp
