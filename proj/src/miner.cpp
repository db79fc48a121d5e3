#include "husp/miner.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

namespace husp {

const char* bound_mode_name(BoundMode mode) {
    switch (mode) {
        case BoundMode::Peu: return "peu";
        case BoundMode::Seu: return "seu";
        case BoundMode::Swu: return "swu";
    }
    return "?";
}

std::optional<BoundMode> bound_mode_from_name(const std::string& name) {
    if (name == "peu") return BoundMode::Peu;
    if (name == "seu") return BoundMode::Seu;
    if (name == "swu") return BoundMode::Swu;
    return std::nullopt;
}

Money resolve_min_util(const QSeqDatabase& db, const MinerConfig& cfg) {
    if (cfg.minUtilRatio.has_value() == cfg.minUtilAbsolute.has_value())
        throw std::invalid_argument("exactly one of ratio/absolute threshold must be set");
    if (cfg.minUtilAbsolute) return *cfg.minUtilAbsolute;
    // Ceiling keeps the integer test `u >= minUtil` equivalent to the exact
    // real test `u >= ratio * u(D)`.
    return money_ratio_ceil(db.totalUtility, ratio_from_string(*cfg.minUtilRatio));
}

namespace {

using Clock = std::chrono::steady_clock;

// Bound values over the master rest utilities, ignoring any pruning overlay.
Money clean_peu(std::span<const ULList> lists, const ProjectedDB& pd) {
    Money total = 0;
    for (const auto& ps : pd.projections) {
        const ULList& ul = lists[ps.seqIndex];
        Money best = 0;
        for (const auto& pt : ps.points)
            best = std::max(best, pt.maxPrefixUtility + ul.rest_utility(pt.position));
        total += best;
    }
    return total;
}

Money clean_seu(std::span<const ULList> lists, const ProjectedDB& pd) {
    Money total = 0;
    for (const auto& ps : pd.projections) {
        const ULList& ul = lists[ps.seqIndex];
        Money best = 0;
        for (const auto& pt : ps.points) best = std::max(best, pt.maxPrefixUtility);
        total += best + ul.rest_utility(ps.start_point());
    }
    return total;
}

struct MiningContext {
    const QSeqDatabase& db;
    std::vector<ULList> lists;
    const MinerConfig& cfg;
    ScanWorkspace scan;
    Money minUtil = 0;
    std::vector<HUSPResult> results;
    MiningStats stats;
    MiningAudit* audit = nullptr;
    std::optional<Clock::time_point> deadline;
    std::size_t liveEntries = 0;

    MiningContext(const QSeqDatabase& database, const MinerConfig& config)
        : db(database), lists(build_ul_lists(database)), cfg(config), scan(span()) {}

    std::span<const ULList> span() const { return {lists.data(), lists.size()}; }

    void add_live(std::size_t n) {
        liveEntries += n;
        stats.peakProjectedEntries = std::max(stats.peakProjectedEntries, liveEntries);
    }
    void sub_live(std::size_t n) { liveEntries -= n; }

    void check_deadline() const {
        if (deadline && Clock::now() > *deadline)
            throw MiningTimeout("mining exceeded the configured time budget");
    }

    void audit_node(const NodeBounds& node, const NodeBounds* parent, const Pattern& prefix) {
        if (!audit) return;
        const bool chainOk =
            node.utility <= node.peu && node.peu <= node.seu && node.seu <= node.swu;
        if (!chainOk) {
            ++audit->chainViolations;
            if (audit->notes.size() < 8)
                audit->notes.push_back("chain violation at " + pattern_to_string(prefix));
        }
        if (parent) {
            const bool monoOk =
                node.peu <= parent->peu && node.seu <= parent->seu && node.swu <= parent->swu;
            if (!monoOk) {
                ++audit->antiMonotoneViolations;
                if (audit->notes.size() < 8)
                    audit->notes.push_back("anti-monotone violation at " + pattern_to_string(prefix));
            }
        }
    }
};

// The SEU bound as mined: the per-database extension estimate clamped to
// stay below SWU and never rise along a branch, which keeps the middle
// bound both sound and monotone.
Money seu_envelope(Money rawSeu, Money swu, Money parentSeu) {
    return std::min({rawSeu, swu, parentSeu});
}

void pgrowth(ProjectedDB pd, const NodeBounds& clean, Money seuEff, MiningContext& ctx);

void judge(const ProjectedDB& parentPd, ItemId item, bool sConcat, const NodeBounds& parentClean,
           Money parentSeuEff, MiningContext& ctx) {
    ++ctx.stats.candidatesGenerated;
    ProjectedDB child = sConcat ? extend_s(ctx.span(), parentPd, item)
                                : extend_i(ctx.span(), parentPd, item);
    if (child.empty()) return;

    const Money u = utility_of(child);
    const Money swu = swu_of(ctx.span(), child);

    NodeBounds clean;
    if (ctx.audit) {
        clean.utility = u;
        clean.peu = clean_peu(ctx.span(), child);
        clean.swu = swu;
        clean.seu = seu_envelope(clean_seu(ctx.span(), child), swu, parentClean.seu);
        ctx.audit_node(clean, &parentClean, child.prefix);
    }

    Money childSeuEff = std::numeric_limits<Money>::max();
    Money bound = 0;
    switch (ctx.cfg.boundMode) {
        case BoundMode::Peu: bound = peu_of(ctx.span(), child); break;
        case BoundMode::Seu:
            childSeuEff = seu_envelope(seu_of(ctx.span(), child), swu, parentSeuEff);
            bound = childSeuEff;
            break;
        case BoundMode::Swu: bound = swu; break;
    }

    if (u >= ctx.minUtil) ctx.results.push_back(HUSPResult{child.prefix, u});
    if (bound >= ctx.minUtil) {
        if (ctx.audit && u < ctx.minUtil) ++ctx.audit->recursedBelowUtility;
        ctx.add_live(child.point_count());
        pgrowth(std::move(child), clean, childSeuEff, ctx);
    }
}

// Expands one LS-tree node: one pruning pass, candidate scan, then judged
// I-concatenations followed by S-concatenations in ascending item order.
void pgrowth(ProjectedDB pd, const NodeBounds& clean, Money seuEff, MiningContext& ctx) {
    ++ctx.stats.nodesVisited;
    ctx.check_deadline();
    const std::size_t accounted = pd.point_count();  // pruning keeps points intact

    if (ctx.cfg.maxPatternLength && pd.prefix.length() >= *ctx.cfg.maxPatternLength) {
        ctx.sub_live(accounted);
        return;
    }

    const auto outcome =
        prune_and_scan(ctx.span(), std::move(pd), ctx.minUtil, ctx.cfg.ipsEnabled, ctx.scan);
    ctx.stats.ipsRemovedItems += static_cast<std::int64_t>(outcome.removed.size());

    for (const auto& [item, sum] : outcome.candidates.iCandidates) {
        if (ctx.cfg.lasEnabled && sum < ctx.minUtil) {
            ++ctx.stats.lasPrunedItems;
            if (ctx.audit && ctx.audit->recordLasPrunes)
                ctx.audit->lasPruned.push_back(LasPruneRecord{outcome.pd.prefix, item, false});
            continue;
        }
        judge(outcome.pd, item, false, clean, seuEff, ctx);
    }
    for (const auto& [item, sum] : outcome.candidates.sCandidates) {
        if (ctx.cfg.lasEnabled && sum < ctx.minUtil) {
            ++ctx.stats.lasPrunedItems;
            if (ctx.audit && ctx.audit->recordLasPrunes)
                ctx.audit->lasPruned.push_back(LasPruneRecord{outcome.pd.prefix, item, true});
            continue;
        }
        judge(outcome.pd, item, true, clean, seuEff, ctx);
    }
    ctx.sub_live(accounted);
}

}  // namespace

MiningOutput mine(const QSeqDatabase& db, const MinerConfig& cfg, MiningAudit* audit) {
    const auto started = Clock::now();
    MiningContext ctx(db, cfg);
    ctx.minUtil = resolve_min_util(db, cfg);
    ctx.audit = audit;
    if (cfg.timeBudgetMillis)
        ctx.deadline = started + std::chrono::milliseconds(*cfg.timeBudgetMillis);

    for (const auto& [item, sids] : db.itemIndex) {
        ProjectedDB pd = project_item(ctx.span(), item);
        if (pd.empty()) continue;
        ++ctx.stats.candidatesGenerated;

        const Money u = utility_of(pd);
        const Money swu = swu_of(ctx.span(), pd);
        NodeBounds clean;
        Money seuEff = std::numeric_limits<Money>::max();
        if (audit || cfg.boundMode == BoundMode::Seu)
            seuEff = seu_envelope(seu_of(ctx.span(), pd), swu,
                                  std::numeric_limits<Money>::max());
        if (audit) {
            clean = NodeBounds{u, clean_peu(ctx.span(), pd), seuEff, swu};
            ctx.audit_node(clean, nullptr, pd.prefix);
        }

        // 1-sequences are admitted by SWU regardless of the bound mode.
        if (swu < ctx.minUtil) continue;
        if (u >= ctx.minUtil) ctx.results.push_back(HUSPResult{pd.prefix, u});
        ctx.add_live(pd.point_count());
        pgrowth(std::move(pd), clean, seuEff, ctx);
    }

    std::sort(ctx.results.begin(), ctx.results.end(),
              [](const HUSPResult& a, const HUSPResult& b) { return pattern_less(a.pattern, b.pattern); });
    ctx.stats.huspCount = static_cast<std::int64_t>(ctx.results.size());
    ctx.stats.elapsedMillis =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - started).count();
    return MiningOutput{std::move(ctx.results), ctx.stats, ctx.minUtil};
}

}  // namespace husp
