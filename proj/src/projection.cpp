#include "husp/projection.hpp"

#include <algorithm>

namespace husp {

namespace {

// Occurrence positions of `item`, via the header and next-position links.
void for_each_occurrence(const ULList& ul, ItemId item, auto&& fn) {
    auto pos = ul.first_pos(item);
    while (pos) {
        fn(*pos);
        pos = ul.at(*pos).nextPos;
    }
}

}  // namespace

std::size_t ProjectedDB::point_count() const {
    std::size_t n = 0;
    for (const auto& ps : projections) n += ps.points.size();
    return n;
}

ProjectedDB project_item(std::span<const ULList> lists, ItemId item) {
    ProjectedDB pd;
    pd.prefix.itemsets.push_back({item});
    for (std::size_t i = 0; i < lists.size(); ++i) {
        ProjectedSeq ps;
        ps.seqIndex = i;
        for_each_occurrence(lists[i], item, [&](Pos p) {
            ps.points.push_back(MatchPoint{p, lists[i].at(p).utility});
        });
        if (!ps.points.empty()) pd.projections.push_back(std::move(ps));
    }
    return pd;
}

namespace {

enum class ExtendKind { I, S };

ProjectedDB extend(std::span<const ULList> lists, const ProjectedDB& pd, ItemId item, ExtendKind kind) {
    ProjectedDB out;
    out.prefix = pd.prefix;
    if (kind == ExtendKind::I)
        out.prefix.itemsets.back().push_back(item);
    else
        out.prefix.itemsets.push_back({item});
    out.removedItems = pd.removedItems;
    out.restPool = pd.restPool;  // overlay is immutable, children share it

    for (const auto& ps : pd.projections) {
        const ULList& ul = lists[ps.seqIndex];
        ProjectedSeq nps;
        nps.seqIndex = ps.seqIndex;
        nps.restOffset = ps.restOffset;
        for_each_occurrence(ul, item, [&](Pos p) {
            const std::int32_t pItemset = ul.itemset_of(p);
            Money best = -1;
            for (const auto& pt : ps.points) {
                if (pt.position >= p) break;
                const std::int32_t ptItemset = ul.itemset_of(pt.position);
                const bool ok = kind == ExtendKind::I ? ptItemset == pItemset : ptItemset < pItemset;
                if (ok) best = std::max(best, pt.maxPrefixUtility);
            }
            if (best >= 0) nps.points.push_back(MatchPoint{p, best + ul.at(p).utility});
        });
        if (!nps.points.empty()) out.projections.push_back(std::move(nps));
    }
    return out;
}

}  // namespace

ProjectedDB extend_i(std::span<const ULList> lists, const ProjectedDB& pd, ItemId item) {
    return extend(lists, pd, item, ExtendKind::I);
}

ProjectedDB extend_s(std::span<const ULList> lists, const ProjectedDB& pd, ItemId item) {
    return extend(lists, pd, item, ExtendKind::S);
}

Money utility_of(const ProjectedDB& pd) {
    Money total = 0;
    for (const auto& ps : pd.projections) {
        Money best = 0;
        for (const auto& pt : ps.points) best = std::max(best, pt.maxPrefixUtility);
        total += best;
    }
    return total;
}

Money swu_of(std::span<const ULList> lists, const ProjectedDB& pd) {
    Money total = 0;
    for (const auto& ps : pd.projections) total += lists[ps.seqIndex].totalUtility;
    return total;
}

Money seu_of(std::span<const ULList> lists, const ProjectedDB& pd) {
    Money total = 0;
    for (const auto& ps : pd.projections) {
        Money best = 0;
        for (const auto& pt : ps.points) best = std::max(best, pt.maxPrefixUtility);
        total += best + pd.rest_after(lists[ps.seqIndex], ps, ps.start_point());
    }
    return total;
}

Money peu_in(const ULList& ul, const ProjectedDB& pd, const ProjectedSeq& ps) {
    Money best = 0;
    for (const auto& pt : ps.points)
        best = std::max(best, pt.maxPrefixUtility + pd.rest_after(ul, ps, pt.position));
    return best;
}

Money peu_of(std::span<const ULList> lists, const ProjectedDB& pd) {
    Money total = 0;
    for (const auto& ps : pd.projections) total += peu_in(lists[ps.seqIndex], pd, ps);
    return total;
}

ScanWorkspace::ScanWorkspace(std::span<const ULList> lists) {
    for (const auto& ul : lists)
        for (const auto& h : ul.header) rankItems.push_back(h.item);
    std::sort(rankItems.begin(), rankItems.end());
    rankItems.erase(std::unique(rankItems.begin(), rankItems.end()), rankItems.end());

    rankOf.resize(lists.size());
    for (std::size_t i = 0; i < lists.size(); ++i) {
        rankOf[i].resize(static_cast<std::size_t>(lists[i].flat_length()));
        for (std::size_t k = 0; k < rankOf[i].size(); ++k)
            rankOf[i][k] = rank_of_item(lists[i].elements[k].item);
    }
    const std::size_t n = rankItems.size();
    iSum.assign(n, 0);
    sSum.assign(n, 0);
    uSum.assign(n, 0);
    iMark.assign(n, 0);
    sMark.assign(n, 0);
    uMark.assign(n, 0);
    touchMark.assign(n, 0);
    removedMark.assign(n, 0);
}

std::int32_t ScanWorkspace::rank_of_item(ItemId item) const {
    const auto it = std::lower_bound(rankItems.begin(), rankItems.end(), item);
    return static_cast<std::int32_t>(it - rankItems.begin());
}

CandidateSet scan_candidates(std::span<const ULList> lists, const ProjectedDB& pd,
                             ScanWorkspace& ws) {
    ws.touched.clear();
    const std::int64_t node = ++ws.nodeStamp;
    for (const ItemId id : pd.removedItems) ws.removedMark[static_cast<std::size_t>(ws.rank_of_item(id))] = node;

    for (const auto& ps : pd.projections) {
        const ULList& ul = lists[ps.seqIndex];
        const auto& ranks = ws.rankOf[ps.seqIndex];
        const Money peu = peu_in(ul, pd, ps);
        const std::int64_t stamp = ++ws.seqStamp;

        const auto touch = [&](std::size_t r) {
            if (ws.touchMark[r] != node) {
                ws.touchMark[r] = node;
                ws.touched.push_back(static_cast<std::int32_t>(r));
            }
        };

        // I-candidates: occurrences after a point inside that point's itemset.
        for (const auto& pt : ps.points) {
            const std::int32_t itemset = ul.itemset_of(pt.position);
            for (Pos p = pt.position + 1; p <= ul.flat_length() && ul.itemset_of(p) == itemset; ++p) {
                const auto r = static_cast<std::size_t>(ranks[static_cast<std::size_t>(p - 1)]);
                if (ws.removedMark[r] == node || ws.iMark[r] == stamp) continue;
                ws.iMark[r] = stamp;
                ws.iSum[r] += peu;
                touch(r);
                if (ws.uMark[r] != stamp) {
                    ws.uMark[r] = stamp;
                    ws.uSum[r] += peu;
                }
            }
        }

        // S-candidates: items in itemsets strictly after the start point's.
        const std::int32_t startItemset = ul.itemset_of(ps.start_point());
        for (Pos p = ps.start_point() + 1; p <= ul.flat_length(); ++p) {
            if (ul.itemset_of(p) <= startItemset) continue;
            const auto r = static_cast<std::size_t>(ranks[static_cast<std::size_t>(p - 1)]);
            if (ws.removedMark[r] == node || ws.sMark[r] == stamp) continue;
            ws.sMark[r] = stamp;
            ws.sSum[r] += peu;
            touch(r);
            if (ws.uMark[r] != stamp) {
                ws.uMark[r] = stamp;
                ws.uSum[r] += peu;
            }
        }
    }

    std::sort(ws.touched.begin(), ws.touched.end());
    CandidateSet cs;
    for (const auto r : ws.touched) {
        const auto ri = static_cast<std::size_t>(r);
        const ItemId item = ws.rankItems[ri];
        if (ws.iSum[ri] > 0) cs.iCandidates.emplace_hint(cs.iCandidates.end(), item, ws.iSum[ri]);
        if (ws.sSum[ri] > 0) cs.sCandidates.emplace_hint(cs.sCandidates.end(), item, ws.sSum[ri]);
        cs.restItems.emplace_hint(cs.restItems.end(), item, ws.uSum[ri]);
        ws.iSum[ri] = ws.sSum[ri] = ws.uSum[ri] = 0;
    }
    return cs;
}

CandidateSet scan_candidates(std::span<const ULList> lists, const ProjectedDB& pd) {
    ScanWorkspace ws(lists);
    return scan_candidates(lists, pd, ws);
}

namespace {

// Rebuilds the rest-utility overlay for every projected transaction, with
// all removed items' utilities excluded, into one flat pool.
void rematerialize_overlay(std::span<const ULList> lists, ProjectedDB& pd, ScanWorkspace& ws) {
    const std::int64_t node = ++ws.nodeStamp;
    for (const ItemId id : pd.removedItems)
        ws.removedMark[static_cast<std::size_t>(ws.rank_of_item(id))] = node;

    auto pool = std::make_shared<std::vector<Money>>();
    std::size_t total = 0;
    for (const auto& ps : pd.projections)
        total += static_cast<std::size_t>(lists[ps.seqIndex].flat_length());
    pool->resize(total);
    std::size_t offset = 0;
    for (auto& ps : pd.projections) {
        const ULList& ul = lists[ps.seqIndex];
        const auto& ranks = ws.rankOf[ps.seqIndex];
        const auto len = static_cast<std::size_t>(ul.flat_length());
        Money suffix = 0;
        for (std::size_t i = len; i-- > 0;) {
            (*pool)[offset + i] = suffix;
            if (ws.removedMark[static_cast<std::size_t>(ranks[i])] != node)
                suffix += ul.elements[i].utility;
        }
        ps.restOffset = static_cast<std::int64_t>(offset);
        offset += len;
    }
    pd.restPool = std::move(pool);
}

}  // namespace

PruneScanOutcome prune_and_scan(std::span<const ULList> lists, ProjectedDB pd, Money minUtil,
                                bool ipsEnabled, ScanWorkspace& ws) {
    PruneScanOutcome out;
    out.candidates = scan_candidates(lists, pd, ws);
    if (ipsEnabled) {
        for (const auto& [item, sum] : out.candidates.restItems)
            if (sum < minUtil) out.removed.push_back(item);
        if (!out.removed.empty()) {
            pd.removedItems.insert(pd.removedItems.end(), out.removed.begin(), out.removed.end());
            std::sort(pd.removedItems.begin(), pd.removedItems.end());
            rematerialize_overlay(lists, pd, ws);
            out.candidates = scan_candidates(lists, pd, ws);
        }
    }
    out.pd = std::move(pd);
    return out;
}

std::pair<ProjectedDB, std::vector<ItemId>> apply_ips(std::span<const ULList> lists,
                                                      ProjectedDB pd, Money minUtil) {
    ScanWorkspace ws(lists);
    auto outcome = prune_and_scan(lists, std::move(pd), minUtil, true, ws);
    return {std::move(outcome.pd), std::move(outcome.removed)};
}

ProjectedDB project_pattern(std::span<const ULList> lists, const Pattern& pattern) {
    ProjectedDB pd = project_item(lists, pattern.itemsets.front().front());
    for (std::size_t k = 0; k < pattern.itemsets.size(); ++k) {
        const auto& w = pattern.itemsets[k];
        for (std::size_t j = k == 0 ? 1 : 0; j < w.size(); ++j) {
            if (pd.empty()) return pd;
            pd = j == 0 ? extend_s(lists, pd, w[j]) : extend_i(lists, pd, w[j]);
        }
    }
    return pd;
}

}  // namespace husp
