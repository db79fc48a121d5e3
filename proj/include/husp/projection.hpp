#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "husp/pattern.hpp"
#include "husp/ul_list.hpp"

namespace husp {

// A concatenation point: the position of the last item of some match of the
// prefix, with the best prefix utility over all matches ending there. The
// per-position maximum collapses the (possibly exponential) match set.
struct MatchPoint {
    Pos position = 0;
    Money maxPrefixUtility = 0;
};

struct ProjectedSeq {
    std::size_t seqIndex = 0;        // index into the UL-list span
    std::vector<MatchPoint> points;  // strictly increasing positions
    std::int64_t restOffset = -1;    // into the owning PD's rest pool; -1 = master

    Pos start_point() const { return points.front().position; }
};

// A prefix pattern's projected database over the shared UL-lists. Owned by
// one branch of the search; children rebuild their own projections but share
// the pruning overlay (rest utilities with removed items excluded), which is
// immutable once built.
struct ProjectedDB {
    Pattern prefix;
    std::vector<ProjectedSeq> projections;
    std::vector<ItemId> removedItems;  // sorted; pruned for this subtree
    std::shared_ptr<const std::vector<Money>> restPool;

    bool empty() const { return projections.empty(); }
    std::size_t point_count() const;

    Money rest_after(const ULList& ul, const ProjectedSeq& ps, Pos p) const {
        return ps.restOffset < 0 ? ul.rest_utility(p)
                                 : (*restPool)[static_cast<std::size_t>(ps.restOffset + p - 1)];
    }
};

// Candidate extension items with their look-ahead sums: for each item, the
// sum of PEU(prefix, s) over the projected transactions that admit the
// extension. restItems holds the I-or-S combined sums used by IPS.
struct CandidateSet {
    std::map<ItemId, Money> iCandidates;
    std::map<ItemId, Money> sCandidates;
    std::map<ItemId, Money> restItems;
};

ProjectedDB project_item(std::span<const ULList> lists, ItemId item);

// Appends `item` to the prefix's last itemset. New points are occurrences of
// `item` after an existing point inside that point's itemset.
ProjectedDB extend_i(std::span<const ULList> lists, const ProjectedDB& pd, ItemId item);

// Appends `item` as a new trailing itemset. New points are occurrences of
// `item` in an itemset strictly after that of an existing point.
ProjectedDB extend_s(std::span<const ULList> lists, const ProjectedDB& pd, ItemId item);

// Exact pattern utility: sum over transactions of the best point utility.
Money utility_of(const ProjectedDB& pd);

// Sum of whole-transaction utilities over the projected transactions.
Money swu_of(std::span<const ULList> lists, const ProjectedDB& pd);

// Best point utility plus the rest after the start point, summed over
// transactions. The rest is taken at the first match's end.
Money seu_of(std::span<const ULList> lists, const ProjectedDB& pd);

// Max over points of point utility plus the rest after that point, summed
// over transactions; the tightest of the three bounds.
Money peu_of(std::span<const ULList> lists, const ProjectedDB& pd);
Money peu_in(const ULList& ul, const ProjectedDB& pd, const ProjectedSeq& ps);

// Reusable scan scratch: a dense item rank per position plus stamp-marked
// accumulators, so the per-node scans allocate nothing. One instance serves
// a whole mining run; the scans below also accept a throwaway one.
struct ScanWorkspace {
    std::vector<ItemId> rankItems;                  // rank -> item id, ascending
    std::vector<std::vector<std::int32_t>> rankOf;  // [seqIndex][pos-1] -> rank
    std::vector<Money> iSum, sSum, uSum;
    std::vector<std::int64_t> iMark, sMark, uMark, touchMark, removedMark;
    std::vector<std::int32_t> touched;
    std::int64_t seqStamp = 0;
    std::int64_t nodeStamp = 0;

    ScanWorkspace() = default;
    explicit ScanWorkspace(std::span<const ULList> lists);
    std::int32_t rank_of_item(ItemId item) const;
};

CandidateSet scan_candidates(std::span<const ULList> lists, const ProjectedDB& pd);
CandidateSet scan_candidates(std::span<const ULList> lists, const ProjectedDB& pd,
                             ScanWorkspace& ws);

// One pruning pass: drops every rest item whose combined I/S look-ahead sum
// is below minUtil and rematerializes the projected rest utilities without
// them. The master UL-lists are never touched; the input passes through
// unchanged when nothing qualifies.
std::pair<ProjectedDB, std::vector<ItemId>> apply_ips(std::span<const ULList> lists,
                                                      ProjectedDB pd, Money minUtil);

// Fused form of the per-node flow: one candidate scan, optionally one
// pruning pass (then a rescan, since pruning lowers every look-ahead sum).
struct PruneScanOutcome {
    ProjectedDB pd;
    std::vector<ItemId> removed;
    CandidateSet candidates;
};
PruneScanOutcome prune_and_scan(std::span<const ULList> lists, ProjectedDB pd, Money minUtil,
                                bool ipsEnabled, ScanWorkspace& ws);

// Builds PD(pattern) by chained extensions from its first item; empty
// projection list when the pattern is contained nowhere.
ProjectedDB project_pattern(std::span<const ULList> lists, const Pattern& pattern);

}  // namespace husp
