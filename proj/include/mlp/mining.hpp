#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "mlp/core.hpp"

namespace mlp {

/// Arc identifier: arc (i,j) maps to i*(n+1)+j.
using ArcId = std::int32_t;

ArcId arc_id(const Arc& a, int n);
Arc arc_from_id(ArcId id, int n);

/// The arc set of one elite solution, as sorted arc ids. Path solutions have
/// n arcs, circuit solutions n+1 (the closing arc included).
using Transaction = std::vector<ArcId>;

/// A mined frequent arc set, sorted ascending by id. Decodes to at most one
/// outgoing and one incoming arc per vertex and contains no cycle avoiding
/// the depot.
struct Pattern {
    std::vector<ArcId> arcs;

    int cardinality() const { return static_cast<int>(arcs.size()); }
    friend bool operator==(const Pattern&, const Pattern&) = default;
};

/// One transaction per elite solution: the traversal arcs of its tour, plus
/// the closing arc for the circuit variant.
std::vector<Transaction> to_transactions(std::span<const Solution> elite,
                                         const Instance& instance);

/// Exactly the maximal frequent itemsets at threshold ceil(sup_min * m)
/// occurrences, deduplicated, empty itemset excluded. Output sorted by
/// cardinality descending, ties by lexicographic id order.
///
/// Exact method sized for elite-set inputs: every maximal frequent itemset is
/// the intersection of some threshold-sized subset of the transactions, so
/// C(m, k) intersections are enumerated and filtered to the inclusion-maximal
/// ones. Throws std::invalid_argument when transactions is empty, sup_min is
/// outside (0,1], or C(m, k) is too large to enumerate.
std::vector<Pattern> mine_maximal(std::span<const Transaction> transactions, double sup_min);

/// The max_p largest patterns by arc count (all when fewer exist), returned
/// ascending by arc count; ties by lexicographic id order.
std::vector<Pattern> select_patterns(std::vector<Pattern> mined, int max_p);

/// Re-orders a pattern list by cardinality (ties lexicographic), either
/// direction.
void sort_patterns(std::vector<Pattern>& patterns, bool ascending);

/// Debug dump in the classic FIMI format: one transaction per line,
/// space-separated integer ids.
void dump_transactions(std::ostream& out, std::span<const Transaction> transactions);

/// Defensive structural check: at most one outgoing and one incoming arc per
/// vertex and no cycle that avoids the depot. Throws MalformedPatternError.
void check_pattern_structure(const Pattern& p, int n);

} // namespace mlp
