#pragma once

#include <span>
#include <vector>

#include "mlp/core.hpp"

namespace mlp {

/// Preprocessed data for one contiguous subsequence of the current tour:
/// W = latency-accruing vertex count, T = traversal duration, C = latency
/// accumulated inside the subsequence when it starts at time 0.
struct SubseqData {
    Cost w = 0;
    Cost t = 0;
    Cost c = 0;

    friend bool operator==(const SubseqData&, const SubseqData&) = default;
};

/// Joins two subsequences with the given link travel time between a's last
/// vertex and b's first. Every latency-accruing vertex of b is delayed by a's
/// duration plus the link.
constexpr SubseqData concat(SubseqData a, SubseqData b, Cost link) {
    return SubseqData{a.w + b.w, a.t + link + b.t, a.c + b.w * (a.t + link) + b.c};
}

/// One segment of a reordering: tour positions [first..last], traversed
/// left-to-right, or right-to-left when reversed.
struct SegRef {
    int first = 0;
    int last = 0;
    bool reversed = false;
};

/// (W,T,C) triples for every contiguous position range of the current tour,
/// forward and reversed, rebuilt in O(m^2) after each accepted move. Owned by
/// one search thread; never shared mutably.
///
/// The depot entry is (0,0,0) so a full-range C is directly the path-variant
/// latency; the circuit variant appends a terminal depot pseudo-vertex with
/// W=1 at evaluation time.
class SubseqTables {
  public:
    SubseqTables() = default;

    /// Populate all entries for the given tour. Validates the tour.
    void rebuild(const Instance& instance, std::span<const int> tour);

    int size() const { return m_; }
    bool empty() const { return m_ == 0; }

    const SubseqData& fwd(int i, int j) const { return fwd_[idx(i, j)]; }
    const SubseqData& rev(int i, int j) const { return rev_[idx(i, j)]; }

    /// Latency of the current tour (including the circuit closing term).
    Cost tour_cost() const;

    const std::vector<int>& tour() const { return tour_; }
    const Instance& instance() const { return *instance_; }

    /// Cost of the tour formed by concatenating the given segments in order,
    /// O(#segments). Performs cheap structural checks (bounds, first segment
    /// at the depot, total length); the exhaustive partition check lives in
    /// validate_partition.
    Cost eval(std::span<const SegRef> segments) const;

  private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(m_) +
               static_cast<std::size_t>(j);
    }

    int m_ = 0;
    const Instance* instance_ = nullptr;
    std::vector<int> tour_;
    std::vector<SubseqData> fwd_;
    std::vector<SubseqData> rev_;
};

/// Latency of the reordered tour described by segments, after the full
/// partition check. Overlapping or non-covering segments throw
/// ContractViolation.
Cost eval_reordering(const SubseqTables& tables, std::span<const SegRef> segments);

/// Exhaustive partition check: every tour position covered exactly once and
/// the first segment starts at the depot in forward orientation. Throws
/// ContractViolation.
void validate_partition(std::span<const SegRef> segments, int m);

} // namespace mlp
