#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>

#include "mlp/core.hpp"
#include "mlp/rng.hpp"
#include "mlp/subseq.hpp"

namespace mlp {

/// The five classic moves explored by the local search.
enum class MoveKind { Swap, TwoOpt, Reinsertion, OrOpt2, OrOpt3 };

inline constexpr std::array<MoveKind, 5> kAllMoveKinds{
    MoveKind::Swap, MoveKind::TwoOpt, MoveKind::Reinsertion, MoveKind::OrOpt2, MoveKind::OrOpt3};

const char* to_string(MoveKind kind);

/// Relocated block size of a move kind (0 for the non-block moves).
int block_size(MoveKind kind);

/// A candidate move. For Swap and TwoOpt, i < p are the two positions (swap
/// endpoints / reversed range). For the block moves, the block starts at
/// position i and is re-inserted after position p of the original tour.
struct Move {
    MoveKind kind = MoveKind::Swap;
    int i = 0;
    int p = 0;
    Cost cost = 0;
};

/// Segment decomposition of a move, at most five pieces.
struct SegList {
    std::array<SegRef, 5> segs{};
    int count = 0;

    void push(int first, int last, bool reversed = false) {
        if (first <= last)
            segs[static_cast<std::size_t>(count++)] = SegRef{first, last, reversed};
    }
    std::span<const SegRef> view() const {
        return {segs.data(), static_cast<std::size_t>(count)};
    }
};

/// The reordering a move performs, as tour-position segments. m is the tour
/// length (n+1).
inline SegList move_segments(const Move& move, int m) {
    const int n = m - 1;
    SegList out;
    switch (move.kind) {
    case MoveKind::Swap: {
        const int i = move.i, j = move.p;
        out.push(0, i - 1);
        out.push(j, j);
        out.push(i + 1, j - 1);
        out.push(i, i);
        out.push(j + 1, n);
        break;
    }
    case MoveKind::TwoOpt: {
        const int i = move.i, j = move.p;
        out.push(0, i - 1);
        out.push(i, j, true);
        out.push(j + 1, n);
        break;
    }
    default: {
        const int sz = block_size(move.kind);
        const int i = move.i, p = move.p;
        if (p < i) {
            out.push(0, p);
            out.push(i, i + sz - 1);
            out.push(p + 1, i - 1);
            out.push(i + sz, n);
        } else {
            out.push(0, i - 1);
            out.push(i + sz, p);
            out.push(i, i + sz - 1);
            out.push(p + 1, n);
        }
        break;
    }
    }
    return out;
}

/// Rewrites the tour according to the move.
void apply_move(std::vector<int>& tour, const Move& move);

/// Best-improvement scan of one neighborhood. Every candidate is costed in
/// O(1) amortized from the tables; returns the minimum-cost candidate that is
/// strictly better than the current tour, or nothing. The depot never moves.
/// Ties break to the first candidate in the fixed left-to-right scan order.
/// Throws InternalError when the tables do not match the tour.
std::optional<Move> best_neighbor(MoveKind kind, const Instance& instance,
                                  std::span<const int> tour, const SubseqTables& tables);

/// Called by rvnd after every complete neighborhood evaluation with the
/// current solution cost; returning true stops the descent immediately.
using CheckpointFn = std::function<bool(Cost)>;

/// Variable neighborhood descent with random ordering: draws a neighborhood
/// uniformly from the active list, accepts best-improvement moves (resetting
/// the list and rebuilding the tables), drops neighborhoods that fail, and
/// returns once the list is empty. The result is a local optimum of all five
/// neighborhoods with cost <= the input cost.
Solution rvnd(const Instance& instance, Solution solution, Rng& rng,
              const CheckpointFn& checkpoint = {});

/// Same, reusing caller-owned tables as scratch across calls.
Solution rvnd(const Instance& instance, Solution solution, Rng& rng, SubseqTables& scratch,
              const CheckpointFn& checkpoint = {});

} // namespace mlp
