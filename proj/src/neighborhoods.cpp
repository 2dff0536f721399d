#include "mlp/neighborhoods.hpp"

#include <algorithm>

namespace mlp {

const char* to_string(MoveKind kind) {
    switch (kind) {
    case MoveKind::Swap:
        return "swap";
    case MoveKind::TwoOpt:
        return "2-opt";
    case MoveKind::Reinsertion:
        return "reinsertion";
    case MoveKind::OrOpt2:
        return "or-opt-2";
    case MoveKind::OrOpt3:
        return "or-opt-3";
    }
    return "?";
}

int block_size(MoveKind kind) {
    switch (kind) {
    case MoveKind::Reinsertion:
        return 1;
    case MoveKind::OrOpt2:
        return 2;
    case MoveKind::OrOpt3:
        return 3;
    default:
        return 0;
    }
}

void apply_move(std::vector<int>& tour, const Move& move) {
    const SegList segs = move_segments(move, static_cast<int>(tour.size()));
    std::vector<int> next;
    next.reserve(tour.size());
    for (const SegRef& s : segs.view()) {
        if (s.reversed)
            for (int p = s.last; p >= s.first; --p)
                next.push_back(tour[static_cast<std::size_t>(p)]);
        else
            for (int p = s.first; p <= s.last; ++p)
                next.push_back(tour[static_cast<std::size_t>(p)]);
    }
    tour.swap(next);
}

namespace {

struct Best {
    Cost cost;
    Move move;
    bool found = false;

    void offer(const Move& candidate) {
        // strict < keeps the first-found among equals
        if (candidate.cost < cost) {
            cost = candidate.cost;
            move = candidate;
            found = true;
        }
    }
};

} // namespace

std::optional<Move> best_neighbor(MoveKind kind, const Instance& instance,
                                  std::span<const int> tour, const SubseqTables& tables) {
    if (tables.empty() || static_cast<int>(tour.size()) != tables.size() ||
        !std::equal(tour.begin(), tour.end(), tables.tour().begin()) ||
        &instance != &tables.instance())
        throw InternalError("best_neighbor: tables are stale for this tour");

    const int n = static_cast<int>(tour.size()) - 1;
    Best best{tables.tour_cost(), Move{}, false};

    auto try_move = [&](MoveKind k, int i, int p) {
        Move candidate{k, i, p, 0};
        const SegList segs = move_segments(candidate, n + 1);
        candidate.cost = tables.eval(segs.view());
        best.offer(candidate);
    };

    switch (kind) {
    case MoveKind::Swap:
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j)
                try_move(kind, i, j);
        break;
    case MoveKind::TwoOpt:
        // reversed range of length >= 2 so the two dropped arcs are non-adjacent
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j)
                try_move(kind, i, j);
        break;
    default: {
        const int sz = block_size(kind);
        for (int i = 1; i + sz - 1 <= n; ++i) {
            for (int p = 0; p <= i - 2; ++p)
                try_move(kind, i, p);
            for (int p = i + sz; p <= n; ++p)
                try_move(kind, i, p);
        }
        break;
    }
    }

    if (!best.found)
        return std::nullopt;
    return best.move;
}

Solution rvnd(const Instance& instance, Solution solution, Rng& rng,
              const CheckpointFn& checkpoint) {
    SubseqTables scratch;
    return rvnd(instance, std::move(solution), rng, scratch, checkpoint);
}

Solution rvnd(const Instance& instance, Solution solution, Rng& rng, SubseqTables& scratch,
              const CheckpointFn& checkpoint) {
    scratch.rebuild(instance, solution.tour);
    if (scratch.tour_cost() != solution.cost)
        throw ValidationError("rvnd: solution cost does not match its tour");

    std::vector<MoveKind> active(kAllMoveKinds.begin(), kAllMoveKinds.end());
    while (!active.empty()) {
        const std::size_t pick = rng.below(active.size());
        const auto move = best_neighbor(active[pick], instance, solution.tour, scratch);
        if (move) {
            apply_move(solution.tour, *move);
            solution.cost = move->cost;
            scratch.rebuild(instance, solution.tour);
            active.assign(kAllMoveKinds.begin(), kAllMoveKinds.end());
        } else {
            active.erase(active.begin() + static_cast<std::ptrdiff_t>(pick));
        }
        if (checkpoint && checkpoint(solution.cost))
            break;
    }
    return solution;
}

} // namespace mlp
