#include "mlp/construct.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mlp {

namespace {

void check_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw std::invalid_argument("alpha must be in [0, 1)");
}

// Out/in adjacency of a decoded arc set; rejects branching and bad ids.
struct ArcGraph {
    std::vector<int> next;
    std::vector<int> prev;
    int arc_count = 0;

    ArcGraph(std::span<const ArcId> ids, int n)
        : next(static_cast<std::size_t>(n) + 1, -1), prev(static_cast<std::size_t>(n) + 1, -1) {
        const ArcId limit = static_cast<ArcId>(n + 1) * (n + 1);
        for (ArcId id : ids) {
            if (id < 0 || id >= limit)
                throw MalformedPatternError("arc id " + std::to_string(id) + " out of range");
            const Arc a = arc_from_id(id, n);
            if (a.from == a.to)
                throw MalformedPatternError("self-loop arc at vertex " + std::to_string(a.from));
            if (next[static_cast<std::size_t>(a.from)] != -1)
                throw MalformedPatternError("vertex " + std::to_string(a.from) +
                                            " has two outgoing arcs");
            if (prev[static_cast<std::size_t>(a.to)] != -1)
                throw MalformedPatternError("vertex " + std::to_string(a.to) +
                                            " has two incoming arcs");
            next[static_cast<std::size_t>(a.from)] = a.to;
            prev[static_cast<std::size_t>(a.to)] = a.from;
            ++arc_count;
        }
    }
};

// Vertices already fixed by a segment, and which segment each head opens.
struct SegmentIndex {
    std::vector<char> blocked;  // not selectable from the CL
    std::vector<int> headed_by; // vertex -> index into free_segments, or -1

    SegmentIndex(const PatternLayout& layout, int m)
        : blocked(static_cast<std::size_t>(m), 0), headed_by(static_cast<std::size_t>(m), -1) {
        auto block_all = [&](const Segment& seg) {
            for (int v : seg)
                blocked[static_cast<std::size_t>(v)] = 1;
        };
        if (layout.head_segment)
            block_all(*layout.head_segment);
        if (layout.closing_segment)
            block_all(*layout.closing_segment);
        for (std::size_t i = 0; i < layout.free_segments.size(); ++i) {
            const Segment& seg = layout.free_segments[i];
            for (std::size_t k = 1; k < seg.size(); ++k)
                blocked[static_cast<std::size_t>(seg[k])] = 1;
            headed_by[static_cast<std::size_t>(seg.front())] = static_cast<int>(i);
        }
    }
};

Solution construct_with_layout(const Instance& instance, double alpha,
                               const PatternLayout& layout, Rng& rng) {
    const int n = instance.n();
    const int m = n + 1;
    SegmentIndex index(layout, m);

    std::vector<int> tour;
    tour.reserve(static_cast<std::size_t>(m));
    if (layout.head_segment)
        tour = *layout.head_segment;
    else
        tour.push_back(0);

    std::vector<int> cl;
    cl.reserve(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v)
        if (!index.blocked[static_cast<std::size_t>(v)])
            cl.push_back(v);

    int r = tour.back();
    while (!cl.empty()) {
        std::sort(cl.begin(), cl.end(), [&](int a, int b) {
            const Cost da = instance.dist(r, a);
            const Cost db = instance.dist(r, b);
            return da != db ? da < db : a < b;
        });
        const std::size_t rcl =
            std::max<std::size_t>(1, static_cast<std::size_t>(alpha * cl.size()));
        const std::size_t pick = rng.below(rcl);
        const int c = cl[pick];
        const int seg_idx = index.headed_by[static_cast<std::size_t>(c)];
        if (seg_idx >= 0) {
            const Segment& seg = layout.free_segments[static_cast<std::size_t>(seg_idx)];
            tour.insert(tour.end(), seg.begin(), seg.end());
        } else {
            tour.push_back(c);
        }
        r = tour.back();
        cl.erase(cl.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    if (layout.closing_segment)
        tour.insert(tour.end(), layout.closing_segment->begin(), layout.closing_segment->end());

    Solution s{std::move(tour), 0};
    s.cost = latency_cost(instance, s.tour);
    return s;
}

} // namespace

Solution greedy_randomized(const Instance& instance, double alpha, Rng& rng) {
    check_alpha(alpha);
    return construct_with_layout(instance, alpha, PatternLayout{}, rng);
}

std::vector<Segment> build_cal(const Pattern& pattern, int n) {
    if (pattern.arcs.empty())
        return {};
    ArcGraph g(pattern.arcs, n);

    std::vector<Segment> segments;
    int arcs_used = 0;
    for (int v = 0; v <= n; ++v) {
        if (g.next[static_cast<std::size_t>(v)] == -1 || g.prev[static_cast<std::size_t>(v)] != -1)
            continue;
        Segment seg;
        for (int u = v; u != -1; u = g.next[static_cast<std::size_t>(u)])
            seg.push_back(u);
        arcs_used += static_cast<int>(seg.size()) - 1;
        segments.push_back(std::move(seg));
    }
    if (arcs_used != g.arc_count)
        throw MalformedPatternError("pattern contains a cycle");
    return segments;
}

PatternLayout analyze_pattern(const Pattern& pattern, int n) {
    PatternLayout layout;
    if (pattern.arcs.empty())
        return layout;
    check_pattern_structure(pattern, n);

    // Strip the (at most one) arc back into the depot; its tail is pinned to
    // the end of the tour.
    std::vector<ArcId> ids;
    ids.reserve(pattern.arcs.size());
    int closing_tail = -1;
    for (ArcId id : pattern.arcs) {
        const Arc a = arc_from_id(id, n);
        if (a.to == 0)
            closing_tail = a.from;
        else
            ids.push_back(id);
    }

    std::vector<Segment> chains = build_cal(Pattern{std::move(ids)}, n);

    for (auto it = chains.begin(); it != chains.end();) {
        if (it->front() == 0) {
            layout.head_segment = std::move(*it);
            it = chains.erase(it);
        } else {
            ++it;
        }
    }

    if (closing_tail >= 0) {
        if (layout.head_segment && layout.head_segment->back() == closing_tail) {
            // The chain runs depot-to-closing-tail; legal only when it already
            // is the whole circuit.
            if (static_cast<int>(layout.head_segment->size()) != n + 1)
                throw MalformedPatternError(
                    "closing arc re-enters the depot before covering the tour");
        } else {
            auto it = std::find_if(chains.begin(), chains.end(), [&](const Segment& seg) {
                return seg.back() == closing_tail;
            });
            if (it != chains.end()) {
                layout.closing_segment = std::move(*it);
                chains.erase(it);
            } else {
                layout.closing_segment = Segment{closing_tail};
            }
        }
    }

    layout.free_segments = std::move(chains);
    return layout;
}

Solution hybrid_construct(const Instance& instance, double alpha, const Pattern& pattern,
                          Rng& rng) {
    check_alpha(alpha);
    return construct_with_layout(instance, alpha, analyze_pattern(pattern, instance.n()), rng);
}

} // namespace mlp
