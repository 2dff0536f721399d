#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mlp/core.hpp"
#include "mlp/mining.hpp"
#include "mlp/rng.hpp"

namespace mlp {

/// Greedy randomized constructive: grows the tour one vertex at a time,
/// sorting the candidate list by travel time to the last inserted vertex and
/// drawing uniformly from the best max(1, floor(alpha*|CL|)) entries. alpha=0
/// is plain nearest neighbor. Ties in the sort break by ascending vertex
/// index.
Solution greedy_randomized(const Instance& instance, double alpha, Rng& rng);

/// A chain of consecutive pattern arcs, length >= 2, inserted into the tour
/// as a block.
using Segment = std::vector<int>;

/// Chains pattern arcs into maximal segments: arcs (a,b),(b,c) merge into
/// [a,b,c], isolated arcs become length-2 segments, every arc lands in
/// exactly one segment. Branching or cyclic inputs throw
/// MalformedPatternError.
std::vector<Segment> build_cal(const Pattern& pattern, int n);

/// How a pattern constrains the constructive: free chains whose head is
/// selectable, an optional chain that must open the tour (starts at the
/// depot) and an optional chain that must close it (its last vertex carries
/// the pattern's arc back to the depot). A pattern covering a whole circuit
/// collapses into just the head chain.
struct PatternLayout {
    std::vector<Segment> free_segments;
    std::optional<Segment> head_segment;
    std::optional<Segment> closing_segment;
};

PatternLayout analyze_pattern(const Pattern& pattern, int n);

/// Pattern-based constructive: vertices interior to a segment are never
/// selectable; drawing a segment's first vertex inserts the whole segment.
/// Every pattern arc ends up consecutive in the output (the closing arc
/// wrapping around for circuits). An empty pattern reduces exactly to
/// greedy_randomized under the same rng state.
Solution hybrid_construct(const Instance& instance, double alpha, const Pattern& pattern,
                          Rng& rng);

} // namespace mlp
