#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mlp/construct.hpp"
#include "mlp/core.hpp"
#include "mlp/mining.hpp"
#include "mlp/rng.hpp"

namespace mlp {

enum class Strategy { baseline, dm, mdm };

const char* to_string(Strategy s);
std::optional<Strategy> strategy_from_string(std::string_view s);

/// Order patterns are handed to the hybrid constructive. per_strategy keeps
/// the written behavior: ascending by arc count for dm, descending for mdm.
enum class PatternOrder { per_strategy, ascending, descending };

/// R = {0.00, 0.01, ..., 0.25}.
std::vector<double> default_r_set();

struct SearchParams {
    Strategy strategy = Strategy::baseline;
    int i_max = 10;
    int i_ils = 0; ///< 0 means min(100, n)
    std::vector<double> r_set = default_r_set();
    int elite_capacity = 10; ///< d
    double sup_min = 0.7;
    int max_p = 5;
    std::uint64_t seed = 0;
    std::optional<double> time_budget_seconds;
    std::optional<Cost> target_cost; ///< stop as soon as the incumbent reaches it
    PatternOrder pattern_order = PatternOrder::per_strategy;
    bool elite_unique_by_cost = false; ///< dedupe elite entries by cost instead of tour
    bool record_constructions = false; ///< keep phase-two (pattern, tour) pairs in the log
};

/// Bounded pool of the best distinct solutions found so far, sorted by cost
/// ascending. Distinctness is exact tour equality by default.
class EliteSet {
  public:
    explicit EliteSet(int capacity, bool unique_by_cost = false);

    /// Inserts a copy of s (evicting the worst when full) iff s is absent and
    /// either the set is not full or s beats the worst entry. Returns whether
    /// the set changed.
    bool update(const Solution& s);

    std::span<const Solution> entries() const { return entries_; }
    int size() const { return static_cast<int>(entries_.size()); }
    int capacity() const { return capacity_; }
    bool full() const { return size() >= capacity_; }
    Cost worst_cost() const { return entries_.back().cost; }

  private:
    int capacity_;
    bool unique_by_cost_;
    std::vector<Solution> entries_;
};

/// Double-bridge perturbation: cuts the post-depot sequence into A|B|C|D at
/// three distinct random points and reassembles depot+A+C+B+D, cost
/// recomputed. Returns the input unchanged when n < 4.
Solution double_bridge(const Solution& s, const Instance& instance, Rng& rng);

/// Deterministic core with explicit cut points 0 < p1 < p2 < p3 <= n.
Solution double_bridge_with_cuts(const Solution& s, const Instance& instance, int p1, int p2,
                                 int p3);

struct IterationLog {
    int iteration = 0;
    Cost constructive_cost = 0;
    Cost post_ils_cost = 0;
    double seconds = 0; ///< wall time at iteration end; excluded from determinism
};

struct MiningLog {
    int iteration = 0; ///< mining ran at the start of this iteration
    int transaction_count = 0;
    std::vector<int> pattern_sizes; ///< in the order patterns are used
};

struct ConstructionLog {
    int iteration = 0;
    std::vector<ArcId> pattern;
    std::vector<int> tour;
};

struct RunLog {
    std::vector<IterationLog> iterations;
    std::vector<MiningLog> mining_events;
    std::vector<ConstructionLog> constructions;
    std::optional<double> target_hit_seconds;
    bool stopped_by_budget = false;
    Cost best_cost = 0;
    double total_seconds = 0;
};

/// One JSON object per line: iteration, mining, construction, target_hit and
/// summary events.
std::string to_json_lines(const RunLog& log);

/// True when the two logs describe the same search trajectory (per-iteration
/// costs and mining events), wall-clock fields ignored. up_to limits the
/// comparison to the first iterations; -1 compares everything.
bool same_trajectory(const RunLog& a, const RunLog& b, int up_to = -1);

struct SolveResult {
    Solution best;
    RunLog log;
};

/// Runs the configured heuristic on the instance.
///
/// baseline: multi-start greedy-randomized construction, each start improved
/// by an ILS loop of RVND descents and double-bridge perturbations until
/// i_ils consecutive non-improving rounds.
///
/// dm: first half identical to baseline while filling the elite set; one
/// mining pass at the split; second half constructs from the mined patterns
/// round-robin (falling back to the classic constructive when no patterns
/// came out).
///
/// mdm: like dm, but the elite set keeps updating in the second half and
/// mining re-runs at the start of any iteration following an elite change.
///
/// Deterministic for fixed (instance, params): one sequentially consumed
/// generator seeded from params.seed. Throws std::invalid_argument on bad
/// params before any work.
SolveResult solve(const Instance& instance, const SearchParams& params);

} // namespace mlp
