#include "mlp/search.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "mlp/neighborhoods.hpp"
#include "mlp/subseq.hpp"

namespace mlp {

const char* to_string(Strategy s) {
    switch (s) {
    case Strategy::baseline:
        return "baseline";
    case Strategy::dm:
        return "dm";
    case Strategy::mdm:
        return "mdm";
    }
    return "?";
}

std::optional<Strategy> strategy_from_string(std::string_view s) {
    if (s == "baseline")
        return Strategy::baseline;
    if (s == "dm")
        return Strategy::dm;
    if (s == "mdm")
        return Strategy::mdm;
    return std::nullopt;
}

std::vector<double> default_r_set() {
    std::vector<double> r(26);
    for (int i = 0; i < 26; ++i)
        r[static_cast<std::size_t>(i)] = i / 100.0;
    return r;
}

EliteSet::EliteSet(int capacity, bool unique_by_cost)
    : capacity_(capacity), unique_by_cost_(unique_by_cost) {
    if (capacity_ < 1)
        throw std::invalid_argument("elite capacity must be at least 1");
}

bool EliteSet::update(const Solution& s) {
    for (const Solution& e : entries_)
        if (unique_by_cost_ ? e.cost == s.cost : e.tour == s.tour)
            return false;
    if (full()) {
        if (s.cost >= entries_.back().cost)
            return false;
        entries_.pop_back();
    }
    const auto at = std::upper_bound(entries_.begin(), entries_.end(), s.cost,
                                     [](Cost c, const Solution& e) { return c < e.cost; });
    entries_.insert(at, s);
    return true;
}

Solution double_bridge_with_cuts(const Solution& s, const Instance& instance, int p1, int p2,
                                 int p3) {
    const int n = instance.n();
    if (!(0 < p1 && p1 < p2 && p2 < p3 && p3 <= n))
        throw std::invalid_argument("double_bridge: cuts must satisfy 0 < p1 < p2 < p3 <= n");
    std::vector<int> tour;
    tour.reserve(s.tour.size());
    tour.push_back(s.tour[0]);
    auto copy_block = [&](int from, int to) {
        for (int p = from; p <= to; ++p)
            tour.push_back(s.tour[static_cast<std::size_t>(p)]);
    };
    copy_block(1, p1);      // A
    copy_block(p2 + 1, p3); // C
    copy_block(p1 + 1, p2); // B
    copy_block(p3 + 1, n);  // D
    Solution out{std::move(tour), 0};
    out.cost = latency_cost(instance, out.tour);
    return out;
}

Solution double_bridge(const Solution& s, const Instance& instance, Rng& rng) {
    const int n = instance.n();
    if (n < 4)
        return s;
    int cuts[3];
    int got = 0;
    while (got < 3) {
        const int c = 1 + static_cast<int>(rng.below(static_cast<std::size_t>(n)));
        bool fresh = true;
        for (int k = 0; k < got; ++k)
            fresh = fresh && cuts[k] != c;
        if (fresh)
            cuts[got++] = c;
    }
    std::sort(cuts, cuts + 3);
    return double_bridge_with_cuts(s, instance, cuts[0], cuts[1], cuts[2]);
}

namespace {

void validate_params(const SearchParams& p) {
    if (p.strategy == Strategy::baseline) {
        if (p.i_max < 1)
            throw std::invalid_argument("i_max must be at least 1");
    } else if (p.i_max < 2 || p.i_max % 2 != 0) {
        throw std::invalid_argument("i_max must be at least 2 and even for dm/mdm");
    }
    if (p.i_ils < 0)
        throw std::invalid_argument("i_ils must be non-negative (0 = min(100, n))");
    if (p.r_set.empty())
        throw std::invalid_argument("r_set must be nonempty");
    for (double a : p.r_set)
        if (!(a >= 0.0 && a < 1.0))
            throw std::invalid_argument("every r_set value must lie in [0, 1)");
    if (p.elite_capacity < 1)
        throw std::invalid_argument("elite capacity must be at least 1");
    if (!(p.sup_min > 0.0) || p.sup_min > 1.0)
        throw std::invalid_argument("sup_min must be in (0, 1]");
    if (p.max_p < 1)
        throw std::invalid_argument("max_p must be at least 1");
    if (p.time_budget_seconds && !(*p.time_budget_seconds > 0.0))
        throw std::invalid_argument("time budget must be positive");
}

} // namespace

SolveResult solve(const Instance& instance, const SearchParams& params) {
    validate_params(params);

    const int n = instance.n();
    const int i_ils = params.i_ils > 0 ? params.i_ils : std::min(100, n);
    const int phase1_end =
        params.strategy == Strategy::baseline ? params.i_max : params.i_max / 2;

    Rng rng(params.seed);
    RunLog log;
    SubseqTables tables;
    EliteSet elite(params.elite_capacity, params.elite_unique_by_cost);
    std::vector<Pattern> patterns;
    int pattern_cursor = 0;
    bool mdm_dirty = true; // forces the first phase-two mining pass

    const auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };

    Cost incumbent = std::numeric_limits<Cost>::max();
    bool stopped = false;
    CheckpointFn checkpoint = [&](Cost current) {
        if (current < incumbent)
            incumbent = current;
        if (stopped)
            return true;
        if (params.target_cost && incumbent <= *params.target_cost) {
            log.target_hit_seconds = elapsed();
            stopped = true;
        } else if (params.time_budget_seconds && elapsed() >= *params.time_budget_seconds) {
            log.stopped_by_budget = true;
            stopped = true;
        }
        return stopped;
    };

    auto mine_now = [&](int iteration) {
        const auto transactions = to_transactions(elite.entries(), instance);
        patterns = select_patterns(mine_maximal(transactions, params.sup_min), params.max_p);
        const bool descending =
            params.pattern_order == PatternOrder::descending ||
            (params.pattern_order == PatternOrder::per_strategy &&
             params.strategy == Strategy::mdm);
        if (descending)
            sort_patterns(patterns, false);
        pattern_cursor = 0;
        MiningLog event{iteration, static_cast<int>(transactions.size()), {}};
        for (const Pattern& p : patterns)
            event.pattern_sizes.push_back(p.cardinality());
        log.mining_events.push_back(std::move(event));
    };

    Solution best;
    best.cost = std::numeric_limits<Cost>::max();

    for (int iter = 1; iter <= params.i_max && !stopped; ++iter) {
        const bool phase2 = params.strategy != Strategy::baseline && iter > phase1_end;
        if (phase2) {
            if (params.strategy == Strategy::dm && iter == phase1_end + 1)
                mine_now(iter);
            else if (params.strategy == Strategy::mdm && mdm_dirty) {
                mine_now(iter);
                mdm_dirty = false;
            }
        }

        const double alpha = params.r_set[rng.below(params.r_set.size())];
        Solution s;
        if (phase2 && !patterns.empty()) {
            const Pattern& active =
                patterns[static_cast<std::size_t>(pattern_cursor) % patterns.size()];
            ++pattern_cursor;
            s = hybrid_construct(instance, alpha, active, rng);
            if (params.record_constructions)
                log.constructions.push_back(ConstructionLog{iter, active.arcs, s.tour});
        } else {
            s = greedy_randomized(instance, alpha, rng);
        }
        const Cost constructive_cost = s.cost;
        checkpoint(s.cost);

        Solution s_prime = s;
        int iter_ils = 0;
        while (iter_ils < i_ils && !stopped) {
            s = rvnd(instance, std::move(s), rng, tables, checkpoint);
            const bool track_elite =
                params.strategy != Strategy::baseline &&
                (!phase2 || params.strategy == Strategy::mdm);
            if (track_elite) {
                const bool changed = elite.update(s);
                if (params.strategy == Strategy::mdm && phase2 && changed)
                    mdm_dirty = true;
            }
            if (s.cost < s_prime.cost) {
                s_prime = s;
                iter_ils = 0;
            }
            if (stopped)
                break;
            s = double_bridge(s_prime, instance, rng);
            ++iter_ils;
        }

        if (s_prime.cost < best.cost)
            best = s_prime;
        log.iterations.push_back(IterationLog{iter, constructive_cost, s_prime.cost, elapsed()});
    }

    log.best_cost = best.cost;
    log.total_seconds = elapsed();
    return SolveResult{std::move(best), std::move(log)};
}

std::string to_json_lines(const RunLog& log) {
    using nlohmann::json;
    std::ostringstream out;
    for (const IterationLog& it : log.iterations)
        out << json{{"event", "iteration"},
                    {"iteration", it.iteration},
                    {"constructive_cost", it.constructive_cost},
                    {"post_ils_cost", it.post_ils_cost},
                    {"seconds", it.seconds}}
                   .dump()
            << '\n';
    for (const MiningLog& ev : log.mining_events)
        out << json{{"event", "mining"},
                    {"iteration", ev.iteration},
                    {"transactions", ev.transaction_count},
                    {"pattern_sizes", ev.pattern_sizes}}
                   .dump()
            << '\n';
    for (const ConstructionLog& c : log.constructions)
        out << json{{"event", "construction"},
                    {"iteration", c.iteration},
                    {"pattern", c.pattern},
                    {"tour", c.tour}}
                   .dump()
            << '\n';
    if (log.target_hit_seconds)
        out << json{{"event", "target_hit"}, {"seconds", *log.target_hit_seconds}}.dump() << '\n';
    out << json{{"event", "summary"},
                {"best_cost", log.best_cost},
                {"seconds", log.total_seconds},
                {"stopped_by_budget", log.stopped_by_budget}}
               .dump()
        << '\n';
    return out.str();
}

bool same_trajectory(const RunLog& a, const RunLog& b, int up_to) {
    auto count = [&](const RunLog& l) {
        std::size_t c = l.iterations.size();
        if (up_to >= 0)
            c = std::min(c, static_cast<std::size_t>(up_to));
        return c;
    };
    const std::size_t ca = count(a), cb = count(b);
    if (ca != cb)
        return false;
    for (std::size_t i = 0; i < ca; ++i) {
        const IterationLog& x = a.iterations[i];
        const IterationLog& y = b.iterations[i];
        if (x.iteration != y.iteration || x.constructive_cost != y.constructive_cost ||
            x.post_ils_cost != y.post_ils_cost)
            return false;
    }
    auto events_in_range = [&](const RunLog& l) {
        std::vector<MiningLog> evs;
        for (const MiningLog& e : l.mining_events)
            if (up_to < 0 || e.iteration <= up_to)
                evs.push_back(e);
        return evs;
    };
    const auto ea = events_in_range(a), eb = events_in_range(b);
    if (ea.size() != eb.size())
        return false;
    for (std::size_t i = 0; i < ea.size(); ++i)
        if (ea[i].iteration != eb[i].iteration ||
            ea[i].transaction_count != eb[i].transaction_count ||
            ea[i].pattern_sizes != eb[i].pattern_sizes)
            return false;
    return true;
}

} // namespace mlp
