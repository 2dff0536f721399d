#include "mlp/mining.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace mlp {

ArcId arc_id(const Arc& a, int n) {
    return static_cast<ArcId>(a.from) * (n + 1) + a.to;
}

Arc arc_from_id(ArcId id, int n) {
    const int m = n + 1;
    return Arc{id / m, id % m};
}

std::vector<Transaction> to_transactions(std::span<const Solution> elite,
                                         const Instance& instance) {
    const int n = instance.n();
    std::vector<Transaction> out;
    out.reserve(elite.size());
    for (const Solution& s : elite) {
        validate_tour(instance, s.tour);
        Transaction t;
        t.reserve(s.tour.size());
        for (std::size_t k = 0; k + 1 < s.tour.size(); ++k)
            t.push_back(arc_id(Arc{s.tour[k], s.tour[k + 1]}, n));
        if (instance.variant() == Variant::circuit)
            t.push_back(arc_id(Arc{s.tour.back(), 0}, n));
        std::sort(t.begin(), t.end());
        out.push_back(std::move(t));
    }
    return out;
}

namespace {

bool is_subset(const std::vector<ArcId>& a, const std::vector<ArcId>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void intersect_into(std::vector<ArcId>& acc, const std::vector<ArcId>& other,
                    std::vector<ArcId>& scratch) {
    scratch.clear();
    std::set_intersection(acc.begin(), acc.end(), other.begin(), other.end(),
                          std::back_inserter(scratch));
    acc.swap(scratch);
}

// Orders patterns for output: larger first unless ascending, ties by id order.
bool pattern_less(const Pattern& a, const Pattern& b, bool ascending) {
    if (a.arcs.size() != b.arcs.size())
        return ascending ? a.arcs.size() < b.arcs.size() : a.arcs.size() > b.arcs.size();
    return a.arcs < b.arcs;
}

} // namespace

std::vector<Pattern> mine_maximal(std::span<const Transaction> transactions, double sup_min) {
    if (transactions.empty())
        throw std::invalid_argument("mine_maximal: no transactions");
    if (!(sup_min > 0.0) || sup_min > 1.0)
        throw std::invalid_argument("mine_maximal: sup_min must be in (0, 1]");
    const int m = static_cast<int>(transactions.size());
    // Smallest integer occurrence count satisfying "at least (sup x 100)%";
    // the epsilon guards against FP overshoot on exact products like 0.07*100.
    int k = static_cast<int>(std::ceil(sup_min * m - 1e-9));
    k = std::max(k, 1);

    // C(m, k) intersections will be enumerated; bail out when that is not an
    // elite-set-sized job.
    double combos = 1.0;
    for (int i = 0; i < k; ++i)
        combos *= static_cast<double>(m - i) / (i + 1);
    if (combos > 2e7)
        throw std::invalid_argument("mine_maximal: C(" + std::to_string(m) + "," +
                                    std::to_string(k) + ") subsets is beyond this miner's scope");

    std::vector<std::vector<ArcId>> found;
    std::vector<int> pick(static_cast<std::size_t>(k));
    std::iota(pick.begin(), pick.end(), 0);
    std::vector<ArcId> acc, scratch;
    while (true) {
        acc = transactions[static_cast<std::size_t>(pick[0])];
        for (int i = 1; i < k && !acc.empty(); ++i)
            intersect_into(acc, transactions[static_cast<std::size_t>(pick[i])], scratch);
        if (!acc.empty())
            found.push_back(acc);

        // next k-combination of {0..m-1}
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - k + i)
            --i;
        if (i < 0)
            break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }

    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());

    std::vector<Pattern> maximal;
    for (std::size_t i = 0; i < found.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < found.size() && !dominated; ++j)
            if (i != j && found[i].size() < found[j].size() && is_subset(found[i], found[j]))
                dominated = true;
        if (!dominated)
            maximal.push_back(Pattern{found[i]});
    }
    std::sort(maximal.begin(), maximal.end(),
              [](const Pattern& a, const Pattern& b) { return pattern_less(a, b, false); });
    return maximal;
}

std::vector<Pattern> select_patterns(std::vector<Pattern> mined, int max_p) {
    if (max_p <= 0)
        return {};
    std::sort(mined.begin(), mined.end(),
              [](const Pattern& a, const Pattern& b) { return pattern_less(a, b, false); });
    if (static_cast<int>(mined.size()) > max_p)
        mined.resize(static_cast<std::size_t>(max_p));
    sort_patterns(mined, true);
    return mined;
}

void sort_patterns(std::vector<Pattern>& patterns, bool ascending) {
    std::sort(patterns.begin(), patterns.end(),
              [ascending](const Pattern& a, const Pattern& b) {
                  return pattern_less(a, b, ascending);
              });
}

void dump_transactions(std::ostream& out, std::span<const Transaction> transactions) {
    for (const Transaction& t : transactions) {
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i)
                out << ' ';
            out << t[i];
        }
        out << '\n';
    }
}

void check_pattern_structure(const Pattern& p, int n) {
    if (p.arcs.empty())
        throw MalformedPatternError("pattern is empty");
    const int m = n + 1;
    std::vector<int> next(static_cast<std::size_t>(m), -1);
    std::vector<int> indegree(static_cast<std::size_t>(m), 0);
    for (ArcId id : p.arcs) {
        if (id < 0 || id >= static_cast<ArcId>(m) * m)
            throw MalformedPatternError("arc id " + std::to_string(id) + " out of range");
        const Arc a = arc_from_id(id, n);
        if (a.from == a.to)
            throw MalformedPatternError("self-loop arc at vertex " + std::to_string(a.from));
        if (next[static_cast<std::size_t>(a.from)] != -1)
            throw MalformedPatternError("vertex " + std::to_string(a.from) +
                                        " has two outgoing arcs");
        if (++indegree[static_cast<std::size_t>(a.to)] > 1)
            throw MalformedPatternError("vertex " + std::to_string(a.to) +
                                        " has two incoming arcs");
        next[static_cast<std::size_t>(a.from)] = a.to;
    }
    // Walk every chain from its head; whatever remains unvisited lies on a
    // cycle, which is only legal when it passes through the depot.
    std::vector<char> visited(static_cast<std::size_t>(m), 0);
    for (int v = 0; v < m; ++v) {
        if (indegree[static_cast<std::size_t>(v)] != 0 || next[static_cast<std::size_t>(v)] == -1)
            continue;
        for (int u = v; u != -1; u = next[static_cast<std::size_t>(u)])
            visited[static_cast<std::size_t>(u)] = 1;
    }
    for (int v = 0; v < m; ++v) {
        if (visited[static_cast<std::size_t>(v)] || next[static_cast<std::size_t>(v)] == -1)
            continue;
        bool through_depot = false;
        int u = v;
        do {
            visited[static_cast<std::size_t>(u)] = 1;
            if (u == 0)
                through_depot = true;
            u = next[static_cast<std::size_t>(u)];
        } while (u != v && u != -1);
        if (!through_depot)
            throw MalformedPatternError("pattern contains a cycle avoiding the depot");
    }
}

} // namespace mlp
