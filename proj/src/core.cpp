#include "mlp/core.hpp"

#include <utility>

namespace mlp {

const char* to_string(Variant v) {
    return v == Variant::circuit ? "circuit" : "path";
}

Instance::Instance(int n, std::vector<Cost> dist, Variant variant, std::string name)
    : n_(n), variant_(variant), name_(std::move(name)), dist_(std::move(dist)) {
    if (n_ < 1)
        throw ValidationError("instance needs at least one customer, got n=" + std::to_string(n_));
    const std::size_t m = static_cast<std::size_t>(n_) + 1;
    if (dist_.size() != m * m)
        throw ValidationError("distance matrix for n=" + std::to_string(n_) + " must have " +
                              std::to_string(m * m) + " entries, got " + std::to_string(dist_.size()));
    for (std::size_t i = 0; i < m; ++i) {
        if (dist_[i * m + i] != 0)
            throw ValidationError("nonzero diagonal at vertex " + std::to_string(i));
        for (std::size_t j = 0; j < i; ++j) {
            const Cost a = dist_[i * m + j];
            const Cost b = dist_[j * m + i];
            if (a < 0)
                throw ValidationError("negative travel time between " + std::to_string(i) + " and " +
                                      std::to_string(j));
            if (a != b)
                throw ValidationError("asymmetric travel times between " + std::to_string(i) +
                                      " and " + std::to_string(j));
        }
    }
}

void validate_tour(const Instance& instance, std::span<const int> tour) {
    const int m = instance.size();
    if (static_cast<int>(tour.size()) != m)
        throw ValidationError("tour has " + std::to_string(tour.size()) + " vertices, expected " +
                              std::to_string(m));
    if (tour[0] != 0)
        throw ValidationError("tour must start at the depot, starts at " + std::to_string(tour[0]));
    std::vector<char> seen(static_cast<std::size_t>(m), 0);
    for (int v : tour) {
        if (v < 0 || v >= m)
            throw ValidationError("vertex " + std::to_string(v) + " out of range");
        if (seen[static_cast<std::size_t>(v)])
            throw ValidationError("vertex " + std::to_string(v) + " visited twice");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Cost latency_cost(const Instance& instance, std::span<const int> tour) {
    validate_tour(instance, tour);
    Cost arrival = 0;
    Cost total = 0;
    for (std::size_t k = 1; k < tour.size(); ++k) {
        arrival += instance.dist(tour[k - 1], tour[k]);
        total += arrival;
    }
    if (instance.variant() == Variant::circuit) {
        arrival += instance.dist(tour.back(), 0);
        total += arrival;
    }
    return total;
}

} // namespace mlp
