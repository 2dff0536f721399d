#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mlp {

using Cost = std::int64_t;

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A tour or solution violates a structural requirement (bad permutation, ...).
struct ValidationError : Error {
    using Error::Error;
};

/// Instance file could not be parsed; line is 1-based within the input.
struct ParseError : Error {
    ParseError(const std::string& msg, int line_no)
        : Error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
    int line;
};

/// A mined pattern decodes to something that cannot come from tours.
struct MalformedPatternError : Error {
    using Error::Error;
};

/// A caller broke an API contract (bad segment partition, ...).
struct ContractViolation : Error {
    using Error::Error;
};

/// Internal consistency check failed (stale preprocessed tables, ...).
struct InternalError : Error {
    using Error::Error;
};

/// Which objective the instance uses: the tour closes back at the depot and
/// the return arrival counts as one more latency term (circuit), or the tour
/// ends at its last customer (path).
enum class Variant { circuit, path };

const char* to_string(Variant v);

/// A directed arc between two vertices.
struct Arc {
    int from = 0;
    int to = 0;

    friend bool operator==(const Arc&, const Arc&) = default;
};

/// Immutable problem instance: n customers plus the depot (vertex 0) and a
/// symmetric non-negative integer travel-time matrix. Travel times are 64-bit
/// integers so all cost arithmetic is exact and runs compare bit-for-bit.
///
/// Safe to share across threads once constructed.
class Instance {
  public:
    /// dist is row-major (n+1) x (n+1). Throws ValidationError when the matrix
    /// is the wrong size, has a nonzero diagonal, is asymmetric or negative,
    /// or n < 1.
    Instance(int n, std::vector<Cost> dist, Variant variant, std::string name);

    int n() const { return n_; }          ///< customer count (depot excluded)
    int size() const { return n_ + 1; }   ///< vertex count including the depot

    Cost dist(int i, int j) const { return dist_[static_cast<std::size_t>(i) * (n_ + 1) + j]; }

    Variant variant() const { return variant_; }
    const std::string& name() const { return name_; }

    /// Same matrix under the other objective. Handy for testing both variants
    /// of one geometry.
    Instance with_variant(Variant v) const { return Instance(n_, dist_, v, name_); }

  private:
    int n_;
    Variant variant_;
    std::string name_;
    std::vector<Cost> dist_;
};

/// A tour (permutation of 0..n starting at the depot) plus its latency cost.
/// Whenever a Solution crosses a module boundary, cost equals
/// latency_cost(instance, tour).
struct Solution {
    std::vector<int> tour;
    Cost cost = 0;
};

/// Throws ValidationError unless tour is a permutation of {0..n} with the
/// depot first.
void validate_tour(const Instance& instance, std::span<const int> tour);

/// Total latency of the tour. Path variant: sum of customer arrival times.
/// Circuit variant: additionally counts the arrival back at the depot.
/// Validates the tour first.
Cost latency_cost(const Instance& instance, std::span<const int> tour);

} // namespace mlp
