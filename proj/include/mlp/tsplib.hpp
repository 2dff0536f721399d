#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mlp/core.hpp"

namespace mlp {

/// Parse a TSPLIB-format instance. Supported EDGE_WEIGHT_TYPEs: EUC_2D,
/// CEIL_2D, ATT, GEO and EXPLICIT (FULL_MATRIX, UPPER_ROW, LOWER_DIAG_ROW).
/// Distances follow the TSPLIB reference conventions and are integral, so
/// re-evaluating any tour cost is reproducible bit-exactly.
///
/// Unknown keywords, unsupported weight types and dimension mismatches throw
/// ParseError naming the offending line.
Instance parse_tsplib(std::istream& in, Variant variant = Variant::circuit);
Instance parse_tsplib(const std::string& text, Variant variant = Variant::circuit);

/// Read and parse a .tsp file from disk. Throws Error when the file cannot
/// be opened, ParseError on malformed content.
Instance load_tsplib(const std::string& path, Variant variant = Variant::circuit);

/// A generated random instance together with its coordinates, kept so the
/// points can be archived and the matrix regenerated elsewhere.
struct GeneratedInstance {
    std::vector<std::array<int, 2>> points; // n+1 entries, index 0 = depot
    Instance instance;
};

/// Deterministic random instance: n+1 integer points uniform in [0, box]^2,
/// nearest-integer Euclidean distances. Same (n, seed, box) always yields the
/// identical matrix. Throws std::invalid_argument for n < 1 or box < 1.
GeneratedInstance generate_instance(int n, std::uint64_t seed, int box = 100,
                                    Variant variant = Variant::circuit);

/// Plain-text archive of a generated instance: "n\nid x y\n...".
std::string dump_points(const GeneratedInstance& g);

// Exposed for tests: the individual TSPLIB distance functions.
namespace tsplib_dist {
Cost euc_2d(double x1, double y1, double x2, double y2);
Cost ceil_2d(double x1, double y1, double x2, double y2);
Cost att(double x1, double y1, double x2, double y2);
Cost geo(double x1, double y1, double x2, double y2);
} // namespace tsplib_dist

} // namespace mlp
