#include "mlp/tsplib.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <random>
#include <sstream>

namespace mlp {

namespace tsplib_dist {

namespace {
Cost nint(double x) {
    return static_cast<Cost>(x + 0.5);
}
// TSPLIB GEO: DDD.MM encoding, truncated degrees, minutes as fraction.
double geo_radians(double x) {
    constexpr double kPi = 3.141592;
    const double deg = std::trunc(x);
    const double minutes = x - deg;
    return kPi * (deg + 5.0 * minutes / 3.0) / 180.0;
}
} // namespace

Cost euc_2d(double x1, double y1, double x2, double y2) {
    const double dx = x1 - x2, dy = y1 - y2;
    return nint(std::sqrt(dx * dx + dy * dy));
}

Cost ceil_2d(double x1, double y1, double x2, double y2) {
    const double dx = x1 - x2, dy = y1 - y2;
    return static_cast<Cost>(std::ceil(std::sqrt(dx * dx + dy * dy)));
}

Cost att(double x1, double y1, double x2, double y2) {
    const double dx = x1 - x2, dy = y1 - y2;
    const double r = std::sqrt((dx * dx + dy * dy) / 10.0);
    const Cost t = nint(r);
    return static_cast<double>(t) < r ? t + 1 : t;
}

Cost geo(double x1, double y1, double x2, double y2) {
    constexpr double kEarthRadius = 6378.388;
    const double lat1 = geo_radians(x1), lon1 = geo_radians(y1);
    const double lat2 = geo_radians(x2), lon2 = geo_radians(y2);
    const double q1 = std::cos(lon1 - lon2);
    const double q2 = std::cos(lat1 - lat2);
    const double q3 = std::cos(lat1 + lat2);
    return static_cast<Cost>(kEarthRadius * std::acos(0.5 * ((1.0 + q1) * q2 - (1.0 - q1) * q3)) +
                             1.0);
}

} // namespace tsplib_dist

namespace {

struct Parser {
    std::istream& in;
    int line_no = 0;
    std::string line;

    bool next_line() {
        while (std::getline(in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r\n") != std::string::npos)
                return true;
        }
        return false;
    }
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string first_token(const std::string& s) {
    std::istringstream iss(s);
    std::string tok;
    iss >> tok;
    return tok;
}

} // namespace

Instance parse_tsplib(std::istream& in, Variant variant) {
    Parser p{in};

    std::string name = "unnamed";
    std::string weight_type;
    std::string weight_format;
    int dimension = -1;
    std::vector<std::array<double, 2>> coords;
    bool have_coords = false;
    std::vector<Cost> weights;
    bool have_weights = false;

    auto need_dimension = [&](const char* what) {
        if (dimension < 2)
            throw ParseError(std::string(what) + " before a DIMENSION of at least 2", p.line_no);
    };

    while (p.next_line()) {
        const std::string raw = trim(p.line);
        const auto colon = raw.find(':');
        const std::string key = trim(colon == std::string::npos ? raw : raw.substr(0, colon));
        const std::string value = colon == std::string::npos ? "" : trim(raw.substr(colon + 1));

        if (key == "NAME") {
            name = value;
        } else if (key == "TYPE") {
            const std::string t = first_token(value);
            if (t != "TSP")
                throw ParseError("unsupported TYPE '" + t + "' (only TSP)", p.line_no);
        } else if (key == "COMMENT" || key == "DISPLAY_DATA_TYPE" || key == "NODE_COORD_TYPE") {
            // informational
        } else if (key == "DIMENSION") {
            try {
                dimension = std::stoi(value);
            } catch (const std::exception&) {
                throw ParseError("bad DIMENSION '" + value + "'", p.line_no);
            }
            if (dimension < 2)
                throw ParseError("DIMENSION must be at least 2", p.line_no);
        } else if (key == "EDGE_WEIGHT_TYPE") {
            weight_type = first_token(value);
            if (weight_type != "EUC_2D" && weight_type != "CEIL_2D" && weight_type != "ATT" &&
                weight_type != "GEO" && weight_type != "EXPLICIT")
                throw ParseError("unsupported EDGE_WEIGHT_TYPE '" + weight_type + "'", p.line_no);
        } else if (key == "EDGE_WEIGHT_FORMAT") {
            weight_format = first_token(value);
            if (weight_format != "FULL_MATRIX" && weight_format != "UPPER_ROW" &&
                weight_format != "LOWER_DIAG_ROW")
                throw ParseError("unsupported EDGE_WEIGHT_FORMAT '" + weight_format + "'",
                                 p.line_no);
        } else if (key == "NODE_COORD_SECTION") {
            need_dimension("NODE_COORD_SECTION");
            coords.assign(static_cast<std::size_t>(dimension), {0.0, 0.0});
            std::vector<char> seen(static_cast<std::size_t>(dimension), 0);
            for (int k = 0; k < dimension; ++k) {
                if (!p.next_line())
                    throw ParseError("unexpected end of input inside NODE_COORD_SECTION",
                                     p.line_no);
                std::istringstream iss(p.line);
                long id;
                double x, y;
                if (!(iss >> id >> x >> y))
                    throw ParseError("bad node coordinate line '" + trim(p.line) + "'", p.line_no);
                if (id < 1 || id > dimension)
                    throw ParseError("node id " + std::to_string(id) + " out of 1.." +
                                         std::to_string(dimension),
                                     p.line_no);
                if (seen[static_cast<std::size_t>(id - 1)])
                    throw ParseError("duplicate node id " + std::to_string(id), p.line_no);
                seen[static_cast<std::size_t>(id - 1)] = 1;
                coords[static_cast<std::size_t>(id - 1)] = {x, y};
            }
            have_coords = true;
        } else if (key == "EDGE_WEIGHT_SECTION") {
            need_dimension("EDGE_WEIGHT_SECTION");
            if (weight_format.empty())
                throw ParseError("EDGE_WEIGHT_SECTION without EDGE_WEIGHT_FORMAT", p.line_no);
            const std::size_t dim = static_cast<std::size_t>(dimension);
            std::size_t expected = 0;
            if (weight_format == "FULL_MATRIX")
                expected = dim * dim;
            else if (weight_format == "UPPER_ROW")
                expected = dim * (dim - 1) / 2;
            else // LOWER_DIAG_ROW
                expected = dim * (dim + 1) / 2;
            weights.reserve(expected);
            while (weights.size() < expected) {
                if (!p.next_line())
                    throw ParseError("edge weight section ended after " +
                                         std::to_string(weights.size()) + " of " +
                                         std::to_string(expected) + " values",
                                     p.line_no);
                std::istringstream iss(p.line);
                Cost w;
                while (iss >> w) {
                    if (weights.size() == expected)
                        throw ParseError("too many edge weights", p.line_no);
                    weights.push_back(w);
                }
                if (!iss.eof())
                    throw ParseError("bad edge weight line '" + trim(p.line) + "'", p.line_no);
            }
            have_weights = true;
        } else if (key == "DISPLAY_DATA_SECTION") {
            need_dimension("DISPLAY_DATA_SECTION");
            for (int k = 0; k < dimension; ++k)
                if (!p.next_line())
                    throw ParseError("unexpected end of input inside DISPLAY_DATA_SECTION",
                                     p.line_no);
        } else if (key == "EOF") {
            break;
        } else {
            throw ParseError("unknown keyword '" + key + "'", p.line_no);
        }
    }

    if (dimension < 2)
        throw ParseError("missing DIMENSION", p.line_no);
    if (weight_type.empty())
        throw ParseError("missing EDGE_WEIGHT_TYPE", p.line_no);
    if (weight_type == "EXPLICIT") {
        if (!have_weights || have_coords)
            throw ParseError("EXPLICIT instance needs an EDGE_WEIGHT_SECTION and no coordinates",
                             p.line_no);
    } else {
        if (!have_coords || have_weights)
            throw ParseError("coordinate instance needs a NODE_COORD_SECTION and no edge weights",
                             p.line_no);
    }

    const std::size_t dim = static_cast<std::size_t>(dimension);
    std::vector<Cost> dist(dim * dim, 0);

    if (weight_type == "EXPLICIT") {
        if (weight_format == "FULL_MATRIX") {
            dist = weights;
        } else if (weight_format == "UPPER_ROW") {
            std::size_t k = 0;
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = i + 1; j < dim; ++j) {
                    dist[i * dim + j] = weights[k];
                    dist[j * dim + i] = weights[k];
                    ++k;
                }
        } else { // LOWER_DIAG_ROW
            std::size_t k = 0;
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j <= i; ++j) {
                    dist[i * dim + j] = weights[k];
                    dist[j * dim + i] = weights[k];
                    ++k;
                }
        }
    } else {
        Cost (*fn)(double, double, double, double) = nullptr;
        if (weight_type == "EUC_2D")
            fn = tsplib_dist::euc_2d;
        else if (weight_type == "CEIL_2D")
            fn = tsplib_dist::ceil_2d;
        else if (weight_type == "ATT")
            fn = tsplib_dist::att;
        else
            fn = tsplib_dist::geo;
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = i + 1; j < dim; ++j) {
                const Cost d = fn(coords[i][0], coords[i][1], coords[j][0], coords[j][1]);
                dist[i * dim + j] = d;
                dist[j * dim + i] = d;
            }
    }

    return Instance(dimension - 1, std::move(dist), variant, name);
}

Instance parse_tsplib(const std::string& text, Variant variant) {
    std::istringstream iss(text);
    return parse_tsplib(iss, variant);
}

Instance load_tsplib(const std::string& path, Variant variant) {
    std::ifstream f(path);
    if (!f)
        throw Error("cannot open instance file: " + path);
    return parse_tsplib(f, variant);
}

GeneratedInstance generate_instance(int n, std::uint64_t seed, int box, Variant variant) {
    if (n < 1)
        throw std::invalid_argument("generate_instance: n must be at least 1");
    if (box < 1)
        throw std::invalid_argument("generate_instance: box must be at least 1");

    std::mt19937_64 gen(seed);
    const auto side = static_cast<std::uint64_t>(box) + 1;
    std::vector<std::array<int, 2>> pts(static_cast<std::size_t>(n) + 1);
    for (auto& pt : pts) {
        pt[0] = static_cast<int>(gen() % side);
        pt[1] = static_cast<int>(gen() % side);
    }

    const std::size_t m = pts.size();
    std::vector<Cost> dist(m * m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            const Cost d = tsplib_dist::euc_2d(pts[i][0], pts[i][1], pts[j][0], pts[j][1]);
            dist[i * m + j] = d;
            dist[j * m + i] = d;
        }

    std::string name = "trpgen-n" + std::to_string(n) + "-s" + std::to_string(seed);
    return GeneratedInstance{std::move(pts), Instance(n, std::move(dist), variant, std::move(name))};
}

std::string dump_points(const GeneratedInstance& g) {
    std::ostringstream out;
    out << g.instance.n() << "\n";
    for (std::size_t i = 0; i < g.points.size(); ++i)
        out << i << " " << g.points[i][0] << " " << g.points[i][1] << "\n";
    return out.str();
}

} // namespace mlp
