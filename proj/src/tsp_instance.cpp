#include "acs/tsp_instance.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include <omp.h>

namespace acs {

const char *to_string(EdgeWeightType type) {
    switch (type) {
        case EdgeWeightType::kEuc2d: return "EUC_2D";
        case EdgeWeightType::kCeil2d: return "CEIL_2D";
        case EdgeWeightType::kAtt: return "ATT";
    }
    return "?";
}

TspInstance::TspInstance(std::string name, EdgeWeightType type,
                         std::vector<double> xs, std::vector<double> ys)
    : name_(std::move(name)),
      dimension_(static_cast<uint32_t>(xs.size())),
      edge_weight_type_(type),
      xs_(std::move(xs)),
      ys_(std::move(ys)) {
    if (dimension_ < 3) {
        throw ParseError("instance needs at least 3 nodes, got " +
                         std::to_string(dimension_));
    }
    assert(xs_.size() == ys_.size());
    if (dimension_ <= kDistTableMaxNodes) {
        const size_t n = dimension_;
        dist_table_.resize(n * n);
        #pragma omp parallel for schedule(static)
        for (int64_t u = 0; u < static_cast<int64_t>(n); ++u) {
            for (size_t v = 0; v < n; ++v) {
                dist_table_[u * n + v] =
                    compute_distance(static_cast<uint32_t>(u),
                                     static_cast<uint32_t>(v));
            }
        }
    }
}

int32_t TspInstance::compute_distance(uint32_t u, uint32_t v) const {
    const double xd = xs_[u] - xs_[v];
    const double yd = ys_[u] - ys_[v];
    switch (edge_weight_type_) {
        case EdgeWeightType::kEuc2d:
            return static_cast<int32_t>(std::sqrt(xd * xd + yd * yd) + 0.5);
        case EdgeWeightType::kCeil2d:
            return static_cast<int32_t>(std::ceil(std::sqrt(xd * xd + yd * yd)));
        case EdgeWeightType::kAtt: {
            // TSPLIB95 pseudo-Euclidean distance
            const double r = std::sqrt((xd * xd + yd * yd) / 10.0);
            const auto t = static_cast<int32_t>(r + 0.5);
            return (t < r) ? t + 1 : t;
        }
    }
    return 0;
}

int64_t TspInstance::tour_length(std::span<const uint32_t> order) const {
    if (order.empty()) {
        return 0;
    }
    int64_t total = 0;
    uint32_t prev = order.back();
    for (uint32_t node : order) {
        total += distance(prev, node);
        prev = node;
    }
    return total;
}

namespace {

std::string trim(const std::string &s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) {
        return {};
    }
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

// Splits "KEY : value" / "KEY: value" / "KEY value" header lines.
bool split_header(const std::string &line, std::string &key, std::string &value) {
    const auto colon = line.find(':');
    if (colon != std::string::npos) {
        key = trim(line.substr(0, colon));
        value = trim(line.substr(colon + 1));
        return true;
    }
    std::istringstream in(line);
    if (!(in >> key)) {
        return false;
    }
    std::string rest;
    std::getline(in, rest);
    value = trim(rest);
    return true;
}

}  // namespace

TspInstance parse_tsplib(std::istream &in) {
    std::string name;
    std::optional<uint32_t> dimension;
    std::optional<EdgeWeightType> ewt;
    std::vector<double> xs;
    std::vector<double> ys;

    std::string line;
    bool in_coords = false;
    while (std::getline(in, line)) {
        const std::string s = trim(line);
        if (s.empty()) {
            continue;
        }
        if (s == "EOF") {
            break;
        }
        if (in_coords) {
            std::istringstream node_in(s);
            long id;
            double x, y;
            if (!(node_in >> id >> x >> y)) {
                throw ParseError("NODE_COORD_SECTION: malformed line '" + s + "'");
            }
            xs.push_back(x);
            ys.push_back(y);
            if (dimension && xs.size() > *dimension) {
                throw ParseError("NODE_COORD_SECTION: more coordinates than DIMENSION=" +
                                 std::to_string(*dimension));
            }
            continue;
        }
        std::string key, value;
        if (!split_header(s, key, value)) {
            continue;
        }
        if (key == "NAME") {
            name = value;
        } else if (key == "DIMENSION") {
            uint32_t d = 0;
            auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), d);
            if (ec != std::errc() || d == 0) {
                throw ParseError("DIMENSION: cannot parse '" + value + "'");
            }
            dimension = d;
        } else if (key == "EDGE_WEIGHT_TYPE") {
            if (value == "EUC_2D") {
                ewt = EdgeWeightType::kEuc2d;
            } else if (value == "CEIL_2D") {
                ewt = EdgeWeightType::kCeil2d;
            } else if (value == "ATT") {
                ewt = EdgeWeightType::kAtt;
            } else {
                throw ParseError("EDGE_WEIGHT_TYPE: unsupported '" + value + "'");
            }
        } else if (key == "NODE_COORD_SECTION") {
            if (!dimension) {
                throw ParseError("DIMENSION: missing before NODE_COORD_SECTION");
            }
            if (!ewt) {
                throw ParseError("EDGE_WEIGHT_TYPE: missing before NODE_COORD_SECTION");
            }
            in_coords = true;
        }
        // TYPE, COMMENT and other keywords are ignored.
    }

    if (!dimension) {
        throw ParseError("DIMENSION: missing");
    }
    if (!ewt) {
        throw ParseError("EDGE_WEIGHT_TYPE: missing");
    }
    if (xs.size() != *dimension) {
        throw ParseError("NODE_COORD_SECTION: expected " + std::to_string(*dimension) +
                         " coordinates, got " + std::to_string(xs.size()));
    }
    return TspInstance(name, *ewt, std::move(xs), std::move(ys));
}

TspInstance parse_tsplib(const std::string &text) {
    std::istringstream in(text);
    return parse_tsplib(in);
}

TspInstance load_tsplib_file(const std::string &path) {
    std::ifstream in(path);
    if (!in.is_open()) {
        throw ParseError("cannot open instance file: " + path);
    }
    return parse_tsplib(in);
}

std::string serialize_tsplib(const TspInstance &inst) {
    std::ostringstream out;
    out.precision(17);
    out << "NAME : " << inst.name_ << "\n"
        << "TYPE : TSP\n"
        << "DIMENSION : " << inst.dimension_ << "\n"
        << "EDGE_WEIGHT_TYPE : " << to_string(inst.edge_weight_type_) << "\n"
        << "NODE_COORD_SECTION\n";
    for (uint32_t i = 0; i < inst.dimension_; ++i) {
        out << (i + 1) << ' ' << inst.xs_[i] << ' ' << inst.ys_[i] << "\n";
    }
    out << "EOF\n";
    return out.str();
}

CandidateLists build_candidates(const TspInstance &inst, uint32_t cl) {
    assert(cl >= 1);
    const uint32_t n = inst.dimension_;
    const uint32_t len = std::min(cl, n - 1);

    CandidateLists lists;
    lists.cl_ = cl;
    lists.list_len_ = len;
    lists.n_ = n;
    lists.flat_.resize(static_cast<size_t>(n) * len);

    #pragma omp parallel
    {
        std::vector<uint32_t> order(n - 1);
        #pragma omp for schedule(static)
        for (int64_t u = 0; u < static_cast<int64_t>(n); ++u) {
            uint32_t k = 0;
            for (uint32_t v = 0; v < n; ++v) {
                if (v != static_cast<uint32_t>(u)) {
                    order[k++] = v;
                }
            }
            const auto closer = [&](uint32_t a, uint32_t b) {
                const auto da = inst.distance(static_cast<uint32_t>(u), a);
                const auto db = inst.distance(static_cast<uint32_t>(u), b);
                return da != db ? da < db : a < b;
            };
            std::partial_sort(order.begin(), order.begin() + len, order.end(), closer);
            std::copy(order.begin(), order.begin() + len,
                      lists.flat_.begin() + u * len);
        }
    }
    return lists;
}

int64_t nn_tour_length(const TspInstance &inst, uint32_t start) {
    assert(start < inst.dimension_);
    const uint32_t n = inst.dimension_;
    std::vector<uint8_t> visited(n, 0);
    visited[start] = 1;
    uint32_t current = start;
    int64_t total = 0;
    for (uint32_t step = 1; step < n; ++step) {
        int32_t best_dist = 0;
        uint32_t best = n;
        for (uint32_t v = 0; v < n; ++v) {
            if (visited[v]) {
                continue;
            }
            const int32_t d = inst.distance(current, v);
            if (best == n || d < best_dist) {
                best_dist = d;
                best = v;
            }
        }
        visited[best] = 1;
        total += best_dist;
        current = best;
    }
    total += inst.distance(current, start);
    return total;
}

std::map<std::string, int64_t> load_optimum_catalog(std::istream &in) {
    std::map<std::string, int64_t> catalog;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        std::istringstream entry(line);
        std::string name;
        int64_t value = 0;
        if (entry >> name >> value) {
            catalog[name] = value;
        }
    }
    return catalog;
}

std::map<std::string, int64_t> load_optimum_catalog_file(const std::string &path) {
    std::ifstream in(path);
    if (!in.is_open()) {
        throw std::runtime_error("cannot open optimum catalog: " + path);
    }
    return load_optimum_catalog(in);
}

}  // namespace acs
