#ifndef ACS_TSP_INSTANCE_HPP
#define ACS_TSP_INSTANCE_HPP

#include <cassert>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace acs {

enum class EdgeWeightType { kEuc2d, kCeil2d, kAtt };

const char *to_string(EdgeWeightType type);

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * An immutable symmetric TSP instance with integer edge costs following the
 * TSPLIB95 rounding conventions. For instances with at most
 * kDistTableMaxNodes nodes the full cost table is precomputed; larger
 * instances compute costs from the coordinates on every call.
 */
struct TspInstance {
    static constexpr uint32_t kDistTableMaxNodes = 4096;

    std::string name_;
    uint32_t dimension_ = 0;
    EdgeWeightType edge_weight_type_ = EdgeWeightType::kEuc2d;
    std::vector<double> xs_;
    std::vector<double> ys_;
    std::optional<int64_t> optimum_;

    TspInstance() = default;
    TspInstance(std::string name, EdgeWeightType type,
                std::vector<double> xs, std::vector<double> ys);

    int32_t distance(uint32_t u, uint32_t v) const {
        assert(u < dimension_ && v < dimension_);
        if (!dist_table_.empty()) {
            return dist_table_[static_cast<size_t>(u) * dimension_ + v];
        }
        return compute_distance(u, v);
    }

    /// Closed-tour cost: all consecutive edges plus the closing edge.
    int64_t tour_length(std::span<const uint32_t> order) const;

private:
    int32_t compute_distance(uint32_t u, uint32_t v) const;

    std::vector<int32_t> dist_table_;
};

TspInstance parse_tsplib(std::istream &in);
TspInstance parse_tsplib(const std::string &text);
TspInstance load_tsplib_file(const std::string &path);

/// Writes the instance back out in TSPLIB text form; coordinates round-trip
/// exactly through parse_tsplib.
std::string serialize_tsplib(const TspInstance &inst);

/**
 * Per-node lists of the cl nearest neighbors, sorted ascending by distance
 * with ties broken by node id. Every list has min(cl, n-1) entries.
 */
struct CandidateLists {
    uint32_t cl_ = 0;        // requested list length
    uint32_t list_len_ = 0;  // effective length, min(cl, n-1)
    uint32_t n_ = 0;
    std::vector<uint32_t> flat_;  // n_ * list_len_

    std::span<const uint32_t> of(uint32_t node) const {
        assert(node < n_);
        return {flat_.data() + static_cast<size_t>(node) * list_len_, list_len_};
    }
};

CandidateLists build_candidates(const TspInstance &inst, uint32_t cl);

/// Length of the greedy nearest-neighbor closed tour from `start`;
/// distance ties are broken by the lowest node id.
int64_t nn_tour_length(const TspInstance &inst, uint32_t start);

/// Reads a catalog of `instance-name whitespace integer` lines; '#' starts
/// a comment.
std::map<std::string, int64_t> load_optimum_catalog(std::istream &in);
std::map<std::string, int64_t> load_optimum_catalog_file(const std::string &path);

}  // namespace acs

#endif  // ACS_TSP_INSTANCE_HPP
