#ifndef STA_PROBLEMS_SNL_HPP
#define STA_PROBLEMS_SNL_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/objective.hpp"
#include "core/vec.hpp"

namespace sta {

// Sensor network localization: recover n sensor positions in R^d from
// measured pairwise distances (sensor-sensor and sensor-anchor) below the
// radio range, with m anchors at known positions.
//
// A layout flattens the n-by-d position matrix row-major by sensor index,
// so sensor i occupies coordinates [i*d, i*d + d). Objectives, gradients
// and the engines all share this ordering.

struct SensorEdge {
    int i = 0; // sensor index, 0-based, i < j
    int j = 0;
    double dist = 0.0;
};

struct AnchorEdge {
    int sensor = 0; // 0-based
    int anchor = 0; // 0-based
    double dist = 0.0;
};

struct SnlProblem {
    int dimension = 2; // d, 2 or 3
    int sensor_count = 0;
    std::vector<double> anchors; // m*d, row-major by anchor
    std::vector<SensorEdge> sensor_edges;
    std::vector<AnchorEdge> anchor_edges;
    double radio_range = 0.0;
    double noise_factor = 0.0;

    int anchor_count() const { return static_cast<int>(anchors.size()) / dimension; }
    int layout_size() const { return sensor_count * dimension; }
    std::span<const double> anchor(int k) const {
        return {anchors.data() + static_cast<std::size_t>(k) * dimension,
                static_cast<std::size_t>(dimension)};
    }

    // Throws MalformedParameters on out-of-range indices, non-positive
    // distances or duplicate edges.
    void validate() const;
};

using SensorLayout = StateVector; // length n*d

// Sum of squared residuals of the squared distances:
//   sum_ss (||x_i - x_j||^2 - d_ij^2)^2 + sum_sa (||x_i - a_k||^2 - e_ik^2)^2
// Non-negative; zero exactly when every residual vanishes.
double snl_objective(const SnlProblem& p, std::span<const double> layout);

// Analytic gradient of snl_objective under the row-major flattening.
std::vector<double> snl_gradient(const SnlProblem& p, std::span<const double> layout);

ObjectiveFunction make_objective(const SnlProblem& p);
GradientFunction make_gradient(const SnlProblem& p);

struct SnlInstance {
    SnlProblem problem;
    std::optional<SensorLayout> truth;
};

// Random planar instance: sensors and anchors uniform in the unit square,
// an edge for every pair with true distance <= radio_range, recorded
// distances perturbed multiplicatively by (1 + noise_factor * g) with g
// standard Gaussian (redrawn if a perturbed distance would be <= 0).
// Draw order: sensor coords, anchor coords, then noise per edge
// (sensor-sensor pairs (i,j) i<j lexicographic, then sensor-anchor pairs).
SnlInstance generate_problem(int sensors, int anchors, double radio_range,
                             double noise_factor, std::uint64_t seed);

// The built-in 8-sensor / 4-anchor instance with corner anchors and exact
// rational/surd distances; truth holds the exact closed-form layout.
SnlInstance illustrative_example();

struct PositionError {
    double rmsd = 0.0;          // sqrt(mean per-sensor squared deviation)
    double max_deviation = 0.0; // worst per-sensor Euclidean deviation
};

PositionError position_error(std::span<const double> estimate,
                             std::span<const double> truth, int dimension);

// Line-oriented instance file:
//   snl <d> <n> <m> <radio_range> <noise_factor>
//   anchor <k> <coords...>            (1-based k, m lines)
//   ss <i> <j> <dist>                 (1-based sensor pair)
//   sa <i> <k> <dist>                 (1-based sensor, anchor)
//   truth <i> <coords...>             (optional, all-or-none)
// Numbers are written shortest-round-trip, so save/load is lossless.
SnlInstance load_instance(const std::string& path);
void save_instance(const SnlInstance& inst, const std::string& path);
SnlInstance instance_from_text(const std::string& text);
std::string instance_to_text(const SnlInstance& inst);

} // namespace sta

#endif
