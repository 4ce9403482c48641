#ifndef STA_CORE_CONFIG_HPP
#define STA_CORE_CONFIG_HPP

#include <span>
#include <string>
#include <vector>

#include "core/random_stream.hpp"
#include "core/vec.hpp"

namespace sta {

// Exponentially decaying magnitude with reset: current is divided by fc each
// outer iteration and snaps back to max once it would drop below min.
struct FactorSchedule {
    double max = 1.0;
    double min = 1e-8;
    double fc = 2.0; // decay base, > 1
    double current = 1.0;

    static FactorSchedule exponential(double max_value, double min_value, double base) {
        return FactorSchedule{max_value, min_value, base, max_value};
    }

    void reset() { current = max; }

    void decay() {
        current /= fc;
        if (current < min) current = max;
    }
};

struct Interval {
    double low = 0.0;
    double high = 1.0;
};

enum class Algorithm { Sta, Dsta };

std::string algorithm_name(Algorithm alg);
Algorithm parse_algorithm(const std::string& name);

// Settings shared by both engines. Defaults are the toolkit's standard
// preset: all four factors decaying 1 -> 1e-8 with base 2, SE = 30,
// (p1, p2) = (0.9, 0.3), 1000 outer iterations.
struct SolverConfig {
    FactorSchedule alpha; // rotation
    FactorSchedule beta;  // translation
    FactorSchedule gamma; // expansion
    FactorSchedule delta; // axesion

    int se = 30;                   // candidates per operator search
    double p1 = 0.9;               // restoration probability
    double p2 = 0.3;               // risk probability
    int max_outer_iterations = 1000;
    std::vector<Interval> initial_bounds; // used for initialization only

    // Apply one schedule to all four factors, the usual configuration.
    void set_shared_schedule(double max_value, double min_value, double base);

    void set_uniform_bounds(double low, double high, int dimension);

    // Returns a list of violations; empty means valid.
    std::vector<std::string> validate() const;
};

// Draw each coordinate uniformly from its interval.
// Throws MalformedBounds when bounds are empty or some low >= high.
StateVector sample_initial(std::span<const Interval> bounds, RandomStream& rng);

// Flat key-value file (JSON object of scalars plus a 2-element "bounds"
// array; a list of pairs is also accepted for per-coordinate bounds).
// Keys: alpha_max, alpha_min, fc, se, p1, p2, max_iter, bounds.
SolverConfig load_config(const std::string& path);
void save_config(const SolverConfig& cfg, const std::string& path);
SolverConfig config_from_json_text(const std::string& text);
std::string config_to_json_text(const SolverConfig& cfg);

} // namespace sta

#endif
