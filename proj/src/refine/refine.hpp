#ifndef STA_REFINE_REFINE_HPP
#define STA_REFINE_REFINE_HPP

#include <span>
#include <vector>

#include "core/objective.hpp"
#include "core/vec.hpp"

namespace sta {

// Gradient polish applied to an engine's final state: steepest descent with
// a backtracking line search under the sufficient-decrease condition.
struct RefineSettings {
    double gradient_tolerance = 1e-10; // stop when ||g||_inf drops below
    int max_steps = 1000;
    double initial_step = 1.0;
    double backtrack_ratio = 0.5;     // in (0,1)
    double sufficient_decrease = 1e-4; // in (0,1)

    // Standard budget of 1000 steps per dimension.
    static RefineSettings for_dimension(int n) {
        RefineSettings s;
        s.max_steps = 10 * n * 100;
        return s;
    }
};

enum class RefineStatus {
    GradientConverged, // ||g||_inf below tolerance
    MaxSteps,
    LineSearchStall, // no acceptable step length; best-so-far returned
};

struct RefineResult {
    StateVector state;
    double fitness = 0.0;
    RefineStatus status = RefineStatus::MaxSteps;
    int steps = 0;
};

// Central differences with a fixed probe h:
//   g_i = (f(x + h e_i) - f(x - h e_i)) / (2h)
// Throws EvaluationError on a non-finite probe.
std::vector<double> numeric_gradient(const ObjectiveFunction& objective,
                                     std::span<const double> x, double h);

// Gradient fallback with per-coordinate relative probes h_i = 1e-6 * max(1, |x_i|).
GradientFunction numeric_gradient_of(const ObjectiveFunction& objective);

// Every accepted step strictly decreases the fitness; the returned fitness
// never exceeds f(x0). An x0 already below the gradient tolerance comes back
// unchanged.
RefineResult refine(const ObjectiveFunction& objective, const GradientFunction& gradient,
                    const StateVector& x0, const RefineSettings& settings);

} // namespace sta

#endif
