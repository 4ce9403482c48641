#include "refine/refine.hpp"

#include <cmath>

#include "core/errors.hpp"

namespace sta {

namespace {

double checked_eval(const ObjectiveFunction& objective, std::span<const double> x) {
    const double f = objective.eval(x);
    if (!std::isfinite(f))
        throw EvaluationError("objective returned a non-finite value");
    return f;
}

} // namespace

std::vector<double> numeric_gradient(const ObjectiveFunction& objective,
                                     std::span<const double> x, double h) {
    StateVector probe(x.begin(), x.end());
    std::vector<double> grad(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double xi = probe[i];
        probe[i] = xi + h;
        const double fp = checked_eval(objective, probe);
        probe[i] = xi - h;
        const double fm = checked_eval(objective, probe);
        probe[i] = xi;
        grad[i] = (fp - fm) / (2.0 * h);
    }
    return grad;
}

GradientFunction numeric_gradient_of(const ObjectiveFunction& objective) {
    return [objective](std::span<const double> x) {
        StateVector probe(x.begin(), x.end());
        std::vector<double> grad(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double xi = probe[i];
            const double h = 1e-6 * std::max(1.0, std::abs(xi));
            probe[i] = xi + h;
            const double fp = checked_eval(objective, probe);
            probe[i] = xi - h;
            const double fm = checked_eval(objective, probe);
            probe[i] = xi;
            grad[i] = (fp - fm) / (2.0 * h);
        }
        return grad;
    };
}

RefineResult refine(const ObjectiveFunction& objective, const GradientFunction& gradient,
                    const StateVector& x0, const RefineSettings& settings) {
    if (!(settings.gradient_tolerance > 0.0) || settings.max_steps < 1 ||
        !(settings.initial_step > 0.0) ||
        !(settings.backtrack_ratio > 0.0 && settings.backtrack_ratio < 1.0) ||
        !(settings.sufficient_decrease > 0.0 && settings.sufficient_decrease < 1.0))
        throw MalformedParameters("refine: bad settings");

    RefineResult result;
    result.state = x0;
    result.fitness = checked_eval(objective, result.state);

    StateVector trial(x0.size());
    for (int step = 0; step < settings.max_steps; ++step) {
        const std::vector<double> g = gradient(result.state);
        if (!all_finite(g)) throw EvaluationError("gradient returned a non-finite value");
        if (norm_inf(g) <= settings.gradient_tolerance) {
            result.status = RefineStatus::GradientConverged;
            return result;
        }

        double gsq = 0.0;
        for (double v : g) gsq += v * v;

        // Backtrack until f(x - t g) <= f(x) - c t ||g||^2.
        double t = settings.initial_step;
        bool accepted = false;
        while (t > 1e-20) {
            for (std::size_t i = 0; i < trial.size(); ++i)
                trial[i] = result.state[i] - t * g[i];
            const double ft = objective.eval(trial);
            if (std::isfinite(ft) &&
                ft <= result.fitness - settings.sufficient_decrease * t * gsq) {
                result.state = trial;
                result.fitness = ft;
                accepted = true;
                break;
            }
            t *= settings.backtrack_ratio;
        }
        if (!accepted) {
            result.status = RefineStatus::LineSearchStall;
            return result;
        }
        result.steps = step + 1;
    }
    result.status = RefineStatus::MaxSteps;
    return result;
}

} // namespace sta
