#ifndef STA_CORE_OBJECTIVE_HPP
#define STA_CORE_OBJECTIVE_HPP

#include <functional>
#include <span>
#include <vector>

namespace sta {

// Minimization target: a fitness callable plus its fixed dimension.
struct ObjectiveFunction {
    int dimension = 0;
    std::function<double(std::span<const double>)> eval;

    double operator()(std::span<const double> x) const { return eval(x); }
};

using GradientFunction = std::function<std::vector<double>(std::span<const double>)>;

} // namespace sta

#endif
