#ifndef STA_PROBLEMS_BENCHMARKS_HPP
#define STA_PROBLEMS_BENCHMARKS_HPP

#include <span>
#include <string>

#include "core/config.hpp"
#include "core/objective.hpp"

namespace sta {

// The standard benchmark suite. Each function comes with the customary
// initialization interval; the search itself is unconstrained.
enum class BenchmarkFunction { Spherical, Rastrigin, Griewank, Rosenbrock, Ackley };

struct BenchmarkSpec {
    BenchmarkFunction function = BenchmarkFunction::Spherical;
    int dimension = 2;
};

const char* benchmark_name(BenchmarkFunction f);
BenchmarkFunction parse_benchmark(const std::string& name);

// Initialization interval for one coordinate:
// spherical [0,100], rastrigin [0,5.12], griewank [0,600],
// rosenbrock [0,30], ackley [0,32].
Interval benchmark_domain(BenchmarkFunction f);

// Exact formula value. Throws DimensionMismatch when x.size() != spec.dimension.
double eval_benchmark(const BenchmarkSpec& spec, std::span<const double> x);

ObjectiveFunction make_objective(const BenchmarkSpec& spec);

} // namespace sta

#endif
