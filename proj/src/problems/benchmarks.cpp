#include "problems/benchmarks.hpp"

#include <cmath>

#include "core/errors.hpp"

namespace sta {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kE = 2.718281828459045235360287471353;
}

const char* benchmark_name(BenchmarkFunction f) {
    switch (f) {
        case BenchmarkFunction::Spherical: return "spherical";
        case BenchmarkFunction::Rastrigin: return "rastrigin";
        case BenchmarkFunction::Griewank: return "griewank";
        case BenchmarkFunction::Rosenbrock: return "rosenbrock";
        case BenchmarkFunction::Ackley: return "ackley";
    }
    return "?";
}

BenchmarkFunction parse_benchmark(const std::string& name) {
    if (name == "spherical" || name == "sphere") return BenchmarkFunction::Spherical;
    if (name == "rastrigin") return BenchmarkFunction::Rastrigin;
    if (name == "griewank") return BenchmarkFunction::Griewank;
    if (name == "rosenbrock") return BenchmarkFunction::Rosenbrock;
    if (name == "ackley") return BenchmarkFunction::Ackley;
    throw MalformedParameters("unknown benchmark function: " + name);
}

Interval benchmark_domain(BenchmarkFunction f) {
    switch (f) {
        case BenchmarkFunction::Spherical: return {0.0, 100.0};
        case BenchmarkFunction::Rastrigin: return {0.0, 5.12};
        case BenchmarkFunction::Griewank: return {0.0, 600.0};
        case BenchmarkFunction::Rosenbrock: return {0.0, 30.0};
        case BenchmarkFunction::Ackley: return {0.0, 32.0};
    }
    return {0.0, 1.0};
}

double eval_benchmark(const BenchmarkSpec& spec, std::span<const double> x) {
    if (static_cast<int>(x.size()) != spec.dimension)
        throw DimensionMismatch("eval_benchmark: state dimension does not match spec");
    const std::size_t n = x.size();
    switch (spec.function) {
        case BenchmarkFunction::Spherical: {
            double s = 0.0;
            for (double v : x) s += v * v;
            return s;
        }
        case BenchmarkFunction::Rastrigin: {
            double s = 0.0;
            for (double v : x) s += v * v - 10.0 * std::cos(kTwoPi * v) + 10.0;
            return s;
        }
        case BenchmarkFunction::Griewank: {
            double s = 0.0;
            double p = 1.0;
            for (std::size_t i = 0; i < n; ++i) {
                s += x[i] * x[i];
                p *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
            }
            return s / 4000.0 - p + 1.0;
        }
        case BenchmarkFunction::Rosenbrock: {
            // sum over i = 1..n-1
            double s = 0.0;
            for (std::size_t i = 0; i + 1 < n; ++i) {
                const double a = x[i + 1] - x[i] * x[i];
                const double b = x[i] - 1.0;
                s += 100.0 * a * a + b * b;
            }
            return s;
        }
        case BenchmarkFunction::Ackley: {
            double sq = 0.0;
            double cs = 0.0;
            for (double v : x) {
                sq += v * v;
                cs += std::cos(kTwoPi * v);
            }
            const double inv_n = 1.0 / static_cast<double>(n);
            return -20.0 * std::exp(-0.2 * std::sqrt(sq * inv_n)) - std::exp(cs * inv_n) +
                   20.0 + kE;
        }
    }
    throw MalformedParameters("eval_benchmark: unknown function");
}

ObjectiveFunction make_objective(const BenchmarkSpec& spec) {
    return ObjectiveFunction{spec.dimension, [spec](std::span<const double> x) {
                                 return eval_benchmark(spec, x);
                             }};
}

} // namespace sta
