#include "operators/operators.hpp"

#include "core/errors.hpp"

namespace sta {

const char* operator_name(OperatorKind kind) {
    switch (kind) {
        case OperatorKind::Rotation: return "rotation";
        case OperatorKind::FastRotation: return "fast_rotation";
        case OperatorKind::Translation: return "translation";
        case OperatorKind::Expansion: return "expansion";
        case OperatorKind::Axesion: return "axesion";
    }
    return "?";
}

StateVector rotate_apply(std::span<const double> x, double alpha,
                         std::span<const double> rr_row_major) {
    const std::size_t n = x.size();
    const double nrm = norm2(x);
    if (nrm < kDegenerateNorm)
        throw DegenerateState("rotate: state norm below threshold");
    const double scale = alpha / (static_cast<double>(n) * nrm);
    StateVector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        double dot = 0.0;
        const double* row = rr_row_major.data() + i * n;
        for (std::size_t j = 0; j < n; ++j) dot += row[j] * x[j];
        out[i] = x[i] + scale * dot;
    }
    return out;
}

StateVector rotate(std::span<const double> x, double alpha, RandomStream& rng) {
    const std::size_t n = x.size();
    const double nrm = norm2(x);
    if (nrm < kDegenerateNorm)
        throw DegenerateState("rotate: state norm below threshold");
    const double scale = alpha / (static_cast<double>(n) * nrm);
    // Matrix rows are streamed straight out of the generator; n^2 draws.
    StateVector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        double dot = 0.0;
        for (std::size_t j = 0; j < n; ++j) dot += rng.uniform_sym() * x[j];
        out[i] = x[i] + scale * dot;
    }
    return out;
}

StateVector rotate_fast_apply(std::span<const double> x, double alpha, double rhat,
                              std::span<const double> u) {
    const double unrm = norm2(u);
    if (unrm == 0.0)
        throw DegenerateState("rotate_fast: zero direction vector");
    const double scale = alpha * rhat / unrm;
    StateVector out(x.begin(), x.end());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] += scale * u[i];
    return out;
}

StateVector rotate_fast(std::span<const double> x, double alpha, RandomStream& rng) {
    const std::size_t n = x.size();
    const double rhat = rng.uniform_sym();
    StateVector u(n);
    double unrm = 0.0;
    do {
        for (std::size_t i = 0; i < n; ++i) u[i] = rng.uniform_sym();
        unrm = norm2(u);
    } while (unrm == 0.0); // measure-zero; redraw preserves the distribution
    const double scale = alpha * rhat / unrm;
    StateVector out(x.begin(), x.end());
    for (std::size_t i = 0; i < n; ++i) out[i] += scale * u[i];
    return out;
}

StateVector translate_apply(std::span<const double> x, std::span<const double> x_prev,
                            double beta, double rt) {
    if (x.size() != x_prev.size())
        throw DimensionMismatch("translate: states differ in dimension");
    const double dn = dist2(x, x_prev);
    if (dn < kDegenerateNorm)
        throw ZeroDirection("translate: states coincide");
    const double scale = beta * rt / dn;
    StateVector out(x.begin(), x.end());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] += scale * (x[i] - x_prev[i]);
    return out;
}

StateVector translate(std::span<const double> x, std::span<const double> x_prev,
                      double beta, RandomStream& rng) {
    return translate_apply(x, x_prev, beta, rng.uniform01());
}

StateVector expand_apply(std::span<const double> x, double gamma,
                         std::span<const double> diag) {
    StateVector out(x.begin(), x.end());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] += gamma * diag[i] * x[i];
    return out;
}

StateVector expand(std::span<const double> x, double gamma, RandomStream& rng) {
    StateVector out(x.begin(), x.end());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] += gamma * rng.gaussian() * x[i];
    return out;
}

StateVector axesion_apply(std::span<const double> x, double delta, std::size_t axis,
                          double value) {
    if (axis >= x.size())
        throw DimensionMismatch("axesion: axis out of range");
    StateVector out(x.begin(), x.end());
    out[axis] += delta * value * x[axis];
    return out;
}

StateVector axesion(std::span<const double> x, double delta, RandomStream& rng) {
    const std::size_t axis = rng.uniform_index(x.size());
    return axesion_apply(x, delta, axis, rng.gaussian());
}

} // namespace sta
