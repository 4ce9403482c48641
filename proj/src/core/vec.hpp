#ifndef STA_CORE_VEC_HPP
#define STA_CORE_VEC_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace sta {

// A state is a point in R^n. Dimension is fixed for the lifetime of a run
// and coordinates stay finite; the engines enforce both.
using StateVector = std::vector<double>;

inline double norm2(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

inline double norm_inf(std::span<const double> v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

inline double dist2(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

inline bool all_finite(std::span<const double> v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

} // namespace sta

#endif
