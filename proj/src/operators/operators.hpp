#ifndef STA_OPERATORS_OPERATORS_HPP
#define STA_OPERATORS_OPERATORS_HPP

#include <span>

#include "core/random_stream.hpp"
#include "core/vec.hpp"

namespace sta {

enum class OperatorKind { Rotation, FastRotation, Translation, Expansion, Axesion };

const char* operator_name(OperatorKind kind);

// Below this 2-norm a state counts as degenerate for the transforms that
// divide by it (rotation, translation direction).
inline constexpr double kDegenerateNorm = 1e-12;

// Each transform returns a fresh candidate; inputs are never mutated.
//
// The *_apply kernels take the random draws as arguments; the RandomStream
// overloads draw them in a documented order and forward to the kernels.

// x + alpha * (1 / (n*||x||)) * Rr * x, with Rr an n-by-n matrix of
// uniform[-1,1] entries. Step norm is bounded by alpha. Draw order of the
// stream variant is row-major (the matrix is streamed, never materialized).
// Throws DegenerateState when ||x|| < kDegenerateNorm; callers substitute
// the fast rotation, which has no singularity.
StateVector rotate(std::span<const double> x, double alpha, RandomStream& rng);
StateVector rotate_apply(std::span<const double> x, double alpha,
                         std::span<const double> rr_row_major);

// x + alpha * rhat * u/||u||, with scalar rhat ~ uniform[-1,1] and u an
// n-vector of uniform[-1,1] entries (redrawn on the measure-zero ||u|| = 0).
// Step norm equals alpha*|rhat|; cost is linear in n. Draw order: rhat, then u.
StateVector rotate_fast(std::span<const double> x, double alpha, RandomStream& rng);
StateVector rotate_fast_apply(std::span<const double> x, double alpha, double rhat,
                              std::span<const double> u);

// x + beta * rt * (x - x_prev)/||x - x_prev||, rt ~ uniform[0,1]: a move of
// length at most beta along the ray from x_prev through x.
// Throws ZeroDirection when ||x - x_prev|| < kDegenerateNorm; callers skip
// the translation for that step.
StateVector translate(std::span<const double> x, std::span<const double> x_prev,
                      double beta, RandomStream& rng);
StateVector translate_apply(std::span<const double> x, std::span<const double> x_prev,
                            double beta, double rt);

// x + gamma * Re * x with Re diagonal, entries i.i.d. standard Gaussian:
// coordinate i becomes x_i * (1 + gamma*g_i). The zero vector is a fixed point.
StateVector expand(std::span<const double> x, double gamma, RandomStream& rng);
StateVector expand_apply(std::span<const double> x, double gamma,
                         std::span<const double> diag);

// x + delta * Ra * x with Ra diagonal and a single Gaussian entry at a
// uniformly random position: at most one coordinate changes.
// Draw order: axis index, then the Gaussian value.
StateVector axesion(std::span<const double> x, double delta, RandomStream& rng);
StateVector axesion_apply(std::span<const double> x, double delta, std::size_t axis,
                          double value);

} // namespace sta

#endif
