#ifndef STA_ENGINES_ENGINE_HPP
#define STA_ENGINES_ENGINE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "core/config.hpp"
#include "core/objective.hpp"
#include "core/random_stream.hpp"
#include "core/vec.hpp"
#include "operators/operators.hpp"

namespace sta {

// How an operator search treats a candidate batch whose best is not a
// strict improvement: greedy rejects it, risk-in-probability accepts it
// anyway with probability p2.
struct AcceptancePolicy {
    enum class Kind { Greedy, RiskInProbability };
    Kind kind = Kind::Greedy;
    double p2 = 0.0;

    static AcceptancePolicy greedy() { return {Kind::Greedy, 0.0}; }
    static AcceptancePolicy risk(double p2) { return {Kind::RiskInProbability, p2}; }
};

struct Incumbent {
    StateVector state;
    double fitness = 0.0;
};

// The randomness discipline of a run: all operator and sampling draws come
// from `op`, all acceptance/restoration coin flips from `accept`. Both
// engines derive the two streams from the run stream in the same order, so
// a DSTA run with p1 = 1, p2 = 0 retraces the STA trajectory seed-for-seed.
struct EngineRng {
    RandomStream op;
    RandomStream accept;

    static EngineRng derive_from(RandomStream& run_stream) {
        RandomStream op = run_stream.derive();
        RandomStream accept = run_stream.derive();
        return EngineRng{std::move(op), std::move(accept)};
    }
};

struct SearchResult {
    Incumbent incumbent;
    bool improved = false;        // a strictly better candidate was adopted
    std::int64_t evaluations = 0; // objective calls consumed by this search
};

// One inner search: SE candidates from `kind` applied to the incumbent,
// batch-best compared against the incumbent fitness. A strict improvement
// is adopted and followed by a translation mini-search (SE candidates along
// the improvement direction, greedy accept); otherwise the batch best may
// still be adopted under the risk policy. Rotation falls back to the fast
// rotation when the incumbent norm is degenerate.
// Throws EvaluationError when the objective returns a non-finite value.
SearchResult operator_search(const ObjectiveFunction& objective, const Incumbent& incumbent,
                             OperatorKind kind, const SolverConfig& cfg,
                             const AcceptancePolicy& policy, EngineRng& rng);

struct HistoryRow {
    int iteration = 0; // outer iteration, 1-based
    double best_fitness = 0.0;
    std::int64_t evaluations = 0; // cumulative candidate evaluations
};

using HistorySink = std::function<void(const HistoryRow&)>;

enum class RunStatus { Ok, EvaluationFailed };

struct RunResult {
    StateVector best_state;
    double best_fitness = 0.0;
    std::vector<HistoryRow> history; // one row per completed outer iteration
    std::int64_t evaluations = 0;    // candidate evaluations (initial point excluded)
    RunStatus status = RunStatus::Ok;
    std::string error;
};

// Greedy engine: per outer iteration an expansion, fast-rotation and axesion
// search in that order, each followed by the conditional translation; all
// four factors decay by fc with reset. History records the incumbent (equal
// to the best-so-far under greedy acceptance) per outer iteration.
RunResult run_sta(const ObjectiveFunction& objective, const SolverConfig& cfg,
                  RandomStream& rng, const HistorySink& sink = {});

// Dynamic engine: the inner searches accept with risk probability p2, an
// external archive keeps the best solution ever seen, and after the three
// searches the incumbent is restored from the archive with probability p1.
// History records the archive best, which never increases.
RunResult run_dsta(const ObjectiveFunction& objective, const SolverConfig& cfg,
                   RandomStream& rng, const HistorySink& sink = {});

RunResult run_engine(Algorithm alg, const ObjectiveFunction& objective,
                     const SolverConfig& cfg, RandomStream& rng,
                     const HistorySink& sink = {});

} // namespace sta

#endif
