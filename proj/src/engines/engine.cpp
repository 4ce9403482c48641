#include "engines/engine.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "core/errors.hpp"

namespace sta {

namespace {

double checked_eval(const ObjectiveFunction& objective, std::span<const double> x) {
    const double f = objective.eval(x);
    if (!std::isfinite(f))
        throw EvaluationError("objective returned a non-finite value");
    return f;
}

StateVector make_candidate(OperatorKind kind, const StateVector& x, double factor,
                           RandomStream& rng) {
    switch (kind) {
        case OperatorKind::Rotation:
            // the fast form covers the ||x|| -> 0 singularity
            if (norm2(x) < kDegenerateNorm) return rotate_fast(x, factor, rng);
            return rotate(x, factor, rng);
        case OperatorKind::FastRotation:
            return rotate_fast(x, factor, rng);
        case OperatorKind::Expansion:
            return expand(x, factor, rng);
        case OperatorKind::Axesion:
            return axesion(x, factor, rng);
        case OperatorKind::Translation:
            break;
    }
    throw MalformedParameters("operator_search does not take the translation kind");
}

double factor_for(OperatorKind kind, const SolverConfig& cfg) {
    switch (kind) {
        case OperatorKind::Rotation:
        case OperatorKind::FastRotation:
            return cfg.alpha.current;
        case OperatorKind::Expansion:
            return cfg.gamma.current;
        case OperatorKind::Axesion:
            return cfg.delta.current;
        case OperatorKind::Translation:
            return cfg.beta.current;
    }
    return cfg.alpha.current;
}

// Best of SE translation candidates along (from - prev), greedy accept.
void translation_search(const ObjectiveFunction& objective, Incumbent& inc,
                        const StateVector& prev, const SolverConfig& cfg,
                        EngineRng& rng, std::int64_t& evaluations) {
    if (dist2(inc.state, prev) < kDegenerateNorm) return; // no direction, skip
    StateVector best_state;
    double best_fit = inc.fitness;
    for (int s = 0; s < cfg.se; ++s) {
        StateVector cand = translate(inc.state, prev, cfg.beta.current, rng.op);
        const double f = checked_eval(objective, cand);
        ++evaluations;
        if (f < best_fit) {
            best_fit = f;
            best_state = std::move(cand);
        }
    }
    if (!best_state.empty()) {
        inc.state = std::move(best_state);
        inc.fitness = best_fit;
    }
}

} // namespace

SearchResult operator_search(const ObjectiveFunction& objective, const Incumbent& incumbent,
                             OperatorKind kind, const SolverConfig& cfg,
                             const AcceptancePolicy& policy, EngineRng& rng) {
    SearchResult result{incumbent, false, 0};
    const double factor = factor_for(kind, cfg);

    StateVector batch_best_state;
    double batch_best_fit = std::numeric_limits<double>::infinity();
    for (int s = 0; s < cfg.se; ++s) {
        StateVector cand = make_candidate(kind, incumbent.state, factor, rng.op);
        const double f = checked_eval(objective, cand);
        ++result.evaluations;
        if (f < batch_best_fit) {
            batch_best_fit = f;
            batch_best_state = std::move(cand);
        }
    }

    if (batch_best_fit < incumbent.fitness) {
        StateVector prev = std::move(result.incumbent.state);
        result.incumbent.state = std::move(batch_best_state);
        result.incumbent.fitness = batch_best_fit;
        result.improved = true;
        translation_search(objective, result.incumbent, prev, cfg, rng,
                           result.evaluations);
    } else if (policy.kind == AcceptancePolicy::Kind::RiskInProbability &&
               rng.accept.uniform01() < policy.p2) {
        // ties count as "not better" and fall through to the risk branch
        result.incumbent.state = std::move(batch_best_state);
        result.incumbent.fitness = batch_best_fit;
    }
    return result;
}

namespace {

RunResult run_impl(const ObjectiveFunction& objective, const SolverConfig& cfg_in,
                   RandomStream& rng, bool dynamic, const HistorySink& sink) {
    {
        const auto violations = cfg_in.validate();
        if (!violations.empty()) {
            std::string msg = "invalid solver configuration:";
            for (const auto& v : violations) msg += "\n  " + v;
            throw InvalidConfig(msg);
        }
    }
    SolverConfig cfg = cfg_in; // local copy carries the decaying factors

    // A single [low, high] pair acts as a template for every coordinate.
    if (cfg.initial_bounds.size() == 1 && objective.dimension > 1)
        cfg.initial_bounds.assign(static_cast<std::size_t>(objective.dimension),
                                  cfg.initial_bounds[0]);
    if (static_cast<int>(cfg.initial_bounds.size()) != objective.dimension)
        throw MalformedBounds("engine: bounds dimension does not match the objective");

    EngineRng er = EngineRng::derive_from(rng);
    const AcceptancePolicy policy =
        dynamic ? AcceptancePolicy::risk(cfg.p2) : AcceptancePolicy::greedy();

    RunResult result;
    Incumbent inc;
    inc.state = sample_initial(cfg.initial_bounds, er.op);
    try {
        inc.fitness = checked_eval(objective, inc.state);
    } catch (const EvaluationError& e) {
        result.best_state = std::move(inc.state);
        result.best_fitness = std::numeric_limits<double>::infinity();
        result.status = RunStatus::EvaluationFailed;
        result.error = e.what();
        return result;
    }
    Incumbent archive = inc; // best ever; equals the incumbent under greedy

    static constexpr OperatorKind kOrder[] = {
        OperatorKind::Expansion, OperatorKind::FastRotation, OperatorKind::Axesion};

    for (int iter = 1; iter <= cfg.max_outer_iterations; ++iter) {
        try {
            for (OperatorKind kind : kOrder) {
                SearchResult sr = operator_search(objective, inc, kind, cfg, policy, er);
                result.evaluations += sr.evaluations;
                inc = std::move(sr.incumbent);
            }
        } catch (const EvaluationError& e) {
            result.status = RunStatus::EvaluationFailed;
            result.error = e.what();
            break;
        }

        if (dynamic) {
            if (inc.fitness < archive.fitness) archive = inc;
            if (er.accept.uniform01() < cfg.p1) inc = archive; // restoration
        } else {
            archive = inc; // greedy never worsens
        }

        HistoryRow row{iter, archive.fitness, result.evaluations};
        result.history.push_back(row);
        if (sink) sink(row);

        cfg.alpha.decay();
        cfg.beta.decay();
        cfg.gamma.decay();
        cfg.delta.decay();
    }

    result.best_state = std::move(archive.state);
    result.best_fitness = archive.fitness;
    return result;
}

} // namespace

RunResult run_sta(const ObjectiveFunction& objective, const SolverConfig& cfg,
                  RandomStream& rng, const HistorySink& sink) {
    return run_impl(objective, cfg, rng, false, sink);
}

RunResult run_dsta(const ObjectiveFunction& objective, const SolverConfig& cfg,
                   RandomStream& rng, const HistorySink& sink) {
    return run_impl(objective, cfg, rng, true, sink);
}

RunResult run_engine(Algorithm alg, const ObjectiveFunction& objective,
                     const SolverConfig& cfg, RandomStream& rng, const HistorySink& sink) {
    return alg == Algorithm::Sta ? run_sta(objective, cfg, rng, sink)
                                 : run_dsta(objective, cfg, rng, sink);
}

} // namespace sta
