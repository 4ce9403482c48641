#include "core/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "core/errors.hpp"

namespace sta {

std::string algorithm_name(Algorithm alg) {
    return alg == Algorithm::Sta ? "sta" : "dsta";
}

Algorithm parse_algorithm(const std::string& name) {
    if (name == "sta") return Algorithm::Sta;
    if (name == "dsta") return Algorithm::Dsta;
    throw MalformedParameters("unknown algorithm: " + name);
}

void SolverConfig::set_shared_schedule(double max_value, double min_value, double base) {
    alpha = FactorSchedule::exponential(max_value, min_value, base);
    beta = alpha;
    gamma = alpha;
    delta = alpha;
}

void SolverConfig::set_uniform_bounds(double low, double high, int dimension) {
    initial_bounds.assign(static_cast<std::size_t>(dimension), Interval{low, high});
}

namespace {

void validate_schedule(const FactorSchedule& s, const char* name,
                       std::vector<std::string>& out) {
    if (!(s.max > 0.0) || !(s.min > 0.0))
        out.push_back(std::string(name) + ": factor bounds must be positive");
    if (!(s.min < s.max))
        out.push_back(std::string(name) + ": factor minimum must be below maximum");
    if (!(s.fc > 1.0))
        out.push_back(std::string(name) + ": decay base must exceed 1");
    if (!(s.current >= s.min) || !(s.current <= s.max))
        out.push_back(std::string(name) + ": current factor outside [min, max]");
}

} // namespace

std::vector<std::string> SolverConfig::validate() const {
    std::vector<std::string> violations;
    validate_schedule(alpha, "alpha", violations);
    validate_schedule(beta, "beta", violations);
    validate_schedule(gamma, "gamma", violations);
    validate_schedule(delta, "delta", violations);
    if (se < 1)
        violations.emplace_back("se: search enforcement must be at least 1");
    if (!(p1 >= 0.0 && p1 <= 1.0))
        violations.emplace_back("p1: probability out of range");
    if (!(p2 >= 0.0 && p2 <= 1.0))
        violations.emplace_back("p2: probability out of range");
    if (max_outer_iterations < 1)
        violations.emplace_back("max_iter: iteration budget must be at least 1");
    for (std::size_t i = 0; i < initial_bounds.size(); ++i) {
        const auto& b = initial_bounds[i];
        if (!(b.low < b.high) || !std::isfinite(b.low) || !std::isfinite(b.high)) {
            violations.emplace_back("bounds[" + std::to_string(i) + "]: low must be below high");
        }
    }
    return violations;
}

StateVector sample_initial(std::span<const Interval> bounds, RandomStream& rng) {
    if (bounds.empty())
        throw MalformedBounds("sample_initial: no bounds given");
    StateVector state(bounds.size());
    for (std::size_t i = 0; i < bounds.size(); ++i) {
        const auto& b = bounds[i];
        if (!(b.low < b.high))
            throw MalformedBounds("sample_initial: bound " + std::to_string(i) +
                                  " has low >= high");
        state[i] = rng.uniform(b.low, b.high);
    }
    return state;
}

namespace {

using nlohmann::json;

const char* const kKnownKeys[] = {"alpha_max", "alpha_min", "fc",       "se",
                                  "p1",        "p2",        "max_iter", "bounds"};

bool known_key(const std::string& key) {
    for (const char* k : kKnownKeys)
        if (key == k) return true;
    return false;
}

} // namespace

SolverConfig config_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("config: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("config: expected a JSON object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (!known_key(key)) throw ParseError("config: unknown key '" + key + "'");
    }

    SolverConfig cfg;
    const double amax = j.value("alpha_max", cfg.alpha.max);
    const double amin = j.value("alpha_min", cfg.alpha.min);
    const double fc = j.value("fc", cfg.alpha.fc);
    cfg.set_shared_schedule(amax, amin, fc);
    cfg.se = j.value("se", cfg.se);
    cfg.p1 = j.value("p1", cfg.p1);
    cfg.p2 = j.value("p2", cfg.p2);
    cfg.max_outer_iterations = j.value("max_iter", cfg.max_outer_iterations);

    if (j.contains("bounds")) {
        const json& b = j["bounds"];
        if (!b.is_array() || b.empty())
            throw ParseError("config: bounds must be a non-empty array");
        cfg.initial_bounds.clear();
        if (b[0].is_number()) {
            // single [low, high] pair, applied per coordinate later
            if (b.size() != 2) throw ParseError("config: bounds pair must have 2 entries");
            cfg.initial_bounds.push_back(Interval{b[0].get<double>(), b[1].get<double>()});
        } else {
            for (const json& pair : b) {
                if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number())
                    throw ParseError("config: bounds entries must be [low, high] pairs");
                cfg.initial_bounds.push_back(Interval{pair[0].get<double>(), pair[1].get<double>()});
            }
        }
    }
    return cfg;
}

std::string config_to_json_text(const SolverConfig& cfg) {
    json j;
    j["alpha_max"] = cfg.alpha.max;
    j["alpha_min"] = cfg.alpha.min;
    j["fc"] = cfg.alpha.fc;
    j["se"] = cfg.se;
    j["p1"] = cfg.p1;
    j["p2"] = cfg.p2;
    j["max_iter"] = cfg.max_outer_iterations;
    if (!cfg.initial_bounds.empty()) {
        bool uniform = true;
        for (const auto& b : cfg.initial_bounds)
            if (b.low != cfg.initial_bounds[0].low || b.high != cfg.initial_bounds[0].high)
                uniform = false;
        if (uniform) {
            j["bounds"] = {cfg.initial_bounds[0].low, cfg.initial_bounds[0].high};
        } else {
            json list = json::array();
            for (const auto& b : cfg.initial_bounds) list.push_back({b.low, b.high});
            j["bounds"] = list;
        }
    }
    return j.dump(2) + "\n";
}

SolverConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return config_from_json_text(buf.str());
}

void save_config(const SolverConfig& cfg, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write config file: " + path);
    out << config_to_json_text(cfg);
    if (!out) throw IoError("failed writing config file: " + path);
}

} // namespace sta
