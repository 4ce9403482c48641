#include "problems/snl.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "core/errors.hpp"
#include "core/random_stream.hpp"

namespace sta {

void SnlProblem::validate() const {
    if (dimension != 2 && dimension != 3)
        throw MalformedParameters("snl: dimension must be 2 or 3");
    if (sensor_count < 1)
        throw MalformedParameters("snl: need at least one sensor");
    if (anchors.empty() || static_cast<int>(anchors.size()) % dimension != 0)
        throw MalformedParameters("snl: anchor coordinates not a multiple of dimension");
    if (!(radio_range > 0.0))
        throw MalformedParameters("snl: radio range must be positive");
    if (noise_factor < 0.0)
        throw MalformedParameters("snl: noise factor must be non-negative");

    const int m = anchor_count();
    std::set<std::pair<int, int>> seen_ss;
    for (const auto& e : sensor_edges) {
        if (e.i < 0 || e.j < 0 || e.i >= sensor_count || e.j >= sensor_count || e.i >= e.j)
            throw MalformedParameters("snl: bad sensor edge indices");
        if (!(e.dist > 0.0))
            throw MalformedParameters("snl: sensor edge distance must be positive");
        if (!seen_ss.insert({e.i, e.j}).second)
            throw MalformedParameters("snl: duplicate sensor edge");
    }
    std::set<std::pair<int, int>> seen_sa;
    for (const auto& e : anchor_edges) {
        if (e.sensor < 0 || e.sensor >= sensor_count || e.anchor < 0 || e.anchor >= m)
            throw MalformedParameters("snl: bad anchor edge indices");
        if (!(e.dist > 0.0))
            throw MalformedParameters("snl: anchor edge distance must be positive");
        if (!seen_sa.insert({e.sensor, e.anchor}).second)
            throw MalformedParameters("snl: duplicate anchor edge");
    }
}

namespace {

inline double sqdist(const double* a, const double* b, int d) {
    double s = 0.0;
    for (int c = 0; c < d; ++c) {
        const double t = a[c] - b[c];
        s += t * t;
    }
    return s;
}

} // namespace

double snl_objective(const SnlProblem& p, std::span<const double> layout) {
    if (static_cast<int>(layout.size()) != p.layout_size())
        throw DimensionMismatch("snl_objective: layout size != sensors * dimension");
    const int d = p.dimension;
    double total = 0.0;
    for (const auto& e : p.sensor_edges) {
        const double r = sqdist(layout.data() + e.i * d, layout.data() + e.j * d, d) -
                         e.dist * e.dist;
        total += r * r;
    }
    for (const auto& e : p.anchor_edges) {
        const double r = sqdist(layout.data() + e.sensor * d,
                                p.anchors.data() + e.anchor * d, d) -
                         e.dist * e.dist;
        total += r * r;
    }
    return total;
}

std::vector<double> snl_gradient(const SnlProblem& p, std::span<const double> layout) {
    if (static_cast<int>(layout.size()) != p.layout_size())
        throw DimensionMismatch("snl_gradient: layout size != sensors * dimension");
    const int d = p.dimension;
    std::vector<double> grad(layout.size(), 0.0);
    for (const auto& e : p.sensor_edges) {
        const double* xi = layout.data() + e.i * d;
        const double* xj = layout.data() + e.j * d;
        const double r = sqdist(xi, xj, d) - e.dist * e.dist;
        const double c = 4.0 * r;
        for (int k = 0; k < d; ++k) {
            const double diff = xi[k] - xj[k];
            grad[e.i * d + k] += c * diff;
            grad[e.j * d + k] -= c * diff;
        }
    }
    for (const auto& e : p.anchor_edges) {
        const double* xi = layout.data() + e.sensor * d;
        const double* ak = p.anchors.data() + e.anchor * d;
        const double r = sqdist(xi, ak, d) - e.dist * e.dist;
        const double c = 4.0 * r;
        for (int k = 0; k < d; ++k) grad[e.sensor * d + k] += c * (xi[k] - ak[k]);
    }
    return grad;
}

ObjectiveFunction make_objective(const SnlProblem& p) {
    return ObjectiveFunction{p.layout_size(), [p](std::span<const double> x) {
                                 return snl_objective(p, x);
                             }};
}

GradientFunction make_gradient(const SnlProblem& p) {
    return [p](std::span<const double> x) { return snl_gradient(p, x); };
}

SnlInstance generate_problem(int sensors, int anchors, double radio_range,
                             double noise_factor, std::uint64_t seed) {
    if (sensors < 1 || anchors < 1)
        throw MalformedParameters("generate_problem: need sensors >= 1 and anchors >= 1");
    if (!(radio_range > 0.0))
        throw MalformedParameters("generate_problem: radio range must be positive");
    if (noise_factor < 0.0)
        throw MalformedParameters("generate_problem: noise factor must be non-negative");

    const int d = 2;
    RandomStream rng(seed);

    SnlInstance inst;
    SnlProblem& p = inst.problem;
    p.dimension = d;
    p.sensor_count = sensors;
    p.radio_range = radio_range;
    p.noise_factor = noise_factor;

    SensorLayout truth(static_cast<std::size_t>(sensors) * d);
    for (double& c : truth) c = rng.uniform01();
    p.anchors.resize(static_cast<std::size_t>(anchors) * d);
    for (double& c : p.anchors) c = rng.uniform01();

    auto record = [&](double true_dist) {
        if (noise_factor == 0.0) return true_dist;
        double dist;
        do {
            dist = true_dist * (1.0 + noise_factor * rng.gaussian());
        } while (dist <= 0.0);
        return dist;
    };

    for (int i = 0; i < sensors; ++i) {
        for (int j = i + 1; j < sensors; ++j) {
            const double t = std::sqrt(sqdist(truth.data() + i * d, truth.data() + j * d, d));
            if (t <= radio_range && t > 0.0)
                p.sensor_edges.push_back({i, j, record(t)});
        }
    }
    for (int i = 0; i < sensors; ++i) {
        for (int k = 0; k < anchors; ++k) {
            const double t =
                std::sqrt(sqdist(truth.data() + i * d, p.anchors.data() + k * d, d));
            if (t <= radio_range && t > 0.0)
                p.anchor_edges.push_back({i, k, record(t)});
        }
    }

    p.validate();
    inst.truth = std::move(truth);
    return inst;
}

SnlInstance illustrative_example() {
    // Four corner anchors, eight sensors in symmetric pairs along the
    // square's edges. The measured distances are exact (1/4, sqrt(15)/8,
    // sqrt(19)/8), so the closed-form layout below has zero residual.
    const double s = std::sqrt(15.0) / 32.0; // 0.121031...
    const double a = 15.0 / 32.0;            // 0.46875
    const double b = 17.0 / 32.0;            // 0.53125

    SnlInstance inst;
    SnlProblem& p = inst.problem;
    p.dimension = 2;
    p.sensor_count = 8;
    p.anchors = {0.0, 0.0, 0.0, 1.0, 1.0, 0.0, 1.0, 1.0};
    p.radio_range = 0.6;
    p.noise_factor = 0.0;

    const double quarter = 0.25;
    p.sensor_edges = {{0, 1, quarter}, {2, 3, quarter}, {4, 5, quarter}, {6, 7, quarter}};

    const double near = std::sqrt(15.0) / 8.0; // 0.484123...
    const double far = std::sqrt(19.0) / 8.0;  // 0.544862...
    p.anchor_edges = {
        {0, 0, near}, {0, 2, far},  {1, 0, far},  {1, 2, near}, // sensors 1,2 vs a1,a3
        {2, 2, near}, {2, 3, far},  {3, 2, far},  {3, 3, near}, // sensors 3,4 vs a3,a4
        {4, 1, far},  {4, 3, near}, {5, 1, near}, {5, 3, far},  // sensors 5,6 vs a2,a4
        {6, 0, far},  {6, 1, near}, {7, 0, near}, {7, 1, far},  // sensors 7,8 vs a1,a2
    };

    inst.truth = SensorLayout{
        a,       s,       // (0.4688,  0.1210)
        b,       -s,      // (0.5313, -0.1210)
        1.0 - s, a,       // (0.8790,  0.4688)
        1.0 + s, b,       // (1.1210,  0.5313)
        b,       1.0 + s, // (0.5313,  1.1210)
        a,       1.0 - s, // (0.4688,  0.8790)
        -s,      b,       // (-0.1210, 0.5313)
        s,       a,       // (0.1210,  0.4688)
    };

    p.validate();
    return inst;
}

PositionError position_error(std::span<const double> estimate,
                             std::span<const double> truth, int dimension) {
    if (estimate.size() != truth.size() || estimate.size() % dimension != 0)
        throw DimensionMismatch("position_error: layouts differ in shape");
    const std::size_t n = estimate.size() / dimension;
    PositionError err;
    double sum_sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double sq = 0.0;
        for (int c = 0; c < dimension; ++c) {
            const double diff = estimate[i * dimension + c] - truth[i * dimension + c];
            sq += diff * diff;
        }
        sum_sq += sq;
        err.max_deviation = std::max(err.max_deviation, std::sqrt(sq));
    }
    err.rmsd = std::sqrt(sum_sq / static_cast<double>(n));
    return err;
}

// ---------------------------------------------------------------------------
// instance text format

namespace {

std::string fmt(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& tok, int line_no) {
    double v = 0.0;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
        throw ParseError("snl instance: bad number '" + tok + "' on line " +
                         std::to_string(line_no));
    return v;
}

int parse_int(const std::string& tok, int line_no) {
    int v = 0;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
        throw ParseError("snl instance: bad integer '" + tok + "' on line " +
                         std::to_string(line_no));
    return v;
}

} // namespace

std::string instance_to_text(const SnlInstance& inst) {
    const SnlProblem& p = inst.problem;
    std::ostringstream out;
    out << "snl " << p.dimension << ' ' << p.sensor_count << ' ' << p.anchor_count()
        << ' ' << fmt(p.radio_range) << ' ' << fmt(p.noise_factor) << '\n';
    for (int k = 0; k < p.anchor_count(); ++k) {
        out << "anchor " << (k + 1);
        for (double c : p.anchor(k)) out << ' ' << fmt(c);
        out << '\n';
    }
    for (const auto& e : p.sensor_edges)
        out << "ss " << (e.i + 1) << ' ' << (e.j + 1) << ' ' << fmt(e.dist) << '\n';
    for (const auto& e : p.anchor_edges)
        out << "sa " << (e.sensor + 1) << ' ' << (e.anchor + 1) << ' ' << fmt(e.dist)
            << '\n';
    if (inst.truth) {
        for (int i = 0; i < p.sensor_count; ++i) {
            out << "truth " << (i + 1);
            for (int c = 0; c < p.dimension; ++c)
                out << ' ' << fmt((*inst.truth)[i * p.dimension + c]);
            out << '\n';
        }
    }
    return out.str();
}

SnlInstance instance_from_text(const std::string& text) {
    SnlInstance inst;
    SnlProblem& p = inst.problem;
    bool header_seen = false;
    std::vector<double> truth;
    std::vector<bool> truth_set;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;

        if (tok[0] == "snl") {
            if (tok.size() != 6) throw ParseError("snl instance: bad header");
            p.dimension = parse_int(tok[1], line_no);
            p.sensor_count = parse_int(tok[2], line_no);
            const int m = parse_int(tok[3], line_no);
            p.radio_range = parse_double(tok[4], line_no);
            p.noise_factor = parse_double(tok[5], line_no);
            if (p.dimension < 2 || p.dimension > 3 || p.sensor_count < 1 || m < 1)
                throw ParseError("snl instance: bad header values");
            p.anchors.assign(static_cast<std::size_t>(m) * p.dimension, 0.0);
            truth.assign(static_cast<std::size_t>(p.sensor_count) * p.dimension, 0.0);
            truth_set.assign(static_cast<std::size_t>(p.sensor_count), false);
            header_seen = true;
            continue;
        }
        if (!header_seen)
            throw ParseError("snl instance: 'snl' header must come first");

        if (tok[0] == "anchor") {
            if (static_cast<int>(tok.size()) != 2 + p.dimension)
                throw ParseError("snl instance: bad anchor line " + std::to_string(line_no));
            const int k = parse_int(tok[1], line_no) - 1;
            if (k < 0 || k >= p.anchor_count())
                throw ParseError("snl instance: anchor index out of range on line " +
                                 std::to_string(line_no));
            for (int c = 0; c < p.dimension; ++c)
                p.anchors[k * p.dimension + c] = parse_double(tok[2 + c], line_no);
        } else if (tok[0] == "ss") {
            if (tok.size() != 4)
                throw ParseError("snl instance: bad ss line " + std::to_string(line_no));
            SensorEdge e;
            e.i = parse_int(tok[1], line_no) - 1;
            e.j = parse_int(tok[2], line_no) - 1;
            if (e.i > e.j) std::swap(e.i, e.j);
            e.dist = parse_double(tok[3], line_no);
            p.sensor_edges.push_back(e);
        } else if (tok[0] == "sa") {
            if (tok.size() != 4)
                throw ParseError("snl instance: bad sa line " + std::to_string(line_no));
            AnchorEdge e;
            e.sensor = parse_int(tok[1], line_no) - 1;
            e.anchor = parse_int(tok[2], line_no) - 1;
            e.dist = parse_double(tok[3], line_no);
            p.anchor_edges.push_back(e);
        } else if (tok[0] == "truth") {
            if (static_cast<int>(tok.size()) != 2 + p.dimension)
                throw ParseError("snl instance: bad truth line " + std::to_string(line_no));
            const int i = parse_int(tok[1], line_no) - 1;
            if (i < 0 || i >= p.sensor_count)
                throw ParseError("snl instance: truth index out of range on line " +
                                 std::to_string(line_no));
            for (int c = 0; c < p.dimension; ++c)
                truth[i * p.dimension + c] = parse_double(tok[2 + c], line_no);
            truth_set[static_cast<std::size_t>(i)] = true;
        } else {
            throw ParseError("snl instance: unknown record '" + tok[0] + "' on line " +
                             std::to_string(line_no));
        }
    }
    if (!header_seen) throw ParseError("snl instance: missing header");

    try {
        p.validate();
    } catch (const MalformedParameters& e) {
        throw ParseError(std::string("snl instance: ") + e.what());
    }

    const bool any_truth =
        std::any_of(truth_set.begin(), truth_set.end(), [](bool b) { return b; });
    if (any_truth) {
        if (!std::all_of(truth_set.begin(), truth_set.end(), [](bool b) { return b; }))
            throw ParseError("snl instance: truth lines must cover every sensor");
        inst.truth = std::move(truth);
    }
    return inst;
}

SnlInstance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open instance file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return instance_from_text(buf.str());
}

void save_instance(const SnlInstance& inst, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write instance file: " + path);
    out << instance_to_text(inst);
    if (!out) throw IoError("failed writing instance file: " + path);
}

} // namespace sta
