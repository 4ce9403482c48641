#include "harness/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "core/errors.hpp"

namespace sta {

TrialStats TrialStats::from_finals(std::vector<double> finals, int failures) {
    TrialStats s;
    s.finals = std::move(finals);
    s.failures = failures;
    if (s.finals.empty()) {
        s.best = s.mean = s.stddev = std::numeric_limits<double>::quiet_NaN();
        return s;
    }
    s.best = *std::min_element(s.finals.begin(), s.finals.end());
    // Welford's online recurrence; an independent two-pass sum cross-checks
    // this in the tests.
    double mean = 0.0, m2 = 0.0;
    std::size_t count = 0;
    for (double v : s.finals) {
        ++count;
        const double d1 = v - mean;
        mean += d1 / static_cast<double>(count);
        m2 += d1 * (v - mean);
    }
    s.mean = mean;
    s.stddev = count > 1 ? std::sqrt(m2 / static_cast<double>(count - 1)) : 0.0;
    return s;
}

const char* verdict_symbol(ComparisonVerdict::Sign sign) {
    switch (sign) {
        case ComparisonVerdict::Sign::Better: return "+";
        case ComparisonVerdict::Sign::Worse: return "-";
        case ComparisonVerdict::Sign::Similar: return "~";
    }
    return "?";
}

namespace {

// Midranks doubled so they stay integral under ties.
std::vector<long long> doubled_ranks(std::span<const double> pooled_sorted) {
    const std::size_t n = pooled_sorted.size();
    std::vector<long long> r2(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && pooled_sorted[j + 1] == pooled_sorted[i]) ++j;
        // ranks i+1 .. j+1 share the midrank (i+j+2)/2
        const long long shared = static_cast<long long>(i + j + 2);
        for (std::size_t k = i; k <= j; ++k) r2[k] = shared;
        i = j + 1;
    }
    return r2;
}

double median_of(std::span<const double> v) {
    std::vector<double> s(v.begin(), v.end());
    std::sort(s.begin(), s.end());
    const std::size_t n = s.size();
    return n % 2 == 1 ? s[n / 2] : 0.5 * (s[n / 2 - 1] + s[n / 2]);
}

// Exact two-sided p-value of the rank sum via subset-sum counting: the
// number of n1-subsets of the pooled ranks at least as far from the mean
// rank sum as the observed one, over C(N, n1).
double exact_p_value(const std::vector<long long>& r2, std::size_t n1, long long w2) {
    const std::size_t n = r2.size();
    long long total = 0;
    for (long long r : r2) total += r;

    // counts[k][s] = number of k-subsets with doubled-rank sum s
    std::vector<std::vector<std::uint64_t>> counts(
        n1 + 1, std::vector<std::uint64_t>(static_cast<std::size_t>(total) + 1, 0));
    counts[0][0] = 1;
    for (std::size_t item = 0; item < n; ++item) {
        const auto r = static_cast<std::size_t>(r2[item]);
        const std::size_t kmax = std::min(n1, item + 1);
        for (std::size_t k = kmax; k >= 1; --k) {
            auto& row = counts[k];
            const auto& prev = counts[k - 1];
            for (std::size_t s = static_cast<std::size_t>(total); s >= r; --s)
                row[s] += prev[s - r];
        }
    }

    // doubled mean rank sum 2*mu = n1*(N+1); quadruple both sides to compare
    // |s - mu| without fractions
    const long long mu4 = 2 * static_cast<long long>(n1) * static_cast<long long>(n + 1);
    const long long obs4 = std::llabs(2 * w2 - mu4); // both sides quadrupled
    std::uint64_t extreme = 0, all = 0;
    for (std::size_t s = 0; s < counts[n1].size(); ++s) {
        const std::uint64_t c = counts[n1][s];
        if (c == 0) continue;
        all += c;
        const long long dist4 = std::llabs(2 * static_cast<long long>(s) - mu4);
        if (dist4 >= obs4) extreme += c;
    }
    return static_cast<double>(extreme) / static_cast<double>(all);
}

} // namespace

ComparisonVerdict wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b,
                                    double significance) {
    if (a.empty() || b.empty())
        throw MalformedParameters("wilcoxon_rank_sum: samples must be non-empty");
    const std::size_t n1 = a.size(), n2 = b.size(), n = n1 + n2;

    struct Tagged {
        double value;
        bool from_a;
    };
    std::vector<Tagged> pooled;
    pooled.reserve(n);
    for (double v : a) pooled.push_back({v, true});
    for (double v : b) pooled.push_back({v, false});
    std::stable_sort(pooled.begin(), pooled.end(),
                     [](const Tagged& x, const Tagged& y) { return x.value < y.value; });

    std::vector<double> sorted_values(n);
    for (std::size_t i = 0; i < n; ++i) sorted_values[i] = pooled[i].value;
    const std::vector<long long> r2 = doubled_ranks(sorted_values);

    long long w2 = 0; // doubled rank sum of sample a
    for (std::size_t i = 0; i < n; ++i)
        if (pooled[i].from_a) w2 += r2[i];

    ComparisonVerdict verdict;
    if (sorted_values.front() == sorted_values.back()) {
        // every pooled value identical: no information
        verdict.p_value = 1.0;
        verdict.sign = ComparisonVerdict::Sign::Similar;
        return verdict;
    }

    const long long c2 = w2 - static_cast<long long>(n1) * static_cast<long long>(n + 1);
    // c2/2 = W - E[W]; integer arithmetic keeps |c2| identical under a<->b swap

    if (n1 <= 8 && n2 <= 8) {
        verdict.p_value = exact_p_value(r2, n1, w2);
    } else {
        // tie-corrected variance of W
        double tie_term = 0.0;
        std::size_t i = 0;
        while (i < n) {
            std::size_t j = i;
            while (j + 1 < n && sorted_values[j + 1] == sorted_values[i]) ++j;
            const double t = static_cast<double>(j - i + 1);
            tie_term += t * t * t - t;
            i = j + 1;
        }
        const double nn = static_cast<double>(n);
        const double var = static_cast<double>(n1) * static_cast<double>(n2) / 12.0 *
                           ((nn + 1.0) - tie_term / (nn * (nn - 1.0)));
        if (var <= 0.0) {
            verdict.p_value = 1.0;
            verdict.sign = ComparisonVerdict::Sign::Similar;
            return verdict;
        }
        const double dev = std::abs(static_cast<double>(c2)) / 2.0;
        const double z = std::max(0.0, dev - 0.5) / std::sqrt(var); // continuity correction
        verdict.p_value = std::erfc(z / std::sqrt(2.0));            // two-sided
    }
    if (verdict.p_value > 1.0) verdict.p_value = 1.0;

    if (verdict.p_value >= significance) {
        verdict.sign = ComparisonVerdict::Sign::Similar;
        return verdict;
    }
    const double med_a = median_of(a);
    const double med_b = median_of(b);
    if (med_a < med_b) {
        verdict.sign = ComparisonVerdict::Sign::Better;
    } else if (med_a > med_b) {
        verdict.sign = ComparisonVerdict::Sign::Worse;
    } else {
        // medians tie; fall back to the rank-sum direction
        verdict.sign = c2 < 0 ? ComparisonVerdict::Sign::Better
                              : ComparisonVerdict::Sign::Worse;
    }
    return verdict;
}

} // namespace sta
