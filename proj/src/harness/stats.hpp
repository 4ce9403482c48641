#ifndef STA_HARNESS_STATS_HPP
#define STA_HARNESS_STATS_HPP

#include <span>
#include <string>
#include <vector>

namespace sta {

// Per-experiment statistics over the trial finals. std is the sample
// standard deviation (n-1 denominator), 0 by convention for a single trial.
struct TrialStats {
    double best = 0.0;
    double mean = 0.0;
    double stddev = 0.0;
    std::vector<double> finals;
    int failures = 0; // trials excluded from the statistics

    static TrialStats from_finals(std::vector<double> finals, int failures = 0);
};

// Two-sample comparison verdict under minimization: Better means the first
// sample's values are significantly smaller.
struct ComparisonVerdict {
    enum class Sign { Better, Worse, Similar };
    Sign sign = Sign::Similar;
    double p_value = 1.0;
};

const char* verdict_symbol(ComparisonVerdict::Sign sign); // "+", "-", "~"

// Two-sided Wilcoxon rank-sum test. Small samples (both sizes <= 8) use the
// exact permutation distribution of the rank sum (tie-aware); larger samples
// use the normal approximation with tie correction and continuity
// correction. Identical pooled values degenerate to Similar with p = 1.
// The p-value is symmetric in the two samples; the sign flips.
ComparisonVerdict wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b,
                                    double significance = 0.05);

} // namespace sta

#endif
