#pragma once

#include <string>
#include <vector>

namespace steiner {

struct BenchRow {
    long long n = 0;
    int k = 0;
    double median_ns = 0.0;
    int reps = 0;
};

struct BenchReport {
    std::vector<BenchRow> rows;
    double slope = 0.0; // least-squares slope of log(median) vs log(n)
};

/// Times steiner_k_ecc over a size sweep on the named input family and
/// fits a log-log slope. Families:
///   spider — k equal-length legs from a hub, the worst case that drives
///            all k-1 greedy rounds;
///   path   — plain paths (these exercise only the leaf-count shortcut);
///   random — seeded random trees.
/// Monotonic clock, >= `reps` warm repetitions per size (short calls are
/// batched so each sample spans at least a few milliseconds), median
/// reported. Tree construction stays outside the timed region.
BenchReport run_scaling_bench(const std::vector<long long>& sizes, int k, int reps,
                              const std::string& family);

double fitted_loglog_slope(const std::vector<BenchRow>& rows);

} // namespace steiner
