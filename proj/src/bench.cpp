#include "steiner/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "steiner/generators.hpp"
#include "steiner/kecc.hpp"

namespace steiner {

namespace {

Tree build_family(const std::string& family, long long n, int k) {
    if (family == "path")
        return make_path(static_cast<int>(n));
    if (family == "random")
        return random_pruefer_tree(static_cast<int>(n), 0x9e3779b97f4a7c15ULL ^ n);
    if (family == "spider") {
        // k legs as equal as possible; forces the full k-1 greedy rounds
        const int legs = std::max(k, 2);
        if (n < legs + 1)
            throw Error(errc::bad_params, "spider family needs n > k");
        std::vector<int> lengths(legs, static_cast<int>((n - 1) / legs));
        for (long long r = (n - 1) % legs, i = 0; i < r; ++i)
            ++lengths[static_cast<size_t>(i)];
        return make_spider(lengths);
    }
    throw Error(errc::bad_params, "unknown bench family '" + family + "'");
}

} // namespace

BenchReport run_scaling_bench(const std::vector<long long>& sizes, int k, int reps,
                              const std::string& family) {
    using clock = std::chrono::steady_clock;
    constexpr double kMinSampleNs = 5e6; // batch short calls up to ~5 ms

    BenchReport report;
    for (long long n : sizes) {
        const Tree t = build_family(family, n, k);
        const int v = 0;

        // warmup + batch sizing
        volatile long long sink = steiner_k_ecc(t, v, k).ecc;
        auto probe_start = clock::now();
        sink = sink + steiner_k_ecc(t, v, k).ecc;
        const double probe_ns = std::chrono::duration<double, std::nano>(
                                    clock::now() - probe_start)
                                    .count();
        const int batch = std::max(1, static_cast<int>(kMinSampleNs / std::max(probe_ns, 1.0)));

        std::vector<double> samples;
        samples.reserve(reps);
        for (int r = 0; r < reps; ++r) {
            const auto start = clock::now();
            for (int b = 0; b < batch; ++b)
                sink = sink + steiner_k_ecc(t, v, k).ecc;
            const double ns =
                std::chrono::duration<double, std::nano>(clock::now() - start).count();
            samples.push_back(ns / batch);
        }
        std::sort(samples.begin(), samples.end());
        const double median = samples[samples.size() / 2];
        report.rows.push_back(BenchRow{n, k, median, reps});
        (void)sink;
    }
    report.slope = fitted_loglog_slope(report.rows);
    return report;
}

double fitted_loglog_slope(const std::vector<BenchRow>& rows) {
    if (rows.size() < 2)
        return 0.0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(rows.size());
    for (const auto& row : rows) {
        const double x = std::log(static_cast<double>(row.n));
        const double y = std::log(row.median_ns);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

} // namespace steiner
