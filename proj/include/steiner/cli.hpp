#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "steiner/oracle.hpp"

namespace steiner {

/// One resolved CLI invocation. Exactly one of input_path / gen_spec is set
/// for commands that take a tree.
struct RunConfig {
    std::string command; // ecc|aecc|oracle|check|transform|gen|bench
    std::string input_path;             // file path, "-" = stdin
    std::string gen_spec;               // e.g. "star:8", "spider:3,2,1", "random:12:42"
    int k = 0;
    std::optional<int> vertex;
    std::optional<std::uint64_t> seed;  // overrides the gen-spec seed
    std::string format = "text";        // text|json|csv
    long long budget = kDefaultWorkBudget;

    // oracle
    std::string oracle_mode = "auto";   // auto|full|leaves
    bool oracle_enumerate = false;

    // transform
    std::string goal = "star";          // star|path
    bool trace = false;

    // check corpus
    int check_max_n = 8;
    int check_random_lo = 9;
    int check_random_hi = 40;
    int check_trees_per_n = 500;
    int check_transform_max_n = 12;
    std::vector<int> check_ks;          // empty = all k

    // bench
    std::vector<long long> bench_sizes = {1000, 10000, 100000, 1000000};
    int bench_reps = 5;
    std::string bench_family = "spider";
};

/// Exit codes: 0 ok, 1 usage, 2 parse, 3 validation, 4 budget exceeded,
/// 5 property-check counterexample.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full argv-to-exit-code entry point (flag parsing included); stdout-bound
/// results go to `out`, diagnostics to `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace steiner
