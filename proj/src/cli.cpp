#include "steiner/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "steiner/bench.hpp"
#include "steiner/checks.hpp"
#include "steiner/edge_list.hpp"
#include "steiner/generators.hpp"
#include "steiner/kecc.hpp"
#include "steiner/transforms.hpp"

namespace steiner {

namespace {

using nlohmann::json;

long long parse_ll(std::string_view s, const std::string& what) {
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw Error(errc::bad_params, "cannot parse " + what + " from '" + std::string(s) + "'");
    return value;
}

std::vector<int> parse_int_list(std::string_view s, const std::string& what) {
    std::vector<int> out;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        if (comma == std::string_view::npos)
            comma = s.size();
        out.push_back(static_cast<int>(parse_ll(s.substr(pos, comma - pos), what)));
        pos = comma + 1;
        if (comma == s.size())
            break;
    }
    return out;
}

/// Grammar: star:N | path:N | spider:L1,L2,... | caterpillar:S:P1,...,PS |
/// random:N[:SEED] (random_pruefer accepted as alias).
GenSpec parse_gen_spec(const std::string& text) {
    std::vector<std::string> parts;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t colon = text.find(':', pos);
        if (colon == std::string::npos)
            colon = text.size();
        parts.push_back(text.substr(pos, colon - pos));
        pos = colon + 1;
        if (colon == text.size())
            break;
    }
    if (parts.empty() || parts[0].empty())
        throw Error(errc::bad_params, "empty generator spec");

    GenSpec spec;
    const std::string& kind = parts[0];
    if (kind == "star" || kind == "path") {
        if (parts.size() != 2)
            throw Error(errc::bad_params, kind + " spec needs exactly '" + kind + ":N'");
        spec.kind = kind == "star" ? TreeKind::Star : TreeKind::Path;
        spec.n = static_cast<int>(parse_ll(parts[1], "n"));
    } else if (kind == "spider") {
        if (parts.size() != 2)
            throw Error(errc::bad_params, "spider spec needs 'spider:L1,L2,...'");
        spec.kind = TreeKind::Spider;
        spec.params = parse_int_list(parts[1], "leg length");
        spec.n = 1;
        for (int len : spec.params)
            spec.n += len;
    } else if (kind == "caterpillar") {
        if (parts.size() != 3)
            throw Error(errc::bad_params, "caterpillar spec needs 'caterpillar:S:P1,...,PS'");
        spec.kind = TreeKind::Caterpillar;
        const int spine = static_cast<int>(parse_ll(parts[1], "spine length"));
        const auto pendants = parse_int_list(parts[2], "pendant count");
        spec.params.push_back(spine);
        spec.params.insert(spec.params.end(), pendants.begin(), pendants.end());
        spec.n = spine;
        for (int p : pendants)
            spec.n += p;
    } else if (kind == "random" || kind == "random_pruefer") {
        if (parts.size() != 2 && parts.size() != 3)
            throw Error(errc::bad_params, "random spec needs 'random:N[:SEED]'");
        spec.kind = TreeKind::RandomPruefer;
        spec.n = static_cast<int>(parse_ll(parts[1], "n"));
        if (parts.size() == 3)
            spec.seed = static_cast<std::uint64_t>(parse_ll(parts[2], "seed"));
    } else {
        throw Error(errc::bad_params, "unknown generator kind '" + kind + "'");
    }
    return spec;
}

ParsedTree load_tree(const RunConfig& config) {
    const bool have_input = !config.input_path.empty();
    const bool have_gen = !config.gen_spec.empty();
    if (have_input == have_gen)
        throw Error(errc::bad_params, "exactly one of --input and --gen is required");

    if (have_gen) {
        GenSpec spec = parse_gen_spec(config.gen_spec);
        if (config.seed)
            spec.seed = *config.seed;
        Tree t = generate(spec);
        std::vector<long long> labels(t.order());
        for (int v = 0; v < t.order(); ++v)
            labels[v] = v;
        return ParsedTree{std::move(t), std::move(labels)};
    }

    std::string text;
    if (config.input_path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    } else {
        std::ifstream file(config.input_path, std::ios::binary);
        if (!file)
            throw Error(errc::parse_error, "cannot open '" + config.input_path + "'");
        std::ostringstream buffer;
        buffer << file.rdbuf();
        text = buffer.str();
    }
    return parse_edge_list(text);
}

json label_map_json(const std::vector<long long>& labels) {
    json arr = json::array();
    for (long long label : labels)
        arr.push_back(label);
    return arr;
}

std::string join_ints(const std::vector<int>& values, char sep) {
    std::string out;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

int run_ecc(const RunConfig& config, std::ostream& out) {
    const ParsedTree input = load_tree(config);
    if (!config.vertex)
        throw Error(errc::bad_params, "ecc needs --vertex");
    const EccReport report = steiner_k_ecc(input.tree, *config.vertex, config.k);

    if (config.format == "json") {
        json j{{"n", input.tree.order()},     {"k", report.k},
               {"vertex", report.vertex},     {"ecc", report.ecc},
               {"segments", report.segment_lengths}, {"shortcut", report.shortcut_used},
               {"label_map", label_map_json(input.label_map)}};
        out << j.dump() << '\n';
    } else if (config.format == "csv") {
        out << "n,k,vertex,ecc,shortcut,segments\n"
            << input.tree.order() << ',' << report.k << ',' << report.vertex << ','
            << report.ecc << ',' << (report.shortcut_used ? "true" : "false") << ','
            << join_ints(report.segment_lengths, ';') << '\n';
    } else {
        out << "ecc_" << report.k << "(" << report.vertex << ") = " << report.ecc
            << "  segments=" << join_ints(report.segment_lengths, ',')
            << " shortcut=" << (report.shortcut_used ? "true" : "false") << '\n';
    }
    return 0;
}

int run_aecc(const RunConfig& config, std::ostream& out) {
    const ParsedTree input = load_tree(config);
    const Rational aecc = avg_steiner_k_ecc(input.tree, config.k);

    if (config.format == "json") {
        json j{{"n", input.tree.order()},
               {"k", config.k},
               {"aecc_num", aecc.num},
               {"aecc_den", aecc.den},
               {"aecc_decimal", aecc.to_decimal()},
               {"label_map", label_map_json(input.label_map)}};
        out << j.dump() << '\n';
    } else if (config.format == "csv") {
        out << "n,k,num,den,decimal\n"
            << input.tree.order() << ',' << config.k << ',' << aecc.num << ',' << aecc.den
            << ',' << aecc.to_decimal() << '\n';
    } else {
        out << aecc.to_string() << " (" << aecc.to_decimal() << ")\n";
    }
    return 0;
}

int run_oracle(const RunConfig& config, std::ostream& out) {
    const ParsedTree input = load_tree(config);
    if (!config.vertex)
        throw Error(errc::bad_params, "oracle needs --vertex");
    SubsetMode mode = SubsetMode::Auto;
    if (config.oracle_mode == "full")
        mode = SubsetMode::Full;
    else if (config.oracle_mode == "leaves")
        mode = SubsetMode::LeavesOnly;
    else if (config.oracle_mode != "auto")
        throw Error(errc::bad_params, "oracle mode must be auto|full|leaves");

    const SteinerResult result =
        ecc_k_bruteforce(input.tree, *config.vertex, config.k, mode, config.budget);
    std::vector<std::vector<int>> all_sets;
    if (config.oracle_enumerate)
        for (auto& s : enumerate_kecc_sets(input.tree, *config.vertex, config.k, config.budget))
            all_sets.push_back(std::move(s));

    if (config.format == "json") {
        json edges = json::array();
        for (const auto& [a, b] : result.witness_edges)
            edges.push_back(json::array({a, b}));
        json j{{"n", input.tree.order()},         {"k", config.k},
               {"vertex", *config.vertex},        {"ecc", result.value},
               {"witness", result.witness_set},   {"witness_edges", edges},
               {"label_map", label_map_json(input.label_map)}};
        if (config.oracle_enumerate)
            j["sets"] = all_sets;
        out << j.dump() << '\n';
    } else if (config.format == "csv") {
        out << "n,k,vertex,ecc,witness\n"
            << input.tree.order() << ',' << config.k << ',' << *config.vertex << ','
            << result.value << ',' << join_ints(result.witness_set, ';') << '\n';
    } else {
        out << "ecc_" << config.k << "(" << *config.vertex << ") = " << result.value
            << "  witness={" << join_ints(result.witness_set, ',') << "}\n";
        if (config.oracle_enumerate)
            for (const auto& s : all_sets)
                out << "set {" << join_ints(s, ',') << "}\n";
    }
    return 0;
}

int run_gen(const RunConfig& config, std::ostream& out) {
    if (config.gen_spec.empty())
        throw Error(errc::bad_params, "gen needs --gen");
    GenSpec spec = parse_gen_spec(config.gen_spec);
    if (config.seed)
        spec.seed = *config.seed;
    const Tree t = generate(spec);

    if (config.format == "json") {
        json edges = json::array();
        for (const auto& [a, b] : t.edge_list())
            edges.push_back(json::array({a, b}));
        json j{{"n", t.order()}, {"edges", edges}};
        out << j.dump() << '\n';
    } else {
        out << render_edge_list(t);
    }
    return 0;
}

int run_transform(const RunConfig& config, std::ostream& out) {
    const ParsedTree input = load_tree(config);
    TransformGoal goal;
    if (config.goal == "star")
        goal = TransformGoal::Star;
    else if (config.goal == "path")
        goal = TransformGoal::Path;
    else
        throw Error(errc::bad_params, "goal must be star|path");

    auto [terminal, steps] = goal == TransformGoal::Star ? collapse_to_star(input.tree)
                                                         : stretch_to_path(input.tree);

    if (config.format == "json") {
        json step_arr = json::array();
        for (const auto& s : steps)
            step_arr.push_back(json{{"kind", s.kind == TransformKind::Pi ? "pi" : "pi_inverse"},
                                    {"path", s.path},
                                    {"from", s.moved_from},
                                    {"to", s.moved_to},
                                    {"moved", s.moved_neighbors}});
        json edges = json::array();
        for (const auto& [a, b] : terminal.edge_list())
            edges.push_back(json::array({a, b}));
        json j{{"n", terminal.order()},
               {"steps", step_arr},
               {"tree_edges", edges},
               {"label_map", label_map_json(input.label_map)}};
        out << j.dump() << '\n';
    } else {
        // trace lines go out as '#' comments so the output still parses as
        // an edge list
        if (config.trace)
            for (const auto& s : steps)
                out << "# " << format_step(s) << '\n';
        out << render_edge_list(terminal);
    }
    return 0;
}

int run_bench(const RunConfig& config, std::ostream& out) {
    const BenchReport report =
        run_scaling_bench(config.bench_sizes, config.k, config.bench_reps, config.bench_family);

    if (config.format == "json") {
        json rows = json::array();
        for (const auto& row : report.rows)
            rows.push_back(json{{"n", row.n}, {"k", row.k}, {"median_ns", row.median_ns},
                                {"reps", row.reps}});
        out << json{{"rows", rows}, {"slope", report.slope}}.dump() << '\n';
    } else if (config.format == "csv") {
        out << "n,k,median_ns,reps,slope\n";
        for (const auto& row : report.rows)
            out << row.n << ',' << row.k << ',' << row.median_ns << ',' << row.reps << ','
                << report.slope << '\n';
    } else {
        for (const auto& row : report.rows)
            out << "n=" << row.n << " k=" << row.k << " median_ns=" << row.median_ns
                << " reps=" << row.reps << '\n';
        out << "loglog_slope = " << report.slope << '\n';
    }
    return 0;
}

struct CheckTally {
    long long trees = 0;
    long long oracle_cases = 0, oracle_skipped = 0;
    long long theorem_cases = 0, theorem_skipped = 0;
    long long mono_cases = 0;
    long long bounds_trees = 0;
    std::string counterexample;

    bool failed() const { return !counterexample.empty(); }
};

void check_one_tree(const Tree& t, const RunConfig& config, CheckTally& tally) {
    ++tally.trees;
    const auto oracle = check_tree_oracle_equivalence(t, config.budget, /*compare_modes=*/true,
                                                      config.check_ks);
    tally.oracle_cases += oracle.cases;
    tally.oracle_skipped += oracle.skipped;
    if (!oracle.ok) {
        tally.counterexample = "oracle equivalence: " + oracle.detail;
        return;
    }
    const auto theorems = check_tree_theorems(t, config.budget, config.check_ks);
    tally.theorem_cases += theorems.cases;
    tally.theorem_skipped += theorems.skipped;
    if (!theorems.ok) {
        tally.counterexample = "theorem check: " + theorems.detail;
        return;
    }
    if (t.order() <= config.check_transform_max_n) {
        std::vector<int> ks = config.check_ks;
        if (ks.empty())
            ks = {3, 4, 5};
        const auto mono = check_tree_pi_monotonicity(t, ks);
        tally.mono_cases += mono.cases;
        if (!mono.ok) {
            tally.counterexample = "pi monotonicity: " + mono.detail;
            return;
        }
        const auto bounds = check_tree_bounds(t, ks);
        ++tally.bounds_trees;
        if (!bounds.ok)
            tally.counterexample = "bounds: " + bounds.detail;
    }
}

int run_check(const RunConfig& config, std::ostream& out, std::ostream& err) {
    CheckTally tally;

    for (int n = 1; n <= config.check_max_n && !tally.failed(); ++n) {
        err << "check: exhaustive n=" << n << " (" << labeled_tree_count(n) << " trees)\n";
        bool stop = false;
        for_each_labeled_tree(n, [&](const Tree& t) {
            if (stop)
                return;
            check_one_tree(t, config, tally);
            stop = tally.failed();
        });
    }
    const std::uint64_t seed_base = config.seed.value_or(1);
    for (int n = config.check_random_lo; n <= config.check_random_hi && !tally.failed(); ++n) {
        err << "check: random n=" << n << " (" << config.check_trees_per_n << " trees)\n";
        for (int i = 0; i < config.check_trees_per_n && !tally.failed(); ++i) {
            const Tree t = random_pruefer_tree(
                n, seed_base * 1000003ULL + static_cast<std::uint64_t>(n) * 1009ULL + i);
            check_one_tree(t, config, tally);
        }
    }

    if (config.format == "json") {
        json j{{"trees", tally.trees},
               {"oracle_cases", tally.oracle_cases},
               {"oracle_skipped", tally.oracle_skipped},
               {"theorem_cases", tally.theorem_cases},
               {"theorem_skipped", tally.theorem_skipped},
               {"monotonicity_cases", tally.mono_cases},
               {"bounds_trees", tally.bounds_trees},
               {"counterexamples", tally.failed() ? 1 : 0}};
        if (tally.failed())
            j["counterexample"] = tally.counterexample;
        out << j.dump() << '\n';
    } else {
        out << "trees checked: " << tally.trees << '\n'
            << "oracle cases: " << tally.oracle_cases << " (skipped " << tally.oracle_skipped
            << ")\n"
            << "theorem cases: " << tally.theorem_cases << " (skipped " << tally.theorem_skipped
            << ")\n"
            << "monotonicity cases: " << tally.mono_cases << '\n'
            << "bounds-checked trees: " << tally.bounds_trees << '\n'
            << (tally.failed() ? 1 : 0) << " counterexamples\n";
        if (tally.failed())
            out << "counterexample:\n" << tally.counterexample;
    }
    return tally.failed() ? 5 : 0;
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (config.command == "ecc")
        return run_ecc(config, out);
    if (config.command == "aecc")
        return run_aecc(config, out);
    if (config.command == "oracle")
        return run_oracle(config, out);
    if (config.command == "gen")
        return run_gen(config, out);
    if (config.command == "transform")
        return run_transform(config, out);
    if (config.command == "bench")
        return run_bench(config, out);
    if (config.command == "check")
        return run_check(config, out, err);
    throw Error(errc::bad_params, "unknown command '" + config.command + "'");
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig config;
    if (const char* env = std::getenv("STEINER_ECC_BUDGET")) {
        try {
            config.budget = parse_ll(env, "STEINER_ECC_BUDGET");
        } catch (const Error& e) {
            err << "error: " << e.what() << '\n';
            return 1;
        }
    }

    CLI::App app{"Steiner k-eccentricity toolkit for trees"};
    app.require_subcommand(1);
    app.add_option("--format", config.format, "output format: text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--budget", config.budget,
                   "work budget for brute-force searches (elementary steps)");

    std::string seed_str, input_path, gen_spec;
    constexpr int kNoVertex = std::numeric_limits<int>::min();
    int vertex = kNoVertex;
    int bench_k = 5;

    auto add_tree_source = [&](CLI::App* cmd) {
        auto* in = cmd->add_option("-i,--input", input_path, "edge-list file ('-' = stdin)");
        auto* gen = cmd->add_option("--gen", gen_spec,
                                    "generator spec: star:N | path:N | spider:L1,L2,... | "
                                    "caterpillar:S:P1,...,PS | random:N[:SEED]");
        in->excludes(gen);
        gen->excludes(in);
    };

    auto* ecc = app.add_subcommand("ecc", "Steiner k-eccentricity of one vertex (greedy)");
    add_tree_source(ecc);
    ecc->add_option("-k,--k", config.k, "set size k")->required();
    ecc->add_option("-v,--vertex", vertex, "query vertex (dense id)")->required();

    auto* aecc = app.add_subcommand("aecc", "average Steiner k-eccentricity (exact rational)");
    add_tree_source(aecc);
    aecc->add_option("-k,--k", config.k, "set size k")->required();

    auto* oracle = app.add_subcommand("oracle", "brute-force eccentricity with witness");
    add_tree_source(oracle);
    oracle->add_option("-k,--k", config.k, "set size k")->required();
    oracle->add_option("-v,--vertex", vertex, "query vertex (dense id)")->required();
    oracle->add_option("--mode", config.oracle_mode, "candidate pool: auto|full|leaves");
    oracle->add_flag("--enumerate", config.oracle_enumerate, "list all maximizing sets");

    auto* gen = app.add_subcommand("gen", "emit a generated tree as an edge list");
    gen->add_option("--gen", gen_spec, "generator spec")->required();
    gen->add_option("--seed", seed_str, "seed override for random generation");

    auto* transform = app.add_subcommand("transform",
                                         "apply branch-relocation chain to an extremal tree");
    add_tree_source(transform);
    transform->add_option("--goal", config.goal, "star|path")->required();
    transform->add_flag("--trace", config.trace, "emit one '# <step>' line per move");

    auto* check = app.add_subcommand("check", "corpus-wide consistency checks");
    check->add_option("--max-n", config.check_max_n, "exhaustive corpus up to this order");
    check->add_option("--random-lo", config.check_random_lo, "random corpus: smallest order");
    check->add_option("--random-hi", config.check_random_hi, "random corpus: largest order");
    check->add_option("--trees-per-n", config.check_trees_per_n, "random trees per order");
    check->add_option("--transform-max-n", config.check_transform_max_n,
                      "run transform checks up to this order");
    std::string check_k;
    check->add_option("--k", check_k, "restrict to one k");
    check->add_flag("--k-all", "check all applicable k (default)");
    check->add_option("--seed", seed_str, "random-corpus seed");

    auto* bench = app.add_subcommand("bench", "scaling benchmark of the greedy algorithm");
    bench->add_option("-k,--k", bench_k, "set size k")->capture_default_str();
    std::string sizes_str;
    bench->add_option("--sizes", sizes_str, "comma-separated tree orders");
    bench->add_option("--reps", config.bench_reps, "timed repetitions per size");
    bench->add_option("--family", config.bench_family, "input family: spider|path|random")
        ->check(CLI::IsMember({"spider", "path", "random"}));

    // bind seed for the subcommands that take it generically
    ecc->add_option("--seed", seed_str, "seed override for --gen");
    aecc->add_option("--seed", seed_str, "seed override for --gen");
    oracle->add_option("--seed", seed_str, "seed override for --gen");
    transform->add_option("--seed", seed_str, "seed override for --gen");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 1;
    }

    config.command = app.get_subcommands().front()->get_name();
    config.input_path = input_path;
    config.gen_spec = gen_spec;
    if (config.command == "bench")
        config.k = bench_k;
    if (vertex != kNoVertex)
        config.vertex = vertex;
    try {
        if (!seed_str.empty())
            config.seed = static_cast<std::uint64_t>(parse_ll(seed_str, "seed"));
        if (!check_k.empty())
            config.check_ks = {static_cast<int>(parse_ll(check_k, "k"))};
        if (!sizes_str.empty()) {
            config.bench_sizes.clear();
            for (int v : parse_int_list(sizes_str, "size"))
                config.bench_sizes.push_back(v);
        }
        return run(config, out, err);
    } catch (const Error& e) {
        err << "error [" << errc_name(e.code()) << "]: " << e.what() << '\n';
        switch (e.code()) {
        case errc::parse_error: return 2;
        case errc::budget_exceeded: return 4;
        default: return 3;
        }
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 3;
    }
}

} // namespace steiner
