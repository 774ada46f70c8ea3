#include "cli_app.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "disjunct/disjunct.hpp"

namespace fs = std::filesystem;

namespace disjunct::cli {

namespace {

std::string join(const std::vector<std::size_t>& xs) {
    std::string s;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(xs[k]);
    }
    return s;
}

void require_output_dir(const fs::path& file) {
    auto parent = file.parent_path();
    if (!parent.empty() && !fs::is_directory(parent))
        throw Error("output directory does not exist: " + parent.string());
}

void emit_matrix(const BinaryMatrix& m, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") out << write_matrix(m);
    else save_matrix(path, m);
}

struct Options {
    // construct
    std::size_t q = 0, n = 0, d = 1, t = 0, attempts = 100;
    std::uint64_t seed = 0;
    bool mixed = false;
    std::size_t grow = 0, max_weight = 0;
    std::string output;
    // shared
    std::string input;
    std::size_t order = 0;
    bool max = false;
    bool out_of_range = false;
    std::string bits;
    std::uint64_t max_cases = default_case_budget;
    std::uint64_t items = 0;
    bool kv = false;
    std::size_t tmax = 0;
    std::uint64_t budget = 1'000'000;
};

int cmd_check(const Options& o, std::ostream& out) {
    const auto m = load_matrix(o.input);
    if (o.max) {
        out << "max_disjunct_order=" << max_disjunct_order(m) << '\n';
        return exit_ok;
    }
    const auto v = is_d_disjunct(m, o.order);
    if (v.is_disjunct) {
        out << "DISJUNCT d=" << o.order;
        if (v.vacuous) out << " (vacuous: d >= n)";
        out << '\n';
        return exit_ok;
    }
    out << "NOT DISJUNCT d=" << o.order << '\n'
        << "witness column=" << v.witness->column << " cover=" << join(v.witness->cover) << '\n';
    return exit_refuted;
}

int cmd_analyze(const Options& o, std::ostream& out) {
    const auto m = load_matrix(o.input);
    const std::size_t d = o.order;
    if (d < 1) throw ParameterError("d must be at least 1");

    std::string skip_reason;
    try {
        detail::require_disjunct_isolated_free(m, d);
    } catch (const ParameterError& e) {
        skip_reason = e.what();
    }

    out << std::left << std::setw(8) << "column" << std::setw(8) << "weight" << std::setw(9) << "private"
        << std::setw(12) << "nonprivate" << std::setw(10) << "matching" << std::setw(8) << "bound"
        << "status\n";
    bool any_fail = false, any_flagged = false;
    for (ColumnId j = 0; j < m.cols(); ++j) {
        const auto pc = classify_pairs(m, j);
        const auto w = m.column(j).weight();
        const auto nu = matching_number(nonprivate_pair_graph(m, pc));
        std::string bound = "-", status = "-";
        if (w > d) {
            const std::size_t s = w - d;
            const bool in_range = s <= d - 1;
            const std::uint64_t mu = s - 1;
            if (w >= 2 * mu + 1) bound = std::to_string(erdos_gallai_bound(w, mu));
            if (skip_reason.empty() && (in_range || o.out_of_range)) {
                auto r = detail::nonprivate_report(m, j, d, true);
                status = r.holds() ? "pass" : "fail";
                if (!in_range) {
                    status += '*';
                    any_flagged = true;
                } else {
                    any_fail = any_fail || !r.holds();
                }
                bound = std::to_string(r.bound);
            } else if (skip_reason.empty()) {
                status = "out-of-range";
            }
        }
        out << std::setw(8) << j << std::setw(8) << w << std::setw(9) << pc.private_pairs.size()
            << std::setw(12) << pc.nonprivate_pairs.size() << std::setw(10) << nu << std::setw(8) << bound
            << status << '\n';
    }
    if (!skip_reason.empty()) out << "note: " << skip_reason << "; non-private bound not evaluated\n";
    if (any_flagged) out << "note: * hypothesis out of range (s >= d), reported only\n";
    const auto b = private_pair_budget(m);
    out << "private_pair_sum=" << b.sum << " budget=" << b.budget << " ok=" << (b.ok ? "true" : "false")
        << '\n';
    return any_fail ? exit_refuted : exit_ok;
}

int cmd_decode(const Options& o, std::ostream& out, std::ostream& err) {
    const auto m = load_matrix(o.input);
    const auto outcome = OutcomeVector::parse(o.bits);
    if (auto empty = find_empty_columns(m); !empty.empty())
        err << "warning: empty columns always decode as positive: " << join(empty) << '\n';
    const auto cand = naive_decode(m, outcome);
    out << "candidates=" << join(cand) << '\n' << "count=" << cand.size() << '\n';
    return exit_ok;
}

int cmd_verify_id(const Options& o, std::ostream& out) {
    const auto m = load_matrix(o.input);
    const auto r = verify_identification(m, o.order, o.max_cases);
    if (r.identifies) {
        out << "IDENTIFIES d=" << o.order << " cases=" << r.cases << '\n';
        return exit_ok;
    }
    out << "FAILS d=" << o.order << " positives=" << join(r.failing_set) << " decoded=" << join(r.decoded)
        << " cases=" << r.cases << '\n';
    return exit_refuted;
}

int cmd_bounds(const Options& o, bool with_n, std::ostream& out) {
    const auto r = lower_bounds(o.order);
    std::ostringstream real;
    real << std::fixed << std::setprecision(6) << r.kappa_real;
    std::ostringstream ratio;
    ratio << std::fixed << std::setprecision(6) << r.ratio;
    std::vector<std::pair<std::string, std::string>> rows{
        {"d", std::to_string(r.d)},
        {"bassalygo", std::to_string(r.bassalygo)},
        {"kappa_real", real.str()},
        {"kappa_bound", std::to_string(r.kappa_bound)},
        {"conjecture", std::to_string(r.conjectured)},
        {"ratio", ratio.str()},
        {"best", std::to_string(r.best())},
    };
    if (with_n) {
        const auto tb = t_dn_lower_bound(o.order, o.items);
        rows.emplace_back("n", std::to_string(o.items));
        rows.emplace_back("t_dn", std::to_string(tb.value));
        rows.emplace_back("t_dn_source", to_string(tb.source));
    }
    for (const auto& [k, v] : rows) {
        if (o.kv) out << k << '=' << v << '\n';
        else out << std::left << std::setw(14) << k << v << '\n';
    }
    return exit_ok;
}

int cmd_search(const Options& o, std::ostream& out) {
    if (!o.output.empty() && !fs::is_directory(o.output))
        throw Error("output directory does not exist: " + o.output);
    const auto certs = exhaustive_threshold(o.order, o.tmax, o.budget);
    std::string threshold = "unknown";
    bool settled_below = true;
    for (const auto& c : certs) {
        out << "t=" << c.t << " found=" << (c.found ? "true" : "false")
            << " exhausted=" << (c.exhausted ? "true" : "false") << " method=" << c.method
            << " nodes=" << c.nodes << '\n';
        if (c.found && settled_below && threshold == "unknown") threshold = std::to_string(c.t);
        settled_below = settled_below && c.exhausted;
        if (c.found && !o.output.empty()) {
            fs::path p = fs::path(o.output) /
                         ("T" + std::to_string(o.order) + "_t" + std::to_string(c.t) + ".dmat");
            save_matrix(p, *c.matrix);
        }
    }
    out << "threshold=" << threshold << '\n';
    return exit_ok;
}

int cmd_construct_random(const Options& o, std::ostream& out) {
    if (o.output.empty()) throw Error("construct random needs -o <dir>");
    if (!fs::is_directory(o.output)) throw Error("output directory does not exist: " + o.output);
    std::vector<BinaryMatrix> corpus;
    if (o.grow) {
        GrowOptions g{.d = o.d, .t = o.t, .tries = o.grow, .seed = o.seed, .max_weight = o.max_weight};
        corpus = isolated_free_corpus(g, o.attempts, o.attempts);
    } else {
        if (o.n == 0) throw Error("construct random needs --n unless --grow is given");
        CorpusOptions c;
        c.d = o.d;
        c.t = o.t;
        c.n = o.n;
        c.seed = o.seed;
        c.attempts = o.attempts;
        c.weights = o.mixed ? WeightMode::mixed : WeightMode::constant;
        c.max_weight = o.max_weight;
        corpus = random_disjunct_corpus(c);
    }
    for (std::size_t k = 0; k < corpus.size(); ++k) {
        std::ostringstream name;
        name << "random_" << std::setw(4) << std::setfill('0') << k << ".dmat";
        save_matrix(fs::path(o.output) / name.str(), corpus[k]);
    }
    out << "kept=" << corpus.size() << " attempts=" << o.attempts << '\n';
    return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Construct, verify and analyze d-disjunct matrices", "disjunct"};
    app.require_subcommand(1);

    auto* construct = app.add_subcommand("construct", "Write a matrix in .dmat format");
    construct->require_subcommand(1);
    auto* affine = construct->add_subcommand("affine", "Affine plane AG(2,q), q prime");
    affine->add_option("--q", o.q, "Prime order")->required();
    affine->add_option("-o,--output", o.output, "Output .dmat file (stdout if omitted)");
    auto* ident = construct->add_subcommand("identity", "n x n identity");
    ident->add_option("--n", o.n, "Size")->required();
    ident->add_option("-o,--output", o.output, "Output .dmat file (stdout if omitted)");
    auto* random = construct->add_subcommand("random", "Seeded corpus of random d-disjunct matrices");
    random->add_option("--d", o.d, "Disjunctness order")->required();
    random->add_option("--t", o.t, "Rows")->required();
    random->add_option("--n", o.n, "Columns (sampling mode)");
    random->add_option("--seed", o.seed, "Random seed")->required();
    random->add_option("--attempts", o.attempts, "Candidate matrices to sample");
    random->add_flag("--mixed", o.mixed, "Column weights in [d+1, floor(5d/3)] instead of d+1");
    random->add_option("--grow", o.grow,
                       "Grow each matrix from this many proposed columns, then peel isolated columns");
    random->add_option("--max-weight", o.max_weight, "Largest column weight (mixed or grow mode)");
    random->add_option("-o,--output", o.output, "Output directory")->required();

    auto* check = app.add_subcommand("check", "Exact d-disjunctness check");
    auto* check_d = check->add_option("--d", o.order, "Disjunctness order");
    auto* check_max = check->add_flag("--max", o.max, "Print the largest d the matrix supports");
    check_d->excludes(check_max);
    check->add_option("file", o.input, "Input .dmat")->required()->check(CLI::ExistingFile);

    auto* analyze = app.add_subcommand("analyze", "Per-column private/non-private pair analysis");
    analyze->add_option("file", o.input, "Input .dmat")->required()->check(CLI::ExistingFile);
    analyze->add_option("--d", o.order, "Disjunctness order")->required();
    analyze->add_flag("--allow-out-of-range", o.out_of_range,
                      "Also evaluate columns with weight >= 2d (reported, not asserted)");

    auto* decode = app.add_subcommand("decode", "Naive decoder on one outcome vector");
    decode->add_option("file", o.input, "Input .dmat")->required()->check(CLI::ExistingFile);
    decode->add_option("--outcomes", o.bits, "Outcome bitstring of length t")->required();

    auto* verify = app.add_subcommand("verify-id", "Exhaustively check identification of <= d positives");
    verify->add_option("file", o.input, "Input .dmat")->required()->check(CLI::ExistingFile);
    verify->add_option("--d", o.order, "Maximum number of positives")->required();
    verify->add_option("--max-cases", o.max_cases, "Refuse to run beyond this many positive sets");

    auto* bounds = app.add_subcommand("bounds", "Lower bounds on the number of tests");
    bounds->add_option("--d", o.order, "Disjunctness order")->required();
    auto* bounds_n = bounds->add_option("--n", o.items, "Number of items, for the t(d,n) bound");
    bounds->add_flag("--kv", o.kv, "Machine-readable key=value output");

    auto* search = app.add_subcommand("search", "Exhaustive search for T(d) at small t");
    search->add_option("--d", o.order, "Disjunctness order")->required();
    search->add_option("--tmax", o.tmax, "Largest t to examine")->required();
    search->add_option("--budget", o.budget, "Search nodes allowed per t");
    search->add_option("-o,--output", o.output, "Directory for found matrices");

    std::vector<const char*> argv{"disjunct"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        // Help requests are "successful" parse errors.
        return app.exit(e, out, err) == 0 ? exit_ok : exit_error;
    }

    try {
        if (*check) {
            if (!o.max && check_d->count() == 0) throw Error("check needs --d <d> or --max");
            return cmd_check(o, out);
        }
        if (*analyze) return cmd_analyze(o, out);
        if (*decode) return cmd_decode(o, out, err);
        if (*verify) return cmd_verify_id(o, out);
        if (*bounds) return cmd_bounds(o, bounds_n->count() > 0, out);
        if (*search) return cmd_search(o, out);
        if (*affine) {
            require_output_dir(o.output);
            emit_matrix(affine_plane_matrix(o.q), o.output, out);
        } else if (*ident) {
            require_output_dir(o.output);
            emit_matrix(identity_matrix(o.n), o.output, out);
        } else if (*random) {
            return cmd_construct_random(o, out);
        }
        return exit_ok;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_error;
    }
}

}  // namespace disjunct::cli
