// hsbound - bounds on |median - mean|/sd: reports, extremal datasets,
// verification sweeps, and probabilistic checks.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hsbound/bounds.hpp"
#include "hsbound/errors.hpp"
#include "hsbound/extremal.hpp"
#include "hsbound/parse.hpp"
#include "hsbound/sample.hpp"
#include "hsbound/search.hpp"
#include "hsbound/verify.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

// Exit codes: 0 success, 1 numerical bound violation, 2 input/usage error.
constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;

/// Shortest representation that parses back to the same double.
std::string fmt_full(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

/// 6 significant digits for human-readable summary lines.
std::string fmt_human(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::vector<double> read_input(const std::string& path) {
    if (path == "-") return hsbound::parse_values(std::cin);
    std::ifstream in(path);
    if (!in) throw hsbound::ParseError("cannot open input file: " + path);
    return hsbound::parse_values(in);
}

void emit_json(const ordered_json& doc) {
    std::cout << doc.dump(2) << "\n";
}

ordered_json make_document(const std::string& command, ordered_json inputs,
                           ordered_json results) {
    ordered_json doc;
    doc["command"] = command;
    doc["inputs"] = std::move(inputs);
    doc["results"] = std::move(results);
    doc["version"] = kVersion;
    return doc;
}

struct CommonFlags {
    bool json = false;
    std::string divisor = "n";
};

void require_divisor_n(const CommonFlags& flags, const std::string& command) {
    if (flags.divisor != "n") {
        throw hsbound::ParseError("'" + command +
                                  "' requires --divisor n: the bounds hold for the "
                                  "population standard deviation only");
    }
}

int run_stats(const std::string& input, const CommonFlags& flags) {
    const hsbound::Sample sample(read_input(input));
    const auto stats = hsbound::summarize(sample);
    const auto n = static_cast<double>(stats.n);

    double sd = stats.sd;
    if (flags.divisor == "n-1") sd = stats.sd * std::sqrt(n / (n - 1.0));
    const bool degenerate = !sample.nondegenerate();
    std::optional<double> ratio;
    if (!degenerate) ratio = (stats.median - stats.mean) / sd;

    auto chain = hsbound::chain_terms(sample);
    chain.sd = sd;

    ordered_json results;
    results["n"] = stats.n;
    results["mean"] = stats.mean;
    results["sd"] = sd;
    results["median"] = stats.median;
    results["degenerate"] = degenerate;
    if (ratio) results["ratio"] = *ratio;
    else results["ratio"] = nullptr;
    results["chain"] = {
        {"median_mean_gap", chain.median_mean_gap},
        {"abs_dev_median", chain.abs_dev_median},
        {"abs_dev_mean", chain.abs_dev_mean},
        {"sd", chain.sd},
    };

    if (flags.json) {
        emit_json(make_document(
            "stats", {{"input", input}, {"divisor", flags.divisor}}, results));
    } else {
        std::cout << "n = " << stats.n << "\n";
        std::cout << "mean = " << fmt_human(stats.mean) << "\n";
        std::cout << "sd = " << fmt_human(sd) << " (divisor " << flags.divisor << ")\n";
        std::cout << "median = " << fmt_human(stats.median) << "\n";
        if (ratio) {
            std::cout << "ratio = " << fmt_human(*ratio) << "\n";
        } else {
            std::cout << "ratio = degenerate (sd = 0)\n";
        }
        std::cout << "chain: |med-mean| = " << fmt_human(chain.median_mean_gap)
                  << " <= mad(med) = " << fmt_human(chain.abs_dev_median)
                  << " <= mad(mean) = " << fmt_human(chain.abs_dev_mean)
                  << " <= sd = " << fmt_human(chain.sd) << "\n";
    }
    return kExitOk;
}

ordered_json report_to_json(const hsbound::BoundReport& report) {
    ordered_json results;
    results["n"] = report.n;
    results["ratio"] = report.ratio;
    results["classical"] = report.classical;
    results["sharp"] = report.sharp;
    results["slack"] = report.slack;
    results["is_extremal"] = report.is_extremal;
    if (report.case_label) results["case"] = hsbound::to_string(*report.case_label);
    return results;
}

int run_check(const std::string& input, const CommonFlags& flags) {
    require_divisor_n(flags, "check");
    const hsbound::Sample sample(read_input(input));
    const auto report = hsbound::check_sample(sample);
    const bool violated =
        std::abs(report.ratio) > report.classical + hsbound::kStdTol ||
        std::abs(report.ratio) > report.sharp + hsbound::kStdTol;

    ordered_json results = report_to_json(report);
    results["bounds_hold"] = !violated;
    if (flags.json) {
        emit_json(make_document("check", {{"input", input}}, results));
    } else {
        std::cout << "n = " << report.n << "\n";
        std::cout << "ratio = " << fmt_human(report.ratio) << "\n";
        std::cout << "classical bound = " << fmt_human(report.classical) << "\n";
        std::cout << "sharp bound = " << fmt_human(report.sharp) << "\n";
        std::cout << "slack = " << fmt_human(report.slack) << "\n";
        std::cout << "extremal = " << (report.is_extremal ? "yes" : "no") << "\n";
        if (report.case_label) {
            std::cout << "case = " << hsbound::to_string(*report.case_label) << "\n";
        }
        if (violated) std::cout << "bounds: VIOLATED\n";
    }
    if (violated) {
        std::cerr << "hsbound: ratio exceeds a proved bound beyond tolerance -- "
                     "this indicates a numerical bug\n";
        return kExitViolation;
    }
    return kExitOk;
}

int run_extremal(int n, int sign, double location, double scale, const CommonFlags& flags) {
    require_divisor_n(flags, "extremal");
    const auto z = hsbound::extremal_z(n, sign);
    const auto sample = hsbound::rescale(z, location, scale);
    const double ratio = hsbound::nonparam_skewness(sample);
    const double sharp = hsbound::sharp_bound(n);

    if (flags.json) {
        ordered_json results;
        results["n"] = n;
        results["sign"] = sign;
        results["values"] = std::vector<double>(sample.values().begin(), sample.values().end());
        results["ratio"] = ratio;
        results["sharp"] = sharp;
        emit_json(make_document("extremal",
                                {{"n", n},
                                 {"sign", sign},
                                 {"location", location},
                                 {"scale", scale}},
                                results));
    } else {
        // Data on stdout so the output pipes straight into `check --input -`;
        // the summary goes to stderr.
        for (double v : sample.values()) std::cout << fmt_full(v) << "\n";
        std::cerr << "extremal n = " << n << ", sign = " << (sign > 0 ? "+1" : "-1")
                  << ", ratio = " << fmt_human(ratio)
                  << ", sharp bound = " << fmt_human(sharp) << "\n";
    }
    return kExitOk;
}

int run_sweep(int n_min, int n_max, const CommonFlags& flags) {
    require_divisor_n(flags, "sweep");
    if (n_min < 3 || n_min > n_max) {
        throw hsbound::InvalidRange("need 3 <= nmin <= nmax, got nmin = " +
                                    std::to_string(n_min) + ", nmax = " + std::to_string(n_max));
    }
    constexpr double kSweepTol = 1e-12;
    bool pass = true;
    ordered_json rows = ordered_json::array();
    for (int n = n_min; n <= n_max; ++n) {
        const double sharp = hsbound::sharp_bound(n);
        const auto sweep = hsbound::two_block_sweep(n);
        const double diff = std::abs(sweep.max_ratio - sharp);
        if (diff > kSweepTol) pass = false;
        rows.push_back({{"n", n},
                        {"sharp", sharp},
                        {"sweep_max", sweep.max_ratio},
                        {"diff", diff},
                        {"j_star", sweep.j_star}});
        if (!flags.json) {
            std::cout << "n = " << n << "  sharp = " << fmt_human(sharp)
                      << "  sweep max = " << fmt_human(sweep.max_ratio)
                      << "  diff = " << fmt_human(diff) << "  j* = " << sweep.j_star << "\n";
        }
    }
    if (flags.json) {
        ordered_json results;
        results["rows"] = std::move(rows);
        results["tolerance"] = kSweepTol;
        results["pass"] = pass;
        emit_json(make_document("sweep", {{"nmin", n_min}, {"nmax", n_max}}, results));
    } else {
        std::cout << (pass ? "PASS" : "FAIL") << " (tolerance 1e-12)\n";
    }
    return pass ? kExitOk : kExitViolation;
}

int run_optimize(int n, int restarts, long iters, std::uint64_t seed, const CommonFlags& flags) {
    require_divisor_n(flags, "optimize");
    const auto result = hsbound::random_search_max({n, restarts, iters, seed});
    const double sharp = hsbound::sharp_bound(n);
    const double gap = sharp - result.best_ratio;
    const bool exceeded = result.best_ratio > sharp + hsbound::kStdTol;

    if (flags.json) {
        ordered_json results;
        results["n"] = n;
        results["best_ratio"] = result.best_ratio;
        results["sharp"] = sharp;
        results["gap"] = gap;
        results["best_restart"] = result.best_restart;
        results["best_z"] = std::vector<double>(result.best_z.values().begin(),
                                                result.best_z.values().end());
        results["status"] = exceeded ? "FAIL" : "ok";
        emit_json(make_document("optimize",
                                {{"n", n},
                                 {"restarts", restarts},
                                 {"iters", iters},
                                 {"seed", seed}},
                                results));
    } else {
        std::cout << "n = " << n << "\n";
        std::cout << "best ratio = " << fmt_human(result.best_ratio) << "\n";
        std::cout << "sharp bound = " << fmt_human(sharp) << "\n";
        std::cout << "gap = " << fmt_human(gap) << "\n";
        std::cout << "best restart = " << result.best_restart << "\n";
        std::cout << "status = " << (exceeded ? "FAIL" : "ok") << "\n";
    }
    if (exceeded) {
        std::cerr << "hsbound: optimizer exceeded the sharp bound beyond tolerance -- "
                     "this indicates a numerical bug\n";
        return kExitViolation;
    }
    return kExitOk;
}

int run_prob(double p, double q, const CommonFlags& flags) {
    require_divisor_n(flags, "prob");
    const hsbound::ProbabilitySplit split(p, q);
    const double bound = hsbound::majindar_bound(split);
    const auto terms = hsbound::lemma_pq_terms(split);
    const double min_term = std::min({terms.p_term, terms.q_term, terms.avg_term});
    const bool lemma_holds = terms.lhs <= min_term + 1e-12;

    if (flags.json) {
        ordered_json results;
        results["p"] = p;
        results["q"] = q;
        results["bound"] = bound;
        results["lemma"] = {
            {"lhs", terms.lhs},
            {"p_term", terms.p_term},
            {"q_term", terms.q_term},
            {"avg_term", terms.avg_term},
            {"min_term", min_term},
            {"holds", lemma_holds},
        };
        emit_json(make_document("prob", {{"p", p}, {"q", q}}, results));
    } else {
        std::cout << "p = " << fmt_human(p) << ", q = " << fmt_human(q) << "\n";
        std::cout << "bound = 2*sqrt(pq/(p+q)) = " << fmt_human(bound) << "\n";
        std::cout << "lemma: pq/(p+q) = " << fmt_human(terms.lhs)
                  << " <= min(" << fmt_human(terms.p_term) << ", " << fmt_human(terms.q_term)
                  << ", " << fmt_human(terms.avg_term) << ") = " << fmt_human(min_term)
                  << (lemma_holds ? "  [holds]" : "  [VIOLATED]") << "\n";
    }
    return lemma_holds ? kExitOk : kExitViolation;
}

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_flag("--json", flags.json, "Emit a structured JSON document on stdout");
    cmd->add_option("--divisor", flags.divisor, "Standard deviation divisor")
        ->check(CLI::IsMember({"n", "n-1"}))
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bounds on |median - mean|/(standard deviation)"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    CommonFlags flags;

    std::string input = "-";
    auto* stats = app.add_subcommand("stats", "Summary statistics and the deviation chain");
    stats->add_option("--input", input, "Data file, or - for stdin")->capture_default_str();
    add_common_flags(stats, flags);

    auto* check = app.add_subcommand("check", "Check a dataset against both bounds");
    check->add_option("--input", input, "Data file, or - for stdin")->capture_default_str();
    add_common_flags(check, flags);

    int n = 0;
    int sign = 1;
    double location = 0.0;
    double scale = 1.0;
    auto* extremal = app.add_subcommand("extremal", "Generate a bound-attaining dataset");
    extremal->add_option("--n", n, "Sample size (>= 3)")->required();
    extremal->add_option("--sign", sign, "+1: median above mean, -1: below");
    extremal->add_option("--location", location, "Shift applied to the dataset")
        ->capture_default_str();
    extremal->add_option("--scale", scale, "Scale applied to the dataset (> 0)")
        ->capture_default_str();
    add_common_flags(extremal, flags);

    int n_min = 3;
    int n_max = 3;
    auto* sweep = app.add_subcommand("sweep", "Two-block sweep oracle vs the sharp bound");
    sweep->add_option("--nmin", n_min, "Smallest n")->required();
    sweep->add_option("--nmax", n_max, "Largest n")->required();
    add_common_flags(sweep, flags);

    int restarts = 200;
    long iters = 2000;
    std::uint64_t seed = 0;
    auto* optimize = app.add_subcommand("optimize", "Randomized search for the maximal ratio");
    optimize->add_option("--n", n, "Sample size (>= 3)")->required();
    optimize->add_option("--restarts", restarts, "Independent restarts")->capture_default_str();
    optimize->add_option("--iters", iters, "Hill-climbing steps per restart")
        ->capture_default_str();
    optimize->add_option("--seed", seed, "RNG seed")->capture_default_str();
    add_common_flags(optimize, flags);

    double p = 0.0;
    double q = 0.0;
    auto* prob = app.add_subcommand("prob", "Probabilistic bound for tail masses (p, q)");
    prob->add_option("--p", p, "Pr(X > E[X])")->required();
    prob->add_option("--q", q, "Pr(X < E[X])")->required();
    add_common_flags(prob, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        std::cout << kVersion << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        std::cerr << "hsbound: " << e.what() << "\n";
        return kExitInputError;
    }

    try {
        if (stats->parsed()) return run_stats(input, flags);
        if (check->parsed()) return run_check(input, flags);
        if (extremal->parsed()) {
            if (sign != 1 && sign != -1) {
                throw hsbound::ParseError("--sign must be +1 or -1");
            }
            return run_extremal(n, sign, location, scale, flags);
        }
        if (sweep->parsed()) return run_sweep(n_min, n_max, flags);
        if (optimize->parsed()) return run_optimize(n, restarts, iters, seed, flags);
        if (prob->parsed()) return run_prob(p, q, flags);
    } catch (const hsbound::Error& e) {
        std::cerr << "hsbound: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "hsbound: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
