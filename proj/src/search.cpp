#include "hsbound/search.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "hsbound/errors.hpp"
#include "hsbound/rng.hpp"

namespace hsbound {

namespace {

// Geometric step cooling over the iteration budget: coarse moves explore,
// the final scales polish the last digits of the ratio.
constexpr double kStepInit = 1.0;
constexpr double kStepFinal = 1e-6;

// Center to mean 0, scale to sum of squares n, sort. Fails only when the
// centered vector is (numerically) all zero.
bool project(std::vector<double>& z) {
    const double n = static_cast<double>(z.size());
    double sum = 0.0;
    for (double v : z) sum += v;
    const double m = sum / n;
    double sum_sq = 0.0;
    for (double& v : z) {
        v -= m;
        sum_sq += v * v;
    }
    if (!(sum_sq > 0.0)) return false;
    const double scale = std::sqrt(n / sum_sq);
    for (double& v : z) v *= scale;
    std::sort(z.begin(), z.end());
    return true;
}

double abs_median_sorted(const std::vector<double>& z) {
    return std::abs(median_sorted(z));
}

struct RestartOutcome {
    double ratio;
    std::vector<double> z;
};

RestartOutcome run_restart(int n, long iters, std::uint64_t seed, std::uint64_t restart) {
    Xoshiro256StarStar rng(seed, restart);
    std::vector<double> z(static_cast<std::size_t>(n));
    do {
        for (double& v : z) v = rng.uniform_signed();
    } while (!project(z));

    double best = abs_median_sorted(z);
    double step = kStepInit;
    const double decay =
        iters > 0 ? std::pow(kStepFinal / kStepInit, 1.0 / static_cast<double>(iters)) : 1.0;
    std::vector<double> candidate(z.size());
    for (long t = 0; t < iters; ++t) {
        for (std::size_t i = 0; i < z.size(); ++i) {
            candidate[i] = z[i] + step * rng.normal();
        }
        if (project(candidate)) {
            const double ratio = abs_median_sorted(candidate);
            if (ratio > best) {
                best = ratio;
                z.swap(candidate);
            }
        }
        step *= decay;
    }
    return RestartOutcome{best, std::move(z)};
}

void validate(const SearchParams& params) {
    if (params.n < 3) {
        throw InvalidN("random_search_max requires n >= 3, got " + std::to_string(params.n));
    }
    if (params.restarts < 1) {
        throw InvalidParams("restarts must be >= 1, got " + std::to_string(params.restarts));
    }
    if (params.iters < 0) {
        throw InvalidParams("iters must be >= 0, got " + std::to_string(params.iters));
    }
}

// Best-of over restart outcomes, walking indices in order so ties go to the
// lowest restart regardless of execution order.
SearchResult reduce(std::vector<RestartOutcome>&& outcomes) {
    std::size_t best = 0;
    for (std::size_t r = 1; r < outcomes.size(); ++r) {
        if (outcomes[r].ratio > outcomes[best].ratio) best = r;
    }
    return SearchResult{
        outcomes[best].ratio,
        StandardizedSample(std::move(outcomes[best].z)),
        static_cast<int>(best),
    };
}

}  // namespace

SearchResult random_search_max_serial(const SearchParams& params) {
    validate(params);
    std::vector<RestartOutcome> outcomes;
    outcomes.reserve(static_cast<std::size_t>(params.restarts));
    for (int r = 0; r < params.restarts; ++r) {
        outcomes.push_back(
            run_restart(params.n, params.iters, params.seed, static_cast<std::uint64_t>(r)));
    }
    return reduce(std::move(outcomes));
}

SearchResult random_search_max(const SearchParams& params) {
    validate(params);
    std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(params.restarts));
#pragma omp parallel for schedule(dynamic)
    for (int r = 0; r < params.restarts; ++r) {
        outcomes[static_cast<std::size_t>(r)] =
            run_restart(params.n, params.iters, params.seed, static_cast<std::uint64_t>(r));
    }
    return reduce(std::move(outcomes));
}

}  // namespace hsbound
