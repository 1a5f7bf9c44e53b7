#pragma once

#include <cstdint>

#include "hsbound/sample.hpp"

namespace hsbound {

/// Randomized maximization of |median of z| over standardized vectors by
/// perturb-and-project hill climbing.
struct SearchParams {
    int n;
    int restarts;         // >= 1
    long iters;           // >= 0; 0 evaluates the initial candidates only
    std::uint64_t seed;
};

struct SearchResult {
    double best_ratio;  // |median of best_z|
    StandardizedSample best_z;
    int best_restart;   // lowest restart index attaining best_ratio
};

/// Restarts run on OpenMP threads when available. Each restart draws from
/// its own (seed, restart) substream and the best-of reduction walks restart
/// indices in order, so the result is bit-identical to the serial reference
/// for any thread count.
/// Throws InvalidN for n < 3, InvalidParams for restarts < 1 or iters < 0.
[[nodiscard]] SearchResult random_search_max(const SearchParams& params);

/// Single-threaded reference implementation with identical semantics.
[[nodiscard]] SearchResult random_search_max_serial(const SearchParams& params);

}  // namespace hsbound
