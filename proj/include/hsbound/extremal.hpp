#pragma once

#include "hsbound/sample.hpp"

namespace hsbound {

/// The two-level standardized family: j copies of `low` followed by n-j
/// copies of `high`, with sum 0 and sum of squares n. All extremal
/// configurations of the sharp bound live in this family.
struct TwoBlockConfig {
    int n;
    int j;        // size of the low block, in [1, n-1]
    double low;   // -sqrt((n-j)/j)
    double high;  // sqrt(j/(n-j))
};

/// Throws InvalidJ for j outside [1, n-1], InvalidN for n < 3.
[[nodiscard]] TwoBlockConfig two_block_z(int n, int j);

/// Expand to the sorted z-vector (low block first).
[[nodiscard]] StandardizedSample expand(const TwoBlockConfig& config);

/// The configuration attaining sign * sharp_bound(n):
///   odd n = 2k+1: low block of size k (sign +1) or k+1 (sign -1);
///   even n = 2k:  low block of size k-1 (sign +1) or k+1 (sign -1).
/// Throws InvalidN for n < 3 and for sign not in {+1, -1}.
[[nodiscard]] StandardizedSample extremal_z(int n, int sign);

/// location + scale * z_i as a Sample; the skewness ratio of the result
/// equals the median of z. Throws InvalidScale for scale <= 0.
[[nodiscard]] Sample rescale(const StandardizedSample& z, double location, double scale);

}  // namespace hsbound
