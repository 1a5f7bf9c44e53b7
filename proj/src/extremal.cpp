#include "hsbound/extremal.hpp"

#include <cmath>
#include <string>

#include "hsbound/errors.hpp"

namespace hsbound {

TwoBlockConfig two_block_z(int n, int j) {
    if (n < 3) throw InvalidN("two_block_z requires n >= 3, got " + std::to_string(n));
    if (j < 1 || j > n - 1) {
        throw InvalidJ("low-block size " + std::to_string(j) + " outside [1, " +
                       std::to_string(n - 1) + "]");
    }
    // Unique solution of j*low + (n-j)*high = 0, j*low^2 + (n-j)*high^2 = n
    // with low < 0 < high.
    const double low = -std::sqrt(static_cast<double>(n - j) / static_cast<double>(j));
    const double high = std::sqrt(static_cast<double>(j) / static_cast<double>(n - j));
    return TwoBlockConfig{n, j, low, high};
}

StandardizedSample expand(const TwoBlockConfig& config) {
    std::vector<double> z;
    z.reserve(static_cast<std::size_t>(config.n));
    z.insert(z.end(), static_cast<std::size_t>(config.j), config.low);
    z.insert(z.end(), static_cast<std::size_t>(config.n - config.j), config.high);
    return StandardizedSample(std::move(z));
}

StandardizedSample extremal_z(int n, int sign) {
    if (n < 3) throw InvalidN("extremal_z requires n >= 3, got " + std::to_string(n));
    if (sign != 1 && sign != -1) {
        throw InvalidN("sign must be +1 or -1, got " + std::to_string(sign));
    }
    const int k = n / 2;
    int j;
    if (n % 2 == 1) {
        j = (sign > 0) ? k : k + 1;
    } else {
        j = (sign > 0) ? k - 1 : k + 1;
    }
    return expand(two_block_z(n, j));
}

Sample rescale(const StandardizedSample& z, double location, double scale) {
    if (!(scale > 0.0)) {
        throw InvalidScale("scale must be > 0, got " + std::to_string(scale));
    }
    std::vector<double> values;
    values.reserve(z.size());
    for (double v : z.values()) values.push_back(location + scale * v);
    return Sample(std::move(values));
}

}  // namespace hsbound
