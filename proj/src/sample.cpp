#include "hsbound/sample.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hsbound/errors.hpp"

namespace hsbound {

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
    if (values_.size() < 2) {
        throw InvalidSample("sample needs at least 2 values, got " +
                            std::to_string(values_.size()));
    }
    for (double v : values_) {
        if (!std::isfinite(v)) throw InvalidSample("sample values must be finite");
    }
    std::sort(values_.begin(), values_.end());
}

StandardizedSample::StandardizedSample(std::vector<double> z) : z_(std::move(z)) {
    if (z_.size() < 2) {
        throw InvalidSample("standardized sample needs at least 2 values");
    }
    if (!std::is_sorted(z_.begin(), z_.end())) {
        throw InvalidSample("standardized sample must be sorted");
    }
    const double n = static_cast<double>(z_.size());
    double sum = 0.0;
    double sum_sq = 0.0;
    for (double v : z_) {
        sum += v;
        sum_sq += v * v;
    }
    if (std::abs(sum) > n * kStdTol) {
        throw InvalidSample("standardized sample must sum to 0");
    }
    if (std::abs(sum_sq - n) > n * kStdTol) {
        throw InvalidSample("standardized sample must have sum of squares n");
    }
    if (!(z_.front() < z_.back())) {
        throw InvalidSample("standardized sample must have positive spread");
    }
}

double StandardizedSample::median() const noexcept {
    return median_sorted(z_);
}

double median_sorted(std::span<const double> sorted) {
    const std::size_t n = sorted.size();
    const std::size_t k = n / 2;
    if (n % 2 == 1) return sorted[k];
    return (sorted[k - 1] + sorted[k]) / 2.0;
}

double mean(const Sample& s) {
    double sum = 0.0;
    for (double v : s.values()) sum += v;
    return sum / static_cast<double>(s.size());
}

double stddev_population(const Sample& s) {
    const double m = mean(s);
    double sum_sq = 0.0;
    for (double v : s.values()) {
        const double d = v - m;
        sum_sq += d * d;
    }
    return std::sqrt(sum_sq / static_cast<double>(s.size()));
}

double median(const Sample& s) {
    return median_sorted(s.values());
}

SummaryStats summarize(const Sample& s) {
    return SummaryStats{s.size(), mean(s), stddev_population(s), median(s)};
}

StandardizedSample standardize(const Sample& s) {
    if (!s.nondegenerate()) {
        throw DegenerateSample("cannot standardize constant data (sd = 0)");
    }
    const double m = mean(s);
    const double sd = stddev_population(s);
    std::vector<double> z;
    z.reserve(s.size());
    for (double v : s.values()) z.push_back((v - m) / sd);
    return StandardizedSample(std::move(z));
}

double nonparam_skewness(const Sample& s) {
    if (!s.nondegenerate()) {
        throw DegenerateSample("skewness ratio undefined for constant data (sd = 0)");
    }
    return (median(s) - mean(s)) / stddev_population(s);
}

double sum_abs_dev(const Sample& s, double mu) {
    double sum = 0.0;
    for (double v : s.values()) sum += std::abs(v - mu);
    return sum;
}

ChainTerms chain_terms(const Sample& s) {
    const double n = static_cast<double>(s.size());
    const double m = mean(s);
    const double med = median(s);
    return ChainTerms{
        std::abs(med - m),
        sum_abs_dev(s, med) / n,
        sum_abs_dev(s, m) / n,
        stddev_population(s),
    };
}

}  // namespace hsbound
