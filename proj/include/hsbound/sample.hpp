#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hsbound {

/// Absolute tolerance for standardized quantities (sums of z, chain slack,
/// sign classification). Double-precision roundoff on sums of n <= 1e6 terms
/// stays far below this.
inline constexpr double kStdTol = 1e-9;

/// A dataset x_1 <= x_2 <= ... <= x_n with n >= 2. Construction sorts, so
/// callers may pass data in any order. Values must be finite.
class Sample {
public:
    explicit Sample(std::vector<double> values);

    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] double min() const noexcept { return values_.front(); }
    [[nodiscard]] double max() const noexcept { return values_.back(); }

    /// True iff the data has positive spread (x_1 < x_n, hence sd > 0).
    [[nodiscard]] bool nondegenerate() const noexcept { return values_.front() < values_.back(); }

private:
    std::vector<double> values_;
};

/// z-scores z_i = (x_i - mean)/sd, sorted nondecreasing, with sum(z) ~ 0 and
/// sum(z^2) ~ n. Construction validates both constraints to n * kStdTol.
class StandardizedSample {
public:
    explicit StandardizedSample(std::vector<double> z);

    [[nodiscard]] std::size_t size() const noexcept { return z_.size(); }
    [[nodiscard]] std::span<const double> values() const noexcept { return z_; }

    /// Median of the z-scores (the bound's left-hand side, up to sign).
    [[nodiscard]] double median() const noexcept;

private:
    std::vector<double> z_;
};

struct SummaryStats {
    std::size_t n;
    double mean;
    double sd;  // population divisor n
    double median;
};

/// Median of an already sorted range; lower/upper middle averaged for even n.
[[nodiscard]] double median_sorted(std::span<const double> sorted);

[[nodiscard]] double mean(const Sample& s);

/// Population standard deviation, divisor n. Zero iff the data is constant.
[[nodiscard]] double stddev_population(const Sample& s);

[[nodiscard]] double median(const Sample& s);

[[nodiscard]] SummaryStats summarize(const Sample& s);

/// Throws DegenerateSample when sd = 0.
[[nodiscard]] StandardizedSample standardize(const Sample& s);

/// (median - mean)/sd. Throws DegenerateSample when sd = 0.
[[nodiscard]] double nonparam_skewness(const Sample& s);

/// sum_i |x_i - mu|.
[[nodiscard]] double sum_abs_dev(const Sample& s, double mu);

/// The deviation chain |med-mean| <= mad(med) <= mad(mean) <= sd, reported
/// term by term. Monotone up to kStdTol for every sample.
struct ChainTerms {
    double median_mean_gap;   // |med x - mean|
    double abs_dev_median;    // (1/n) sum |x_i - med x|
    double abs_dev_mean;      // (1/n) sum |x_i - mean|
    double sd;                // population standard deviation
};

[[nodiscard]] ChainTerms chain_terms(const Sample& s);

}  // namespace hsbound
