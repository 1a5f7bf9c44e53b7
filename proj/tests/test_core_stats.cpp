#include <doctest.h>

#include <cmath>
#include <vector>

#include "hsbound/errors.hpp"
#include "hsbound/sample.hpp"
#include "support/random_corpus.hpp"

using namespace hsbound;

TEST_CASE("mean") {
    CHECK(mean(Sample({1, 2, 3})) == 2.0);
    CHECK(mean(Sample({0, 0, 0, 4})) == 1.0);
    CHECK(mean(Sample({5.5, 5.5, 5.5})) == 5.5);
}

TEST_CASE("population standard deviation uses divisor n") {
    CHECK(stddev_population(Sample({7, 7, 7})) == 0.0);
    CHECK(stddev_population(Sample({-1, 1})) == 1.0);
    CHECK(stddev_population(Sample({0, 0, 3, 3})) == 1.5);
}

TEST_CASE("median of sorted data") {
    CHECK(median(Sample({1, 5, 9})) == 5.0);
    CHECK(median(Sample({1, 2, 4, 10})) == 3.0);
}

TEST_CASE("sample construction sorts and validates") {
    const Sample s({9, 1, 5});
    CHECK(s.min() == 1.0);
    CHECK(s.max() == 9.0);
    CHECK(median(s) == 5.0);
    CHECK_THROWS_AS(Sample({7.0}), InvalidSample);
    CHECK_THROWS_AS(Sample({}), InvalidSample);
    CHECK_THROWS_AS(Sample({1.0, std::nan("")}), InvalidSample);
}

TEST_CASE("standardize") {
    const auto z = standardize(Sample({0, 1}));
    CHECK(z.values()[0] == -1.0);
    CHECK(z.values()[1] == 1.0);

    const auto z2 = standardize(Sample({0, 0, 3, 3}));
    const std::vector<double> expected{-1.0, -1.0, 1.0, 1.0};
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(z2.values()[i] == doctest::Approx(expected[i]));
    }

    CHECK_THROWS_AS(standardize(Sample({4, 4, 4})), DegenerateSample);
}

TEST_CASE("nonparametric skewness") {
    CHECK(nonparam_skewness(Sample({-1, 0, 1})) == 0.0);
    CHECK(nonparam_skewness(Sample({0, 0, 3, 3})) == 0.0);
    // mean 0.2, median 0, sd 0.4
    CHECK(nonparam_skewness(Sample({0, 0, 0, 0, 1})) == doctest::Approx(-0.5));
    CHECK_THROWS_AS(nonparam_skewness(Sample({2, 2})), DegenerateSample);
}

TEST_CASE("sum of absolute deviations") {
    CHECK(sum_abs_dev(Sample({1, 5, 9}), 5.0) == 8.0);
    CHECK(sum_abs_dev(Sample({3, 3}), 3.0) == 0.0);
    CHECK(sum_abs_dev(Sample({1, 2, 4, 10}), 3.0) == 11.0);  // 2 + 1 + 1 + 7
}

TEST_CASE("chain terms") {
    const auto c = chain_terms(Sample({-1, 0, 1}));
    CHECK(c.median_mean_gap == 0.0);
    CHECK(c.abs_dev_median == doctest::Approx(2.0 / 3.0));
    CHECK(c.abs_dev_mean == doctest::Approx(2.0 / 3.0));
    CHECK(c.sd == doctest::Approx(std::sqrt(2.0 / 3.0)));

    const auto constant = chain_terms(Sample({4, 4, 4}));
    CHECK(constant.median_mean_gap == 0.0);
    CHECK(constant.abs_dev_median == 0.0);
    CHECK(constant.abs_dev_mean == 0.0);
    CHECK(constant.sd == 0.0);

    const auto blocks = chain_terms(Sample({0, 0, 3, 3}));
    CHECK(blocks.median_mean_gap == 0.0);
    CHECK(blocks.abs_dev_median == 1.5);
    CHECK(blocks.abs_dev_mean == 1.5);
    CHECK(blocks.sd == 1.5);
}

TEST_CASE("chain is monotone and the ratio is bounded on random samples") {
    Xoshiro256StarStar rng(20240817);
    for (int trial = 0; trial < 3000; ++trial) {
        const int n = 3 + static_cast<int>(rng.uniform_index(18));
        const auto s = testsupport::random_sample(n, rng);
        const auto c = chain_terms(s);
        CHECK(c.median_mean_gap <= c.abs_dev_median + kStdTol);
        CHECK(c.abs_dev_median <= c.abs_dev_mean + kStdTol);
        CHECK(c.abs_dev_mean <= c.sd + kStdTol);
        CHECK(std::abs(nonparam_skewness(s)) <= 1.0 + kStdTol);
    }
}

TEST_CASE("median minimizes sum of absolute deviations over a grid") {
    Xoshiro256StarStar rng(7151);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 3 + static_cast<int>(rng.uniform_index(18));
        const auto s = testsupport::random_sample(n, rng);
        const double at_median = sum_abs_dev(s, median(s));
        const double lo = s.min();
        const double hi = s.max();
        for (int g = 0; g <= 100; ++g) {
            const double mu = lo + (hi - lo) * static_cast<double>(g) / 100.0;
            CHECK(at_median <= sum_abs_dev(s, mu) + kStdTol);
        }
    }
}

TEST_CASE("standardization round trip recovers the data") {
    Xoshiro256StarStar rng(99021);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 3 + static_cast<int>(rng.uniform_index(18));
        const auto s = testsupport::random_sample(n, rng);
        const double m = mean(s);
        const double sd = stddev_population(s);
        const auto z = standardize(s);
        const double tol = kStdTol * std::max({1.0, std::abs(m), sd});
        for (std::size_t i = 0; i < s.size(); ++i) {
            CHECK(std::abs(m + sd * z.values()[i] - s.values()[i]) <= tol);
        }
    }
}

TEST_CASE("skewness is location invariant and scale equivariant") {
    Xoshiro256StarStar rng(31337);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 3 + static_cast<int>(rng.uniform_index(18));
        const auto s = testsupport::random_sample(n, rng);
        const double ratio = nonparam_skewness(s);
        const double alpha = rng.uniform_in(-50.0, 50.0);
        double beta = rng.uniform_in(-5.0, 5.0);
        if (std::abs(beta) < 0.1) beta = 0.1;

        std::vector<double> transformed;
        transformed.reserve(s.size());
        for (double v : s.values()) transformed.push_back(alpha + beta * v);
        const double sign = beta > 0 ? 1.0 : -1.0;
        CHECK(std::abs(nonparam_skewness(Sample(std::move(transformed))) - sign * ratio) <=
              kStdTol);
    }
}

TEST_CASE("standardized samples sum to zero with sum of squares n") {
    Xoshiro256StarStar rng(5150);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 3 + static_cast<int>(rng.uniform_index(18));
        const auto z = standardize(testsupport::random_sample(n, rng));
        double sum = 0.0;
        double sum_sq = 0.0;
        for (double v : z.values()) {
            sum += v;
            sum_sq += v * v;
        }
        CHECK(std::abs(sum) <= static_cast<double>(n) * kStdTol);
        CHECK(std::abs(sum_sq - static_cast<double>(n)) <= static_cast<double>(n) * kStdTol);
        CHECK(z.values().front() < z.values().back());
    }
}
