#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hsbound/bounds.hpp"
#include "hsbound/sample.hpp"

namespace hsbound {

/// Even-n median classification by the signs of the two middle z-scores.
enum class EvenCase { Zero, I, II, III, IV };

[[nodiscard]] std::string to_string(EvenCase c);

/// How a sample sits against both ceilings.
struct BoundReport {
    int n;
    double ratio;      // (median - mean)/sd
    double classical;  // 1
    double sharp;      // sharp_bound(n)
    double slack;      // sharp - |ratio|
    bool is_extremal;  // slack <= kStdTol
    std::optional<EvenCase> case_label;  // populated for even n only
};

/// Throws DegenerateSample for constant data, InvalidN for n < 3.
[[nodiscard]] BoundReport check_sample(const Sample& s);

/// Brute-force oracle: evaluate |median of z| for every two-block split.
struct SweepResult {
    int j_star;        // smallest maximizing j
    double max_ratio;  // max over j of |median of z|
    std::vector<std::pair<int, double>> per_j;  // (j, signed median of z)
};

/// Throws InvalidN for n < 3.
[[nodiscard]] SweepResult two_block_sweep(int n);

/// The proof's (ell, m, a) split of a standardized vector: ell strictly
/// negative entries, n - m strictly positive ones, and the shared absolute
/// mass a on each side. Entries within kStdTol of zero count as zero.
struct ImbalanceDecomposition {
    int ell;   // #{z_i < 0}
    int m;     // n - #{z_i > 0}
    double a;  // -sum of negative entries = sum of positive entries
};

/// Throws NoSignChange if every entry is on one side of zero after
/// tolerance rounding (impossible for a valid StandardizedSample).
[[nodiscard]] ImbalanceDecomposition imbalance_decomposition(const StandardizedSample& z);

/// Classify an even-length standardized vector by its middle pair.
/// Throws OddN for odd n.
[[nodiscard]] EvenCase case_classify(const StandardizedSample& z);

/// A finite-support distribution: distinct sorted atom values with
/// probabilities summing to 1. At least two atoms, so the variance is
/// positive. Construction validates (throws InvalidDistribution).
class DiscreteDistribution {
public:
    struct Atom {
        double value;
        double prob;
    };

    explicit DiscreteDistribution(std::vector<Atom> atoms);

    [[nodiscard]] const std::vector<Atom>& atoms() const noexcept { return atoms_; }
    [[nodiscard]] double mean() const;
    [[nodiscard]] double variance() const;
    /// Midpoint of the median interval.
    [[nodiscard]] double median() const;

private:
    std::vector<Atom> atoms_;
};

/// |E[X] - M|/sd against 2*sqrt(pq/(p+q)).
struct MajindarCheck {
    double mean;
    double sd;
    double median;
    double p;  // Pr(X > mean)
    double q;  // Pr(X < mean)
    double ratio;
    double bound;
    bool ok;        // ratio <= bound + kStdTol
    bool boundary;  // |ratio - bound| <= kStdTol
};

/// Throws ZeroVariance and MeanAtomExhaustive (all mass on one side of the
/// mean) before evaluating the bound.
[[nodiscard]] MajindarCheck majindar_check(const DiscreteDistribution& d);

}  // namespace hsbound
