#include "hsbound/verify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hsbound/errors.hpp"
#include "hsbound/extremal.hpp"

namespace hsbound {

std::string to_string(EvenCase c) {
    switch (c) {
        case EvenCase::Zero: return "Zero";
        case EvenCase::I: return "I";
        case EvenCase::II: return "II";
        case EvenCase::III: return "III";
        case EvenCase::IV: return "IV";
    }
    return "?";
}

BoundReport check_sample(const Sample& s) {
    const int n = static_cast<int>(s.size());
    if (n < 3) throw InvalidN("check_sample requires n >= 3, got " + std::to_string(n));
    if (!s.nondegenerate()) {
        throw DegenerateSample("check_sample requires nondegenerate data (sd > 0)");
    }
    const double ratio = nonparam_skewness(s);
    const double sharp = sharp_bound(n);
    const double slack = sharp - std::abs(ratio);
    std::optional<EvenCase> label;
    if (n % 2 == 0) label = case_classify(standardize(s));
    return BoundReport{n, ratio, classical_bound(), sharp, slack, slack <= kStdTol, label};
}

SweepResult two_block_sweep(int n) {
    if (n < 3) throw InvalidN("two_block_sweep requires n >= 3, got " + std::to_string(n));
    SweepResult result{0, -1.0, {}};
    result.per_j.reserve(static_cast<std::size_t>(n - 1));
    for (int j = 1; j <= n - 1; ++j) {
        const double med = expand(two_block_z(n, j)).median();
        result.per_j.emplace_back(j, med);
        if (std::abs(med) > result.max_ratio) {
            result.max_ratio = std::abs(med);
            result.j_star = j;
        }
    }
    return result;
}

namespace {

// Sign with the kStdTol dead zone around zero.
int sign_eps(double x) {
    if (x > kStdTol) return 1;
    if (x < -kStdTol) return -1;
    return 0;
}

}  // namespace

ImbalanceDecomposition imbalance_decomposition(const StandardizedSample& z) {
    const auto values = z.values();
    const int n = static_cast<int>(values.size());
    int negatives = 0;
    int positives = 0;
    double neg_mass = 0.0;
    for (double v : values) {
        const int sign = sign_eps(v);
        if (sign < 0) {
            ++negatives;
            neg_mass -= v;
        } else if (sign > 0) {
            ++positives;
        }
    }
    if (negatives == 0 || positives == 0) {
        throw NoSignChange("standardized vector has entries of one sign only");
    }
    return ImbalanceDecomposition{negatives, n - positives, neg_mass};
}

EvenCase case_classify(const StandardizedSample& z) {
    const auto values = z.values();
    const std::size_t n = values.size();
    if (n % 2 != 0) {
        throw OddN("case_classify requires even n, got " + std::to_string(n));
    }
    const std::size_t k = n / 2;
    const double z_lo = values[k - 1];  // z_k in 1-indexed terms
    const double z_hi = values[k];      // z_{k+1}
    const double sum = z_lo + z_hi;
    if (std::abs(sum) <= kStdTol) return EvenCase::Zero;
    if (sum > 0.0) {
        return sign_eps(z_lo) > 0 ? EvenCase::III : EvenCase::I;
    }
    return sign_eps(z_hi) < 0 ? EvenCase::IV : EvenCase::II;
}

DiscreteDistribution::DiscreteDistribution(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.size() < 2) {
        throw InvalidDistribution("need at least 2 atoms, got " + std::to_string(atoms_.size()));
    }
    double total = 0.0;
    for (const Atom& atom : atoms_) {
        if (!std::isfinite(atom.value)) throw InvalidDistribution("atom values must be finite");
        if (!(atom.prob > 0.0) || atom.prob > 1.0) {
            throw InvalidDistribution("atom probabilities must lie in (0, 1]");
        }
        total += atom.prob;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw InvalidDistribution("atom probabilities must sum to 1");
    }
    std::sort(atoms_.begin(), atoms_.end(),
              [](const Atom& a, const Atom& b) { return a.value < b.value; });
    for (std::size_t i = 1; i < atoms_.size(); ++i) {
        if (!(atoms_[i - 1].value < atoms_[i].value)) {
            throw InvalidDistribution("atom values must be distinct");
        }
    }
}

double DiscreteDistribution::mean() const {
    double m = 0.0;
    for (const Atom& atom : atoms_) m += atom.prob * atom.value;
    return m;
}

double DiscreteDistribution::variance() const {
    const double m = mean();
    double var = 0.0;
    for (const Atom& atom : atoms_) {
        const double d = atom.value - m;
        var += atom.prob * d * d;
    }
    return var;
}

double DiscreteDistribution::median() const {
    // Median interval [L, U]: L = first atom with F >= 1/2, U = first atom
    // with F > 1/2. When F jumps over 1/2 the two coincide; when F hits 1/2
    // exactly the interval spans to the next atom. Report the midpoint.
    double lower = atoms_.back().value;
    double upper = atoms_.back().value;
    double cum = 0.0;
    bool lower_set = false;
    for (const Atom& atom : atoms_) {
        cum += atom.prob;
        if (!lower_set && cum >= 0.5) {
            lower = atom.value;
            lower_set = true;
        }
        if (cum > 0.5) {
            upper = atom.value;
            break;
        }
    }
    return (lower + upper) / 2.0;
}

MajindarCheck majindar_check(const DiscreteDistribution& d) {
    const double m = d.mean();
    const double var = d.variance();
    if (!(var > 0.0)) throw ZeroVariance("distribution has zero variance");
    double p = 0.0;
    double q = 0.0;
    for (const auto& atom : d.atoms()) {
        if (atom.value > m) p += atom.prob;
        else if (atom.value < m) q += atom.prob;
    }
    if (!(p > 0.0) || !(q > 0.0)) {
        throw MeanAtomExhaustive("all probability mass on one side of the mean");
    }
    // Disjoint partial sums can round to p + q slightly above 1.
    if (const double total = p + q; total > 1.0) {
        p /= total;
        q /= total;
    }
    const double sd = std::sqrt(var);
    const double med = d.median();
    const double ratio = std::abs(m - med) / sd;
    const double bound = majindar_bound(ProbabilitySplit(p, q));
    return MajindarCheck{
        m, sd, med, p, q, ratio, bound,
        ratio <= bound + kStdTol,
        std::abs(ratio - bound) <= kStdTol,
    };
}

}  // namespace hsbound
