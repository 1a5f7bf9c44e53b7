#pragma once

namespace hsbound {

/// The classical ceiling on |median - mean|/sd.
[[nodiscard]] constexpr double classical_bound() noexcept { return 1.0; }

/// Sample-size-dependent sharp ceiling on |median - mean|/sd:
/// sqrt(k/(k+1)) for n = 2k+1, sqrt((k-1)/(k+1)) for n = 2k.
/// Accepts n = 2 (returns 0; median and mean coincide). Throws InvalidN for n < 2.
[[nodiscard]] double sharp_bound(int n);

/// Attainable range of the i-th standardized order statistic (1-indexed).
struct OrderStatRange {
    double lo;
    double hi;
};

/// Boyd-Hawkins range of (x_i - mean)/sd. The endpoints i = 1 and i = n have
/// tighter one-signed ranges than the generic interior formula would give.
/// Throws InvalidIndex for i outside [1, n], InvalidN for n < 2.
[[nodiscard]] OrderStatRange order_stat_range(int n, int i);

/// Tail masses about the mean: p = Pr(X > E[X]), q = Pr(X < E[X]).
/// Construction enforces p > 0, q > 0, p + q <= 1 (throws InvalidSplit).
struct ProbabilitySplit {
    ProbabilitySplit(double p_in, double q_in);

    double p;
    double q;
};

/// 2*sqrt(pq/(p+q)); always <= 1.
[[nodiscard]] double majindar_bound(const ProbabilitySplit& ps);

/// The quantities compared by the pq lemma: pq/(p+q) never exceeds any of
/// p(1-p), q(1-q), (p+q)/4.
struct LemmaPqTerms {
    double lhs;       // pq/(p+q) = 1/(1/p + 1/q)
    double p_term;    // p(1-p)
    double q_term;    // q(1-q)
    double avg_term;  // (p+q)/4
};

[[nodiscard]] LemmaPqTerms lemma_pq_terms(const ProbabilitySplit& ps);

}  // namespace hsbound
