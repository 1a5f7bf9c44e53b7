#include "hsbound/bounds.hpp"

#include <cmath>
#include <string>

#include "hsbound/errors.hpp"

namespace hsbound {

double sharp_bound(int n) {
    if (n < 2) throw InvalidN("sharp_bound requires n >= 2, got " + std::to_string(n));
    const int k = n / 2;
    if (n % 2 == 1) {
        return std::sqrt(static_cast<double>(k) / static_cast<double>(k + 1));
    }
    return std::sqrt(static_cast<double>(k - 1) / static_cast<double>(k + 1));
}

OrderStatRange order_stat_range(int n, int i) {
    if (n < 2) throw InvalidN("order_stat_range requires n >= 2, got " + std::to_string(n));
    if (i < 1 || i > n) {
        throw InvalidIndex("order-statistic index " + std::to_string(i) +
                           " outside [1, " + std::to_string(n) + "]");
    }
    const double nd = static_cast<double>(n);
    if (i == 1) return {-std::sqrt(nd - 1.0), -std::sqrt(1.0 / (nd - 1.0))};
    if (i == n) return {std::sqrt(1.0 / (nd - 1.0)), std::sqrt(nd - 1.0)};
    const double id = static_cast<double>(i);
    return {-std::sqrt((nd - id) / id), std::sqrt((id - 1.0) / (nd + 1.0 - id))};
}

ProbabilitySplit::ProbabilitySplit(double p_in, double q_in) : p(p_in), q(q_in) {
    if (!(p > 0.0) || !(q > 0.0) || !(p + q <= 1.0)) {
        throw InvalidSplit("need p > 0, q > 0, p + q <= 1; got p = " + std::to_string(p) +
                           ", q = " + std::to_string(q));
    }
}

double majindar_bound(const ProbabilitySplit& ps) {
    return 2.0 * std::sqrt(ps.p * ps.q / (ps.p + ps.q));
}

LemmaPqTerms lemma_pq_terms(const ProbabilitySplit& ps) {
    const double p = ps.p;
    const double q = ps.q;
    return LemmaPqTerms{
        p * q / (p + q),
        p * (1.0 - p),
        q * (1.0 - q),
        (p + q) / 4.0,
    };
}

}  // namespace hsbound
