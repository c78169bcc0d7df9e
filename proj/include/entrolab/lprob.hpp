#pragma once

#include "entrolab/dist.hpp"
#include "entrolab/log_real.hpp"

#include <cstddef>
#include <vector>

namespace entrolab {

/// Y_n = min(X, n) for X ~ Geom(p) on {1, 2, ...}: masses p(1-p)^(k-1) for
/// k < n and the folded tail (1-p)^(n-1) at k = n. Labels "1".."n".
/// Throws RangeError unless 0 < p < 1 and n >= 1.
Dist geometric_truncated(const Rational& p, std::size_t n);

/// H1(Geom(p)) = -log p - ((1-p)/p) log(1-p), exact for rational p.
LogReal geometric_entropy_limit(const Rational& p);

/// H1(Y_1), ..., H1(Y_nmax).
std::vector<LogReal> truncation_entropies(const Rational& p, std::size_t n_max);

/// Rational bracket of sum_x P(x)^rho, rounded outward at `bits` of
/// precision. Throws RangeError unless 0 < rho < 1.
Interval rho_summability_margin(const Dist& p, const Rational& rho, unsigned bits = 128);

struct MinimalNReport {
    std::size_t k = 0;
    std::size_t h0_bound = 0;  ///< least n with k H0(P) + log n >= k H0(Q)
    std::size_t n = 0;         ///< least n with P^k (x) Y_n >=_01 Q^k
};

/// Scans n upward from the Hartley bound. Throws HypothesisViolated unless
/// H1(P) >= H1(Q), and BudgetExhausted past n = h0_bound + max_extra.
MinimalNReport minimal_truncation(const Dist& p, const Dist& q, std::size_t k, const Rational& geom_p = Rational(1, 2),
                                  std::size_t max_extra = 64);

}  // namespace entrolab
