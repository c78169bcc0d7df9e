#include "entrolab/lprob.hpp"

#include "entrolab/entropy.hpp"
#include "entrolab/error.hpp"
#include "entrolab/majorization.hpp"

#include <mpfr.h>

namespace entrolab {

namespace {

void check_p(const Rational& p) {
    if (!(p > 0 && p < 1)) throw Error(ErrorCode::RangeError, "geometric parameter must lie in (0, 1)");
}

struct Mpfr {
    mpfr_t v;
    explicit Mpfr(unsigned bits) { mpfr_init2(v, bits); }
    ~Mpfr() { mpfr_clear(v); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
};

Rational to_rational(const mpfr_t x) {
    Rational r;
    mpfr_get_q(r.get_mpq_t(), x);
    return r;
}

}  // namespace

Dist geometric_truncated(const Rational& p, std::size_t n) {
    check_p(p);
    if (n == 0) throw Error(ErrorCode::RangeError, "cutoff must be >= 1");
    std::vector<std::pair<Label, Rational>> pairs;
    Rational survive = 1;  // (1-p)^(k-1)
    for (std::size_t k = 1; k < n; ++k) {
        pairs.emplace_back(Label(std::to_string(k)), p * survive);
        survive *= 1 - p;
    }
    pairs.emplace_back(Label(std::to_string(n)), survive);
    return Dist::make(std::move(pairs));
}

LogReal geometric_entropy_limit(const Rational& p) {
    check_p(p);
    const Rational q = 1 - p;
    return -LogReal::log_of(p) - LogReal::log_of(q) * Rational(q / p);
}

std::vector<LogReal> truncation_entropies(const Rational& p, std::size_t n_max) {
    std::vector<LogReal> out;
    for (std::size_t n = 1; n <= n_max; ++n) out.push_back(shannon(geometric_truncated(p, n)));
    return out;
}

Interval rho_summability_margin(const Dist& p, const Rational& rho, unsigned bits) {
    if (!(rho > 0 && rho < 1)) throw Error(ErrorCode::RangeError, "rho must lie in (0, 1)");
    Mpfr rho_lo(bits), rho_hi(bits), m_lo(bits), m_hi(bits), t(bits), sum_lo(bits), sum_hi(bits);
    mpfr_set_q(rho_lo.v, rho.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(rho_hi.v, rho.get_mpq_t(), MPFR_RNDU);
    mpfr_set_zero(sum_lo.v, 1);
    mpfr_set_zero(sum_hi.v, 1);
    for (const auto& m : p.masses()) {
        mpfr_set_q(m_lo.v, m.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(m_hi.v, m.get_mpq_t(), MPFR_RNDU);
        // For 0 < m <= 1, m^rho grows with m and shrinks with rho.
        mpfr_pow(t.v, m_lo.v, rho_hi.v, MPFR_RNDD);
        mpfr_add(sum_lo.v, sum_lo.v, t.v, MPFR_RNDD);
        mpfr_pow(t.v, m_hi.v, rho_lo.v, MPFR_RNDU);
        mpfr_add(sum_hi.v, sum_hi.v, t.v, MPFR_RNDU);
    }
    return {to_rational(sum_lo.v), to_rational(sum_hi.v)};
}

MinimalNReport minimal_truncation(const Dist& p, const Dist& q, std::size_t k, const Rational& geom_p,
                                  std::size_t max_extra) {
    if (k == 0) throw Error(ErrorCode::RangeError, "k must be >= 1");
    if (compare(shannon(p), shannon(q)) < 0) throw Error(ErrorCode::HypothesisViolated, "need H1(P) >= H1(Q)");
    MinimalNReport r;
    r.k = k;
    Integer pk, qk;
    mpz_ui_pow_ui(pk.get_mpz_t(), p.size(), k);
    mpz_ui_pow_ui(qk.get_mpz_t(), q.size(), k);
    Integer bound = (qk + pk - 1) / pk;
    if (bound < 1) bound = 1;
    if (!bound.fits_ulong_p()) throw Error(ErrorCode::BudgetExhausted, "Hartley bound too large");
    r.h0_bound = bound.get_ui();
    for (std::size_t n = r.h0_bound; n <= r.h0_bound + max_extra; ++n) {
        if (tensor_power_dominates(p, q, k, geometric_truncated(geom_p, n))) {
            r.n = n;
            return r;
        }
    }
    throw Error(ErrorCode::BudgetExhausted, "no truncation found within the scan budget");
}

}  // namespace entrolab
