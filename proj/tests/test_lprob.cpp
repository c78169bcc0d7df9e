#include "entrolab/entropy.hpp"
#include "entrolab/error.hpp"
#include "entrolab/lprob.hpp"
#include "entrolab/majorization.hpp"
#include "entrolab/random.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace entrolab;
using test_support::approx;
using test_support::dist;
using test_support::q;

namespace {

LogReal lg(unsigned long n) { return LogReal::log_of(n); }

}  // namespace

TEST(geometric_truncated, examples) {
    EXPECT_TRUE(geometric_truncated(q("1/2"), 1).is_degenerate());
    EXPECT_EQ(geometric_truncated(q("1/2"), 3).masses(), (std::vector<Rational>{q("1/2"), q("1/4"), q("1/4")}));
    EXPECT_EQ(geometric_truncated(q("1/2"), 4).masses(),
              (std::vector<Rational>{q("1/2"), q("1/4"), q("1/8"), q("1/8")}));
    EXPECT_EQ(geometric_truncated(q("1/3"), 3).masses(), (std::vector<Rational>{q("1/3"), q("2/9"), q("4/9")}));
    EXPECT_EQ(geometric_truncated(q("1/2"), 2).label(1), Label("2"));
    EXPECT_THROW(geometric_truncated(q("1"), 3), Error);
    EXPECT_THROW(geometric_truncated(q("1/2"), 0), Error);
}

TEST(truncation_entropies, closed_form_for_half) {
    auto hs = truncation_entropies(q("1/2"), 40);
    ASSERT_EQ(hs.size(), 40u);
    for (std::size_t n = 1; n <= 40; ++n) {
        // H1(Y_n) = (2 - 2^(2-n)) log 2.
        Rational c = 2 - Rational(4) / Rational(Integer(1) << static_cast<unsigned>(n));
        EXPECT_EQ(hs[n - 1], lg(2) * c) << n;
    }
    const LogReal limit = geometric_entropy_limit(q("1/2"));
    EXPECT_EQ(limit, lg(2) * Rational(2));
    const LogReal gap = limit - hs[39];
    EXPECT_EQ(gap.sign(), 1);
    EXPECT_LT(gap.enclose(128).hi, Rational(1, 1000000));
}

TEST(properties, truncation_monotone_with_shrinking_steps) {
    for (const char* pt : {"1/2", "1/3", "2/5"}) {
        const Rational p = q(pt);
        auto hs = truncation_entropies(p, 20);
        const LogReal limit = geometric_entropy_limit(p);
        for (std::size_t i = 1; i < hs.size(); ++i) {
            EXPECT_GE(compare(hs[i], hs[i - 1]), 0) << pt;
            EXPECT_LT(compare(hs[i], limit), 0) << pt;
            if (i >= 2 && p == q("1/2")) EXPECT_LT(compare(hs[i] - hs[i - 1], hs[i - 1] - hs[i - 2]), 0);
        }
        // Limit against a long double series evaluation.
        const long double pl = test_support::ld(p);
        long double series = 0;
        for (int k = 1; k < 4000; ++k) {
            const long double m = pl * std::pow(1 - pl, static_cast<long double>(k - 1));
            series -= m * std::log(m);
        }
        EXPECT_NEAR(static_cast<double>(approx(limit)), static_cast<double>(series), 1e-12);
    }
}

TEST(rho_summability_margin, examples) {
    Interval one = rho_summability_margin(Dist::point(), q("1/2"));
    EXPECT_EQ(one.lo, 1);
    EXPECT_EQ(one.hi, 1);
    Interval r2 = rho_summability_margin(Dist::uniform(2), q("1/2"));
    EXPECT_LT(r2.lo * r2.lo, 2);
    EXPECT_GT(r2.hi * r2.hi, 2);
    EXPECT_LT(r2.width(), Rational(1, 1000000000));
    Interval r4 = rho_summability_margin(Dist::uniform(4), q("1/2"));
    EXPECT_LE(r4.lo, 2);
    EXPECT_GE(r4.hi, 2);
    EXPECT_THROW(rho_summability_margin(Dist::uniform(2), q("1")), Error);
}

TEST(minimal_truncation, reports_least_n) {
    Dist r = Dist::uniform(4);
    // H1 equal-or-more is required.
    EXPECT_THROW(minimal_truncation(Dist::uniform(2), r, 1), Error);
    for (std::size_t k = 1; k <= 3; ++k) {
        Dist big = dist({"1/4", "1/4", "1/4", "1/8", "1/8"});
        auto rep = minimal_truncation(big, r, k);
        EXPECT_EQ(rep.k, k);
        EXPECT_GE(rep.n, rep.h0_bound);
        // Oracle: materialize both sides for every n up to the reported one.
        const Dist lhs_base = tensor_power(big, k), rhs = tensor_power(r, k);
        for (std::size_t n = 1; n <= rep.n; ++n) {
            const bool ok = order01(product_dist(lhs_base, geometric_truncated(q("1/2"), n)), rhs);
            EXPECT_EQ(ok, n == rep.n) << "k=" << k << " n=" << n;
        }
    }
}

TEST(properties, minimal_truncation_on_random_pairs) {
    Rng rng(61);
    int done = 0;
    for (int i = 0; i < 400 && done < 30; ++i) {
        Dist a = random_dist(rng, 5, 16, 2), b = random_dist(rng, 5, 16, 2);
        if (compare(shannon(a), shannon(b)) < 0) std::swap(a, b);
        const std::size_t k = static_cast<std::size_t>(rng.uniform(1, 2));
        auto rep = minimal_truncation(a, b, k);
        ++done;
        const Dist lhs_base = tensor_power(a, k), rhs = tensor_power(b, k);
        EXPECT_TRUE(order01(product_dist(lhs_base, geometric_truncated(q("1/2"), rep.n)), rhs));
        if (rep.n > 1) EXPECT_FALSE(order01(product_dist(lhs_base, geometric_truncated(q("1/2"), rep.n - 1)), rhs));
        // Hartley bound: least n with k H0(a) + log n >= k H0(b).
        const long double need = std::pow(static_cast<long double>(b.size()) / a.size(), static_cast<long double>(k));
        EXPECT_EQ(rep.h0_bound, std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(need - 1e-12L))));
    }
    EXPECT_EQ(done, 30);
}
