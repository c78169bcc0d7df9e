#include "entrolab/error.hpp"
#include "entrolab/log_real.hpp"
#include "entrolab/random.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace entrolab;
using test_support::approx;
using test_support::q;

namespace {

LogReal lg(unsigned long n) { return LogReal::log_of(n); }

LogReal::Terms terms(std::initializer_list<std::pair<unsigned long, const char*>> t) {
    LogReal::Terms out;
    for (auto [p, c] : t) out[Integer(p)] = q(c);
    return out;
}

}  // namespace

TEST(log_of_rational, examples) {
    EXPECT_TRUE(log_of_rational(q("1")).is_zero());
    EXPECT_EQ(log_of_rational(q("9/4")).terms(), terms({{3, "2"}, {2, "-2"}}));
    EXPECT_EQ(log_of_rational(q("12")).terms(), terms({{2, "2"}, {3, "1"}}));
    EXPECT_THROW(log_of_rational(q("0")), Error);
    EXPECT_THROW(log_of_rational(q("-3")), Error);
}

TEST(factorize, handles_large_semiprimes) {
    // 1000003 * 1000033 needs more than trial division up to 2^16.
    Integer n = Integer(1000003) * Integer(1000033);
    auto f = factorize(n);
    ASSERT_EQ(f.size(), 2u);
    EXPECT_EQ(f.at(Integer(1000003)), 1u);
    EXPECT_EQ(f.at(Integer(1000033)), 1u);
    auto g = factorize(Integer("18446744073709551617"));  // 2^64 + 1 = 274177 * 67280421310721
    Integer prod = 1;
    for (const auto& [p, e] : g) {
        EXPECT_NE(mpz_probab_prime_p(p.get_mpz_t(), 30), 0);
        for (unsigned long i = 0; i < e; ++i) prod *= p;
    }
    EXPECT_EQ(prod, Integer("18446744073709551617"));
    EXPECT_EQ(g.size(), 2u);
}

TEST(add_scale, examples) {
    EXPECT_TRUE((lg(4) + lg(2) * Rational(-2)).is_zero());
    EXPECT_EQ(log_of_rational(q("9/4")) * q("1/2"), log_of_rational(q("3/2")));
    EXPECT_EQ(lg(2) + lg(3), lg(6));
}

TEST(sign, examples) {
    EXPECT_EQ(LogReal().sign(), 0);
    EXPECT_EQ((lg(3) - lg(2) * q("3/2")).sign(), 1);
    EXPECT_EQ((lg(2) - lg(3)).sign(), -1);
}

TEST(sign, separates_close_values) {
    // 2^10 = 1024 vs 10^3 = 1000: 10 ln 2 - 3 ln 10 is about 0.0237.
    EXPECT_EQ((lg(2) * Rational(10) - lg(10) * Rational(3)).sign(), 1);
    // 3^12 = 531441 vs 2^19 = 524288.
    EXPECT_EQ((lg(3) * Rational(12) - lg(2) * Rational(19)).sign(), 1);
    // A value near 1e-30 still resolves by escalating precision.
    const LogReal tiny = log_of_rational(Rational(Integer("1000000000000000000000000000001"), Integer("1000000000000000000000000000000")));
    EXPECT_EQ(tiny.sign(), 1);
}

TEST(sign, cap_is_enforced) {
    const LogReal tiny = log_of_rational(Rational(Integer("1000000000000000000000000000001"), Integer("1000000000000000000000000000000")));
    try {
        tiny.sign(SignPolicy{8, 16});
        FAIL() << "expected PrecisionExhausted";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::PrecisionExhausted);
    }
}

TEST(cmp_pair, examples) {
    EXPECT_EQ(cmp_pair({lg(2), lg(2)}, {LogReal(), LogReal()}), PairOrder::GT);
    EXPECT_EQ(cmp_pair({lg(2), lg(2)}, {lg(2), lg(2)}), PairOrder::EQ);
    EXPECT_EQ(cmp_pair({lg(3), lg(2)}, {lg(2), lg(2) * q("3/2")}), PairOrder::INCOMPARABLE);
    EXPECT_EQ(cmp_pair({LogReal(), LogReal()}, {lg(2), lg(3)}), PairOrder::LT);
}

TEST(text, renders_and_parses) {
    LogReal x = lg(2) * q("3/2") + lg(3);
    EXPECT_EQ(x.to_string(), "3/2*log(2) + 1*log(3)");
    EXPECT_EQ(LogReal::parse(x.to_string()), x);
    EXPECT_EQ(LogReal().to_string(), "0");
    EXPECT_EQ(LogReal::parse("0"), LogReal());
    LogReal y = lg(5) * q("-1/3") + lg(7) * q("2");
    EXPECT_EQ(LogReal::parse(y.to_string()), y);
    EXPECT_EQ(LogReal::parse("2*log(6)"), lg(36));
    EXPECT_THROW(LogReal::parse("2*log(x)"), Error);
    EXPECT_EQ(lg(2).to_decimal(6), "0.693147");
}

TEST(enclose, contains_floating_value) {
    Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        LogReal x = random_logreal(rng);
        Interval iv = x.enclose(96);
        const long double v = approx(x);
        EXPECT_LE(test_support::ld(iv.lo), v + 1e-12L);
        EXPECT_GE(test_support::ld(iv.hi), v - 1e-12L);
        EXPECT_LT(iv.width(), Rational(1, 1000000000));
    }
}

TEST(properties, sign_matches_floating_oracle_when_clear) {
    Rng rng(6);
    int checked = 0;
    for (int i = 0; i < 1000; ++i) {
        LogReal x = random_logreal(rng);
        const long double v = approx(x);
        if (std::fabs(v) < 1e-9L) continue;
        ++checked;
        EXPECT_EQ(x.sign(), v > 0 ? 1 : -1) << x.to_string();
    }
    EXPECT_GT(checked, 900);
}

TEST(properties, vector_space_axioms) {
    Rng rng(8);
    for (int i = 0; i < 300; ++i) {
        LogReal a = random_logreal(rng), b = random_logreal(rng), c = random_logreal(rng);
        Rational r(rng.uniform(-7, 7), rng.uniform(1, 9)), s(rng.uniform(-7, 7), rng.uniform(1, 9));
        r.canonicalize();
        s.canonicalize();
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ((a + b) * r, a * r + b * r);
        EXPECT_EQ(a * (r + s), a * r + a * s);
        EXPECT_EQ(a * (r * s), (a * r) * s);
        EXPECT_TRUE((a - a).is_zero());
        EXPECT_EQ((a - a).sign(), 0);
    }
}

TEST(properties, no_zero_coefficients_are_stored) {
    Rng rng(9);
    for (int i = 0; i < 300; ++i) {
        LogReal a = random_logreal(rng), b = random_logreal(rng);
        for (const auto* x : {&a, &b}) {
            LogReal s = *x + b - b;
            for (const auto& [p, c] : s.terms()) EXPECT_NE(c, 0);
            EXPECT_EQ(s, *x);
        }
    }
}
