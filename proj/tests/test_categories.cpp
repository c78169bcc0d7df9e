#include "entrolab/categories.hpp"
#include "entrolab/error.hpp"
#include "entrolab/random.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace entrolab;
using test_support::approx;

namespace {

LogReal lg(unsigned long n) { return LogReal::log_of(n); }

}  // namespace

TEST(finiset_entropy, examples) {
    EXPECT_TRUE(finiset_entropy(1).is_zero());
    EXPECT_EQ(finiset_entropy(6), lg(2) + lg(3));
    EXPECT_EQ(finiset_entropy(5), lg(5));
    EXPECT_THROW(finiset_entropy(0), Error);
    for (std::uint64_t a = 1; a < 20; ++a)
        for (std::uint64_t b = 1; b < 20; ++b) EXPECT_EQ(finiset_entropy(a * b), finiset_entropy(a) + finiset_entropy(b));
}

TEST(finsetop_entropy, examples) {
    EXPECT_EQ(finsetop_entropy(0), 0u);
    EXPECT_EQ(finsetop_entropy(1), 1u);
    EXPECT_EQ(finsetop_entropy(3 + 4), finsetop_entropy(3) + finsetop_entropy(4));
}

TEST(vect_entropy, examples) {
    EXPECT_EQ(vect_entropy(0), 0u);
    EXPECT_EQ(vect_entropy(2), 2u);
    EXPECT_EQ(gauss_entropy(3), 3u);
    auto pr = LinearEpi::projection(3, 2, {0});
    auto j = joint(pr, pr);
    EXPECT_EQ(vect_entropy(j), 1u);
    EXPECT_LT(vect_entropy(j), vect_entropy(pr) + vect_entropy(pr));
    auto j2 = joint(LinearEpi::projection(2, 2, {0}), LinearEpi::projection(2, 2, {1}));
    EXPECT_EQ(vect_entropy(j2), 2u);
}

TEST(linear_epi, validates) {
    EXPECT_THROW(LinearEpi(4, {{1, 0}}, 2), Error);
    EXPECT_THROW(LinearEpi(2, {{1, 1}, {1, 1}}, 2), Error);
    EXPECT_THROW(LinearEpi(3, {{3, 0}}, 2), Error);
    EXPECT_NO_THROW(LinearEpi(3, {{1, 2}, {0, 1}}, 2));
    EXPECT_EQ(rank_mod_p({{1, 1}, {1, 1}}, 5), 1u);
    EXPECT_EQ(rank_mod_p({{1, 2}, {2, 1}}, 3), 1u);  // 2 = -1 mod 3 makes the rows proportional
    EXPECT_EQ(rank_mod_p({{1, 2}, {2, 1}}, 5), 2u);
}

TEST(properties, vect_joint_is_subadditive) {
    Rng rng(41);
    const std::uint64_t primes[] = {2, 3, 5};
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t p = primes[rng.uniform(0, 2)];
        const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
        auto random_epi = [&] {
            while (true) {
                const std::size_t rows = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n)));
                std::vector<std::vector<std::uint64_t>> m(rows, std::vector<std::uint64_t>(n));
                for (auto& row : m)
                    for (auto& e : row) e = static_cast<std::uint64_t>(rng.uniform(0, static_cast<std::int64_t>(p) - 1));
                if (rank_mod_p(m, p) == rows) return LinearEpi(p, m, n);
            }
        };
        auto f = random_epi(), g = random_epi();
        auto j = joint(f, g);
        EXPECT_LE(vect_entropy(j), vect_entropy(f) + vect_entropy(g));
        EXPECT_GE(vect_entropy(j), std::max(vect_entropy(f), vect_entropy(g)));
        EXPECT_LE(vect_entropy(j), n);
    }
}

TEST(simplex_entropy, examples) {
    EXPECT_EQ(simplex_entropy(-1), 0u);
    EXPECT_EQ(simplex_entropy(0), 1u);
    // [m] (x) [n] is [m+n+1].
    EXPECT_EQ(simplex_entropy(2 + 3 + 1), simplex_entropy(2) + simplex_entropy(3));
    EXPECT_THROW(simplex_entropy(-2), Error);
}

TEST(surj_ord, joint_image_is_a_chain) {
    EXPECT_THROW(SurjOrd(2, 1, {0, 1, 0}), Error);  // not monotone
    EXPECT_THROW(SurjOrd(2, 1, {0, 0, 0}), Error);  // not onto
    SurjOrd f(3, 1, {0, 0, 1, 1}), g(3, 1, {0, 1, 1, 1});
    auto j = joint(f, g);
    EXPECT_TRUE(j.image_totally_ordered);
    EXPECT_EQ(j.image.size(), 3u);
    EXPECT_EQ(j.map.target(), 2);
    EXPECT_LE(simplex_entropy(j.map.target()), simplex_entropy(f.target()) + simplex_entropy(g.target()));

    Rng rng(42);
    for (int i = 0; i < 200; ++i) {
        const long n = rng.uniform(0, 7);
        auto random_surj = [&] {
            std::vector<long> a(static_cast<std::size_t>(n + 1));
            long cur = 0;
            for (std::size_t k = 1; k < a.size(); ++k) {
                if (rng.coin()) ++cur;
                a[k] = cur;
            }
            return SurjOrd(n, cur, a);
        };
        auto jj = joint(random_surj(), random_surj());
        EXPECT_TRUE(jj.image_totally_ordered);
    }
}

TEST(naturality, examples) {
    auto supp = naturality_square("supp", "1/2,1/4,1/4");
    EXPECT_TRUE(supp.commutes);
    EXPECT_EQ(std::get<LogReal>(supp.via_prob), lg(3));

    auto ab = naturality_square("ab_to_prob", "2,4");
    EXPECT_TRUE(ab.commutes);
    const LogReal three_log2 = lg(2) * Rational(3);
    EXPECT_EQ(std::get<EntropyPair>(ab.via_codomain), (EntropyPair{three_log2, three_log2}));

    auto v = naturality_square("vect_to_prob", "2");
    EXPECT_TRUE(v.commutes);
    EXPECT_EQ(std::get<EntropyPair>(v.via_prob), (EntropyPair{lg(4), lg(4)}));

    auto lp = naturality_square("incl_lprob", "1/2,1/4,1/4");
    EXPECT_EQ(std::get<LogReal>(lp.via_prob), lg(2) * Rational(3, 2));

    EXPECT_TRUE(naturality_square("simplex_to_prob", "3").commutes);
    EXPECT_TRUE(naturality_square("setop_to_prob", "0").commutes);
    EXPECT_EQ(naturality_functors().size(), 6u);

    try {
        naturality_square("forget", "1");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnknownFunctor);
    }
}

TEST(properties, naturality_squares_commute) {
    Rng rng(43);
    NaturalityConfig cfg;
    cfg.field = 3;
    cfg.group = 5;
    cfg.setop_dist = test_support::dist({"1/2", "1/3", "1/6"});
    for (int i = 0; i < 40; ++i) {
        Dist p = random_dist(rng);
        std::string masses;
        for (const auto& m : p.masses()) masses += (masses.empty() ? "" : ",") + to_string(m);
        for (const char* f : {"supp", "incl_lprob"}) EXPECT_TRUE(naturality_square(f, masses, cfg).commutes);
        const auto k = std::to_string(rng.uniform(0, 6));
        EXPECT_TRUE(naturality_square("vect_to_prob", k, cfg).commutes);
        EXPECT_TRUE(naturality_square("setop_to_prob", k, cfg).commutes);
        EXPECT_TRUE(naturality_square("simplex_to_prob", std::to_string(rng.uniform(-1, 6)), cfg).commutes);
        std::string orders;
        for (auto o : random_cyclic_orders(rng, 64)) orders += (orders.empty() ? "" : ",") + std::to_string(o);
        auto ab = naturality_square("ab_to_prob", orders, cfg);
        EXPECT_TRUE(ab.commutes);
        // Both components equal log|A| for the uniform distribution on A.
        const auto& pr = std::get<EntropyPair>(ab.via_prob);
        EXPECT_EQ(pr.h0, pr.h1);
        EXPECT_EQ(pr.h0, log_of_rational(Rational(parse_finab(orders).group_order())));
    }
}
