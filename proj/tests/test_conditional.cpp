#include "entrolab/conditional.hpp"
#include "entrolab/entropy.hpp"
#include "entrolab/error.hpp"
#include "entrolab/random.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace entrolab;
using test_support::approx;
using test_support::ld;
using test_support::q;

namespace {

LogReal lg(unsigned long n) { return LogReal::log_of(n); }

MPMap first_bit(const Dist& u4) {
    return pushforward(u4, [](const Label& l) { return Label(std::to_string(std::stoi(l.atom()) / 2)); });
}

// Builds a random variable over f: P -> Q whose codomain refines Q.
CondRV refine(Rng& rng, const CondObj& f) {
    const Dist& p = f.total();
    std::vector<std::string> tag(p.size());
    for (auto& t : tag) t = std::to_string(rng.uniform(0, 2));
    MPMap mid = pushforward(p, [&](const Label& l) {
        const std::size_t i = *p.index_of(l);
        return Label::pair(f.map().image_label(i), Label(tag[i]));
    });
    const Dist& a = mid.target();
    std::vector<std::size_t> down(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) down[i] = *f.base().index_of(a.label(i)[0]);
    return CondRV(f, mid, MPMap(a, f.base(), down));
}

// Sum over y of Q(y) H1(A | y), in long double, straight from the masses.
long double cond_entropy_oracle(const CondRV& x) {
    std::map<std::size_t, std::vector<long double>> blocks;
    const Dist& a = x.codomain();
    for (std::size_t i = 0; i < a.size(); ++i) blocks[x.down()(i)].push_back(ld(a.mass(i)));
    long double h = 0;
    for (const auto& [y, ms] : blocks) {
        long double qy = 0;
        for (auto m : ms) qy += m;
        for (auto m : ms) h -= m * std::log(m / qy);
    }
    return h;
}

}  // namespace

TEST(conditional_product, examples) {
    Dist u4 = Dist::uniform(4);
    CondObj f(first_bit(u4));
    auto c = conditional_product(f, f);
    EXPECT_EQ(c.total().size(), 8u);
    for (const auto& m : c.total().masses()) EXPECT_EQ(m, q("1/8"));
    EXPECT_EQ(c.base(), f.base());

    // Degenerate base: ordinary product.
    Dist p = test_support::dist({"1/2", "1/3", "1/6"}), r = Dist::uniform(2);
    auto plain = conditional_product(CondObj(MPMap::to_point(p)), CondObj(MPMap::to_point(r)));
    EXPECT_TRUE(iso_check(plain.total(), product_dist(p, r)));

    // Unit law.
    auto unit = conditional_product(CondObj(MPMap::identity(f.base())), f);
    EXPECT_TRUE(iso_check(unit.total(), f.total()));

    try {
        conditional_product(f, CondObj(MPMap::to_point(p)));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::TargetMismatch);
    }
}

TEST(properties, conditional_product_symmetric_and_associative) {
    Rng rng(51);
    for (int i = 0; i < 100; ++i) {
        Dist base = random_dist(rng, 6, 24);
        MPMap g = random_merge(rng, base, 3);
        Dist qd = g.target();
        auto over_q = [&] {
            // A random refinement of qd, mapped down onto it.
            std::vector<std::pair<Label, Rational>> parts;
            for (std::size_t j = 0; j < qd.size(); ++j) {
                if (rng.coin()) {
                    parts.emplace_back(Label::pair(qd.label(j), "a"), qd.mass(j) / 3);
                    parts.emplace_back(Label::pair(qd.label(j), "b"), qd.mass(j) * 2 / 3);
                } else {
                    parts.emplace_back(Label::pair(qd.label(j), "a"), qd.mass(j));
                }
            }
            Dist d = make_dist(parts);
            std::vector<std::size_t> asg(d.size());
            for (std::size_t k = 0; k < d.size(); ++k) asg[k] = *qd.index_of(d.label(k)[0]);
            return CondObj(MPMap(d, qd, asg));
        };
        CondObj f1 = over_q(), f2 = over_q(), f3 = over_q();
        auto a = conditional_product(f1, f2), b = conditional_product(f2, f1);
        EXPECT_TRUE(iso_check(a.total(), b.total()));
        auto l = conditional_product(conditional_product(f1, f2), f3);
        auto r = conditional_product(f1, conditional_product(f2, f3));
        EXPECT_TRUE(iso_check(l.total(), r.total()));
    }
}

TEST(cond_entropy, examples) {
    Dist u4 = Dist::uniform(4);
    MPMap parity = pushforward(u4, [](const Label& l) { return Label(std::to_string(std::stoi(l.atom()) % 2)); });
    CondObj f(parity);
    EXPECT_EQ(cond_entropy(CondRV::identity(f)), lg(2));
    EXPECT_TRUE(cond_entropy(CondRV(f, parity, MPMap::identity(parity.target()))).is_zero());
    Dist p = test_support::dist({"1/2", "1/4", "1/4"});
    CondObj to_pt(MPMap::to_point(p));
    EXPECT_EQ(cond_entropy(CondRV::identity(to_pt)), shannon(p));

    // A mid map that does not commute with the base.
    MPMap half = first_bit(u4);
    std::vector<std::size_t> id2{0, 1};
    try {
        CondRV(f, half, MPMap(half.target(), parity.target(), id2));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotCommuting);
    }
}

TEST(properties, cond_entropy_matches_weighted_formula) {
    Rng rng(52);
    for (int i = 0; i < 300; ++i) {
        Dist p = random_dist(rng);
        CondObj f(random_merge(rng, p, 3));
        CondRV x = refine(rng, f);
        const LogReal h = cond_entropy(x);
        EXPECT_GE(h.sign(), 0);
        EXPECT_NEAR(static_cast<double>(approx(h)), static_cast<double>(cond_entropy_oracle(x)), 1e-12);
    }
}

TEST(properties, conditional_subadditivity) {
    Rng rng(53);
    for (int i = 0; i < 300; ++i) {
        Dist p = random_dist(rng);
        CondObj f(random_merge(rng, p, 3));
        CondRV x = refine(rng, f), y = refine(rng, f);
        CondRV xy = cond_joint(x, y);
        EXPECT_GE((cond_entropy(x) + cond_entropy(y) - cond_entropy(xy)).sign(), 0);
        EXPECT_GE(cond_entropy_oracle(x) + cond_entropy_oracle(y) - cond_entropy_oracle(xy), -1e-12L);
    }
}

TEST(chain_rule_check, examples) {
    Dist u8 = Dist::uniform(8);
    MPMap f = pushforward(u8, [](const Label& l) { return Label(std::to_string(std::stoi(l.atom()) / 2)); });
    MPMap g = pushforward(f.target(), [](const Label& l) { return Label(std::to_string(std::stoi(l.atom()) / 2)); });
    auto c = chain_rule_check(f, g);
    EXPECT_TRUE(c.holds);
    EXPECT_EQ(c.upper, lg(2));
    EXPECT_EQ(c.lower, lg(2));
    EXPECT_EQ(c.composite, lg(4));

    Dist p = test_support::dist({"1/2", "1/4", "1/4"});
    auto d = chain_rule_check(MPMap::identity(p), MPMap::identity(p));
    EXPECT_TRUE(d.holds);
    EXPECT_TRUE(d.composite.is_zero());

    EXPECT_THROW(chain_rule_check(f, f), Error);
}

TEST(properties, chain_rule_on_random_towers) {
    Rng rng(54);
    for (int i = 0; i < 200; ++i) {
        Dist k = random_dist(rng);
        MPMap f = random_merge(rng, k, 5);
        MPMap g = random_merge(rng, f.target(), 3);
        auto c = chain_rule_check(f, g);
        EXPECT_TRUE(c.holds);
        EXPECT_NEAR(static_cast<double>(approx(c.composite)),
                    static_cast<double>(test_support::shannon_ld(k) - test_support::shannon_ld(g.target())), 1e-12);
    }
}

TEST(epsilon_family, examples) {
    Dist p = epsilon_family(q("1/8"));
    Rational total = 0;
    for (const auto& m : p.masses()) total += m;
    EXPECT_EQ(total, 1);
    EXPECT_EQ(hartley(p), lg(5));
    EXPECT_THROW(epsilon_family(q("1/4")), Error);
    EXPECT_THROW(epsilon_family(q("0")), Error);
}

TEST(submodularity_check, examples) {
    // Independent coordinates: equality.
    Dist ind = tensor_power(Dist::uniform(2), 3);
    auto r0 = submodularity_check(ind);
    EXPECT_TRUE(r0.holds);
    EXPECT_EQ(r0.sign, 0);

    long double prev = 1e9;
    for (const char* e : {"1/8", "1/16", "1/32"}) {
        const Rational eps = q(e);
        auto r = submodularity_check(epsilon_family(eps));
        EXPECT_TRUE(r.holds);
        EXPECT_EQ(r.sign, 1) << e;
        EXPECT_EQ(hartley(r.a), lg(3));
        EXPECT_EQ(hartley(r.b), lg(3));
        EXPECT_EQ(hartley(r.q), lg(2));
        // Q is the law of z: (1 - eps, eps).
        EXPECT_TRUE(iso_check(r.q, Dist::from_masses({1 - eps, eps})));
        const long double d = approx(r.deficit);
        EXPECT_LT(d, prev);
        prev = d;
    }
    EXPECT_THROW(submodularity_check(Dist::uniform(2)), Error);
}

TEST(properties, submodularity_on_random_triples) {
    Rng rng(55);
    for (int i = 0; i < 200; ++i) {
        Dist base = random_dist(rng, 8, 64);
        std::vector<Label> trip(base.size());
        for (auto& t : trip) {
            t = Label::tuple({Label(std::to_string(rng.uniform(0, 1))), Label(std::to_string(rng.uniform(0, 1))),
                              Label(std::to_string(rng.uniform(0, 1)))});
        }
        MPMap m = pushforward(base, [&](const Label& l) { return trip[*base.index_of(l)]; });
        auto r = submodularity_check(m.target());
        EXPECT_TRUE(r.holds);
        EXPECT_GE(r.sign, 0);
    }
}
