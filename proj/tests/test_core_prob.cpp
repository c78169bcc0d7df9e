#include "entrolab/dist.hpp"
#include "entrolab/dist_json.hpp"
#include "entrolab/error.hpp"
#include "entrolab/random.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace entrolab;
using test_support::dist;
using test_support::q;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an entrolab::Error";
    return ErrorCode::InvalidArgument;
}

MPMap parity(const Dist& p) {
    return pushforward(p, [](const Label& l) { return Label(std::to_string(std::stoi(l.atom()) % 2)); });
}

}  // namespace

TEST(label, canonical_text_round_trips) {
    const Label odd("a,(b)\\c");
    const Label nested = Label::tuple({Label::pair("x", odd), Label::tuple({}), "y"});
    EXPECT_EQ(Label::parse(nested.to_string()), nested);
    EXPECT_EQ(Label::parse(odd.to_string()), odd);
    EXPECT_EQ(Label::tuple({}).to_string(), "()");
    EXPECT_EQ(Label::pair("a", "b").to_string(), "(a,b)");
    // An atom that spells a tuple is still an atom.
    EXPECT_NE(Label("(a,b)"), Label::pair("a", "b"));
}

TEST(make_dist, accepts_fair_coin) {
    Dist d = make_dist({{"a", q("1/2")}, {"b", q("1/2")}});
    EXPECT_EQ(d.size(), 2u);
    EXPECT_TRUE(d.is_uniform());
}

TEST(make_dist, rejects_bad_inputs) {
    EXPECT_EQ(code_of([] { make_dist({{"a", q("1/2")}, {"b", q("1/3")}}); }), ErrorCode::MassSumNotOne);
    EXPECT_EQ(code_of([] { make_dist({{"a", q("0")}, {"b", q("1")}}); }), ErrorCode::NonPositiveMass);
    EXPECT_EQ(code_of([] { make_dist({{"a", q("1/2")}, {"a", q("1/2")}}); }), ErrorCode::DuplicateLabel);
}

TEST(product_dist, examples) {
    Dist u = product_dist(Dist::uniform(2), Dist::uniform(2));
    EXPECT_EQ(u.size(), 4u);
    EXPECT_TRUE(u.is_uniform());

    Dist p = dist({"1/2", "1/4", "1/4"});
    EXPECT_TRUE(iso_check(product_dist(p, Dist::point()), p));

    Dist r = product_dist(dist({"1/2", "1/2"}), dist({"2/3", "1/3"}));
    std::vector<Rational> expect{q("1/3"), q("1/6"), q("1/3"), q("1/6")};
    EXPECT_EQ(r.masses(), expect);
    EXPECT_EQ(r.label(1), Label::pair("0", "1"));
}

TEST(pushforward, examples) {
    EXPECT_EQ(parity(Dist::uniform(4)).target(), Dist::uniform(2));

    Dist p = dist({"1/2", "1/4", "1/4"});
    auto c = pushforward(p, [](const Label&) { return Label("*"); });
    EXPECT_TRUE(c.target().is_degenerate());

    auto merged = pushforward(p, [](const Label& l) { return Label(l.atom() == "0" ? "big" : "small"); });
    EXPECT_EQ(merged.target().masses(), (std::vector<Rational>{q("1/2"), q("1/2")}));
}

TEST(mpmap, rejects_non_measure_preserving) {
    Dist p = dist({"1/2", "1/4", "1/4"});
    EXPECT_EQ(code_of([&] { MPMap(p, Dist::uniform(2), {0, 0, 1}); }), ErrorCode::NotMeasurePreserving);
    EXPECT_EQ(code_of([&] { MPMap(Dist::uniform(2), Dist::uniform(2), {0, 0}); }), ErrorCode::NotMeasurePreserving);
}

TEST(joint, examples) {
    Dist p = dist({"1/2", "1/4", "1/4"});
    RandVar id(MPMap::identity(p));
    RandVar constant(MPMap::to_point(p));
    EXPECT_TRUE(iso_check(joint(id, constant).codomain(), p));
    EXPECT_TRUE(iso_check(joint(id, id).codomain(), p));

    Dist bits = make_dist({{"00", q("1/4")}, {"01", q("1/4")}, {"10", q("1/4")}, {"11", q("1/4")}});
    RandVar first(pushforward(bits, [](const Label& l) { return Label(l.atom().substr(0, 1)); }));
    RandVar second(pushforward(bits, [](const Label& l) { return Label(l.atom().substr(1, 1)); }));
    Dist j = joint(first, second).codomain();
    EXPECT_EQ(j.size(), 4u);
    EXPECT_TRUE(j.is_uniform());

    RandVar other(MPMap::identity(Dist::uniform(3)));
    EXPECT_EQ(code_of([&] { joint(id, other); }), ErrorCode::BaseMismatch);
}

TEST(joint, projections_commute) {
    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        Dist p = random_dist(rng);
        RandVar x = random_randvar(rng, p), y = random_randvar(rng, p);
        RandVar j = joint(x, y);
        auto [px, py] = joint_projections(j, x, y);
        EXPECT_EQ(compose(j.map(), px), x.map());
        EXPECT_EQ(compose(j.map(), py), y.map());
    }
}

TEST(compose, examples) {
    MPMap f = parity(Dist::uniform(4));
    EXPECT_EQ(compose(f, MPMap::identity(f.target())), f);
    MPMap to_pt = compose(f, MPMap::to_point(f.target()));
    EXPECT_TRUE(to_pt.target().is_degenerate());

    // uniform(8) -> mod 4 -> mod 2
    MPMap mod4 = pushforward(Dist::uniform(8), [](const Label& l) { return Label(std::to_string(std::stoi(l.atom()) % 4)); });
    MPMap mod2 = parity(mod4.target());
    MPMap both = compose(mod4, mod2);
    EXPECT_EQ(both.target(), Dist::uniform(2));
    for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(both.image_label(i).atom(), std::to_string(i % 2));

    EXPECT_EQ(code_of([&] { compose(mod2, mod4); }), ErrorCode::ChainMismatch);
}

TEST(iso_check, examples) {
    EXPECT_TRUE(iso_check(dist({"1/2", "1/4", "1/4"}), dist({"1/4", "1/2", "1/4"})));
    EXPECT_FALSE(iso_check(Dist::uniform(2), Dist::uniform(3)));
    EXPECT_FALSE(iso_check(dist({"1/2", "1/3", "1/6"}), dist({"1/2", "1/4", "1/4"})));
    auto w = iso_witness(dist({"1/4", "1/2", "1/4"}), dist({"1/2", "1/4", "1/4"}));
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(w->is_bijective());
    EXPECT_EQ((*w)(1), 0u);
}

TEST(properties, pushforward_is_functorial) {
    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        Dist p = random_dist(rng);
        auto g1 = [](const Label& l) { return Label(std::to_string(std::stoi(l.atom()) % 3)); };
        auto g2 = [](const Label& l) { return Label(l.atom() == "0" ? "z" : "nz"); };
        MPMap a = pushforward(p, g1);
        MPMap b = pushforward(a.target(), g2);
        MPMap direct = pushforward(p, [&](const Label& l) { return g2(g1(l)); });
        EXPECT_EQ(compose(a, b), direct);
    }
}

TEST(properties, product_is_associative_and_symmetric_up_to_iso) {
    Rng rng(12);
    for (int i = 0; i < 100; ++i) {
        Dist a = random_dist(rng, 4), b = random_dist(rng, 4), c = random_dist(rng, 4);
        EXPECT_TRUE(iso_check(product_dist(product_dist(a, b), c), product_dist(a, product_dist(b, c))));
        EXPECT_TRUE(iso_check(product_dist(a, b), product_dist(b, a)));
    }
}

TEST(properties, random_maps_preserve_measure) {
    Rng rng(13);
    for (int i = 0; i < 200; ++i) {
        Dist p = random_dist(rng);
        MPMap f = random_merge(rng, p, 3);
        std::vector<Rational> sums(f.target().size(), Rational(0));
        for (std::size_t k = 0; k < p.size(); ++k) sums[f(k)] += p.mass(k);
        EXPECT_EQ(sums, f.target().masses());
    }
}

TEST(dist_json, round_trips_exactly) {
    Dist p = make_dist({{Label::pair("a", "b,c"), q("1/3")}, {"x", q("2/3")}});
    auto j = dist_to_json(p);
    EXPECT_EQ(j["outcomes"][0]["mass"], "1/3");
    EXPECT_EQ(dist_from_json(j), p);
    EXPECT_EQ(dist_from_json(nlohmann::json::parse(j.dump())), p);
    EXPECT_EQ(code_of([] { dist_from_json(nlohmann::json::parse(R"({"outcomes":[{"label":"a","mass":"0.5"}]})")); }),
              ErrorCode::ParseError);
}
