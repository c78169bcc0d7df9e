#include "entrolab/error.hpp"
#include "entrolab/finab.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <set>

using namespace entrolab;

namespace {

// Elements of Z_{r0} x ... x Z_{rk} as digit vectors, last digit fastest.
std::vector<std::uint64_t> digits(std::uint64_t e, const std::vector<std::uint64_t>& radix) {
    std::vector<std::uint64_t> d(radix.size());
    for (std::size_t i = radix.size(); i-- > 0;) {
        d[i] = e % radix[i];
        e /= radix[i];
    }
    return d;
}

std::uint64_t order_of(const std::vector<std::uint64_t>& radix) {
    return std::accumulate(radix.begin(), radix.end(), std::uint64_t{1}, std::multiplies<>());
}

// Plain enumeration of every assignment of generator images, no pruning.
bool epi_oracle(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    const std::uint64_t nb = order_of(b);
    std::vector<std::vector<std::uint64_t>> choices(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::uint64_t e = 0; e < nb; ++e) {
            auto d = digits(e, b);
            bool ok = true;
            for (std::size_t j = 0; j < b.size(); ++j) ok = ok && (a[i] * d[j]) % b[j] == 0;
            if (ok) choices[i].push_back(e);
        }
    }
    std::vector<std::size_t> pick(a.size(), 0);
    while (true) {
        // Image = all integer combinations of the chosen images.
        std::set<std::vector<std::uint64_t>> image;
        const std::uint64_t na = order_of(a);
        for (std::uint64_t x = 0; x < na; ++x) {
            auto c = digits(x, a);
            std::vector<std::uint64_t> y(b.size(), 0);
            for (std::size_t i = 0; i < a.size(); ++i) {
                auto g = digits(choices[i][pick[i]], b);
                for (std::size_t j = 0; j < b.size(); ++j) y[j] = (y[j] + c[i] * g[j]) % b[j];
            }
            image.insert(y);
        }
        if (image.size() == nb) return true;
        std::size_t i = 0;
        while (i < a.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
        if (i == a.size()) return false;
    }
}

void expect_surjective_hom(const EpiSearch& s) {
    const auto& a = s.source_factors;
    const auto& b = s.target_factors;
    auto t = s.table();
    ASSERT_EQ(t.size(), order_of(a));
    auto add = [](std::uint64_t x, std::uint64_t y, const std::vector<std::uint64_t>& r) {
        auto dx = digits(x, r), dy = digits(y, r);
        std::uint64_t e = 0;
        for (std::size_t i = 0; i < r.size(); ++i) e = e * r[i] + (dx[i] + dy[i]) % r[i];
        return e;
    };
    for (std::uint64_t x = 0; x < t.size(); ++x)
        for (std::uint64_t y = 0; y < t.size(); ++y) ASSERT_EQ(t[add(x, y, a)], add(t[x], t[y], b));
    EXPECT_EQ(std::set<std::uint64_t>(t.begin(), t.end()).size(), order_of(b));
}

}  // namespace

TEST(finab_decompose, examples) {
    EXPECT_TRUE(finab_decompose({1}).empty());
    EXPECT_EQ(finab_decompose({12}).entries(), (std::map<MMatrix::Key, std::uint64_t>{{{2, 2}, 1}, {{3, 1}, 1}}));
    EXPECT_EQ(finab_decompose({2, 4}).entries(), (std::map<MMatrix::Key, std::uint64_t>{{{2, 1}, 1}, {{2, 2}, 1}}));
    EXPECT_EQ(finab_decompose({6, 6}).cyclic_factors(), (std::vector<std::uint64_t>{2, 2, 3, 3}));
    EXPECT_EQ(finab_decompose({6, 10}).group_order(), 60);
    EXPECT_EQ(parse_finab("2,4"), finab_decompose({2, 4}));
    EXPECT_THROW(parse_finab("2,x"), Error);
    EXPECT_THROW(MMatrix({{{4, 1}, 1}}), Error);
}

TEST(m_dominates, examples) {
    auto z4 = parse_finab("4"), z2 = parse_finab("2"), z22 = parse_finab("2,2");
    EXPECT_TRUE(m_dominates(z4, z2));
    EXPECT_FALSE(m_dominates(z4, z22));
    EXPECT_FALSE(m_dominates(z22, z4));
    EXPECT_EQ(m_compare(z4, z22), DomOrder::Incomparable);
    EXPECT_EQ(m_compare(z4, z4), DomOrder::Equal);
    EXPECT_EQ(m_compare(z2, z4), DomOrder::Dominated);
    EXPECT_TRUE(m_dominates(parse_finab("1"), parse_finab("1")));
    EXPECT_FALSE(m_dominates(parse_finab("3"), parse_finab("2")));
}

TEST(brute_epi_exists, examples) {
    auto a = parse_finab("2,4");
    auto same = brute_epi_exists(a, a);
    ASSERT_EQ(same.status, EpiSearch::Status::Yes);
    expect_surjective_hom(same);

    EXPECT_EQ(brute_epi_exists(parse_finab("4"), parse_finab("2,2")).status, EpiSearch::Status::No);
    auto y = brute_epi_exists(parse_finab("2,4"), parse_finab("2,2"));
    ASSERT_EQ(y.status, EpiSearch::Status::Yes);
    expect_surjective_hom(y);

    EpiBudget tiny;
    tiny.max_product_order = 16;
    EXPECT_EQ(brute_epi_exists(parse_finab("8"), parse_finab("4"), tiny).status, EpiSearch::Status::BudgetExhausted);
}

TEST(abelian_groups_of_order, counts) {
    // Number of abelian groups of order n is the product of partition counts of the exponents.
    const std::map<std::uint64_t, std::size_t> expected{{1, 1}, {2, 1}, {4, 2}, {8, 3}, {12, 2},
                                                        {16, 5}, {32, 7}, {36, 4}, {64, 11}};
    for (auto [n, c] : expected) {
        auto gs = abelian_groups_of_order(n);
        EXPECT_EQ(gs.size(), c) << n;
        for (const auto& g : gs) EXPECT_EQ(g.group_order(), n);
    }
}

TEST(properties, domination_matches_brute_oracle) {
    std::vector<MMatrix> groups;
    for (std::uint64_t n = 1; n <= 12; ++n)
        for (auto& g : abelian_groups_of_order(n)) groups.push_back(g);
    for (const auto& a : groups)
        for (const auto& b : groups) {
            if (a.group_order() * b.group_order() > 96) continue;
            const bool oracle = epi_oracle(a.cyclic_factors().empty() ? std::vector<std::uint64_t>{1} : a.cyclic_factors(),
                                           b.cyclic_factors().empty() ? std::vector<std::uint64_t>{1} : b.cyclic_factors());
            EXPECT_EQ(m_dominates(a, b), oracle) << a.to_string() << " -> " << b.to_string();
            auto s = brute_epi_exists(a, b);
            EXPECT_EQ(s.status == EpiSearch::Status::Yes, oracle);
            if (s.status == EpiSearch::Status::Yes) expect_surjective_hom(s);
        }
}
