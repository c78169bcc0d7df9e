#include "entrolab/random.hpp"

#include "entrolab/error.hpp"
#include "entrolab/finab.hpp"

#include <algorithm>
#include <numeric>

namespace entrolab {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t small_primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

Rng Rng::for_case(std::uint64_t seed, std::string_view stream, std::uint64_t index) {
    std::uint64_t h = splitmix(seed);
    for (unsigned char c : stream) h = splitmix(h ^ c);
    return Rng(splitmix(h ^ splitmix(index)));
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
}

Rational Rng::fraction(std::int64_t den) {
    Rational r(uniform(0, den), den);
    r.canonicalize();
    return r;
}

Dist random_dist(Rng& rng, std::size_t max_support, std::int64_t max_den, std::size_t min_support) {
    const auto s = static_cast<std::int64_t>(rng.uniform(static_cast<std::int64_t>(min_support), static_cast<std::int64_t>(max_support)));
    const std::int64_t den = rng.uniform(s, std::max(s, max_den));
    // Composition of den into s positive parts via s-1 distinct cut points.
    std::vector<std::int64_t> cuts;
    while (static_cast<std::int64_t>(cuts.size()) < s - 1) {
        auto c = rng.uniform(1, den - 1);
        if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.insert(cuts.begin(), 0);
    cuts.push_back(den);
    std::vector<Rational> masses;
    for (std::size_t i = 1; i < cuts.size(); ++i) {
        Rational m(cuts[i] - cuts[i - 1], den);
        m.canonicalize();
        masses.push_back(m);
    }
    return Dist::from_masses(std::move(masses));
}

MPMap random_merge(Rng& rng, const Dist& p, std::size_t classes) {
    const auto k = static_cast<std::int64_t>(std::max<std::size_t>(1, std::min(classes, p.size())));
    std::vector<std::int64_t> block(p.size());
    // First k outcomes seed the blocks so that the map is onto all of them.
    std::vector<std::size_t> order(p.size());
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.uniform(0, static_cast<std::int64_t>(i) - 1)]);
    for (std::size_t i = 0; i < order.size(); ++i) {
        block[order[i]] = static_cast<std::int64_t>(i) < k ? static_cast<std::int64_t>(i) : rng.uniform(0, k - 1);
    }
    std::map<Label, std::int64_t> of;
    for (std::size_t i = 0; i < p.size(); ++i) of.emplace(p.label(i), block[i]);
    return pushforward(p, [&of](const Label& l) { return Label("c" + std::to_string(of.at(l))); });
}

RandVar random_randvar(Rng& rng, const Dist& p) {
    return RandVar(random_merge(rng, p, static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(p.size())))));
}

Dist random_transfer_descendant(Rng& rng, const Dist& q, std::size_t max_steps, std::size_t max_support) {
    auto v = padded_sorted_masses(q, std::max(q.size(), max_support));
    const auto steps = rng.uniform(1, static_cast<std::int64_t>(max_steps));
    for (std::int64_t s = 0; s < steps; ++s) {
        std::vector<std::pair<std::size_t, std::size_t>> options;
        for (std::size_t i = 0; i < v.size(); ++i) {
            for (std::size_t j = 0; j < v.size(); ++j) {
                if (v[i] > v[j]) options.emplace_back(i, j);
            }
        }
        if (options.empty()) break;
        auto [i, j] = options[rng.uniform(0, static_cast<std::int64_t>(options.size()) - 1)];
        // Move at most half the gap so the two entries do not cross.
        Rational t(rng.uniform(1, 4), 8);
        t.canonicalize();
        Rational amount = (v[i] - v[j]) * t;
        v[i] -= amount;
        v[j] += amount;
    }
    std::vector<Rational> masses;
    for (auto& m : v) {
        if (m > 0) masses.push_back(m);
    }
    return Dist::from_masses(std::move(masses));
}

LogReal random_logreal(Rng& rng, std::size_t max_primes, std::int64_t max_num, std::int64_t max_den) {
    LogReal x;
    const auto k = rng.uniform(1, static_cast<std::int64_t>(std::min<std::size_t>(max_primes, std::size(small_primes))));
    std::vector<std::uint64_t> ps(std::begin(small_primes), std::end(small_primes));
    for (std::int64_t i = 0; i < k; ++i) {
        auto idx = rng.uniform(i, static_cast<std::int64_t>(ps.size()) - 1);
        std::swap(ps[i], ps[idx]);
        Rational c(rng.uniform(-max_num, max_num), rng.uniform(1, max_den));
        c.canonicalize();
        x += LogReal::log_of(static_cast<unsigned long>(ps[i])) * c;
    }
    return x;
}

std::pair<Rational, Rational> random_weights(Rng& rng) {
    while (true) {
        Rational a(rng.uniform(0, 12), rng.uniform(1, 6));
        Rational b(rng.uniform(0, 12), rng.uniform(1, 6));
        a.canonicalize();
        b.canonicalize();
        if (a > 0 || b > 0) return {a, b};
    }
}

std::vector<std::uint64_t> random_cyclic_orders(Rng& rng, std::uint64_t max_order) {
    const auto n = static_cast<std::uint64_t>(rng.uniform(1, static_cast<std::int64_t>(max_order)));
    auto groups = abelian_groups_of_order(n);
    return groups[rng.uniform(0, static_cast<std::int64_t>(groups.size()) - 1)].cyclic_factors();
}

}  // namespace entrolab
