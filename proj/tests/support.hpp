#pragma once

// Small helpers shared by the unit tests. The oracles here deliberately avoid
// the library's own algorithms: floating-point evaluation and brute force.

#include "entrolab/dist.hpp"
#include "entrolab/log_real.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <initializer_list>
#include <vector>

namespace test_support {

using entrolab::Dist;
using entrolab::LogReal;
using entrolab::Rational;

inline Rational q(const char* s) { return entrolab::parse_rational(s); }

inline Dist dist(std::initializer_list<const char*> masses) {
    std::vector<Rational> v;
    for (auto m : masses) v.push_back(q(m));
    return Dist::from_masses(std::move(v));
}

inline long double ld(const Rational& r) { return static_cast<long double>(r.get_d()); }

/// Value of a LogReal in long double.
inline long double approx(const LogReal& x) {
    long double s = 0;
    for (const auto& [p, c] : x.terms()) s += ld(c) * std::log(static_cast<long double>(p.get_d()));
    return s;
}

inline long double shannon_ld(const Dist& p) {
    long double h = 0;
    for (const auto& m : p.masses()) h -= ld(m) * std::log(ld(m));
    return h;
}

inline long double hartley_ld(const Dist& p) { return std::log(static_cast<long double>(p.size())); }

/// Prefix-sum majorization on raw vectors, zero-padded.
inline bool majorizes_oracle(std::vector<Rational> q, std::vector<Rational> p) {
    auto desc = [](const Rational& a, const Rational& b) { return a > b; };
    std::sort(q.begin(), q.end(), desc);
    std::sort(p.begin(), p.end(), desc);
    const std::size_t n = std::max(q.size(), p.size());
    q.resize(n, Rational(0));
    p.resize(n, Rational(0));
    Rational sq = 0, sp = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sq += q[i];
        sp += p[i];
        if (sq < sp) return false;
    }
    return true;
}

/// Masses of the product of the given mass vectors, in any order.
inline std::vector<Rational> outer_masses(const std::vector<std::vector<Rational>>& factors) {
    std::vector<Rational> acc{Rational(1)};
    for (const auto& f : factors) {
        std::vector<Rational> next;
        for (const auto& a : acc) {
            for (const auto& b : f) next.push_back(a * b);
        }
        acc = std::move(next);
    }
    return acc;
}

}  // namespace test_support
