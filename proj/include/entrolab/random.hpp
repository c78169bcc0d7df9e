#pragma once

#include "entrolab/dist.hpp"
#include "entrolab/log_real.hpp"
#include "entrolab/majorization.hpp"

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace entrolab {

/// Seeded generator for test data. Every draw goes through uniform(), so
/// sequences depend only on the seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    /// Independent stream for case `index` of a named suite.
    static Rng for_case(std::uint64_t seed, std::string_view stream, std::uint64_t index);

    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    bool coin() { return uniform(0, 1) == 1; }
    /// k/den with k uniform in [0, den].
    Rational fraction(std::int64_t den);

private:
    std::mt19937_64 engine_;
};

/// Support in [min_support, max_support], masses with a common denominator
/// at most max_den. Labels "0", "1", ...
Dist random_dist(Rng& rng, std::size_t max_support = 8, std::int64_t max_den = 64, std::size_t min_support = 1);

/// Random surjection of p onto at most `classes` blocks, as a pushforward
/// with labels "c0", "c1", ...
MPMap random_merge(Rng& rng, const Dist& p, std::size_t classes);

/// Random random variable on p (a merge onto 1..|p| blocks).
RandVar random_randvar(Rng& rng, const Dist& p);

/// Applies between 1 and max_steps random Robin Hood transfers to the
/// sorted masses of q (padded to max_support). Returns P, which q
/// majorizes.
Dist random_transfer_descendant(Rng& rng, const Dist& q, std::size_t max_steps = 5, std::size_t max_support = 8);

/// Up to `max_primes` terms over the first primes with coefficients
/// num/den, |num| <= max_num, 1 <= den <= max_den.
LogReal random_logreal(Rng& rng, std::size_t max_primes = 6, std::int64_t max_num = 10, std::int64_t max_den = 20);

/// Nonnegative rational weights (a, b) with small denominators, not both zero.
std::pair<Rational, Rational> random_weights(Rng& rng);

/// Random abelian group of order at most max_order.
std::vector<std::uint64_t> random_cyclic_orders(Rng& rng, std::uint64_t max_order);

}  // namespace entrolab
