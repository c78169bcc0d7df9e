#pragma once

#include "entrolab/rational.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace entrolab {

/// Exponent vector over the generators of a presented monoid.
using ExpVec = std::vector<std::uint64_t>;

/// Commutative monoid on finitely many generators with relations lhs >= rhs.
/// The order is the smallest monoidal preorder containing the relations.
class PresentedMonoid {
public:
    struct Relation {
        ExpVec lhs;
        ExpVec rhs;
    };

    PresentedMonoid(std::vector<std::string> generators, std::vector<Relation> relations);

    /// One relation per line, "a+a+b >= b+c"; "0" is the empty sum. Blank
    /// lines and '#' comments are skipped. An optional "generators: a, b"
    /// line declares generators that appear in no relation.
    static PresentedMonoid parse(std::string_view text);

    const std::vector<std::string>& generators() const noexcept { return generators_; }
    const std::vector<Relation>& relations() const noexcept { return relations_; }

    /// "a+a+b" -> exponent vector. Throws ParseError on unknown generators.
    ExpVec element(std::string_view sum) const;
    std::string format(const ExpVec& v) const;

private:
    std::vector<std::string> generators_;
    std::vector<Relation> relations_;
};

/// Linear functional on exponent vectors, used as a refutation certificate.
/// It must be monotone: w(lhs) >= w(rhs) for every relation.
struct LinearFunctional {
    std::vector<Rational> weights;
    Rational operator()(const ExpVec& v) const;
};

struct LeqResult {
    enum class Status { Proven, Unknown, Refuted };
    Status status = Status::Unknown;
    std::size_t depth = 0;             ///< rewrite steps of the chain when Proven
    std::vector<ExpVec> chain;         ///< x = chain.front(), ..., chain.back() = y
    std::optional<std::size_t> separator;  ///< index of the refuting functional
    std::size_t states_visited = 0;
};

std::string to_string(LeqResult::Status s);

/// Semi-decides x >= y: breadth-first search over rewrites that replace an
/// embedded relation lhs by its rhs, up to `depth` steps and `state_cap`
/// distinct states. Unknown is not a refutation; Refuted is returned only
/// when some supplied functional f has f(x) < f(y). Throws InvalidArgument
/// for a functional that is not monotone on the relations.
LeqResult presented_leq(const PresentedMonoid& m, const ExpVec& x, const ExpVec& y, std::size_t depth,
                        std::span<const LinearFunctional> separators = {}, std::size_t state_cap = 200000);

/// Ordered commutative monoid given by tables. All axioms are checked at
/// construction (InvalidMonoid on failure).
class FiniteOrdMonoid {
public:
    using Element = std::size_t;

    /// add[x][y] is x+y; geq[x][y] is x >= y.
    FiniteOrdMonoid(std::vector<std::string> names, std::vector<std::vector<std::size_t>> add, std::size_t unit,
                    std::vector<std::vector<bool>> geq);

    std::size_t size() const noexcept { return names_.size(); }
    std::size_t add(std::size_t x, std::size_t y) const { return add_[x][y]; }
    bool geq(std::size_t x, std::size_t y) const { return geq_[x][y]; }
    std::size_t unit() const noexcept { return unit_; }
    const std::string& name(std::size_t x) const { return names_.at(x); }
    std::size_t index_of(std::string_view name) const;
    /// n*x, with 0*x = unit.
    std::size_t multiple(std::uint64_t n, std::size_t x) const;

    /// x+z >= y+z implies x >= y for all triples.
    bool is_cancellative() const;

private:
    std::vector<std::string> names_;
    std::vector<std::vector<std::size_t>> add_;
    std::size_t unit_;
    std::vector<std::vector<bool>> geq_;
};

struct Regularization {
    FiniteOrdMonoid monoid;
    std::vector<std::size_t> class_of;  ///< input element -> output element
};

/// x >= y iff x+z >= y+z for some z, then quotient by the induced
/// equivalence. Output elements are named after their least member, or
/// "[a|b|...]" for classes with several members.
Regularization catalytic_regularize(const FiniteOrdMonoid& m);

struct IntegralClosureViolation {
    std::size_t x, y, a, b;
};

/// Finds (x, y, a, b) with nx+a >= ny+b for every n >= 1 but not x >= y.
/// The pairs (nx, ny) are eventually periodic, so one period suffices.
std::optional<IntegralClosureViolation> integral_closure_violation(const FiniteOrdMonoid& m);
inline bool is_integrally_closed(const FiniteOrdMonoid& m) { return !integral_closure_violation(m).has_value(); }

/// f is a table M -> N; checks additivity, unit and monotonicity.
bool hom_check(const FiniteOrdMonoid& m, const FiniteOrdMonoid& n, std::span<const std::size_t> f);

/// Bijective hom whose inverse is also a hom.
bool is_order_isomorphism(const FiniteOrdMonoid& m, const FiniteOrdMonoid& n, std::span<const std::size_t> f);

// Sample monoids.
/// {0..k} with min(x+y, k) and the given order ("discrete" or "total").
FiniteOrdMonoid truncated_sum_monoid(std::size_t k, bool total_order);
/// {0..k}^2 with componentwise saturating addition and the product order.
FiniteOrdMonoid saturating_grid(std::size_t k);
/// (i, c) for i in {0,1}, c in Z_m plus an absorbing top; (i,c) >= (j,d)
/// iff equal or i > j, with the top above everything. Finite model of the
/// lexicographic-style order where the first coordinate dominates.
FiniteOrdMonoid lex_grid_model(std::size_t m);
/// Z_m with the trivial order.
FiniteOrdMonoid cyclic_group(std::size_t m);
/// Product monoid with the product order; names "(a,b)".
FiniteOrdMonoid product_monoid(const FiniteOrdMonoid& a, const FiniteOrdMonoid& b);

/// Formal difference plus - minus over an ordered commutative monoid M
/// exposing Element, add(x, y) and geq(x, y).
template <class M>
struct Difference {
    typename M::Element plus;
    typename M::Element minus;
};

/// d1 >= d2 iff d1.plus + d2.minus >= d2.plus + d1.minus.
template <class M>
bool grothendieck_geq(const M& m, const Difference<M>& d1, const Difference<M>& d2) {
    return m.geq(m.add(d1.plus, d2.minus), m.add(d2.plus, d1.minus));
}
template <class M>
bool grothendieck_leq(const M& m, const Difference<M>& d1, const Difference<M>& d2) {
    return grothendieck_geq(m, d2, d1);
}
template <class M>
bool grothendieck_eq(const M& m, const Difference<M>& d1, const Difference<M>& d2) {
    return m.add(d1.plus, d2.minus) == m.add(d2.plus, d1.minus);
}

/// (N^K, +, product order).
template <std::size_t K>
struct NatVecMonoid {
    using Element = std::array<std::uint64_t, K>;
    Element add(const Element& x, const Element& y) const {
        Element r;
        for (std::size_t i = 0; i < K; ++i) r[i] = x[i] + y[i];
        return r;
    }
    bool geq(const Element& x, const Element& y) const {
        bool r = true;
        for (std::size_t i = 0; i < K; ++i) r &= x[i] >= y[i];
        return r;
    }
    Element unit() const { return Element{}; }
};

}  // namespace entrolab
