#pragma once

#include "entrolab/dist.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace entrolab {

/// Moves `amount` from sorted position `from` to position `to` (from < to).
struct Transfer {
    std::size_t from = 0;
    std::size_t to = 0;
    Rational amount;
};

/// Sorted (non-increasing) masses padded with zeros to length n.
std::vector<Rational> padded_sorted_masses(const Dist& p, std::size_t n);

/// True iff every k-prefix sum of q (sorted, non-increasing) is >= that of p.
/// Vectors of different length are zero-padded.
bool majorizes(std::span<const Rational> q_sorted, std::span<const Rational> p_sorted);
/// Q majorizes P, i.e. P is below Q in the majorization order.
bool majorizes(const Dist& q, const Dist& p);

/// Applies a transfer to a sorted vector. Throws InvalidArgument unless it
/// moves mass from a strictly larger entry to a strictly smaller one without
/// the two crossing.
std::vector<Rational> apply_transfer(std::vector<Rational> v, const Transfer& t);

/// T-transform chain turning Q's sorted masses into P's (Hardy-Littlewood-
/// Polya construction): at most n-1 transfers for padded length n. Throws
/// NotMajorized when Q does not majorize P.
std::vector<Transfer> robin_hood_decompose(const Dist& q, const Dist& p);

/// P >=_01 Q: P iso Q, or H0(P) >= H0(Q) and H1(P) > H1(Q).
bool order01(const Dist& p, const Dist& q);

/// order01(P^n (x) R, Q^n), computed from additive entropies without
/// materializing the powers (the isomorphism clause uses mass-multiset
/// convolution only when both entropies tie).
bool tensor_power_dominates(const Dist& p, const Dist& q, std::size_t n, const Dist& r);

struct WitnessBudget {
    std::size_t depth = 3;    ///< number of catalyst factors / random variables
    std::size_t support = 4;  ///< support bound of each catalyst
    std::size_t den = 16;     ///< dyadic denominator bound
    std::size_t max_candidates = 200000;

    /// "depth=3,support=4,den=16[,candidates=N]"
    static WitnessBudget parse(std::string_view text);
};

/// Catalyst space R with three random variables on it.
struct CatalyticWitness {
    std::string family;
    Dist catalyst;
    RandVar x1;
    RandVar x2;
    RandVar x3;
};

struct WitnessReplay {
    Dist lhs;  ///< P (x) Cod(X1 (x) X2 (x) X3)
    Dist rhs;  ///< Q (x) Cod(X1) (x) Cod(X2) (x) Cod(X3)
    bool holds = false;
};

/// Exact re-check of a witness: rhs majorizes lhs.
WitnessReplay replay_witness(const Dist& p, const Dist& q, const CatalyticWitness& w);

struct WitnessSearchResult {
    enum class Status { Found, BudgetExhausted };
    Status status = Status::BudgetExhausted;
    std::optional<CatalyticWitness> witness;
    std::size_t candidates_tried = 0;
};

/// Bounded search for R, X1, X2, X3 with
///   P (x) Cod(X1 (x) X2 (x) X3)  majorized by  Q (x) Cod(X1) (x) Cod(X2) (x) Cod(X3).
/// Candidates, in order: the trivial catalyst; products of up to `depth`
/// dyadic catalysts with coordinate projections; dyadic 2x2 joints with
/// their coordinate projections (and, at depth 3, the equality merge as X3).
/// Throws HypothesisViolated unless H0(P) >= H0(Q) and H1(P) > H1(Q). Only a
/// found witness is a claim; exhaustion says nothing.
WitnessSearchResult catalytic_witness_search(const Dist& p, const Dist& q, const WitnessBudget& budget = {});

/// JSON certificate embedding the witness and both prefix-sum chains.
nlohmann::json witness_certificate(const Dist& p, const Dist& q, const CatalyticWitness& w);

}  // namespace entrolab
