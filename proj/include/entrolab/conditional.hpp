#pragma once

#include "entrolab/dist.hpp"
#include "entrolab/log_real.hpp"

namespace entrolab {

/// f: P -> Q, a conditional probability space over Q.
class CondObj {
public:
    explicit CondObj(MPMap f) : map_(std::move(f)) {}

    const MPMap& map() const noexcept { return map_; }
    const Dist& total() const noexcept { return map_.source(); }
    const Dist& base() const noexcept { return map_.target(); }

private:
    MPMap map_;
};

/// Commuting triangle P -mid-> A -down-> Q over a CondObj f: P -> Q.
class CondRV {
public:
    /// Throws NotCommuting unless down after mid equals the base map.
    CondRV(CondObj base, MPMap mid, MPMap down);

    const CondObj& base() const noexcept { return base_; }
    const MPMap& mid() const noexcept { return mid_; }
    const MPMap& down() const noexcept { return down_; }
    const Dist& codomain() const noexcept { return mid_.target(); }

    /// The triangle with A = P (mid = identity).
    static CondRV identity(const CondObj& f);

private:
    CondObj base_;
    MPMap mid_;
    MPMap down_;
};

/// Outcomes (x1, x2) with f1(x1) = f2(x2), mass P1(x1) P2(x2) / Q(f1(x1)).
/// Throws TargetMismatch unless both maps land in the same Q.
CondObj conditional_product(const CondObj& f1, const CondObj& f2);

/// Joint of two random variables over the same CondObj, as a CondRV through
/// the image of the pairing. Throws BaseMismatch.
CondRV cond_joint(const CondRV& x, const CondRV& y);

/// H1(A) - H1(Q).
LogReal cond_entropy(const CondRV& x);

struct ChainCertificate {
    LogReal upper;      ///< H(K) - H(P)
    LogReal lower;      ///< H(P) - H(Q)
    LogReal composite;  ///< H(K) - H(Q) along the composite map
    bool holds = false;
};

/// (H(K)-H(P)) + (H(P)-H(Q)) = H(K)-H(Q) for K -f-> P -g-> Q, with H = H1.
/// Throws ChainMismatch when the maps do not compose.
ChainCertificate chain_rule_check(const MPMap& f, const MPMap& g);

struct SubmodularityReport {
    Dist a;  ///< image of (x,y,z) -> (z,x)
    Dist b;  ///< image of (x,y,z) -> (y,z)
    Dist q;  ///< image of (x,y,z) -> z
    LogReal deficit;  ///< H1(A) + H1(B) - H1(P) - H1(Q)
    int sign = 0;
    bool holds = false;
};

/// Evaluates H1(A)+H1(B) >= H1(P)+H1(Q) exactly for P over 3-tuples.
/// Throws InvalidArgument for labels that are not 3-tuples.
SubmodularityReport submodularity_check(const Dist& p);

/// Five-point distribution on {0,1}^3: (0,0,0), (0,1,0), (1,0,0) at 1/4,
/// (1,1,0) at 1/4 - eps and (1,1,1) at eps. Throws RangeError unless
/// 0 < eps < 1/4.
Dist epsilon_family(const Rational& eps);

}  // namespace entrolab
