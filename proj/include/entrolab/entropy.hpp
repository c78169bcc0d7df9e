#pragma once

#include "entrolab/dist.hpp"
#include "entrolab/log_real.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace entrolab {

/// H0(P) = log |supp P|.
LogReal hartley(const Dist& p);

/// H1(P) = sum_x P(x) log(1/P(x)), exact.
LogReal shannon(const Dist& p);

/// Order-alpha Renyi entropy for integer alpha >= 2:
/// log(sum_x P(x)^alpha) / (1 - alpha). Throws UnsupportedAlpha.
LogReal renyi(const Dist& p, long alpha);

/// (H0(P), H1(P)).
EntropyPair entropy_pair(const Dist& p);

/// a*H0 + b*H1.
LogReal combined_entropy(const Dist& p, const Rational& a, const Rational& b);

/// Named distribution functional.
struct Functional {
    enum class Kind { Hartley, Shannon, Renyi, Pair };

    Kind kind = Kind::Shannon;
    long alpha = 0;  ///< only for Renyi

    static Functional hartley() { return {Kind::Hartley, 0}; }
    static Functional shannon() { return {Kind::Shannon, 0}; }
    static Functional renyi(long alpha) { return {Kind::Renyi, alpha}; }
    static Functional pair() { return {Kind::Pair, 0}; }

    /// "shannon", "hartley", "pair", "renyi:<alpha>".
    static Functional parse(std::string_view text);
    std::string name() const;
};

using EntropyValue = std::variant<LogReal, EntropyPair>;

EntropyValue evaluate(const Functional& h, const Dist& p);

/// Entropy of a random variable: the functional applied to its codomain.
EntropyValue rv_entropy(const RandVar& x, const Functional& h);

std::string to_string(const EntropyValue& v);

}  // namespace entrolab
