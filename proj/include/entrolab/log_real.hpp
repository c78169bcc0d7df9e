#pragma once

#include "entrolab/rational.hpp"

#include <map>
#include <string>
#include <string_view>

namespace entrolab {

/// Closed interval with rational endpoints.
struct Interval {
    Rational lo;
    Rational hi;

    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    Rational width() const { return hi - lo; }
};

/// Precision schedule for deciding signs: start at `start_bits`, double until
/// the enclosure excludes zero, give up past `cap_bits`.
struct SignPolicy {
    unsigned start_bits = 64;
    unsigned cap_bits = 4096;
};

/// Prime factorization n = prod p^e for n >= 1 (trial division, then
/// Pollard-Brent rho on what remains).
std::map<Integer, unsigned long> factorize(const Integer& n);

/// An element of Q·log Q_{>0}: a finite sum of c_p·ln p over distinct primes
/// p with nonzero rational c_p. Because the ln p are linearly independent
/// over Q, the value is zero exactly when no terms are stored.
class LogReal {
public:
    using Terms = std::map<Integer, Rational>;

    LogReal() = default;

    /// ln q as an exponent vector. Throws NonPositive for q <= 0.
    static LogReal log_of(const Rational& q);
    static LogReal log_of(unsigned long n) { return log_of(Rational(n)); }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// True when every coefficient is an integer (the value is ln of a
    /// positive rational).
    bool has_integer_coefficients() const;

    LogReal& operator+=(const LogReal& o);
    LogReal& operator-=(const LogReal& o);
    LogReal& operator*=(const Rational& r);
    friend LogReal operator+(LogReal a, const LogReal& b) { return a += b; }
    friend LogReal operator-(LogReal a, const LogReal& b) { return a -= b; }
    friend LogReal operator*(LogReal a, const Rational& r) { return a *= r; }
    friend LogReal operator*(const Rational& r, LogReal a) { return a *= r; }
    LogReal operator-() const { return *this * Rational(-1); }

    /// Exact sign: 0 iff no terms; otherwise refines an interval enclosure
    /// until it excludes zero. Throws PrecisionExhausted past the cap.
    int sign(const SignPolicy& policy = {}) const;

    /// Rigorous enclosure of the value computed with `bits` of working
    /// precision.
    Interval enclose(unsigned bits) const;

    /// Round-to-nearest decimal rendering with `digits` fractional digits.
    std::string to_decimal(unsigned digits) const;

    /// "3/2*log(2) + 1*log(3)"; "0" for zero.
    std::string to_string() const;
    /// Inverse of to_string(); also accepts log(n) for composite n.
    static LogReal parse(std::string_view text);

    friend bool operator==(const LogReal& a, const LogReal& b) { return a.terms_ == b.terms_; }

private:
    void add_term(const Integer& prime, const Rational& coeff);

    Terms terms_;
};

inline LogReal log_of_rational(const Rational& q) { return LogReal::log_of(q); }

/// sign(a - b).
int compare(const LogReal& a, const LogReal& b, const SignPolicy& policy = {});

/// (H0, H1)-style pair under the product order.
struct EntropyPair {
    LogReal h0;
    LogReal h1;

    std::string to_string() const;
    friend bool operator==(const EntropyPair&, const EntropyPair&) = default;
};

enum class PairOrder { LT, GT, EQ, INCOMPARABLE };

std::string_view to_string(PairOrder o);

/// Componentwise comparison under the product order.
PairOrder cmp_pair(const EntropyPair& a, const EntropyPair& b);

}  // namespace entrolab
