#include "entrolab/rational.hpp"

#include "entrolab/error.hpp"

#include <cctype>

namespace entrolab {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (!is_integer_literal(num) || (slash != std::string_view::npos && !is_integer_literal(den))) {
        throw Error(ErrorCode::ParseError, "not a rational literal: '" + std::string(text) + "'");
    }
    if (num.front() == '+') num.remove_prefix(1);
    Integer n(std::string(num), 10);
    Integer d = 1;
    if (slash != std::string_view::npos) {
        if (den.front() == '+') den.remove_prefix(1);
        d = Integer(std::string(den), 10);
        if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    }
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Rational make_rational(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational pow(const Rational& q, unsigned long n) {
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), n);
    return Rational(num, den);
}

}  // namespace entrolab
