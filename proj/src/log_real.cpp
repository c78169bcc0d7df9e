#include "entrolab/log_real.hpp"

#include "entrolab/error.hpp"

#include <mpfr.h>

#include <cctype>
#include <sstream>
#include <vector>

namespace entrolab {

namespace {

constexpr unsigned long kTrialLimit = 1UL << 16;

Integer pollard_brent(const Integer& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, g = 1, q = 1, ys;
        const unsigned long m = 128;
        unsigned long r = 1;
        auto step = [&](const Integer& v) {
            Integer t = v * v + c;
            mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
            return t;
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = step(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = step(y);
                    Integer diff = abs(x - y);
                    q = (q * diff) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = step(ys);
                Integer diff = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(const Integer& n, std::map<Integer, unsigned long>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
        ++out[n];
        return;
    }
    Integer d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

/// RAII holder for an MPFR number.
class Mpfr {
public:
    explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    ~Mpfr() { mpfr_clear(v_); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

private:
    mpfr_t v_;
};

void set_log(Mpfr& out, const Integer& p, mpfr_rnd_t rnd) {
    if (mpz_fits_ulong_p(p.get_mpz_t())) {
        mpfr_log_ui(out.get(), mpz_get_ui(p.get_mpz_t()), rnd);
        return;
    }
    Mpfr tmp(mpfr_get_prec(out.get()));
    // Rounding the argument in the same direction keeps the bound valid.
    mpfr_set_z(tmp.get(), p.get_mpz_t(), rnd);
    mpfr_log(out.get(), tmp.get(), rnd);
}

Rational to_rational(const Mpfr& x) {
    Rational q;
    mpfr_get_q(q.get_mpq_t(), x.get());
    return q;
}

}  // namespace

std::map<Integer, unsigned long> factorize(const Integer& n_in) {
    if (n_in < 1) throw Error(ErrorCode::NonPositive, "factorize expects n >= 1");
    std::map<Integer, unsigned long> out;
    Integer n = n_in;
    for (unsigned long p = 2; p < kTrialLimit; p += (p == 2 ? 1 : 2)) {
        if (n == 1) break;
        if (Integer(p) * p > n) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++out[Integer(p)];
        }
    }
    factor_into(n, out);
    return out;
}

LogReal LogReal::log_of(const Rational& q) {
    if (q <= 0) throw Error(ErrorCode::NonPositive, "log of non-positive rational " + entrolab::to_string(q));
    LogReal r;
    for (const auto& [p, e] : factorize(q.get_num())) r.add_term(p, Rational(e));
    for (const auto& [p, e] : factorize(q.get_den())) r.add_term(p, -Rational(e));
    return r;
}

bool LogReal::has_integer_coefficients() const {
    for (const auto& [p, c] : terms_) {
        if (c.get_den() != 1) return false;
    }
    return true;
}

void LogReal::add_term(const Integer& prime, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(prime, coeff);
    if (inserted) return;
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

LogReal& LogReal::operator+=(const LogReal& o) {
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
}

LogReal& LogReal::operator-=(const LogReal& o) {
    for (const auto& [p, c] : o.terms_) add_term(p, -c);
    return *this;
}

LogReal& LogReal::operator*=(const Rational& r) {
    if (r == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [p, c] : terms_) c *= r;
    return *this;
}

Interval LogReal::enclose(unsigned bits) const {
    Mpfr lo(bits), hi(bits), ln_lo(bits), ln_hi(bits), t(bits);
    mpfr_set_zero(lo.get(), 1);
    mpfr_set_zero(hi.get(), 1);
    for (const auto& [p, c] : terms_) {
        set_log(ln_lo, p, MPFR_RNDD);
        set_log(ln_hi, p, MPFR_RNDU);
        const bool positive = c > 0;
        mpfr_mul_q(t.get(), positive ? ln_lo.get() : ln_hi.get(), c.get_mpq_t(), MPFR_RNDD);
        mpfr_add(lo.get(), lo.get(), t.get(), MPFR_RNDD);
        mpfr_mul_q(t.get(), positive ? ln_hi.get() : ln_lo.get(), c.get_mpq_t(), MPFR_RNDU);
        mpfr_add(hi.get(), hi.get(), t.get(), MPFR_RNDU);
    }
    return {to_rational(lo), to_rational(hi)};
}

int LogReal::sign(const SignPolicy& policy) const {
    if (terms_.empty()) return 0;
    for (unsigned bits = policy.start_bits; bits <= policy.cap_bits; bits *= 2) {
        Interval iv = enclose(bits);
        if (iv.lo > 0) return 1;
        if (iv.hi < 0) return -1;
    }
    throw Error(ErrorCode::PrecisionExhausted, "sign undecided at " + std::to_string(policy.cap_bits) + " bits for " + to_string());
}

std::string LogReal::to_decimal(unsigned digits) const {
    const unsigned bits = static_cast<unsigned>(digits * 3.33) + 64;
    Mpfr sum(bits), ln(bits), t(bits);
    mpfr_set_zero(sum.get(), 1);
    for (const auto& [p, c] : terms_) {
        set_log(ln, p, MPFR_RNDN);
        mpfr_mul_q(t.get(), ln.get(), c.get_mpq_t(), MPFR_RNDN);
        mpfr_add(sum.get(), sum.get(), t.get(), MPFR_RNDN);
    }
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rf", static_cast<int>(digits), sum.get());
    std::string out(buf);
    mpfr_free_str(buf);
    // "-0.000" carries no information beyond "0.000".
    if (out.front() == '-' && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
    return out;
}

std::string LogReal::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        os << entrolab::to_string(abs(c)) << "*log(" << p.get_str() << ')';
        first = false;
    }
    return os.str();
}

LogReal LogReal::parse(std::string_view text) {
    std::size_t pos = 0;
    auto fail = [&](const char* why) -> void {
        throw Error(ErrorCode::ParseError, "log expression '" + std::string(text) + "': " + why);
    };
    auto skip_ws = [&] {
        while (pos < text.size() && text[pos] == ' ') ++pos;
    };
    auto read_while = [&](auto pred) {
        std::size_t start = pos;
        while (pos < text.size() && pred(text[pos])) ++pos;
        return text.substr(start, pos - start);
    };
    skip_ws();
    if (text.substr(pos) == "0") return {};
    LogReal out;
    bool first = true;
    while (true) {
        skip_ws();
        if (pos >= text.size()) {
            if (first) fail("empty expression");
            break;
        }
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip_ws();
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        auto coeff_text = read_while([](char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '/'; });
        if (coeff_text.empty()) fail("missing coefficient");
        Rational coeff = parse_rational(coeff_text) * sign;
        if (text.substr(pos, 5) != "*log(") fail("expected '*log('");
        pos += 5;
        auto arg = read_while([](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
        if (arg.empty() || pos >= text.size() || text[pos] != ')') fail("malformed log argument");
        ++pos;
        Integer n(std::string(arg), 10);
        if (n < 1) fail("log argument must be positive");
        out += LogReal::log_of(Rational(n)) * coeff;
        first = false;
    }
    return out;
}

int compare(const LogReal& a, const LogReal& b, const SignPolicy& policy) { return (a - b).sign(policy); }

std::string EntropyPair::to_string() const { return "(" + h0.to_string() + ", " + h1.to_string() + ")"; }

std::string_view to_string(PairOrder o) {
    switch (o) {
        case PairOrder::LT: return "LT";
        case PairOrder::GT: return "GT";
        case PairOrder::EQ: return "EQ";
        case PairOrder::INCOMPARABLE: return "INCOMPARABLE";
    }
    return "?";
}

PairOrder cmp_pair(const EntropyPair& a, const EntropyPair& b) {
    const int s0 = compare(a.h0, b.h0);
    const int s1 = compare(a.h1, b.h1);
    if (s0 == 0 && s1 == 0) return PairOrder::EQ;
    if (s0 >= 0 && s1 >= 0) return PairOrder::GT;
    if (s0 <= 0 && s1 <= 0) return PairOrder::LT;
    return PairOrder::INCOMPARABLE;
}

}  // namespace entrolab
