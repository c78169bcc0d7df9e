#include "entrolab/entropy.hpp"

#include "entrolab/error.hpp"

#include <charconv>

namespace entrolab {

LogReal hartley(const Dist& p) { return LogReal::log_of(Rational(p.size())); }

LogReal shannon(const Dist& p) {
    LogReal h;
    for (const Rational& m : p.masses()) {
        if (m == 1) continue;
        h += LogReal::log_of(1 / m) * m;
    }
    return h;
}

LogReal renyi(const Dist& p, long alpha) {
    if (alpha < 2) {
        throw Error(ErrorCode::UnsupportedAlpha,
                    "renyi needs integer alpha >= 2 (alpha = 0 is hartley, alpha = 1 is shannon), got " +
                        std::to_string(alpha));
    }
    Rational s = 0;
    for (const Rational& m : p.masses()) s += pow(m, static_cast<unsigned long>(alpha));
    return LogReal::log_of(s) * Rational(-1, alpha - 1);
}

EntropyPair entropy_pair(const Dist& p) { return {hartley(p), shannon(p)}; }

LogReal combined_entropy(const Dist& p, const Rational& a, const Rational& b) {
    return hartley(p) * a + shannon(p) * b;
}

Functional Functional::parse(std::string_view text) {
    if (text == "shannon") return shannon();
    if (text == "hartley") return hartley();
    if (text == "pair") return pair();
    if (text.starts_with("renyi:")) {
        auto digits = text.substr(6);
        long alpha = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), alpha);
        if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
            throw Error(ErrorCode::UnsupportedAlpha, "renyi order must be an integer: '" + std::string(text) + "'");
        }
        if (alpha < 2) throw Error(ErrorCode::UnsupportedAlpha, "renyi order must be >= 2");
        return renyi(alpha);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown functional '" + std::string(text) + "'");
}

std::string Functional::name() const {
    switch (kind) {
        case Kind::Hartley: return "hartley";
        case Kind::Shannon: return "shannon";
        case Kind::Renyi: return "renyi:" + std::to_string(alpha);
        case Kind::Pair: return "pair";
    }
    return "?";
}

EntropyValue evaluate(const Functional& h, const Dist& p) {
    switch (h.kind) {
        case Functional::Kind::Hartley: return hartley(p);
        case Functional::Kind::Shannon: return shannon(p);
        case Functional::Kind::Renyi: return renyi(p, h.alpha);
        case Functional::Kind::Pair: return entropy_pair(p);
    }
    return LogReal{};
}

EntropyValue rv_entropy(const RandVar& x, const Functional& h) { return evaluate(h, x.codomain()); }

std::string to_string(const EntropyValue& v) {
    if (const auto* l = std::get_if<LogReal>(&v)) return l->to_string();
    return std::get<EntropyPair>(v).to_string();
}

}  // namespace entrolab
