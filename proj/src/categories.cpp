#include "entrolab/categories.hpp"

#include "entrolab/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace entrolab {

LogReal finiset_entropy(std::uint64_t cardinality) {
    if (cardinality == 0) throw Error(ErrorCode::EmptySet, "FinISet objects are nonempty");
    return LogReal::log_of(static_cast<unsigned long>(cardinality));
}

std::uint64_t finsetop_entropy(std::uint64_t cardinality) { return cardinality; }

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
    std::uint64_t r = 1, e = p - 2;
    a %= p;
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

/// Row echelon form in place; returns the nonzero rows.
std::vector<std::vector<std::uint64_t>> echelon(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m.front().size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][c] % p == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[rank], m[piv]);
        const auto inv = inverse_mod(m[rank][c], p);
        for (auto& v : m[rank]) v = v * inv % p;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c] == 0) continue;
            const auto f = m[r][c];
            for (std::size_t k = 0; k < cols; ++k) m[r][k] = (m[r][k] + (p - f) * m[rank][k]) % p;
        }
        ++rank;
    }
    m.resize(rank);
    return m;
}

}  // namespace

std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) { return echelon(std::move(m), p).size(); }

LinearEpi::LinearEpi(std::uint64_t p, std::vector<std::vector<std::uint64_t>> matrix, std::size_t cols)
    : p_(p), matrix_(std::move(matrix)), cols_(cols) {
    if (!is_prime(p_)) throw Error(ErrorCode::InvalidMorphism, std::to_string(p_) + " is not prime");
    for (const auto& row : matrix_) {
        if (row.size() != cols_) throw Error(ErrorCode::InvalidMorphism, "ragged matrix");
        for (auto v : row) {
            if (v >= p_) throw Error(ErrorCode::InvalidMorphism, "entry outside F_p");
        }
    }
    if (rank_mod_p(matrix_, p_) != matrix_.size()) throw Error(ErrorCode::InvalidMorphism, "matrix is not of full row rank");
}

LinearEpi LinearEpi::projection(std::uint64_t p, std::size_t n, const std::vector<std::size_t>& coords) {
    std::vector<std::vector<std::uint64_t>> m;
    for (auto c : coords) {
        if (c >= n) throw Error(ErrorCode::InvalidMorphism, "projection coordinate out of range");
        std::vector<std::uint64_t> row(n, 0);
        row[c] = 1;
        m.push_back(std::move(row));
    }
    return LinearEpi(p, std::move(m), n);
}

LinearEpi joint(const LinearEpi& f, const LinearEpi& g) {
    if (f.field() != g.field() || f.source_dim() != g.source_dim()) {
        throw Error(ErrorCode::BaseMismatch, "linear maps on different spaces");
    }
    auto stacked = f.matrix();
    stacked.insert(stacked.end(), g.matrix().begin(), g.matrix().end());
    return LinearEpi(f.field(), echelon(std::move(stacked), f.field()), f.source_dim());
}

std::uint64_t vect_entropy(std::size_t dimension) { return dimension; }
std::uint64_t vect_entropy(const LinearEpi& f) { return f.target_dim(); }
std::uint64_t gauss_entropy(std::size_t dimension) { return dimension; }

SurjOrd::SurjOrd(long source, long target, std::vector<long> assignment)
    : source_(source), target_(target), assignment_(std::move(assignment)) {
    if (source_ < -1 || target_ < -1) throw Error(ErrorCode::InvalidMorphism, "objects are [n] with n >= -1");
    if (static_cast<long>(assignment_.size()) != source_ + 1) throw Error(ErrorCode::InvalidMorphism, "assignment size mismatch");
    for (std::size_t i = 0; i < assignment_.size(); ++i) {
        if (assignment_[i] < 0 || assignment_[i] > target_) throw Error(ErrorCode::InvalidMorphism, "value out of range");
        if (i > 0 && assignment_[i] < assignment_[i - 1]) throw Error(ErrorCode::InvalidMorphism, "not order-preserving");
    }
    if (std::set<long>(assignment_.begin(), assignment_.end()).size() != static_cast<std::size_t>(target_ + 1)) {
        throw Error(ErrorCode::InvalidMorphism, "not surjective");
    }
}

SurjOrdJoint joint(const SurjOrd& f, const SurjOrd& g) {
    if (f.source() != g.source()) throw Error(ErrorCode::BaseMismatch, "surjections from different objects");
    std::set<std::pair<long, long>> pts;
    for (std::size_t i = 0; i < f.assignment().size(); ++i) pts.emplace(f.assignment()[i], g.assignment()[i]);
    std::vector<std::pair<long, long>> image(pts.begin(), pts.end());
    bool total = true;
    for (std::size_t i = 0; i < image.size(); ++i) {
        for (std::size_t j = i + 1; j < image.size(); ++j) {
            const auto& a = image[i];
            const auto& b = image[j];
            const bool le = a.first <= b.first && a.second <= b.second;
            const bool ge = a.first >= b.first && a.second >= b.second;
            total = total && (le || ge);
        }
    }
    std::vector<long> assign;
    for (std::size_t i = 0; i < f.assignment().size(); ++i) {
        std::pair<long, long> key{f.assignment()[i], g.assignment()[i]};
        assign.push_back(std::lower_bound(image.begin(), image.end(), key) - image.begin());
    }
    // Lexicographic indexing is monotone exactly when the image is a chain.
    if (!total) return {SurjOrd(-1, -1, {}), std::move(image), false};
    const long top = static_cast<long>(image.size()) - 1;
    return {SurjOrd(f.source(), top, std::move(assign)), std::move(image), true};
}

std::uint64_t simplex_entropy(long n) {
    if (n < -1) throw Error(ErrorCode::InvalidArgument, "objects are [n] with n >= -1");
    return static_cast<std::uint64_t>(n + 1);
}

const std::vector<std::string>& naturality_functors() {
    static const std::vector<std::string> ids{"supp",       "incl_lprob",      "vect_to_prob",
                                              "ab_to_prob", "simplex_to_prob", "setop_to_prob"};
    return ids;
}

namespace {

long parse_long(std::string_view s) {
    try {
        std::size_t used = 0;
        std::string str(s);
        long v = std::stol(str, &used);
        if (used != str.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "expected an integer, got '" + std::string(s) + "'");
    }
}

std::uint64_t parse_count(std::string_view s) {
    long v = parse_long(s);
    if (v < 0) throw Error(ErrorCode::ParseError, "expected a nonnegative integer, got '" + std::string(s) + "'");
    return static_cast<std::uint64_t>(v);
}

Dist parse_masses(std::string_view s) {
    std::vector<Rational> masses;
    std::stringstream ss{std::string(s)};
    std::string item;
    while (std::getline(ss, item, ',')) masses.push_back(parse_rational(item));
    return Dist::from_masses(std::move(masses));
}

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (r > (1u << 20) / base) throw Error(ErrorCode::InvalidArgument, "object too large to materialize");
        r *= base;
    }
    return r;
}

EntropyPair diagonal(const LogReal& x) { return {x, x}; }

}  // namespace

NaturalityReport naturality_square(std::string_view functor_id, std::string_view object, const NaturalityConfig& config) {
    NaturalityReport r;
    r.functor = std::string(functor_id);
    r.object = std::string(object);
    if (functor_id == "supp") {
        Dist p = parse_masses(object);
        r.via_codomain = entropy_pair(p).h0;
        r.via_prob = finiset_entropy(p.size());
    } else if (functor_id == "incl_lprob") {
        Dist p = parse_masses(object);
        r.via_codomain = entropy_pair(p).h1;
        r.via_prob = shannon(p);
    } else if (functor_id == "vect_to_prob") {
        const auto dim = parse_count(object);
        r.via_codomain = diagonal(LogReal::log_of(config.field) * Rational(vect_entropy(dim)));
        r.via_prob = entropy_pair(Dist::uniform(checked_power(config.field, dim)));
    } else if (functor_id == "ab_to_prob") {
        MMatrix m = parse_finab(object);
        LogReal x;
        for (const auto& [k, mult] : m.entries()) {
            x += LogReal::log_of(k.first) * Rational(static_cast<unsigned long>(k.second * mult));
        }
        r.via_codomain = diagonal(x);
        const Integer order = m.group_order();
        if (order > (1u << 20)) throw Error(ErrorCode::InvalidArgument, "group too large to materialize");
        r.via_prob = entropy_pair(Dist::uniform(order.get_ui()));
    } else if (functor_id == "simplex_to_prob") {
        const auto x = simplex_entropy(parse_long(object));
        r.via_codomain = diagonal(LogReal::log_of(config.group) * Rational(x));
        r.via_prob = entropy_pair(Dist::uniform(checked_power(config.group, x)));
    } else if (functor_id == "setop_to_prob") {
        const auto x = finsetop_entropy(parse_count(object));
        const auto pp = entropy_pair(config.setop_dist);
        r.via_codomain = EntropyPair{pp.h0 * Rational(x), pp.h1 * Rational(x)};
        checked_power(config.setop_dist.size(), x);
        r.via_prob = entropy_pair(tensor_power(config.setop_dist, x));
    } else {
        throw Error(ErrorCode::UnknownFunctor, "unknown functor '" + std::string(functor_id) + "'");
    }
    r.commutes = r.via_codomain == r.via_prob;
    return r;
}

}  // namespace entrolab
