#include "entrolab/finab.hpp"

#include "entrolab/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace entrolab {

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

/// Finite abelian group Z_{t_1} + ... + Z_{t_r} with elements encoded in
/// mixed radix (first coordinate most significant).
struct Coords {
    std::vector<std::uint64_t> radix;
    std::vector<std::uint64_t> stride;
    std::uint64_t order = 1;

    explicit Coords(std::vector<std::uint64_t> r) : radix(std::move(r)), stride(radix.size()) {
        for (std::size_t i = radix.size(); i-- > 0;) {
            stride[i] = order;
            order *= radix[i];
        }
    }
    std::uint64_t digit(std::uint64_t e, std::size_t i) const { return (e / stride[i]) % radix[i]; }
    std::uint64_t add(std::uint64_t x, std::uint64_t y) const {
        std::uint64_t r = 0;
        for (std::size_t i = 0; i < radix.size(); ++i) r += ((digit(x, i) + digit(y, i)) % radix[i]) * stride[i];
        return r;
    }
    std::uint64_t scale(std::uint64_t k, std::uint64_t x) const {
        std::uint64_t r = 0;
        for (std::size_t i = 0; i < radix.size(); ++i) r += ((k % radix[i]) * digit(x, i) % radix[i]) * stride[i];
        return r;
    }
    std::uint64_t unit_vector(std::size_t i) const { return stride[i]; }

    /// Order of the subgroup generated by gens.
    std::uint64_t closure_size(const std::vector<std::uint64_t>& gens) const {
        std::vector<char> member(order, 0);
        std::vector<std::uint64_t> list{0};
        member[0] = 1;
        for (std::size_t idx = 0; idx < list.size(); ++idx) {
            for (auto g : gens) {
                auto s = add(list[idx], g);
                if (!member[s]) {
                    member[s] = 1;
                    list.push_back(s);
                }
            }
        }
        return list.size();
    }
};

}  // namespace

MMatrix::MMatrix(std::map<Key, std::uint64_t> entries) : entries_(std::move(entries)) {
    for (const auto& [k, m] : entries_) {
        if (!is_prime(k.first)) throw Error(ErrorCode::InvalidArgument, std::to_string(k.first) + " is not prime");
        if (k.second == 0) throw Error(ErrorCode::InvalidArgument, "exponent must be >= 1");
        if (m == 0) throw Error(ErrorCode::InvalidArgument, "multiplicity must be >= 1");
    }
}

Integer MMatrix::group_order() const {
    Integer r = 1;
    for (const auto& [k, m] : entries_) {
        Integer f;
        mpz_ui_pow_ui(f.get_mpz_t(), k.first, static_cast<unsigned long>(k.second * m));
        r *= f;
    }
    return r;
}

std::vector<std::uint64_t> MMatrix::cyclic_factors() const {
    std::vector<std::uint64_t> out;
    for (const auto& [k, m] : entries_) {
        for (std::uint64_t i = 0; i < m; ++i) out.push_back(ipow(k.first, k.second));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t MMatrix::suffix_sum(std::uint64_t p, unsigned k) const {
    std::uint64_t s = 0;
    for (auto it = entries_.lower_bound({p, k}); it != entries_.end() && it->first.first == p; ++it) s += it->second;
    return s;
}

std::string MMatrix::to_string() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [k, m] : entries_) {
        if (!first) out += ", ";
        first = false;
        out += "(" + std::to_string(k.first) + "," + std::to_string(k.second) + "):" + std::to_string(m);
    }
    return out + "}";
}

MMatrix finab_decompose(const std::vector<std::uint64_t>& orders) {
    std::map<MMatrix::Key, std::uint64_t> e;
    for (auto n : orders) {
        if (n == 0) throw Error(ErrorCode::InvalidArgument, "cyclic order must be >= 1");
        for (std::uint64_t p = 2; n > 1; ++p) {
            if (p * p > n) p = n;
            unsigned j = 0;
            while (n % p == 0) {
                n /= p;
                ++j;
            }
            if (j > 0) ++e[{p, j}];
        }
    }
    return MMatrix(std::move(e));
}

MMatrix parse_finab(std::string_view text) {
    std::vector<std::uint64_t> orders;
    std::stringstream ss{std::string(text)};
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            auto v = std::stoull(item, &used);
            if (used != item.size()) throw std::invalid_argument("trailing");
            orders.push_back(v);
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "bad cyclic order '" + item + "'");
        }
    }
    if (orders.empty()) throw Error(ErrorCode::ParseError, "no cyclic orders given");
    return finab_decompose(orders);
}

bool m_dominates(const MMatrix& a, const MMatrix& b) {
    for (const auto& [k, m] : b.entries()) {
        for (unsigned j = 1; j <= k.second; ++j) {
            if (a.suffix_sum(k.first, j) < b.suffix_sum(k.first, j)) return false;
        }
    }
    return true;
}

DomOrder m_compare(const MMatrix& a, const MMatrix& b) {
    const bool ab = m_dominates(a, b), ba = m_dominates(b, a);
    if (ab && ba) return DomOrder::Equal;
    if (ab) return DomOrder::Dominates;
    if (ba) return DomOrder::Dominated;
    return DomOrder::Incomparable;
}

std::string to_string(DomOrder d) {
    switch (d) {
        case DomOrder::Dominates: return "dominates";
        case DomOrder::Dominated: return "dominated";
        case DomOrder::Equal: return "equal";
        case DomOrder::Incomparable: return "incomparable";
    }
    return "?";
}

std::string to_string(EpiSearch::Status s) {
    switch (s) {
        case EpiSearch::Status::Yes: return "yes";
        case EpiSearch::Status::No: return "no";
        case EpiSearch::Status::BudgetExhausted: return "budget-exhausted";
    }
    return "?";
}

std::vector<std::uint64_t> EpiSearch::table() const {
    Coords a(source_factors), b(target_factors);
    std::vector<std::uint64_t> imgs;
    for (const auto& v : generator_images) {
        std::uint64_t e = 0;
        for (std::size_t i = 0; i < v.size(); ++i) e += v[i] * b.stride[i];
        imgs.push_back(e);
    }
    std::vector<std::uint64_t> out(a.order);
    for (std::uint64_t x = 0; x < a.order; ++x) {
        std::uint64_t y = 0;
        for (std::size_t i = 0; i < imgs.size(); ++i) y = b.add(y, b.scale(a.digit(x, i), imgs[i]));
        out[x] = y;
    }
    return out;
}

EpiSearch brute_epi_exists(const MMatrix& a, const MMatrix& b, const EpiBudget& budget) {
    EpiSearch res;
    res.source_factors = a.cyclic_factors();
    res.target_factors = b.cyclic_factors();
    if (a.group_order() * b.group_order() > Integer(std::to_string(budget.max_product_order))) {
        res.status = EpiSearch::Status::BudgetExhausted;
        return res;
    }
    const Coords B(res.target_factors);
    const auto& gens = res.source_factors;
    const std::size_t s = gens.size();

    // Generators of the c-torsion B[c] = {x : c x = 0}.
    auto torsion_gens = [&](std::uint64_t c) {
        std::vector<std::uint64_t> out;
        for (std::size_t i = 0; i < B.radix.size(); ++i) {
            auto t = B.radix[i];
            auto g = t / std::gcd(t, c);
            if (g < t) out.push_back(B.scale(g, B.unit_vector(i)));
        }
        return out;
    };
    std::vector<std::vector<std::uint64_t>> suffix_torsion(s + 1);
    for (std::size_t i = s; i-- > 0;) {
        suffix_torsion[i] = suffix_torsion[i + 1];
        auto t = torsion_gens(gens[i]);
        suffix_torsion[i].insert(suffix_torsion[i].end(), t.begin(), t.end());
    }
    std::vector<std::uint64_t> primes;
    for (const auto& [k, m] : b.entries()) {
        if (primes.empty() || primes.back() != k.first) primes.push_back(k.first);
    }
    std::vector<std::vector<std::uint64_t>> candidates(s);
    for (std::size_t i = 0; i < s; ++i) {
        for (std::uint64_t e = 0; e < B.order; ++e) {
            if (B.scale(gens[i], e) == 0) candidates[i].push_back(e);
        }
    }

    std::vector<std::uint64_t> chosen;
    bool exhausted = false;
    std::function<bool(std::size_t)> dfs = [&](std::size_t i) -> bool {
        if (++res.nodes > budget.max_nodes) {
            exhausted = true;
            return false;
        }
        if (i == s) return B.closure_size(chosen) == B.order;
        auto reach = chosen;
        reach.insert(reach.end(), suffix_torsion[i].begin(), suffix_torsion[i].end());
        if (B.closure_size(reach) != B.order) return false;
        for (auto p : primes) {
            auto with_pb = chosen;
            for (std::size_t t = 0; t < B.radix.size(); ++t) with_pb.push_back(B.scale(p, B.unit_vector(t)));
            std::uint64_t quotient = B.order / B.closure_size(with_pb);
            std::size_t rank = 0;
            while (quotient > 1) {
                quotient /= p;
                ++rank;
            }
            if (rank > s - i) return false;
        }
        for (auto c : candidates[i]) {
            chosen.push_back(c);
            if (dfs(i + 1)) return true;
            chosen.pop_back();
            if (exhausted) return false;
        }
        return false;
    };
    if (dfs(0)) {
        res.status = EpiSearch::Status::Yes;
        for (auto e : chosen) {
            std::vector<std::uint64_t> v;
            for (std::size_t t = 0; t < B.radix.size(); ++t) v.push_back(B.digit(e, t));
            res.generator_images.push_back(std::move(v));
        }
    } else {
        res.status = exhausted ? EpiSearch::Status::BudgetExhausted : EpiSearch::Status::No;
    }
    return res;
}

std::vector<MMatrix> abelian_groups_of_order(std::uint64_t n) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "order must be >= 1");
    // Per prime: every partition of its exponent.
    std::vector<std::vector<std::map<MMatrix::Key, std::uint64_t>>> per_prime;
    for (std::uint64_t p = 2; n > 1; ++p) {
        if (p * p > n) p = n;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e == 0) continue;
        std::vector<std::map<MMatrix::Key, std::uint64_t>> parts;
        std::map<MMatrix::Key, std::uint64_t> cur;
        std::function<void(unsigned, unsigned)> rec = [&](unsigned left, unsigned cap) {
            if (left == 0) {
                parts.push_back(cur);
                return;
            }
            for (unsigned j = std::min(left, cap); j >= 1; --j) {
                ++cur[{p, j}];
                rec(left - j, j);
                if (--cur[{p, j}] == 0) cur.erase({p, j});
            }
        };
        rec(e, e);
        per_prime.push_back(std::move(parts));
    }
    std::vector<std::map<MMatrix::Key, std::uint64_t>> acc{{}};
    for (const auto& opts : per_prime) {
        std::vector<std::map<MMatrix::Key, std::uint64_t>> next;
        for (const auto& base : acc) {
            for (const auto& o : opts) {
                auto m = base;
                m.insert(o.begin(), o.end());
                next.push_back(std::move(m));
            }
        }
        acc = std::move(next);
    }
    std::vector<MMatrix> out;
    for (auto& m : acc) out.emplace_back(std::move(m));
    return out;
}

}  // namespace entrolab
