#include "entrolab/ordmon.hpp"

#include "entrolab/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace entrolab {

namespace {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_terms(std::string_view sum) {
    std::vector<std::string> out;
    std::string t = trim(sum);
    if (t.empty()) throw Error(ErrorCode::ParseError, "empty sum");
    if (t == "0") return out;
    std::size_t start = 0;
    while (true) {
        auto plus = t.find('+', start);
        std::string term = trim(std::string_view(t).substr(start, plus == std::string::npos ? std::string::npos : plus - start));
        if (term.empty() || term == "0") throw Error(ErrorCode::ParseError, "bad term in '" + t + "'");
        out.push_back(term);
        if (plus == std::string::npos) break;
        start = plus + 1;
    }
    return out;
}

bool embeds(const ExpVec& small, const ExpVec& big) {
    for (std::size_t i = 0; i < small.size(); ++i) {
        if (small[i] > big[i]) return false;
    }
    return true;
}

}  // namespace

PresentedMonoid::PresentedMonoid(std::vector<std::string> generators, std::vector<Relation> relations)
    : generators_(std::move(generators)), relations_(std::move(relations)) {
    std::set<std::string> seen;
    for (const auto& g : generators_) {
        if (g.empty() || g == "0" || g.find_first_of("+ \t>=") != std::string::npos) {
            throw Error(ErrorCode::InvalidMonoid, "bad generator name '" + g + "'");
        }
        if (!seen.insert(g).second) throw Error(ErrorCode::InvalidMonoid, "duplicate generator '" + g + "'");
    }
    for (const auto& r : relations_) {
        if (r.lhs.size() != generators_.size() || r.rhs.size() != generators_.size()) {
            throw Error(ErrorCode::InvalidMonoid, "relation arity does not match the generators");
        }
    }
}

PresentedMonoid PresentedMonoid::parse(std::string_view text) {
    std::vector<std::string> gens;
    auto intern = [&](const std::string& g) {
        if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
    };
    std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> raw;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.rfind("generators:", 0) == 0) {
            std::istringstream gs(line.substr(11));
            std::string g;
            while (std::getline(gs, g, ',')) {
                g = trim(g);
                if (!g.empty()) intern(g);
            }
            continue;
        }
        auto op = line.find(">=");
        if (op == std::string::npos) throw Error(ErrorCode::ParseError, "relation '" + line + "' lacks '>='");
        auto lhs = split_terms(std::string_view(line).substr(0, op));
        auto rhs = split_terms(std::string_view(line).substr(op + 2));
        for (const auto& g : lhs) intern(g);
        for (const auto& g : rhs) intern(g);
        raw.emplace_back(std::move(lhs), std::move(rhs));
    }
    auto vec = [&](const std::vector<std::string>& terms) {
        ExpVec v(gens.size(), 0);
        for (const auto& t : terms) ++v[std::find(gens.begin(), gens.end(), t) - gens.begin()];
        return v;
    };
    std::vector<Relation> rels;
    for (const auto& [l, r] : raw) rels.push_back({vec(l), vec(r)});
    return PresentedMonoid(std::move(gens), std::move(rels));
}

ExpVec PresentedMonoid::element(std::string_view sum) const {
    ExpVec v(generators_.size(), 0);
    for (const auto& t : split_terms(sum)) {
        auto it = std::find(generators_.begin(), generators_.end(), t);
        if (it == generators_.end()) throw Error(ErrorCode::ParseError, "unknown generator '" + t + "'");
        ++v[it - generators_.begin()];
    }
    return v;
}

std::string PresentedMonoid::format(const ExpVec& v) const {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::uint64_t k = 0; k < v[i]; ++k) {
            if (!out.empty()) out += '+';
            out += generators_[i];
        }
    }
    return out.empty() ? "0" : out;
}

Rational LinearFunctional::operator()(const ExpVec& v) const {
    if (v.size() != weights.size()) throw Error(ErrorCode::InvalidArgument, "functional arity mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += weights[i] * Rational(static_cast<unsigned long>(v[i]));
    return s;
}

std::string to_string(LeqResult::Status s) {
    switch (s) {
        case LeqResult::Status::Proven: return "proven";
        case LeqResult::Status::Unknown: return "unknown";
        case LeqResult::Status::Refuted: return "refuted";
    }
    return "?";
}

LeqResult presented_leq(const PresentedMonoid& m, const ExpVec& x, const ExpVec& y, std::size_t depth,
                        std::span<const LinearFunctional> separators, std::size_t state_cap) {
    const auto n = m.generators().size();
    if (x.size() != n || y.size() != n) throw Error(ErrorCode::InvalidArgument, "element arity mismatch");
    LeqResult res;
    for (std::size_t s = 0; s < separators.size(); ++s) {
        for (const auto& r : m.relations()) {
            if (separators[s](r.lhs) < separators[s](r.rhs)) {
                throw Error(ErrorCode::InvalidArgument, "separator " + std::to_string(s) + " is not monotone");
            }
        }
    }

    std::map<ExpVec, ExpVec> parent;
    parent.emplace(x, ExpVec{});
    std::vector<ExpVec> frontier{x};
    std::optional<ExpVec> hit;
    if (x == y) hit = x;
    std::size_t level = 0;
    while (!hit && level < depth && !frontier.empty() && parent.size() < state_cap) {
        std::vector<ExpVec> next;
        for (const auto& cur : frontier) {
            for (const auto& r : m.relations()) {
                if (!embeds(r.lhs, cur)) continue;
                ExpVec v = cur;
                for (std::size_t i = 0; i < n; ++i) v[i] = v[i] - r.lhs[i] + r.rhs[i];
                if (!parent.emplace(v, cur).second) continue;
                if (v == y) {
                    hit = v;
                    break;
                }
                next.push_back(std::move(v));
                if (parent.size() >= state_cap) break;
            }
            if (hit || parent.size() >= state_cap) break;
        }
        frontier = std::move(next);
        ++level;
    }
    res.states_visited = parent.size();
    if (hit) {
        res.status = LeqResult::Status::Proven;
        for (ExpVec cur = *hit;; cur = parent.at(cur)) {
            res.chain.push_back(cur);
            if (cur == x) break;
        }
        std::reverse(res.chain.begin(), res.chain.end());
        res.depth = res.chain.size() - 1;
        return res;
    }
    for (std::size_t s = 0; s < separators.size(); ++s) {
        if (separators[s](x) < separators[s](y)) {
            res.status = LeqResult::Status::Refuted;
            res.separator = s;
            return res;
        }
    }
    return res;
}

FiniteOrdMonoid::FiniteOrdMonoid(std::vector<std::string> names, std::vector<std::vector<std::size_t>> add,
                                 std::size_t unit, std::vector<std::vector<bool>> geq)
    : names_(std::move(names)), add_(std::move(add)), unit_(unit), geq_(std::move(geq)) {
    const std::size_t n = names_.size();
    auto bad = [](const std::string& what) { throw Error(ErrorCode::InvalidMonoid, what); };
    if (n == 0) bad("empty carrier");
    if (std::set<std::string>(names_.begin(), names_.end()).size() != n) bad("duplicate element names");
    if (unit_ >= n) bad("unit out of range");
    if (add_.size() != n || geq_.size() != n) bad("table size mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (add_[i].size() != n || geq_[i].size() != n) bad("table size mismatch");
        for (auto v : add_[i]) {
            if (v >= n) bad("addition leaves the carrier");
        }
    }
    for (std::size_t x = 0; x < n; ++x) {
        if (add_[x][unit_] != x) bad("unit law fails at " + names_[x]);
        if (!geq_[x][x]) bad("order not reflexive at " + names_[x]);
        for (std::size_t y = 0; y < n; ++y) {
            if (add_[x][y] != add_[y][x]) bad("addition not commutative at " + names_[x] + ", " + names_[y]);
            if (x != y && geq_[x][y] && geq_[y][x]) bad("order not antisymmetric at " + names_[x] + ", " + names_[y]);
            for (std::size_t z = 0; z < n; ++z) {
                if (add_[add_[x][y]][z] != add_[x][add_[y][z]]) bad("addition not associative");
                if (geq_[x][y] && geq_[y][z] && !geq_[x][z]) bad("order not transitive");
                if (geq_[x][y] && !geq_[add_[x][z]][add_[y][z]]) bad("order not compatible with addition");
            }
        }
    }
}

std::size_t FiniteOrdMonoid::index_of(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw Error(ErrorCode::InvalidArgument, "no element named '" + std::string(name) + "'");
    return static_cast<std::size_t>(it - names_.begin());
}

std::size_t FiniteOrdMonoid::multiple(std::uint64_t n, std::size_t x) const {
    std::size_t acc = unit_;
    std::size_t base = x;
    while (n > 0) {
        if (n & 1) acc = add(acc, base);
        base = add(base, base);
        n >>= 1;
    }
    return acc;
}

bool FiniteOrdMonoid::is_cancellative() const {
    for (std::size_t x = 0; x < size(); ++x) {
        for (std::size_t y = 0; y < size(); ++y) {
            if (geq(x, y)) continue;
            for (std::size_t z = 0; z < size(); ++z) {
                if (geq(add(x, z), add(y, z))) return false;
            }
        }
    }
    return true;
}

Regularization catalytic_regularize(const FiniteOrdMonoid& m) {
    const std::size_t n = m.size();
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            for (std::size_t z = 0; z < n && !rel[x][y]; ++z) rel[x][y] = m.geq(m.add(x, z), m.add(y, z));
        }
    }
    std::vector<std::size_t> class_of(n, n);
    std::vector<std::size_t> reps;
    std::vector<std::string> names;
    for (std::size_t x = 0; x < n; ++x) {
        if (class_of[x] != n) continue;
        const std::size_t c = reps.size();
        std::vector<std::string> members;
        for (std::size_t y = x; y < n; ++y) {
            if (rel[x][y] && rel[y][x]) {
                class_of[y] = c;
                members.push_back(m.name(y));
            }
        }
        reps.push_back(x);
        if (members.size() == 1) {
            names.push_back(members.front());
        } else {
            std::string s = "[";
            for (std::size_t i = 0; i < members.size(); ++i) s += (i ? "|" : "") + members[i];
            names.push_back(s + "]");
        }
    }
    const std::size_t k = reps.size();
    std::vector<std::vector<std::size_t>> add(k, std::vector<std::size_t>(k));
    std::vector<std::vector<bool>> geq(k, std::vector<bool>(k));
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
            add[a][b] = class_of[m.add(reps[a], reps[b])];
            geq[a][b] = rel[reps[a]][reps[b]];
        }
    }
    return {FiniteOrdMonoid(std::move(names), std::move(add), class_of[m.unit()], std::move(geq)), std::move(class_of)};
}

std::optional<IntegralClosureViolation> integral_closure_violation(const FiniteOrdMonoid& m) {
    const std::size_t n = m.size();
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (m.geq(x, y)) continue;
            // All values of (nx, ny) for n >= 1; the sequence repeats once a pair recurs.
            std::vector<std::pair<std::size_t, std::size_t>> orbit;
            std::set<std::pair<std::size_t, std::size_t>> seen;
            for (std::pair<std::size_t, std::size_t> p{x, y}; seen.insert(p).second;
                 p = {m.add(p.first, x), m.add(p.second, y)}) {
                orbit.push_back(p);
            }
            for (std::size_t a = 0; a < n; ++a) {
                for (std::size_t b = 0; b < n; ++b) {
                    const bool all = std::all_of(orbit.begin(), orbit.end(), [&](const auto& p) {
                        return m.geq(m.add(p.first, a), m.add(p.second, b));
                    });
                    if (all) return IntegralClosureViolation{x, y, a, b};
                }
            }
        }
    }
    return std::nullopt;
}

bool hom_check(const FiniteOrdMonoid& m, const FiniteOrdMonoid& n, std::span<const std::size_t> f) {
    if (f.size() != m.size()) return false;
    for (auto v : f) {
        if (v >= n.size()) return false;
    }
    if (f[m.unit()] != n.unit()) return false;
    for (std::size_t x = 0; x < m.size(); ++x) {
        for (std::size_t y = 0; y < m.size(); ++y) {
            if (f[m.add(x, y)] != n.add(f[x], f[y])) return false;
            if (m.geq(x, y) && !n.geq(f[x], f[y])) return false;
        }
    }
    return true;
}

bool is_order_isomorphism(const FiniteOrdMonoid& m, const FiniteOrdMonoid& n, std::span<const std::size_t> f) {
    if (m.size() != n.size() || !hom_check(m, n, f)) return false;
    std::vector<std::size_t> inv(n.size(), n.size());
    for (std::size_t x = 0; x < f.size(); ++x) {
        if (inv[f[x]] != n.size()) return false;
        inv[f[x]] = x;
    }
    return hom_check(n, m, inv);
}

FiniteOrdMonoid truncated_sum_monoid(std::size_t k, bool total_order) {
    const std::size_t n = k + 1;
    std::vector<std::string> names;
    std::vector<std::vector<std::size_t>> add(n, std::vector<std::size_t>(n));
    std::vector<std::vector<bool>> geq(n, std::vector<bool>(n));
    for (std::size_t x = 0; x < n; ++x) {
        names.push_back(std::to_string(x));
        for (std::size_t y = 0; y < n; ++y) {
            add[x][y] = std::min(x + y, k);
            geq[x][y] = total_order ? x >= y : x == y;
        }
    }
    return FiniteOrdMonoid(std::move(names), std::move(add), 0, std::move(geq));
}

FiniteOrdMonoid saturating_grid(std::size_t k) {
    return product_monoid(truncated_sum_monoid(k, true), truncated_sum_monoid(k, true));
}

FiniteOrdMonoid lex_grid_model(std::size_t m) {
    if (m == 0) throw Error(ErrorCode::InvalidArgument, "modulus must be positive");
    const std::size_t n = 2 * m + 1;
    const std::size_t top = 2 * m;
    auto first = [&](std::size_t e) { return e == top ? 2 : e / m; };
    std::vector<std::string> names;
    for (std::size_t e = 0; e < top; ++e) names.push_back("(" + std::to_string(e / m) + "," + std::to_string(e % m) + ")");
    names.push_back("top");
    std::vector<std::vector<std::size_t>> add(n, std::vector<std::size_t>(n));
    std::vector<std::vector<bool>> geq(n, std::vector<bool>(n));
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            const std::size_t f = first(u) + first(v);
            add[u][v] = f > 1 ? top : f * m + (u % m + v % m) % m;
            geq[u][v] = u == v || first(u) > first(v);
        }
    }
    return FiniteOrdMonoid(std::move(names), std::move(add), 0, std::move(geq));
}

FiniteOrdMonoid cyclic_group(std::size_t m) {
    std::vector<std::string> names;
    std::vector<std::vector<std::size_t>> add(m, std::vector<std::size_t>(m));
    std::vector<std::vector<bool>> geq(m, std::vector<bool>(m));
    for (std::size_t x = 0; x < m; ++x) {
        names.push_back(std::to_string(x));
        for (std::size_t y = 0; y < m; ++y) {
            add[x][y] = (x + y) % m;
            geq[x][y] = x == y;
        }
    }
    return FiniteOrdMonoid(std::move(names), std::move(add), 0, std::move(geq));
}

FiniteOrdMonoid product_monoid(const FiniteOrdMonoid& a, const FiniteOrdMonoid& b) {
    const std::size_t nb = b.size();
    const std::size_t n = a.size() * nb;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < nb; ++j) names.push_back("(" + a.name(i) + "," + b.name(j) + ")");
    }
    std::vector<std::vector<std::size_t>> add(n, std::vector<std::size_t>(n));
    std::vector<std::vector<bool>> geq(n, std::vector<bool>(n));
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            add[u][v] = a.add(u / nb, v / nb) * nb + b.add(u % nb, v % nb);
            geq[u][v] = a.geq(u / nb, v / nb) && b.geq(u % nb, v % nb);
        }
    }
    return FiniteOrdMonoid(std::move(names), std::move(add), a.unit() * nb + b.unit(), std::move(geq));
}

}  // namespace entrolab
