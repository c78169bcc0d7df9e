#include "entrolab/majorization.hpp"

#include "entrolab/entropy.hpp"
#include "entrolab/error.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace entrolab {

std::vector<Rational> padded_sorted_masses(const Dist& p, std::size_t n) {
    auto v = p.sorted_masses();
    if (v.size() < n) v.resize(n, Rational(0));
    return v;
}

bool majorizes(std::span<const Rational> q_sorted, std::span<const Rational> p_sorted) {
    const std::size_t n = std::max(q_sorted.size(), p_sorted.size());
    Rational sq = 0, sp = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (k < q_sorted.size()) sq += q_sorted[k];
        if (k < p_sorted.size()) sp += p_sorted[k];
        if (sq < sp) return false;
    }
    return true;
}

bool majorizes(const Dist& q, const Dist& p) {
    auto qs = q.sorted_masses();
    auto ps = p.sorted_masses();
    return majorizes(qs, ps);
}

std::vector<Rational> apply_transfer(std::vector<Rational> v, const Transfer& t) {
    if (t.from >= v.size() || t.to >= v.size() || t.from == t.to) {
        throw Error(ErrorCode::InvalidArgument, "transfer indices out of range");
    }
    if (t.amount <= 0) throw Error(ErrorCode::InvalidArgument, "transfer amount must be positive");
    if (!(v[t.from] > v[t.to])) throw Error(ErrorCode::InvalidArgument, "transfer must take from the larger entry");
    if (v[t.from] - t.amount < v[t.to] + t.amount) throw Error(ErrorCode::InvalidArgument, "transfer crosses entries");
    v[t.from] -= t.amount;
    v[t.to] += t.amount;
    return v;
}

std::vector<Transfer> robin_hood_decompose(const Dist& q, const Dist& p) {
    if (!majorizes(q, p)) throw Error(ErrorCode::NotMajorized, "Q does not majorize P");
    const std::size_t n = std::max(q.size(), p.size());
    auto x = padded_sorted_masses(q, n);
    const auto y = padded_sorted_masses(p, n);
    std::vector<Transfer> out;
    while (x != y) {
        // j: last index with x_j > y_j; k: first index after j with x_k < y_k.
        // Entries strictly between them already agree, so the step keeps x
        // sorted and fixes at least one coordinate for good.
        std::size_t j = n;
        for (std::size_t i = n; i-- > 0;) {
            if (x[i] > y[i]) {
                j = i;
                break;
            }
        }
        std::size_t k = j + 1;
        while (k < n && !(x[k] < y[k])) ++k;
        if (j == n || k == n) throw Error(ErrorCode::NotMajorized, "decomposition stalled");
        Rational delta = std::min(x[j] - y[j], y[k] - x[k]);
        Transfer t{j, k, delta};
        x = apply_transfer(std::move(x), t);
        out.push_back(std::move(t));
    }
    return out;
}

bool order01(const Dist& p, const Dist& q) {
    if (iso_check(p, q)) return true;
    return compare(hartley(p), hartley(q)) >= 0 && compare(shannon(p), shannon(q)) > 0;
}

namespace {

using MassMultiset = std::map<Rational, Integer>;

MassMultiset multiset_of(const Dist& p) {
    MassMultiset m;
    for (const auto& x : p.masses()) m[x] += 1;
    return m;
}

MassMultiset convolve(const MassMultiset& a, const MassMultiset& b) {
    MassMultiset out;
    for (const auto& [x, cx] : a) {
        for (const auto& [y, cy] : b) out[x * y] += cx * cy;
    }
    return out;
}

MassMultiset power(const MassMultiset& a, std::size_t n) {
    MassMultiset out{{Rational(1), Integer(1)}};
    for (std::size_t i = 0; i < n; ++i) out = convolve(out, a);
    return out;
}

}  // namespace

bool tensor_power_dominates(const Dist& p, const Dist& q, std::size_t n, const Dist& r) {
    const Rational k(n);
    const int s0 = (hartley(p) * k + hartley(r) - hartley(q) * k).sign();
    const int s1 = (shannon(p) * k + shannon(r) - shannon(q) * k).sign();
    if (s0 >= 0 && s1 > 0) return true;
    if (s0 != 0 || s1 != 0) return false;
    return convolve(power(multiset_of(p), n), multiset_of(r)) == power(multiset_of(q), n);
}

WitnessBudget WitnessBudget::parse(std::string_view text) {
    WitnessBudget b;
    std::string s(text);
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "budget item '" + item + "' lacks '='");
        std::string key = item.substr(0, eq);
        std::size_t value = 0;
        try {
            value = std::stoul(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "budget value in '" + item + "' is not a number");
        }
        if (key == "depth") b.depth = value;
        else if (key == "support") b.support = value;
        else if (key == "den") b.den = value;
        else if (key == "candidates") b.max_candidates = value;
        else throw Error(ErrorCode::ParseError, "unknown budget key '" + key + "'");
    }
    if (b.depth > 3) throw Error(ErrorCode::InvalidArgument, "witness depth is at most 3");
    if (b.den < 2) throw Error(ErrorCode::InvalidArgument, "den must be >= 2");
    return b;
}

WitnessReplay replay_witness(const Dist& p, const Dist& q, const CatalyticWitness& w) {
    RandVar j12 = joint(w.x1, w.x2);
    RandVar j123 = joint(j12, w.x3);
    Dist lhs = product_dist(p, j123.codomain());
    Dist rhs = product_dist(product_dist(product_dist(q, w.x1.codomain()), w.x2.codomain()), w.x3.codomain());
    const bool holds = majorizes(rhs, lhs);
    return {std::move(lhs), std::move(rhs), holds};
}

namespace {

using Scaled = std::vector<std::int64_t>;

/// Masses scaled to integers over a shared denominator; nullopt when the
/// fast path could overflow.
struct IntegerView {
    Scaled p;
    Scaled q;
};

std::optional<IntegerView> integer_view(const Dist& p, const Dist& q, std::int64_t catalyst_scale) {
    Integer lcm = 1;
    for (const auto* d : {&p, &q}) {
        for (const auto& m : d->masses()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.get_den_mpz_t());
    }
    // Products a_i * r_k and their running sums stay below 2^62.
    Integer bound = lcm * catalyst_scale * 64;
    if (bound > Integer(1) << 62 || !mpz_fits_slong_p(lcm.get_mpz_t())) return std::nullopt;
    IntegerView v;
    for (const auto& m : p.masses()) v.p.push_back(Integer(m * lcm).get_si());
    for (const auto& m : q.masses()) v.q.push_back(Integer(m * lcm).get_si());
    return v;
}

Scaled outer(const Scaled& a, const Scaled& b) {
    Scaled out;
    out.reserve(a.size() * b.size());
    for (auto x : a) {
        for (auto y : b) out.push_back(x * y);
    }
    return out;
}

bool majorizes_int(Scaled q, Scaled p) {
    std::sort(q.begin(), q.end(), std::greater<>());
    std::sort(p.begin(), p.end(), std::greater<>());
    std::int64_t sq = 0, sp = 0;
    const std::size_t n = std::max(q.size(), p.size());
    for (std::size_t k = 0; k < n; ++k) {
        if (k < q.size()) sq += q[k];
        if (k < p.size()) sp += p[k];
        if (sq < sp) return false;
    }
    return true;
}

/// Partitions of `total` into 2..max_parts positive parts, non-increasing.
std::vector<Scaled> dyadic_catalysts(std::int64_t total, std::size_t max_parts) {
    std::vector<Scaled> out;
    Scaled cur;
    std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t remaining, std::int64_t cap) {
        if (remaining == 0) {
            if (cur.size() >= 2) out.push_back(cur);
            return;
        }
        if (cur.size() == max_parts) return;
        for (std::int64_t part = std::min(remaining, cap); part >= 1; --part) {
            cur.push_back(part);
            rec(remaining - part, part);
            cur.pop_back();
        }
    };
    rec(total, total);
    return out;
}

Scaled drop_zeros(Scaled v) {
    v.erase(std::remove(v.begin(), v.end(), 0), v.end());
    return v;
}

Dist catalyst_dist(const Scaled& numerators, std::int64_t den) {
    std::vector<Rational> masses;
    for (auto k : numerators) masses.emplace_back(Rational(k, den));
    for (auto& m : masses) m.canonicalize();
    return Dist::from_masses(std::move(masses));
}

RandVar constant_rv(const Dist& r) { return RandVar(MPMap::to_point(r)); }

RandVar projection_rv(const Dist& r, std::size_t i) {
    return RandVar(pushforward(r, [i](const Label& l) { return l[i]; }));
}

CatalyticWitness independent_witness(const std::vector<Scaled>& factors, std::int64_t den) {
    std::vector<Dist> ds;
    for (const auto& f : factors) ds.push_back(catalyst_dist(f, den));
    // R = C1 (x) ... (x) Cd with d-tuple labels.
    std::vector<std::pair<std::vector<Label>, Rational>> acc{{{}, Rational(1)}};
    for (const auto& d : ds) {
        std::vector<std::pair<std::vector<Label>, Rational>> next;
        for (const auto& [parts, m] : acc) {
            for (std::size_t i = 0; i < d.size(); ++i) {
                auto ext = parts;
                ext.push_back(d.label(i));
                next.emplace_back(std::move(ext), m * d.mass(i));
            }
        }
        acc = std::move(next);
    }
    std::vector<std::pair<Label, Rational>> pairs;
    for (auto& [parts, m] : acc) pairs.emplace_back(Label::tuple(std::move(parts)), std::move(m));
    Dist r = Dist::make(std::move(pairs));
    auto rv = [&](std::size_t i) { return i < ds.size() ? projection_rv(r, i) : constant_rv(r); };
    return {ds.empty() ? "trivial" : "independent", r, rv(0), rv(1), rv(2)};
}

CatalyticWitness correlated_witness(const std::array<std::int64_t, 4>& cells, std::int64_t den, bool with_merge) {
    std::vector<std::pair<Label, Rational>> pairs;
    for (std::size_t c = 0; c < 4; ++c) {
        if (cells[c] == 0) continue;
        Rational m(cells[c], den);
        m.canonicalize();
        pairs.emplace_back(Label::pair(std::to_string(c / 2), std::to_string(c % 2)), m);
    }
    Dist r = Dist::make(std::move(pairs));
    RandVar x3 = with_merge ? RandVar(pushforward(r, [](const Label& l) { return Label(l[0] == l[1] ? "eq" : "ne"); }))
                            : constant_rv(r);
    return {with_merge ? "correlated+merge" : "correlated", r, projection_rv(r, 0), projection_rv(r, 1), std::move(x3)};
}

std::int64_t largest_power_of_two_at_most(std::size_t n) {
    std::int64_t d = 1;
    while (static_cast<std::size_t>(d * 2) <= n) d *= 2;
    return d;
}

}  // namespace

WitnessSearchResult catalytic_witness_search(const Dist& p, const Dist& q, const WitnessBudget& budget) {
    if (compare(hartley(p), hartley(q)) < 0 || compare(shannon(p), shannon(q)) <= 0) {
        throw Error(ErrorCode::HypothesisViolated, "need H0(P) >= H0(Q) and H1(P) > H1(Q)");
    }
    WitnessSearchResult result;
    auto accept = [&](CatalyticWitness w) {
        if (!replay_witness(p, q, w).holds) return false;
        result.status = WitnessSearchResult::Status::Found;
        result.witness = std::move(w);
        return true;
    };
    auto spend = [&] { return result.candidates_tried++ < budget.max_candidates; };

    if (!spend()) return result;
    if (majorizes(q, p) && accept(independent_witness({}, 1))) return result;

    const std::int64_t den = largest_power_of_two_at_most(budget.den);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < std::max<std::size_t>(budget.depth, 3); ++i) scale *= den;
    auto view = integer_view(p, q, scale);
    if (!view) throw Error(ErrorCode::BudgetExhausted, "masses too large for the catalyst search");
    const auto catalysts = dyadic_catalysts(den, budget.support);

    // Independent catalysts cannot help when max Q < max P.
    const bool independent_viable =
        *std::max_element(view->q.begin(), view->q.end()) >= *std::max_element(view->p.begin(), view->p.end());
    if (independent_viable) {
        std::vector<std::size_t> idx;
        std::function<bool(std::size_t, std::size_t, const Scaled&)> rec = [&](std::size_t d, std::size_t start,
                                                                                 const Scaled& r) -> bool {
            if (idx.size() == d) {
                if (!spend()) return true;
                if (majorizes_int(outer(view->q, r), outer(view->p, r))) {
                    std::vector<Scaled> factors;
                    for (auto i : idx) factors.push_back(catalysts[i]);
                    if (accept(independent_witness(factors, den))) return true;
                }
                return false;
            }
            for (std::size_t i = start; i < catalysts.size(); ++i) {
                idx.push_back(i);
                const bool stop = rec(d, i, outer(r, catalysts[i]));
                idx.pop_back();
                if (stop) return true;
            }
            return false;
        };
        for (std::size_t d = 1; d <= budget.depth; ++d) {
            if (rec(d, 0, Scaled{1})) return result;
        }
    }

    if (budget.depth >= 2) {
        for (int merge = 0; merge <= (budget.depth >= 3 ? 1 : 0); ++merge) {
            for (std::int64_t a = 0; a <= den; ++a) {
                for (std::int64_t b = 0; a + b <= den; ++b) {
                    for (std::int64_t c = 0; a + b + c <= den; ++c) {
                        const std::array<std::int64_t, 4> w{a, b, c, den - a - b - c};
                        const auto nonzero = static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](auto v) { return v > 0; }));
                        if (nonzero < 2 || nonzero > budget.support) continue;
                        if (!spend()) return result;
                        Scaled cells = drop_zeros({w[0], w[1], w[2], w[3]});
                        Scaled m1 = drop_zeros({w[0] + w[1], w[2] + w[3]});
                        Scaled m2 = drop_zeros({w[0] + w[2], w[1] + w[3]});
                        Scaled rhs_cat = outer(m1, m2);
                        Scaled lhs_cat = cells;
                        for (auto& v : lhs_cat) v *= den;
                        if (merge) {
                            rhs_cat = outer(rhs_cat, drop_zeros({w[0] + w[3], w[1] + w[2]}));
                            for (auto& v : lhs_cat) v *= den;
                        }
                        if (majorizes_int(outer(view->q, rhs_cat), outer(view->p, lhs_cat)) &&
                            accept(correlated_witness(w, den, merge == 1))) {
                            return result;
                        }
                    }
                }
            }
        }
    }
    return result;
}

namespace {

nlohmann::json prefix_chain(const Dist& d, std::size_t n) {
    nlohmann::json out = nlohmann::json::array();
    Rational s = 0;
    for (const auto& m : padded_sorted_masses(d, n)) {
        s += m;
        out.push_back(to_string(s));
    }
    return out;
}

nlohmann::json rv_json(const RandVar& x) {
    nlohmann::json m = nlohmann::json::object();
    for (std::size_t i = 0; i < x.base().size(); ++i) m[x.base().label(i).to_string()] = x.map().image_label(i).to_string();
    return m;
}

}  // namespace

nlohmann::json witness_certificate(const Dist& p, const Dist& q, const CatalyticWitness& w) {
    auto replay = replay_witness(p, q, w);
    const std::size_t n = std::max(replay.lhs.size(), replay.rhs.size());
    nlohmann::json catalyst = nlohmann::json::array();
    for (std::size_t i = 0; i < w.catalyst.size(); ++i) {
        catalyst.push_back({{"label", w.catalyst.label(i).to_string()}, {"mass", to_string(w.catalyst.mass(i))}});
    }
    return {
        {"family", w.family},
        {"catalyst", {{"outcomes", catalyst}}},
        {"x1", rv_json(w.x1)},
        {"x2", rv_json(w.x2)},
        {"x3", rv_json(w.x3)},
        {"lhs_prefix_sums", prefix_chain(replay.lhs, n)},
        {"rhs_prefix_sums", prefix_chain(replay.rhs, n)},
        {"verified", replay.holds},
    };
}

}  // namespace entrolab
