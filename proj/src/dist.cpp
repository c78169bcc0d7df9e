#include "entrolab/dist.hpp"

#include "entrolab/error.hpp"

#include <algorithm>
#include <numeric>

namespace entrolab {

Dist Dist::make(std::vector<std::pair<Label, Rational>> pairs) {
    auto data = std::make_shared<Data>();
    data->labels.reserve(pairs.size());
    data->masses.reserve(pairs.size());
    Rational total = 0;
    for (auto& [label, mass] : pairs) {
        mass.canonicalize();
        if (mass <= 0) {
            throw Error(ErrorCode::NonPositiveMass, "outcome '" + label.to_string() + "' has mass " + to_string(mass));
        }
        if (!data->index.emplace(label, data->labels.size()).second) {
            throw Error(ErrorCode::DuplicateLabel, "label '" + label.to_string() + "' repeated");
        }
        total += mass;
        data->labels.push_back(std::move(label));
        data->masses.push_back(std::move(mass));
    }
    if (total != 1) throw Error(ErrorCode::MassSumNotOne, "masses sum to " + to_string(total));
    return Dist(std::move(data));
}

Dist Dist::from_masses(std::vector<Rational> masses) {
    std::vector<std::pair<Label, Rational>> pairs;
    pairs.reserve(masses.size());
    for (std::size_t i = 0; i < masses.size(); ++i) pairs.emplace_back(Label(std::to_string(i)), std::move(masses[i]));
    return make(std::move(pairs));
}

Dist Dist::uniform(std::size_t n) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "uniform distribution needs n >= 1");
    return from_masses(std::vector<Rational>(n, Rational(1, n)));
}

Dist Dist::point() { return make({{Label::tuple({}), Rational(1)}}); }

std::optional<std::size_t> Dist::index_of(const Label& l) const {
    auto it = data_->index.find(l);
    if (it == data_->index.end()) return std::nullopt;
    return it->second;
}

bool Dist::is_uniform() const {
    return std::all_of(masses().begin(), masses().end(), [&](const Rational& m) { return m == masses().front(); });
}

std::vector<Rational> Dist::sorted_masses() const {
    std::vector<Rational> out = masses();
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

bool operator==(const Dist& a, const Dist& b) {
    if (a.data_ == b.data_) return true;
    return a.labels() == b.labels() && a.masses() == b.masses();
}

MPMap::MPMap(Dist source, Dist target, std::vector<std::size_t> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
    if (assignment_.size() != source_.size()) {
        throw Error(ErrorCode::InvalidArgument, "assignment length differs from source support");
    }
    std::vector<Rational> pre(target_.size(), Rational(0));
    for (std::size_t i = 0; i < assignment_.size(); ++i) {
        if (assignment_[i] >= target_.size()) throw Error(ErrorCode::InvalidArgument, "assignment index out of range");
        pre[assignment_[i]] += source_.mass(i);
    }
    for (std::size_t j = 0; j < pre.size(); ++j) {
        if (pre[j] == 0) throw Error(ErrorCode::NotSurjective, "target outcome '" + target_.label(j).to_string() + "' has no preimage");
        if (pre[j] != target_.mass(j)) {
            throw Error(ErrorCode::NotMeasurePreserving, "preimage of '" + target_.label(j).to_string() + "' has mass " +
                                                             to_string(pre[j]) + ", expected " + to_string(target_.mass(j)));
        }
    }
}

MPMap MPMap::identity(const Dist& p) {
    std::vector<std::size_t> a(p.size());
    std::iota(a.begin(), a.end(), 0);
    return MPMap(p, p, std::move(a));
}

MPMap MPMap::to_point(const Dist& p) { return MPMap(p, Dist::point(), std::vector<std::size_t>(p.size(), 0)); }

bool operator==(const MPMap& a, const MPMap& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.assignment_ == b.assignment_;
}

RandVar::RandVar(const Dist& base, MPMap map) : map_(std::move(map)) {
    if (!(map_.source() == base)) throw Error(ErrorCode::BaseMismatch, "random variable map does not start at its base");
}

Dist make_dist(std::vector<std::pair<Label, Rational>> pairs) { return Dist::make(std::move(pairs)); }

Dist product_dist(const Dist& p, const Dist& q) {
    std::vector<std::pair<Label, Rational>> pairs;
    pairs.reserve(p.size() * q.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < q.size(); ++j) {
            pairs.emplace_back(Label::pair(p.label(i), q.label(j)), p.mass(i) * q.mass(j));
        }
    }
    return Dist::make(std::move(pairs));
}

Dist tensor_power(const Dist& p, std::size_t n) {
    std::vector<std::pair<std::vector<Label>, Rational>> acc{{{}, Rational(1)}};
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<std::pair<std::vector<Label>, Rational>> next;
        next.reserve(acc.size() * p.size());
        for (const auto& [parts, m] : acc) {
            for (std::size_t i = 0; i < p.size(); ++i) {
                auto extended = parts;
                extended.push_back(p.label(i));
                next.emplace_back(std::move(extended), m * p.mass(i));
            }
        }
        acc = std::move(next);
    }
    std::vector<std::pair<Label, Rational>> pairs;
    pairs.reserve(acc.size());
    for (auto& [parts, m] : acc) pairs.emplace_back(Label::tuple(std::move(parts)), std::move(m));
    return Dist::make(std::move(pairs));
}

MPMap pushforward(const Dist& p, const LabelFunction& g) {
    std::map<Label, std::size_t> seen;
    std::vector<std::pair<Label, Rational>> target;
    std::vector<std::size_t> assignment(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        Label image = g(p.label(i));
        auto [it, inserted] = seen.emplace(image, target.size());
        if (inserted) target.emplace_back(std::move(image), Rational(0));
        target[it->second].second += p.mass(i);
        assignment[i] = it->second;
    }
    return MPMap(p, Dist::make(std::move(target)), std::move(assignment));
}

RandVar joint(const RandVar& x, const RandVar& y) {
    if (!(x.base() == y.base())) throw Error(ErrorCode::BaseMismatch, "joint of random variables over different bases");
    const Dist& base = x.base();
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
    std::vector<std::pair<Label, Rational>> target;
    std::vector<std::size_t> assignment(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
        auto key = std::make_pair(x.map()(i), y.map()(i));
        auto [it, inserted] = seen.emplace(key, target.size());
        if (inserted) target.emplace_back(Label::pair(x.map().image_label(i), y.map().image_label(i)), Rational(0));
        target[it->second].second += base.mass(i);
        assignment[i] = it->second;
    }
    return RandVar(MPMap(base, Dist::make(std::move(target)), std::move(assignment)));
}

std::pair<MPMap, MPMap> joint_projections(const RandVar& joint_xy, const RandVar& x, const RandVar& y) {
    const Dist& cod = joint_xy.codomain();
    std::vector<std::size_t> to_x(cod.size()), to_y(cod.size());
    for (std::size_t k = 0; k < cod.size(); ++k) {
        const Label& l = cod.label(k);
        auto ix = x.codomain().index_of(l[0]);
        auto iy = y.codomain().index_of(l[1]);
        if (!ix || !iy) throw Error(ErrorCode::BaseMismatch, "joint codomain label not built from x and y");
        to_x[k] = *ix;
        to_y[k] = *iy;
    }
    return {MPMap(cod, x.codomain(), std::move(to_x)), MPMap(cod, y.codomain(), std::move(to_y))};
}

MPMap compose(const MPMap& f, const MPMap& g) {
    if (!(f.target() == g.source())) throw Error(ErrorCode::ChainMismatch, "cannot compose: f's target is not g's source");
    std::vector<std::size_t> a(f.source().size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = g(f(i));
    return MPMap(f.source(), g.target(), std::move(a));
}

bool iso_check(const Dist& p, const Dist& q) {
    return p.size() == q.size() && p.sorted_masses() == q.sorted_masses();
}

namespace {

std::vector<std::size_t> canonical_order(const Dist& p) {
    std::vector<std::size_t> idx(p.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (p.mass(a) != p.mass(b)) return p.mass(a) > p.mass(b);
        return p.label(a) < p.label(b);
    });
    return idx;
}

}  // namespace

std::optional<MPMap> iso_witness(const Dist& p, const Dist& q) {
    if (!iso_check(p, q)) return std::nullopt;
    auto op = canonical_order(p);
    auto oq = canonical_order(q);
    std::vector<std::size_t> a(p.size());
    for (std::size_t k = 0; k < op.size(); ++k) a[op[k]] = oq[k];
    return MPMap(p, q, std::move(a));
}

}  // namespace entrolab
