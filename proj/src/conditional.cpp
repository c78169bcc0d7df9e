#include "entrolab/conditional.hpp"

#include "entrolab/entropy.hpp"
#include "entrolab/error.hpp"

namespace entrolab {

CondRV::CondRV(CondObj base, MPMap mid, MPMap down)
    : base_(std::move(base)), mid_(std::move(mid)), down_(std::move(down)) {
    if (!(mid_.source() == base_.total()) || !(down_.target() == base_.base()) || !(mid_.target() == down_.source())) {
        throw Error(ErrorCode::NotCommuting, "triangle objects do not line up");
    }
    for (std::size_t i = 0; i < base_.total().size(); ++i) {
        if (down_(mid_(i)) != base_.map()(i)) throw Error(ErrorCode::NotCommuting, "triangle does not commute");
    }
}

CondRV CondRV::identity(const CondObj& f) { return CondRV(f, MPMap::identity(f.total()), f.map()); }

CondObj conditional_product(const CondObj& f1, const CondObj& f2) {
    if (!(f1.base() == f2.base())) throw Error(ErrorCode::TargetMismatch, "conditional product needs a common base");
    const Dist& q = f1.base();
    std::vector<std::pair<Label, Rational>> pairs;
    std::vector<std::size_t> assign;
    for (std::size_t i = 0; i < f1.total().size(); ++i) {
        const auto y = f1.map()(i);
        for (std::size_t j = 0; j < f2.total().size(); ++j) {
            if (f2.map()(j) != y) continue;
            pairs.emplace_back(Label::pair(f1.total().label(i), f2.total().label(j)),
                               f1.total().mass(i) * f2.total().mass(j) / q.mass(y));
            assign.push_back(y);
        }
    }
    return CondObj(MPMap(Dist::make(std::move(pairs)), q, std::move(assign)));
}

CondRV cond_joint(const CondRV& x, const CondRV& y) {
    if (!(x.base().map() == y.base().map())) throw Error(ErrorCode::BaseMismatch, "random variables over different bases");
    RandVar rx(x.mid()), ry(y.mid());
    RandVar jxy = joint(rx, ry);
    auto [to_a, to_b] = joint_projections(jxy, rx, ry);
    return CondRV(x.base(), jxy.map(), compose(to_a, x.down()));
}

LogReal cond_entropy(const CondRV& x) { return shannon(x.codomain()) - shannon(x.base().base()); }

ChainCertificate chain_rule_check(const MPMap& f, const MPMap& g) {
    if (!(f.target() == g.source())) throw Error(ErrorCode::ChainMismatch, "maps do not compose");
    const MPMap gf = compose(f, g);
    ChainCertificate c;
    c.upper = shannon(f.source()) - shannon(f.target());
    c.lower = shannon(g.source()) - shannon(g.target());
    c.composite = shannon(gf.source()) - shannon(gf.target());
    c.holds = c.upper + c.lower == c.composite;
    return c;
}

SubmodularityReport submodularity_check(const Dist& p) {
    for (const auto& l : p.labels()) {
        if (!l.is_tuple() || l.arity() != 3) throw Error(ErrorCode::InvalidArgument, "expected 3-tuple outcomes");
    }
    SubmodularityReport r{
        pushforward(p, [](const Label& l) { return Label::pair(l[2], l[0]); }).target(),
        pushforward(p, [](const Label& l) { return Label::pair(l[1], l[2]); }).target(),
        pushforward(p, [](const Label& l) { return l[2]; }).target(),
        {},
    };
    r.deficit = shannon(r.a) + shannon(r.b) - shannon(p) - shannon(r.q);
    r.sign = r.deficit.sign();
    r.holds = r.sign >= 0;
    return r;
}

Dist epsilon_family(const Rational& eps) {
    const Rational quarter(1, 4);
    if (!(eps > 0 && eps < quarter)) throw Error(ErrorCode::RangeError, "eps must lie strictly between 0 and 1/4");
    auto t = [](const char* a, const char* b, const char* c) { return Label::tuple({a, b, c}); };
    return Dist::make({
        {t("0", "0", "0"), quarter},
        {t("0", "1", "0"), quarter},
        {t("1", "0", "0"), quarter},
        {t("1", "1", "0"), quarter - eps},
        {t("1", "1", "1"), eps},
    });
}

}  // namespace entrolab
