#pragma once

#include "entrolab/label.hpp"
#include "entrolab/rational.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace entrolab {

/// Finite probability distribution with strictly positive rational masses
/// summing to exactly one over pairwise distinct labels. Immutable; copies
/// share storage.
class Dist {
public:
    /// Validating constructor. Throws NonPositiveMass, DuplicateLabel or
    /// MassSumNotOne.
    static Dist make(std::vector<std::pair<Label, Rational>> pairs);

    /// Same as make() with labels "0", "1", ...
    static Dist from_masses(std::vector<Rational> masses);

    /// Uniform distribution over labels "0".."n-1".
    static Dist uniform(std::size_t n);

    /// The degenerate single-outcome space, labeled by the empty tuple. It is
    /// the unit of the product.
    static Dist point();

    std::size_t size() const noexcept { return data_->labels.size(); }
    const std::vector<Label>& labels() const noexcept { return data_->labels; }
    const std::vector<Rational>& masses() const noexcept { return data_->masses; }
    const Label& label(std::size_t i) const { return data_->labels.at(i); }
    const Rational& mass(std::size_t i) const { return data_->masses.at(i); }
    std::optional<std::size_t> index_of(const Label& l) const;

    bool is_degenerate() const noexcept { return size() == 1; }
    bool is_uniform() const;

    /// Masses sorted in non-increasing order.
    std::vector<Rational> sorted_masses() const;

    friend bool operator==(const Dist& a, const Dist& b);

private:
    struct Data {
        std::vector<Label> labels;
        std::vector<Rational> masses;
        std::map<Label, std::size_t> index;
    };
    explicit Dist(std::shared_ptr<const Data> d) : data_(std::move(d)) {}

    std::shared_ptr<const Data> data_;
};

/// Measure-preserving surjection between two Dists, stored as an index map
/// from source outcomes to target outcomes.
class MPMap {
public:
    /// Throws NotMeasurePreserving or NotSurjective.
    MPMap(Dist source, Dist target, std::vector<std::size_t> assignment);

    static MPMap identity(const Dist& p);
    /// The unique map onto the point space.
    static MPMap to_point(const Dist& p);

    const Dist& source() const noexcept { return source_; }
    const Dist& target() const noexcept { return target_; }
    const std::vector<std::size_t>& assignment() const noexcept { return assignment_; }
    std::size_t operator()(std::size_t i) const { return assignment_.at(i); }
    const Label& image_label(std::size_t i) const { return target_.label(assignment_.at(i)); }

    bool is_bijective() const noexcept { return source_.size() == target_.size(); }

    friend bool operator==(const MPMap& a, const MPMap& b);

private:
    Dist source_;
    Dist target_;
    std::vector<std::size_t> assignment_;
};

/// A random variable over a fixed base space: an object of the under
/// category of `base`.
class RandVar {
public:
    /// Throws BaseMismatch unless map.source() == base.
    RandVar(const Dist& base, MPMap map);
    explicit RandVar(MPMap map) : map_(std::move(map)) {}

    const Dist& base() const noexcept { return map_.source(); }
    const Dist& codomain() const noexcept { return map_.target(); }
    const MPMap& map() const noexcept { return map_; }

private:
    MPMap map_;
};

using LabelFunction = std::function<Label(const Label&)>;

Dist make_dist(std::vector<std::pair<Label, Rational>> pairs);

/// Product distribution; outcome (x, y) carries mass P(x)Q(y).
Dist product_dist(const Dist& p, const Dist& q);

/// n-fold product with n-tuple labels; n = 0 yields the point space.
Dist tensor_power(const Dist& p, std::size_t n);

/// Image distribution of `p` under `g`, with the map onto it. Target outcomes
/// appear in order of first occurrence.
MPMap pushforward(const Dist& p, const LabelFunction& g);

/// Pairing of two random variables on the same base, restricted to its image.
/// Throws BaseMismatch.
RandVar joint(const RandVar& x, const RandVar& y);

/// Projections from the codomain of joint(x, y) onto the codomains of x and y.
std::pair<MPMap, MPMap> joint_projections(const RandVar& joint_xy, const RandVar& x, const RandVar& y);

/// g after f. Throws ChainMismatch unless f.target() == g.source().
MPMap compose(const MPMap& f, const MPMap& g);

/// True iff a measure-preserving bijection p -> q exists.
bool iso_check(const Dist& p, const Dist& q);

/// The bijection realizing iso_check, pairing outcomes sorted by
/// (mass descending, label ascending).
std::optional<MPMap> iso_witness(const Dist& p, const Dist& q);

}  // namespace entrolab
