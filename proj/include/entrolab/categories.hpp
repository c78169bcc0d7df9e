#pragma once

#include "entrolab/dist.hpp"
#include "entrolab/entropy.hpp"
#include "entrolab/finab.hpp"
#include "entrolab/log_real.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace entrolab {

/// log|A| on nonempty finite sets. Throws EmptySet for |A| = 0.
LogReal finiset_entropy(std::uint64_t cardinality);
/// |A| on FinSet^op.
std::uint64_t finsetop_entropy(std::uint64_t cardinality);

/// Surjective linear map F_p^cols -> F_p^rows, stored as a rows x cols matrix.
class LinearEpi {
public:
    /// Throws InvalidMorphism unless p is prime, entries are in range and the
    /// matrix has full row rank.
    LinearEpi(std::uint64_t p, std::vector<std::vector<std::uint64_t>> matrix, std::size_t cols);

    std::uint64_t field() const noexcept { return p_; }
    std::size_t source_dim() const noexcept { return cols_; }
    std::size_t target_dim() const noexcept { return matrix_.size(); }
    const std::vector<std::vector<std::uint64_t>>& matrix() const noexcept { return matrix_; }

    /// Coordinate projection F_p^n -> F_p^k onto the listed coordinates.
    static LinearEpi projection(std::uint64_t p, std::size_t n, const std::vector<std::size_t>& coords);

private:
    std::uint64_t p_;
    std::vector<std::vector<std::uint64_t>> matrix_;
    std::size_t cols_;
};

/// Rank over F_p.
std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p);

/// (f, g) restricted to its image: the stacked rows reduced to a basis.
LinearEpi joint(const LinearEpi& f, const LinearEpi& g);

std::uint64_t vect_entropy(std::size_t dimension);
std::uint64_t vect_entropy(const LinearEpi& f);  ///< dimension of the codomain
std::uint64_t gauss_entropy(std::size_t dimension);

/// Order-preserving surjection [n] -> [m] where [n] = {0, ..., n} and
/// [-1] is empty.
class SurjOrd {
public:
    /// Throws InvalidMorphism unless monotone and onto.
    SurjOrd(long source, long target, std::vector<long> assignment);

    long source() const noexcept { return source_; }
    long target() const noexcept { return target_; }
    const std::vector<long>& assignment() const noexcept { return assignment_; }

private:
    long source_;
    long target_;
    std::vector<long> assignment_;
};

struct SurjOrdJoint {
    SurjOrd map;                                ///< [n] -> image, indexed in order
    std::vector<std::pair<long, long>> image;  ///< image points in order
    bool image_totally_ordered = false;         ///< under the product order
};

/// Pairing x -> (f(x), g(x)) onto its image. Throws BaseMismatch.
SurjOrdJoint joint(const SurjOrd& f, const SurjOrd& g);

/// n + 1 for the object [n]; n >= -1 (InvalidArgument otherwise).
std::uint64_t simplex_entropy(long n);

/// Fixed parameters of the connecting functors.
struct NaturalityConfig {
    std::uint64_t field = 2;           ///< |F| for vect_to_prob
    std::uint64_t group = 2;           ///< |G| for simplex_to_prob
    Dist setop_dist = Dist::uniform(2);  ///< P for setop_to_prob
};

struct NaturalityReport {
    std::string functor;
    std::string object;
    EntropyValue via_codomain;  ///< universal entropy then the codomain map
    EntropyValue via_prob;      ///< functor to FinProb then its entropy
    bool commutes = false;
};

/// The six functor ids accepted by naturality_square.
const std::vector<std::string>& naturality_functors();

/// Evaluates both paths of the square for `functor_id` on `object`:
///   supp, incl_lprob  object is a mass list "1/2,1/4,1/4"
///   vect_to_prob      dimension
///   ab_to_prob        cyclic orders "2,4"
///   simplex_to_prob   n for [n]
///   setop_to_prob     cardinality
/// Throws UnknownFunctor or ParseError.
NaturalityReport naturality_square(std::string_view functor_id, std::string_view object,
                                   const NaturalityConfig& config = {});

}  // namespace entrolab
