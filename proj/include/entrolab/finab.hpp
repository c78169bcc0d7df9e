#pragma once

#include "entrolab/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace entrolab {

/// M(A): (prime p, exponent j) -> multiplicity of Z_{p^j} in A.
class MMatrix {
public:
    using Key = std::pair<std::uint64_t, unsigned>;

    MMatrix() = default;
    /// Throws InvalidArgument for non-prime keys, j = 0 or zero multiplicity.
    explicit MMatrix(std::map<Key, std::uint64_t> entries);

    const std::map<Key, std::uint64_t>& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }
    Integer group_order() const;
    /// Prime-power cyclic orders, one per factor, sorted ascending.
    std::vector<std::uint64_t> cyclic_factors() const;
    /// Sum over j >= k of the multiplicity of Z_{p^j}.
    std::uint64_t suffix_sum(std::uint64_t p, unsigned k) const;
    std::string to_string() const;

    friend bool operator==(const MMatrix&, const MMatrix&) = default;

private:
    std::map<Key, std::uint64_t> entries_;
};

/// Z_{n1} + ... + Z_{nk} split into prime-power factors.
MMatrix finab_decompose(const std::vector<std::uint64_t>& orders);
/// "2,4" -> finab_decompose({2,4}). Throws ParseError.
MMatrix parse_finab(std::string_view text);

/// Suffix-sum domination for every prime and every k >= 1.
bool m_dominates(const MMatrix& a, const MMatrix& b);

/// Both directions of m_dominates.
enum class DomOrder { Dominates, Dominated, Equal, Incomparable };
DomOrder m_compare(const MMatrix& a, const MMatrix& b);
std::string to_string(DomOrder d);

struct EpiSearch {
    enum class Status { Yes, No, BudgetExhausted };
    Status status = Status::No;
    std::vector<std::uint64_t> source_factors;  ///< cyclic orders of A's generators
    std::vector<std::uint64_t> target_factors;  ///< cyclic orders of B's coordinates
    /// Image of each generator of A as a coordinate vector in B.
    std::vector<std::vector<std::uint64_t>> generator_images;
    std::uint64_t nodes = 0;

    /// Full homomorphism table: A's elements in mixed-radix order -> B's.
    std::vector<std::uint64_t> table() const;
};

std::string to_string(EpiSearch::Status s);

struct EpiBudget {
    std::uint64_t max_product_order = 1u << 16;  ///< |A|*|B| bound
    std::uint64_t max_nodes = 20'000'000;
};

/// Exhaustive search for a surjective homomorphism A -> B. Enumerates
/// generator images of order dividing the generator's order; prunes on
/// reachability of all of B and on p-rank counts.
EpiSearch brute_epi_exists(const MMatrix& a, const MMatrix& b, const EpiBudget& budget = {});

/// All abelian groups of the given order, one MMatrix per iso class.
std::vector<MMatrix> abelian_groups_of_order(std::uint64_t n);

}  // namespace entrolab
