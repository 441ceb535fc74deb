#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "pcong/errors.hpp"
#include "pcong/valuation.hpp"

namespace pcong {

/// A weakly decreasing tuple of positive integers. The empty tuple is the partition of 0.
class Partition {
public:
    Partition() = default;
    /// Sorts the parts; throws precondition_error on a zero part.
    explicit Partition(std::vector<std::uint64_t> parts);
    Partition(std::initializer_list<std::uint64_t> parts)
        : Partition(std::vector<std::uint64_t>(parts)) {}

    const std::vector<std::uint64_t>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    std::uint64_t weight() const;

    std::uint64_t multiplicity(std::uint64_t a) const;
    /// r_a for each part value a, keyed ascending.
    std::map<std::uint64_t, std::uint64_t> multiplicities() const;

    /// Lexicographic on the parts.
    friend std::strong_ordering operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

    /// "(3,3,1,1)"; "()" for the empty partition.
    std::string to_string() const;

private:
    std::vector<std::uint64_t> parts_;
};

struct PartitionStats {
    std::uint64_t weight;
    std::map<std::uint64_t, std::uint64_t> multiplicities;
    Integer z;
    int sign;
    Valuation vp;
};

/// z_λ = Π a^(r_a) r_a!.
Integer z_lambda(const Partition& lambda);
/// (−1)^(Σ(λ_i − 1)).
int partition_sign(const Partition& lambda);
/// min_i v_p(λ_i); +∞ for the empty partition.
Valuation partition_vp(const Partition& lambda, std::uint64_t p);
/// min_a v_p(r_a(λ)): the largest v with λ = μ^(p^v) as a multiset power; +∞ when empty.
Valuation repetition_vp(const Partition& lambda, std::uint64_t p);

PartitionStats partition_stats(const Partition& lambda, std::uint64_t p);

/// All partitions of n in lexicographically descending order.
std::vector<Partition> enumerate_partitions(std::uint64_t n,
                                            std::uint64_t bound = kDefaultWeightBound);

Partition multiply(const Partition& lambda, const Partition& mu);
/// The k-fold product; λ^0 = ∅.
Partition power(const Partition& lambda, std::uint64_t k);
/// Every part multiplied by n.
Partition scale(const Partition& lambda, std::uint64_t n);

bool is_p_deprived(const Partition& lambda, std::uint64_t p);

/// Replaces each part u·p^j (p ∤ u) by p^j copies of u.
Partition p_deprived_representative(const Partition& lambda, std::uint64_t p);

/// All μ ⊢ |λ| that are p-equivalent to λ, lexicographically descending.
std::vector<Partition> p_equivalence_class(const Partition& lambda, std::uint64_t p,
                                           std::uint64_t bound = kDefaultWeightBound);

bool are_p_equivalent(const Partition& lambda, const Partition& mu, std::uint64_t p);

/// The p-deprived partitions of n (one per p-equivalence class), lexicographically descending.
std::vector<Partition> enumerate_p_deprived(std::uint64_t n, std::uint64_t p,
                                            std::uint64_t bound = kDefaultWeightBound);

}  // namespace pcong
