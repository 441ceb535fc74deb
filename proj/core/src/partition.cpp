#include "pcong/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace pcong {

namespace {

void require_bound(std::uint64_t n, std::uint64_t bound) {
    if (n > bound) {
        throw bound_exceeded("weight " + std::to_string(n) + " exceeds bound " +
                             std::to_string(bound));
    }
}

// Partitions of n with every part ≤ max_part, lexicographically descending.
void partitions_rec(std::uint64_t n, std::uint64_t max_part, std::vector<std::uint64_t>& prefix,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (std::uint64_t a = std::min(n, max_part); a >= 1; --a) {
        prefix.push_back(a);
        partitions_rec(n - a, a, prefix, out);
        prefix.pop_back();
    }
}

// Partitions of r into powers of p, each returned as its list of parts.
void power_partitions_rec(std::uint64_t r, std::uint64_t max_power, std::uint64_t p,
                          std::vector<std::uint64_t>& prefix,
                          std::vector<std::vector<std::uint64_t>>& out) {
    if (r == 0) {
        out.push_back(prefix);
        return;
    }
    for (std::uint64_t q = max_power;; q /= p) {
        if (q <= r) {
            prefix.push_back(q);
            power_partitions_rec(r - q, q, p, prefix, out);
            prefix.pop_back();
        }
        if (q == 1) break;
    }
}

}  // namespace

Partition::Partition(std::vector<std::uint64_t> parts) : parts_(std::move(parts)) {
    for (auto a : parts_) {
        if (a == 0) throw precondition_error("partition parts must be positive");
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

std::uint64_t Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), std::uint64_t{0});
}

std::uint64_t Partition::multiplicity(std::uint64_t a) const {
    return static_cast<std::uint64_t>(std::count(parts_.begin(), parts_.end(), a));
}

std::map<std::uint64_t, std::uint64_t> Partition::multiplicities() const {
    std::map<std::uint64_t, std::uint64_t> r;
    for (auto a : parts_) ++r[a];
    return r;
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

Integer z_lambda(const Partition& lambda) {
    Integer z = 1;
    for (const auto& [a, r] : lambda.multiplicities()) {
        z *= ipow(Integer(static_cast<unsigned long>(a)), r) * factorial(r);
    }
    return z;
}

int partition_sign(const Partition& lambda) {
    std::uint64_t s = 0;
    for (auto a : lambda.parts()) s += a - 1;
    return s % 2 == 0 ? 1 : -1;
}

Valuation partition_vp(const Partition& lambda, std::uint64_t p) {
    if (lambda.empty()) return Valuation::infinity();
    unsigned best = vp_small(lambda.parts().front(), p);
    for (auto a : lambda.parts()) best = std::min(best, vp_small(a, p));
    return Valuation(static_cast<long>(best));
}

Valuation repetition_vp(const Partition& lambda, std::uint64_t p) {
    if (lambda.empty()) return Valuation::infinity();
    unsigned best = ~0U;
    for (const auto& [a, r] : lambda.multiplicities()) best = std::min(best, vp_small(r, p));
    return Valuation(static_cast<long>(best));
}

PartitionStats partition_stats(const Partition& lambda, std::uint64_t p) {
    require_prime(p);
    return PartitionStats{lambda.weight(), lambda.multiplicities(), z_lambda(lambda),
                          partition_sign(lambda), partition_vp(lambda, p)};
}

std::vector<Partition> enumerate_partitions(std::uint64_t n, std::uint64_t bound) {
    require_bound(n, bound);
    std::vector<Partition> out;
    std::vector<std::uint64_t> prefix;
    partitions_rec(n, n, prefix, out);
    return out;
}

Partition multiply(const Partition& lambda, const Partition& mu) {
    std::vector<std::uint64_t> parts = lambda.parts();
    parts.insert(parts.end(), mu.parts().begin(), mu.parts().end());
    return Partition(std::move(parts));
}

Partition power(const Partition& lambda, std::uint64_t k) {
    std::vector<std::uint64_t> parts;
    parts.reserve(lambda.length() * k);
    for (std::uint64_t i = 0; i < k; ++i) {
        parts.insert(parts.end(), lambda.parts().begin(), lambda.parts().end());
    }
    return Partition(std::move(parts));
}

Partition scale(const Partition& lambda, std::uint64_t n) {
    if (n == 0) throw precondition_error("scale factor must be positive");
    std::vector<std::uint64_t> parts = lambda.parts();
    for (auto& a : parts) a *= n;
    return Partition(std::move(parts));
}

bool is_p_deprived(const Partition& lambda, std::uint64_t p) {
    return std::none_of(lambda.parts().begin(), lambda.parts().end(),
                        [p](std::uint64_t a) { return a % p == 0; });
}

Partition p_deprived_representative(const Partition& lambda, std::uint64_t p) {
    require_prime(p);
    std::vector<std::uint64_t> parts;
    for (auto a : lambda.parts()) {
        std::uint64_t copies = 1;
        while (a % p == 0) {
            a /= p;
            copies *= p;
        }
        parts.insert(parts.end(), copies, a);
    }
    return Partition(std::move(parts));
}

std::vector<Partition> p_equivalence_class(const Partition& lambda, std::uint64_t p,
                                           std::uint64_t bound) {
    require_prime(p);
    require_bound(lambda.weight(), bound);
    const Partition rep = p_deprived_representative(lambda, p);

    // One factor per distinct prime-to-p part u: partitions of r_u into powers of p, scaled by u.
    std::vector<Partition> acc{Partition()};
    for (const auto& [u, r] : rep.multiplicities()) {
        std::uint64_t top = 1;
        while (top * p <= r) top *= p;
        std::vector<std::vector<std::uint64_t>> splits;
        std::vector<std::uint64_t> prefix;
        power_partitions_rec(r, top, p, prefix, splits);

        std::vector<Partition> next;
        next.reserve(acc.size() * splits.size());
        for (const auto& base : acc) {
            for (const auto& split : splits) {
                std::vector<std::uint64_t> parts = base.parts();
                for (auto q : split) parts.push_back(u * q);
                next.emplace_back(std::move(parts));
            }
        }
        acc = std::move(next);
    }
    std::sort(acc.begin(), acc.end(), std::greater<>());
    return acc;
}

bool are_p_equivalent(const Partition& lambda, const Partition& mu, std::uint64_t p) {
    return lambda.weight() == mu.weight() &&
           p_deprived_representative(lambda, p) == p_deprived_representative(mu, p);
}

std::vector<Partition> enumerate_p_deprived(std::uint64_t n, std::uint64_t p,
                                            std::uint64_t bound) {
    require_prime(p);
    std::vector<Partition> all = enumerate_partitions(n, bound);
    std::erase_if(all, [p](const Partition& l) { return !is_p_deprived(l, p); });
    return all;
}

}  // namespace pcong
