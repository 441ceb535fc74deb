#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "pcong/galois_ring.hpp"

namespace pcong {

/// m(x) mod p^S for every residue x ∈ F_q, keyed by residue code (Σ c_i p^i).
struct MultiplicityVector {
    std::uint64_t p;
    unsigned S;
    unsigned k;
    std::map<std::uint64_t, Integer> m;

    friend bool operator==(const MultiplicityVector&, const MultiplicityVector&) = default;
};

/// Largest trace index needed: p^(S−1)(q − 1). Stage s reads the indices n = p^s n_s with
/// 0 ≤ n_s ≤ q − 1, a full system of characters of F_q^× plus the n_s = 0 count, and the
/// last stage s = S − 1 reaches p^(S−1)(q − 1).
std::uint64_t trace_range(std::uint64_t p, unsigned S, unsigned k);

/// T_n = Σ_x m(x) t(x)^n for n = 0..N (default trace_range), with t(0)^0 = 1.
std::vector<GaloisRingElement> synthesize_traces(const GaloisRing& ring,
                                                 const std::map<std::uint64_t, Integer>& m,
                                                 std::uint64_t N = 0);

/// Recovers m(x) mod p^S digit by digit from T_0..T_{trace_range}. Throws inconsistent_traces
/// when the data is not of the form Σ m(x) t(x)^n.
MultiplicityVector recover_multiplicities(const std::vector<GaloisRingElement>& traces,
                                          const GaloisRing& ring);

MultiplicityVector recover_multiplicities(const std::vector<GaloisRingElement>& traces,
                                          std::uint64_t p, unsigned S, unsigned k);

}  // namespace pcong
