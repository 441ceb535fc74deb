#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pcong/congruence.hpp"
#include "pcong/fp_poly.hpp"
#include "pcong/matrix.hpp"

namespace pcong {

/// tr(T^n) for n = 0..N; tr(T^0) = d.
struct TraceProfile {
    std::uint64_t p;
    std::vector<Integer> traces;
};

TraceProfile trace_powers(const IntegerMatrix& M, std::uint64_t N, std::uint64_t p = 2);

/// det(X·I − M) in display order {1, c_1, …, c_d}, by Berkowitz's division-free algorithm.
std::vector<Integer> charpoly(const IntegerMatrix& M);

FpPoly charpoly_mod_p(const IntegerMatrix& M, std::uint64_t p);

struct SsComparison {
    /// Trace test: v_p(tr(T^n|M) − tr(T^n|N)) ≥ 1 + v_p(n) for 1 ≤ n ≤ d.
    bool verdict;
    /// Characteristic polynomials agree mod p.
    bool oracle;
    std::vector<FactorPower> factors_M;
    std::vector<FactorPower> factors_N;
    /// Per-n ledger; e_n columns come from the characteristic polynomials, p_n from traces.
    CongruenceReport report;
};

/// Compares the semisimplifications of M ⊗ F_p and N ⊗ F_p as F_p[T]-modules.
SsComparison ss_isomorphic(const IntegerMatrix& M, const IntegerMatrix& N, std::uint64_t p);

struct VirtualRow {
    std::uint64_t n;
    /// tr(T^n|M1) − tr(T^n|N1) − tr(T^n|M2) + tr(T^n|N2).
    Integer combination;
    Valuation achieved;
    /// 1 + v_p(n); at n = 0 the combination must vanish exactly.
    Valuation required;
    bool pass;
};

struct VirtualComparison {
    bool verdict;
    std::optional<std::uint64_t> first_failure;
    std::vector<VirtualRow> rows;
};

/// Four-term trace test for W_1 = M̄1/N̄1 versus W_2 = M̄2/N̄2 over 0 ≤ n ≤ N. N defaults to
/// rank M1 + rank N2 and may not be smaller. The embeddings N̄_i ⊂ M̄_i are the caller's
/// obligation; embedding_possible checks the necessary invariant-factor condition.
VirtualComparison virtual_compare(const IntegerMatrix& M1, const IntegerMatrix& N1,
                                  const IntegerMatrix& M2, const IntegerMatrix& N2,
                                  std::uint64_t p, std::optional<std::uint64_t> N = std::nullopt);

/// Nonconstant invariant factors of X·I − M over F_p[X], each dividing the next.
std::vector<FpPoly> invariant_factors_mod_p(const IntegerMatrix& M, std::uint64_t p);

/// True iff, aligning from the largest, each invariant factor of N divides that of M.
bool embedding_possible(const IntegerMatrix& N, const IntegerMatrix& M, std::uint64_t p);

}  // namespace pcong
