#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pcong/eisenstein.hpp"
#include "pcong/evaluation.hpp"
#include "pcong/ideal.hpp"
#include "pcong/monic_poly.hpp"

namespace pcong {

/// One congruence test at index n: pass iff achieved ≥ required.
struct CongruenceFlag {
    std::uint64_t n;
    Valuation achieved;
    Valuation required;
    bool pass;
};

struct CongruenceRow {
    std::uint64_t n;
    std::string e_P, e_Q, p_P, p_Q;
    Valuation elementary_achieved;
    bool elementary_pass;
    /// c + v_p(n); +∞ at n = 0, where the test is deg P = deg Q.
    Valuation deep_required;
    Valuation deep_achieved;
    bool deep_pass;
};

enum class VerdictStatus {
    /// Both verdicts agree.
    consistent,
    /// The verdicts differ and the ideal is not divided-power, so no claim is made.
    divergent,
    /// The verdicts differ under a divided-power ideal.
    internal_error,
};

std::string to_string(VerdictStatus s);

struct CongruenceReport {
    std::uint64_t p;
    Rational c;
    std::uint64_t ramification;
    std::uint64_t range;
    bool include_n0;
    bool divided_power;
    std::vector<CongruenceRow> rows;
    /// Elementary congruences for 1 ≤ n ≤ max degree.
    bool elementary;
    /// Deep power-sum congruences for 1 ≤ n ≤ max degree (and n = 0 when requested).
    bool deep;
    /// The same two tests over the full requested range.
    bool elementary_extended;
    bool deep_extended;
    VerdictStatus status;
};

namespace detail {

template <class Ring>
void require_compatible(const MonicPoly<Ring>& P, const MonicPoly<Ring>& Q,
                        const IdealSpec& ideal) {
    if (!(P.ring() == Q.ring())) throw ring_mismatch("P and Q lie over different rings");
    if (P.ring().prime() != ideal.prime() ||
        P.ring().ramification() != ideal.ramification()) {
        throw ring_mismatch("ideal " + ideal.describe() + " does not belong to the coefficient ring");
    }
}

inline Valuation deep_requirement(const IdealSpec& ideal, std::uint64_t n) {
    if (n == 0) return Valuation::infinity();
    return Valuation(ideal.threshold()) +
           Valuation(static_cast<long>(vp_small(n, ideal.prime())));
}

}  // namespace detail

/// v(e_n(P) − e_n(Q)) ≥ c for n = 1..N.
template <class Ring>
std::vector<CongruenceFlag> check_elementary(const MonicPoly<Ring>& P, const MonicPoly<Ring>& Q,
                                             const IdealSpec& ideal, std::uint64_t N) {
    using Element = typename Ring::element_type;
    detail::require_compatible(P, Q, ideal);
    const Valuation required(ideal.threshold());
    std::vector<CongruenceFlag> out;
    for (std::uint64_t n = 1; n <= N; ++n) {
        const Element diff = P.elementary(n) - Q.elementary(n);
        const Valuation v = P.ring().valuation(diff);
        out.push_back({n, v, required, v >= required});
    }
    return out;
}

/// v(p_n(P) − p_n(Q)) ≥ c + v_p(n) for n = 1..N; at n = 0 (if requested) deg P = deg Q.
template <class Ring>
std::vector<CongruenceFlag> check_deep_powersum(const MonicPoly<Ring>& P,
                                                const MonicPoly<Ring>& Q,
                                                const IdealSpec& ideal, std::uint64_t N,
                                                bool include_n0 = false) {
    using Element = typename Ring::element_type;
    detail::require_compatible(P, Q, ideal);
    const auto pp = newton_power_sums(P, N);
    const auto pq = newton_power_sums(Q, N);
    std::vector<CongruenceFlag> out;
    for (std::uint64_t n = include_n0 ? 0 : 1; n <= N; ++n) {
        const Element diff = pp[n] - pq[n];
        const Valuation v = P.ring().valuation(diff);
        const Valuation required = detail::deep_requirement(ideal, n);
        const bool pass = n == 0 ? P.degree() == Q.degree() : v >= required;
        out.push_back({n, v, required, pass});
    }
    return out;
}

/// Runs both tests up to max(deg P, deg Q) and, if larger, up to extended_range; the two
/// verdicts must coincide whenever the ideal is divided-power.
template <class Ring>
CongruenceReport theorem_verdict(const MonicPoly<Ring>& P, const MonicPoly<Ring>& Q,
                                 const IdealSpec& ideal, std::uint64_t extended_range = 0,
                                 bool include_n0 = false) {
    using Element = typename Ring::element_type;
    const std::uint64_t d = std::max(P.degree(), Q.degree());
    const std::uint64_t N = std::max(d, extended_range);
    const auto elem = check_elementary(P, Q, ideal, N);
    const auto deep = check_deep_powersum(P, Q, ideal, N, true);
    const auto pp = newton_power_sums(P, N);
    const auto pq = newton_power_sums(Q, N);
    const Ring& ring = P.ring();

    CongruenceReport r{ideal.prime(), ideal.threshold(), ideal.ramification(), N, include_n0,
                       is_divided_power(ideal), {}, true, true, true, true,
                       VerdictStatus::consistent};
    for (std::uint64_t n = 0; n <= N; ++n) {
        const Element eP = P.elementary(n);
        const Element eQ = Q.elementary(n);
        const Element diff = eP - eQ;
        const CongruenceFlag& df = deep[n];
        CongruenceRow row{n,
                          ring.to_string(eP),
                          ring.to_string(eQ),
                          ring.to_string(pp[n]),
                          ring.to_string(pq[n]),
                          ring.valuation(diff),
                          n == 0 ? true : elem[n - 1].pass,
                          df.required,
                          df.achieved,
                          df.pass};
        if (n >= 1) {
            if (n <= d) {
                r.elementary = r.elementary && row.elementary_pass;
                r.deep = r.deep && row.deep_pass;
            }
            r.elementary_extended = r.elementary_extended && row.elementary_pass;
            r.deep_extended = r.deep_extended && row.deep_pass;
        } else if (include_n0) {
            r.deep = r.deep && row.deep_pass;
            r.deep_extended = r.deep_extended && row.deep_pass;
        }
        if (n > 0 || include_n0) r.rows.push_back(std::move(row));
    }
    if (include_n0) {
        // With n = 0 included, the elementary side needs equal degrees too.
        r.elementary = r.elementary && P.degree() == Q.degree();
        r.elementary_extended = r.elementary_extended && P.degree() == Q.degree();
    }
    const bool agree = r.elementary == r.deep && r.elementary_extended == r.deep_extended;
    if (!agree) r.status = r.divided_power ? VerdictStatus::internal_error : VerdictStatus::divergent;
    return r;
}

/// Same as theorem_verdict but throws theorem_violation on an internal_error status.
template <class Ring>
CongruenceReport theorem_verdict_checked(const MonicPoly<Ring>& P, const MonicPoly<Ring>& Q,
                                         const IdealSpec& ideal, std::uint64_t extended_range = 0,
                                         bool include_n0 = false) {
    CongruenceReport r = theorem_verdict(P, Q, ideal, extended_range, include_n0);
    if (r.status == VerdictStatus::internal_error) {
        throw theorem_violation("elementary and deep verdicts differ for " + P.to_string() +
                                " and " + Q.to_string() + " under " + ideal.describe());
    }
    return r;
}

struct RamifiedDivergence {
    MonicPoly<EisensteinRing> P;
    MonicPoly<EisensteinRing> Q;
    bool elementary;
    bool deep;
};

/// Random search for pairs over Eisenstein(p, e) where the two verdicts differ for the
/// maximal ideal. Coefficients are small Z-combinations of powers of α. Makes no claim
/// beyond the pairs it returns.
std::vector<RamifiedDivergence> search_ramified_divergences(std::uint64_t p, std::uint64_t e,
                                                            std::uint64_t max_degree,
                                                            std::uint64_t trials,
                                                            std::uint64_t seed);

}  // namespace pcong
