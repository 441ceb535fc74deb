#pragma once

#include <cstdint>
#include <vector>

#include "pcong/monic_poly.hpp"
#include "pcong/partition.hpp"
#include "pcong/symfunc.hpp"

namespace pcong {

/// f(Q): f is rewritten in the e-basis and e_n(Q) substituted for e_n.
template <class Ring>
typename Ring::element_type evaluate(const SymFuncExpr& f, const MonicPoly<Ring>& Q,
                                     std::uint64_t bound = kDefaultWeightBound) {
    using Element = typename Ring::element_type;
    const Ring& ring = Q.ring();
    const SymFuncExpr e = convert(f, Basis::elementary, bound);
    Element total = ring.zero();
    for (const auto& [lambda, c] : e.terms()) {
        Element term = ring.from_rational(c);
        for (auto a : lambda.parts()) {
            if (a > Q.degree()) {
                term = ring.zero();
                break;
            }
            term = term * Q.elementary(a);
        }
        total = total + term;
    }
    return total;
}

/// p_0(Q), …, p_N(Q) by Newton's recurrence; p_0(Q) = deg Q.
template <class Ring>
std::vector<typename Ring::element_type> newton_power_sums(const MonicPoly<Ring>& Q,
                                                           std::uint64_t N) {
    using Element = typename Ring::element_type;
    const Ring& ring = Q.ring();
    const std::uint64_t d = Q.degree();
    std::vector<Element> out;
    out.reserve(N + 1);
    out.push_back(ring.from_integer(Integer(static_cast<unsigned long>(d))));
    for (std::uint64_t n = 1; n <= N; ++n) {
        Element s = ring.zero();
        for (std::uint64_t i = 1; i <= std::min(n - 1, d); ++i) {
            const Element term = Q.elementary(i) * out[n - i];
            if (i % 2 == 1) {
                s = s + term;
            } else {
                s = s - term;
            }
        }
        if (n <= d) {
            const Element term =
                ring.from_integer(Integer(static_cast<unsigned long>(n))) * Q.elementary(n);
            if (n % 2 == 1) {
                s = s + term;
            } else {
                s = s - term;
            }
        }
        out.push_back(s);
    }
    return out;
}

template <class Ring>
typename Ring::element_type newton_power_sum(const MonicPoly<Ring>& Q, std::uint64_t n) {
    return newton_power_sums(Q, n).back();
}

/// The monic polynomial whose roots are the n-th powers of the roots of Q, with
/// e_i = Σ_{λ ⊢ i} (−1)^λ p_{nλ}(Q) / z_λ. Needs a ring with exact division by integers.
template <class Ring>
MonicPoly<Ring> power_polynomial(const MonicPoly<Ring>& Q, std::uint64_t n) {
    if (n == 0) throw precondition_error("power_polynomial needs n ≥ 1");
    using Element = typename Ring::element_type;
    const Ring& ring = Q.ring();
    const std::uint64_t d = Q.degree();
    const auto p = newton_power_sums(Q, n * d);
    std::vector<Element> lower;
    for (std::uint64_t i = 1; i <= d; ++i) {
        Element e = ring.zero();
        for (const auto& lambda : enumerate_partitions(i, i)) {
            Element term = ring.from_integer(Integer(partition_sign(lambda)));
            for (auto a : lambda.parts()) term = term * p[n * a];
            e = e + ring.divide(term, z_lambda(lambda));
        }
        // a_i = (−1)^i e_i.
        if (i % 2 == 1) e = -e;
        lower.push_back(e);
    }
    return MonicPoly<Ring>(ring, std::move(lower));
}

}  // namespace pcong
