#include "pcong/multiplicity.hpp"

#include "pcong/errors.hpp"

namespace pcong {

namespace {

// Solves V·m = b over F_q by Gaussian elimination; V is invertible by construction.
std::vector<GaloisRingElement> solve(std::vector<std::vector<GaloisRingElement>> V,
                                     std::vector<GaloisRingElement> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && V[pivot][col].is_zero()) ++pivot;
        if (pivot == n) throw inconsistent_traces("singular character system");
        std::swap(V[col], V[pivot]);
        std::swap(b[col], b[pivot]);
        const GaloisRingElement inv = V[col][col].inverse();
        for (auto& v : V[col]) v = v * inv;
        b[col] = b[col] * inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || V[r][col].is_zero()) continue;
            const GaloisRingElement f = V[r][col];
            for (std::size_t c = col; c < n; ++c) V[r][c] = V[r][c] - f * V[col][c];
            b[r] = b[r] - f * b[col];
        }
    }
    return b;
}

// A residue-field element lies in F_p iff only its constant coefficient is nonzero.
std::uint64_t prime_field_digit(const GaloisRingElement& x) {
    const auto r = x.residue();
    for (std::size_t i = 1; i < r.size(); ++i) {
        if (r[i] != 0) throw inconsistent_traces("recovered digit is not in the prime field");
    }
    return r.empty() ? 0 : r[0];
}

}  // namespace

std::uint64_t trace_range(std::uint64_t p, unsigned S, unsigned k) {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) q *= p;
    std::uint64_t out = q - 1;
    for (unsigned i = 1; i < S; ++i) out *= p;
    return out;
}

std::vector<GaloisRingElement> synthesize_traces(const GaloisRing& ring,
                                                 const std::map<std::uint64_t, Integer>& m,
                                                 std::uint64_t N) {
    if (N == 0) N = trace_range(ring.prime(), ring.precision(), ring.degree());
    std::vector<GaloisRingElement> out(N + 1, ring.zero());
    for (const auto& [code, mult] : m) {
        const GaloisRingElement weight = ring.from_integer(mult);
        if (code == 0) {
            out[0] = out[0] + weight;
            continue;
        }
        const GaloisRingElement t = teichmueller(ring.from_residue(code));
        GaloisRingElement power = ring.one();
        for (std::uint64_t n = 0; n <= N; ++n) {
            out[n] = out[n] + weight * power;
            power = power * t;
        }
    }
    return out;
}

MultiplicityVector recover_multiplicities(const std::vector<GaloisRingElement>& traces,
                                          const GaloisRing& ring) {
    const std::uint64_t p = ring.prime();
    const unsigned S = ring.precision();
    const unsigned k = ring.degree();
    const std::uint64_t q = ring.residue_size();
    const std::uint64_t range = trace_range(p, S, k);
    if (traces.size() < range + 1) {
        throw precondition_error("need traces for n = 0.." + std::to_string(range));
    }
    for (const auto& t : traces) {
        if (!(t.ring() == ring)) throw ring_mismatch("trace from a different Galois ring");
    }
    const GaloisRing field = ring.residue_field();

    // Teichmüller lifts of the nonzero residues and their residue-field images.
    std::vector<GaloisRingElement> lifts;
    std::vector<GaloisRingElement> residues;
    for (std::uint64_t code = 1; code < q; ++code) {
        lifts.push_back(teichmueller(ring.from_residue(code)));
        residues.push_back(field.from_residue(code));
    }

    std::map<std::uint64_t, Integer> m;
    for (std::uint64_t code = 0; code < q; ++code) m[code] = 0;
    Integer ps = 1;

    for (unsigned s = 0; s < S; ++s) {
        // Stage s reads indices n = p^s · n_s for n_s = 0..q−1.
        std::vector<GaloisRingElement> reduced;
        for (std::uint64_t ns = 0; ns < q; ++ns) {
            const std::uint64_t n = static_cast<std::uint64_t>(ps.get_ui()) * ns;
            GaloisRingElement r = traces[n];
            for (std::uint64_t code = 0; code < q; ++code) {
                if (m[code] == 0) continue;
                if (code == 0) {
                    if (n == 0) r = r - ring.from_integer(m[code]);
                    continue;
                }
                r = r - ring.from_integer(m[code]) * lifts[code - 1].pow(n);
            }
            GaloisRingElement divided = ring.zero();
            try {
                divided = r.divide_by_prime_power(s);
            } catch (const precondition_error&) {
                throw inconsistent_traces("trace at n = " + std::to_string(n) +
                                          " is not divisible by p^" + std::to_string(s));
            }
            reduced.push_back(field.element(divided.coefficients()));
        }

        // Σ_{x≠0} m_s(x) y_x^{n_s} = reduced[n_s] for n_s = 1..q−1, with y_x = x^(p^s).
        std::vector<GaloisRingElement> ys;
        for (const auto& x : residues) ys.push_back(x.pow(ps));
        std::vector<std::vector<GaloisRingElement>> V;
        std::vector<GaloisRingElement> b;
        for (std::uint64_t ns = 1; ns < q; ++ns) {
            std::vector<GaloisRingElement> row;
            for (const auto& y : ys) row.push_back(y.pow(ns));
            V.push_back(std::move(row));
            b.push_back(reduced[ns]);
        }
        const std::vector<GaloisRingElement> digits = solve(std::move(V), std::move(b));

        GaloisRingElement zero_digit = reduced[0];
        for (std::uint64_t code = 1; code < q; ++code) {
            const std::uint64_t digit = prime_field_digit(digits[code - 1]);
            zero_digit = zero_digit - field.from_integer(Integer(static_cast<unsigned long>(digit)));
            m[code] += ps * Integer(static_cast<unsigned long>(digit));
        }
        m[0] += ps * Integer(static_cast<unsigned long>(prime_field_digit(zero_digit)));
        ps *= static_cast<unsigned long>(p);
    }

    // Every supplied trace must be reproduced by the recovered multiplicities.
    const auto check = synthesize_traces(ring, m, traces.size() - 1);
    for (std::size_t n = 0; n < traces.size(); ++n) {
        if (!(check[n] == traces[n])) {
            throw inconsistent_traces("trace at n = " + std::to_string(n) +
                                      " is not a sum of Teichmüller characters");
        }
    }
    return MultiplicityVector{p, S, k, std::move(m)};
}

MultiplicityVector recover_multiplicities(const std::vector<GaloisRingElement>& traces,
                                          std::uint64_t p, unsigned S, unsigned k) {
    return recover_multiplicities(traces, GaloisRing::with_default_modulus(p, S, k));
}

}  // namespace pcong
