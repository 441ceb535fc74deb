#include "pcong/module_compare.hpp"

#include <algorithm>


namespace pcong {

namespace {

Valuation one_plus_vp(std::uint64_t n, std::uint64_t p) {
    return Valuation(1L + static_cast<long>(vp_small(n, p)));
}

}  // namespace

TraceProfile trace_powers(const IntegerMatrix& M, std::uint64_t N, std::uint64_t p) {
    TraceProfile out{p, {}};
    out.traces.reserve(N + 1);
    out.traces.emplace_back(static_cast<unsigned long>(M.dim()));
    IntegerMatrix power = IntegerMatrix::identity(M.dim());
    for (std::uint64_t n = 1; n <= N; ++n) {
        power = power * M;
        out.traces.push_back(power.trace());
    }
    return out;
}

std::vector<Integer> charpoly(const IntegerMatrix& M) {
    const std::size_t d = M.dim();
    std::vector<Integer> q{Integer(1)};
    for (std::size_t r = 1; r <= d; ++r) {
        // A_r = [[A', s], [ρ, a]] with A' the leading (r−1)×(r−1) block.
        const std::size_t m = r - 1;
        const Integer& a = M(m, m);
        std::vector<Integer> t(r + 1);
        t[0] = 1;
        t[1] = -a;
        std::vector<Integer> v(m);  // A'^k s
        for (std::size_t i = 0; i < m; ++i) v[i] = M(i, m);
        for (std::size_t k = 2; k <= r; ++k) {
            Integer dot = 0;
            for (std::size_t i = 0; i < m; ++i) dot += M(m, i) * v[i];
            t[k] = -dot;
            std::vector<Integer> next(m, Integer(0));
            for (std::size_t i = 0; i < m; ++i) {
                for (std::size_t j = 0; j < m; ++j) next[i] += M(i, j) * v[j];
            }
            v = std::move(next);
        }
        std::vector<Integer> p(r + 1, Integer(0));
        for (std::size_t j = 0; j <= r; ++j) {
            for (std::size_t i = 0; i < q.size() && i <= j; ++i) p[j] += t[j - i] * q[i];
        }
        q = std::move(p);
    }
    return q;
}

FpPoly charpoly_mod_p(const IntegerMatrix& M, std::uint64_t p) {
    std::vector<Integer> c = charpoly(M);
    std::reverse(c.begin(), c.end());
    return FpPoly::from_integers(p, c);
}

SsComparison ss_isomorphic(const IntegerMatrix& M, const IntegerMatrix& N, std::uint64_t p) {
    require_prime(p);
    const IdealSpec ideal = IdealSpec::localized(p, Integer(1));
    const std::vector<Integer> cm = charpoly(M);
    const std::vector<Integer> cn = charpoly(N);
    const FpPoly fm = charpoly_mod_p(M, p);
    const FpPoly fn = charpoly_mod_p(N, p);

    SsComparison out{true, fm == fn, factor(fm), factor(fn),
                     CongruenceReport{p, Rational(1), 1, 0, false, true, {}, true, true, true, true,
                                      VerdictStatus::consistent}};
    if (M.dim() != N.dim()) {
        out.verdict = false;
        out.report.elementary = out.report.deep = false;
        out.report.elementary_extended = out.report.deep_extended = false;
        return out;
    }
    const std::uint64_t d = M.dim();
    out.report.range = d;
    const auto tm = trace_powers(M, d, p).traces;
    const auto tn = trace_powers(N, d, p).traces;
    for (std::uint64_t n = 1; n <= d; ++n) {
        Rational eM(cm[n]);
        Rational eN(cn[n]);
        if (n % 2 == 1) {
            eM = -eM;
            eN = -eN;
        }
        const Rational ediff = eM - eN;
        const Integer tdiff = tm[n] - tn[n];
        const Valuation ev = valuation(ediff, p);
        const Valuation tv = valuation(tdiff, p);
        const Valuation req = one_plus_vp(n, p);
        CongruenceRow row{n,
                          to_string(eM),
                          to_string(eN),
                          tm[n].get_str(),
                          tn[n].get_str(),
                          ev,
                          ideal.contains(ev),
                          req,
                          tv,
                          tv >= req};
        out.verdict = out.verdict && row.deep_pass;
        out.report.elementary = out.report.elementary && row.elementary_pass;
        out.report.rows.push_back(std::move(row));
    }
    out.report.deep = out.verdict;
    out.report.elementary_extended = out.report.elementary;
    out.report.deep_extended = out.report.deep;
    if (out.report.elementary != out.report.deep) out.report.status = VerdictStatus::internal_error;
    return out;
}

VirtualComparison virtual_compare(const IntegerMatrix& M1, const IntegerMatrix& N1,
                                  const IntegerMatrix& M2, const IntegerMatrix& N2,
                                  std::uint64_t p, std::optional<std::uint64_t> N) {
    require_prime(p);
    const std::uint64_t minimum = M1.dim() + N2.dim();
    const std::uint64_t range = N.value_or(minimum);
    if (range < minimum) {
        throw precondition_error("virtual comparison range must be at least rank M1 + rank N2 = " +
                                 std::to_string(minimum));
    }
    const auto a = trace_powers(M1, range, p).traces;
    const auto b = trace_powers(N1, range, p).traces;
    const auto c = trace_powers(M2, range, p).traces;
    const auto e = trace_powers(N2, range, p).traces;
    VirtualComparison out{true, std::nullopt, {}};
    for (std::uint64_t n = 0; n <= range; ++n) {
        const Integer comb = a[n] - b[n] - c[n] + e[n];
        const Valuation v = valuation(comb, p);
        const Valuation req = n == 0 ? Valuation::infinity() : one_plus_vp(n, p);
        const bool pass = n == 0 ? comb == 0 : v >= req;
        if (!pass && !out.first_failure) out.first_failure = n;
        out.verdict = out.verdict && pass;
        out.rows.push_back({n, comb, v, req, pass});
    }
    return out;
}

std::vector<FpPoly> invariant_factors_mod_p(const IntegerMatrix& M, std::uint64_t p) {
    require_prime(p);
    const std::size_t d = M.dim();
    // A = X·I − M over F_p[X].
    std::vector<std::vector<FpPoly>> A(d, std::vector<FpPoly>(d, FpPoly(p)));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const Integer neg = -M(i, j);
            std::vector<Integer> c{neg};
            if (i == j) c.emplace_back(1);
            A[i][j] = FpPoly::from_integers(p, c);
        }
    }

    for (std::size_t k = 0; k < d; ++k) {
        while (true) {
            // Pivot: nonzero entry of least degree in the trailing block.
            std::size_t pi = d, pj = d;
            for (std::size_t i = k; i < d; ++i) {
                for (std::size_t j = k; j < d; ++j) {
                    if (A[i][j].is_zero()) continue;
                    if (pi == d || A[i][j].degree() < A[pi][pj].degree()) {
                        pi = i;
                        pj = j;
                    }
                }
            }
            if (pi == d) break;  // trailing block is zero
            std::swap(A[k], A[pi]);
            for (auto& row : A) std::swap(row[k], row[pj]);

            bool clean = true;
            for (std::size_t i = k + 1; i < d; ++i) {
                if (A[i][k].is_zero()) continue;
                const FpPoly q = A[i][k] / A[k][k];
                for (std::size_t j = k; j < d; ++j) A[i][j] = A[i][j] - q * A[k][j];
                if (!A[i][k].is_zero()) clean = false;
            }
            for (std::size_t j = k + 1; j < d; ++j) {
                if (A[k][j].is_zero()) continue;
                const FpPoly q = A[k][j] / A[k][k];
                for (std::size_t i = k; i < d; ++i) A[i][j] = A[i][j] - q * A[i][k];
                if (!A[k][j].is_zero()) clean = false;
            }
            if (!clean) continue;

            // The pivot must divide the whole trailing block.
            bool divides = true;
            for (std::size_t i = k + 1; i < d && divides; ++i) {
                for (std::size_t j = k + 1; j < d; ++j) {
                    if (!(A[i][j] % A[k][k]).is_zero()) {
                        for (std::size_t c = k; c < d; ++c) A[k][c] = A[k][c] + A[i][c];
                        divides = false;
                        break;
                    }
                }
            }
            if (divides) break;
        }
    }

    std::vector<FpPoly> out;
    for (std::size_t k = 0; k < d; ++k) {
        if (A[k][k].is_zero() || A[k][k].degree() > 0) out.push_back(A[k][k].monic());
    }
    return out;
}

bool embedding_possible(const IntegerMatrix& N, const IntegerMatrix& M, std::uint64_t p) {
    if (N.dim() > M.dim()) return false;
    const auto fn = invariant_factors_mod_p(N, p);
    const auto fm = invariant_factors_mod_p(M, p);
    if (fn.size() > fm.size()) return false;
    for (std::size_t i = 0; i < fn.size(); ++i) {
        const FpPoly& a = fn[fn.size() - 1 - i];
        const FpPoly& b = fm[fm.size() - 1 - i];
        if (!(b % a).is_zero()) return false;
    }
    return true;
}

}  // namespace pcong
