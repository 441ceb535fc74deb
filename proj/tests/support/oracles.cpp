#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

namespace oracle {

std::map<std::vector<std::uint64_t>, std::uint64_t> cycle_type_counts(unsigned n) {
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 0U);
    std::map<std::vector<std::uint64_t>, std::uint64_t> counts;
    do {
        std::vector<bool> seen(n, false);
        std::vector<std::uint64_t> type;
        for (unsigned i = 0; i < n; ++i) {
            if (seen[i]) continue;
            std::uint64_t len = 0;
            for (unsigned j = i; !seen[j]; j = perm[j]) {
                seen[j] = true;
                ++len;
            }
            type.push_back(len);
        }
        std::sort(type.begin(), type.end(), std::greater<>());
        ++counts[type];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return counts;
}

std::uint64_t partition_count(std::uint64_t n) {
    std::function<std::uint64_t(std::int64_t, std::int64_t)> rec = [&](std::int64_t m,
                                                                       std::int64_t k) -> std::uint64_t {
        if (m == 0) return 1;
        if (m < 0 || k == 0) return 0;
        return rec(m, k - 1) + rec(m - k, k);
    };
    return rec(static_cast<std::int64_t>(n), static_cast<std::int64_t>(n));
}

std::set<pcong::Partition> splitting_closure(const pcong::Partition& lambda, std::uint64_t p) {
    std::set<pcong::Partition> seen{lambda};
    std::deque<pcong::Partition> queue{lambda};
    while (!queue.empty()) {
        const pcong::Partition cur = queue.front();
        queue.pop_front();
        std::vector<pcong::Partition> moves;
        const auto& parts = cur.parts();
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] % p != 0) continue;
            std::vector<std::uint64_t> next;
            for (std::size_t j = 0; j < parts.size(); ++j) {
                if (j != i) next.push_back(parts[j]);
            }
            next.insert(next.end(), p, parts[i] / p);
            moves.emplace_back(next);
        }
        for (const auto& [a, r] : cur.multiplicities()) {
            if (r < p) continue;
            std::vector<std::uint64_t> next;
            std::uint64_t skipped = 0;
            for (auto x : parts) {
                if (x == a && skipped < p) {
                    ++skipped;
                    continue;
                }
                next.push_back(x);
            }
            next.push_back(a * p);
            moves.emplace_back(next);
        }
        for (auto& m : moves) {
            if (seen.insert(m).second) queue.push_back(m);
        }
    }
    return seen;
}

long naive_valuation(Integer x, std::uint64_t p) {
    if (x == 0) return -1;
    long v = 0;
    const Integer P(static_cast<unsigned long>(p));
    while (x % P == 0) {
        x /= P;
        ++v;
    }
    return v;
}

long direct_multinomial_valuation(const std::vector<std::uint64_t>& parts, std::uint64_t p) {
    std::uint64_t total = 0;
    Integer den = 1;
    for (auto r : parts) {
        total += r;
        Integer f = 1;
        for (std::uint64_t i = 2; i <= r; ++i) f *= static_cast<unsigned long>(i);
        den *= f;
    }
    Integer num = 1;
    for (std::uint64_t i = 2; i <= total; ++i) num *= static_cast<unsigned long>(i);
    return naive_valuation(Integer(num / den), p);
}

pcong::SymFuncExpr newton_p_in_e(std::uint64_t n) {
    using pcong::Basis;
    using pcong::SymFuncExpr;
    std::vector<SymFuncExpr> p(n + 1, SymFuncExpr(Basis::elementary));
    for (std::uint64_t m = 1; m <= n; ++m) {
        SymFuncExpr acc(Basis::elementary);
        for (std::uint64_t i = 1; i < m; ++i) {
            const SymFuncExpr ei = SymFuncExpr::basis_element(Basis::elementary, pcong::Partition{i});
            const SymFuncExpr term = ei * p[m - i];
            acc = (i % 2 == 1) ? acc + term : acc - term;
        }
        const Rational lead(static_cast<long>(m % 2 == 1 ? m : -static_cast<long>(m)));
        acc = acc + SymFuncExpr::basis_element(Basis::elementary, pcong::Partition{m}, lead);
        p[m] = acc;
    }
    return p[n];
}

namespace {

Rational determinant(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t r = c;
        while (r < n && a[r][c] == 0) ++r;
        if (r == n) return 0;
        if (r != c) {
            std::swap(a[r], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a[i][c] == 0) continue;
            const Rational f = a[i][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return det;
}

// Coefficients (low to high) of the polynomial of degree ≤ d through (x_i, y_i).
std::vector<Rational> interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    const std::size_t m = xs.size();
    std::vector<Rational> out(m, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<Rational> basis{Rational(1)};
        Rational denom = 1;
        for (std::size_t j = 0; j < m; ++j) {
            if (j == i) continue;
            std::vector<Rational> next(basis.size() + 1, Rational(0));
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k];
                next[k] -= basis[k] * xs[j];
            }
            basis = std::move(next);
            denom *= xs[i] - xs[j];
        }
        for (std::size_t k = 0; k < basis.size(); ++k) out[k] += ys[i] * basis[k] / denom;
    }
    return out;
}

}  // namespace

std::vector<Rational> resultant_power_polynomial(const std::vector<Integer>& display, unsigned n) {
    const std::size_t d = display.size() - 1;
    // f(Y) = Q(Y) high to low; g(Y) = −Y^n + X.
    std::vector<Rational> xs, ys;
    for (std::size_t t = 0; t <= d; ++t) {
        const Rational X(static_cast<long>(t));
        std::vector<Rational> g(n + 1, Rational(0));
        g[0] = -1;
        g[n] = X;
        const std::size_t size = d + n;
        std::vector<std::vector<Rational>> syl(size, std::vector<Rational>(size, Rational(0)));
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t k = 0; k <= d; ++k) syl[r][r + k] = Rational(display[k]);
        }
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t k = 0; k <= n; ++k) syl[n + r][r + k] = g[k];
        }
        xs.push_back(X);
        ys.push_back(determinant(syl));
    }
    std::vector<Rational> low = interpolate(xs, ys);
    // Normalize to monic and flip to display order.
    const Rational lead = low.back();
    std::vector<Rational> out;
    for (auto it = low.rbegin(); it != low.rend(); ++it) out.push_back(*it / lead);
    return out;
}

std::vector<Integer> interpolated_charpoly(const pcong::IntegerMatrix& M) {
    const std::size_t d = M.dim();
    std::vector<Rational> xs, ys;
    for (std::size_t t = 0; t <= d; ++t) {
        const Rational X(static_cast<long>(t));
        std::vector<std::vector<Rational>> a(d, std::vector<Rational>(d));
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                a[i][j] = (i == j ? X : Rational(0)) - Rational(M(i, j));
            }
        }
        xs.push_back(X);
        ys.push_back(d == 0 ? Rational(1) : determinant(a));
    }
    const std::vector<Rational> low = interpolate(xs, ys);
    std::vector<Integer> out;
    for (auto it = low.rbegin(); it != low.rend(); ++it) out.push_back(Integer(it->get_num()));
    return out;
}

std::vector<pcong::FpPoly> diagonal_invariant_factors(const std::vector<std::int64_t>& a,
                                                      std::uint64_t p) {
    std::map<std::int64_t, std::size_t> count;
    for (auto x : a) {
        const auto P = static_cast<std::int64_t>(p);
        ++count[((x % P) + P) % P];
    }
    std::size_t depth = 0;
    for (const auto& [r, c] : count) depth = std::max(depth, c);
    // The k-th factor from the top collects every residue that occurs at least k times.
    std::vector<pcong::FpPoly> out;
    for (std::size_t k = depth; k >= 1; --k) {
        pcong::FpPoly f = pcong::FpPoly::constant(p, 1);
        for (const auto& [r, c] : count) {
            if (c >= k) f = f * pcong::FpPoly::linear(p, r);
        }
        out.push_back(f);
    }
    return out;
}

std::vector<std::vector<std::uint64_t>> brute_force_multiplicities(
    const pcong::GaloisRing& ring, const std::vector<pcong::GaloisRingElement>& traces) {
    const std::uint64_t q = ring.residue_size();
    const std::uint64_t mod = ring.characteristic().get_ui();
    std::vector<pcong::GaloisRingElement> lifts;
    for (std::uint64_t c = 0; c < q; ++c) {
        // t(x) = x^(q^S) fixes the Teichmüller lift, computed here by plain powering.
        pcong::GaloisRingElement y = ring.from_residue(c);
        for (unsigned i = 0; i < ring.precision(); ++i) y = y.pow(q);
        lifts.push_back(y);
    }
    std::vector<std::vector<std::uint64_t>> found;
    std::vector<std::uint64_t> m(q, 0);
    while (true) {
        bool match = true;
        for (std::size_t n = 0; n < traces.size() && match; ++n) {
            pcong::GaloisRingElement s = ring.zero();
            for (std::uint64_t c = 0; c < q; ++c) {
                const pcong::GaloisRingElement power =
                    (c == 0) ? (n == 0 ? ring.one() : ring.zero()) : lifts[c].pow(n);
                s = s + ring.from_integer(Integer(static_cast<unsigned long>(m[c]))) * power;
            }
            match = s == traces[n];
        }
        if (match) found.push_back(m);
        std::size_t i = 0;
        while (i < q && ++m[i] == mod) m[i++] = 0;
        if (i == q) break;
    }
    return found;
}

std::uint64_t teichmueller_mod(std::uint64_t x, std::uint64_t p, unsigned S) {
    std::uint64_t mod = 1;
    for (unsigned i = 0; i < S; ++i) mod *= p;
    auto pw = [&](std::uint64_t b) {
        std::uint64_t r = 1;
        for (std::uint64_t i = 0; i < p; ++i) r = r * b % mod;
        return r;
    };
    std::uint64_t y = x % mod;
    while (pw(y) != y) y = pw(y);
    return y;
}

}  // namespace oracle
