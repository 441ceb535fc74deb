#include "pcong/series.hpp"

#include <numeric>

#include "pcong/partition.hpp"

namespace pcong {

namespace {

void require_bound(std::uint64_t n, std::uint64_t bound) {
    if (n > bound) {
        throw bound_exceeded("order " + std::to_string(n) + " exceeds bound " +
                             std::to_string(bound));
    }
}

Rational inverse(std::uint64_t n) {
    return make_rational(Integer(1), Integer(static_cast<unsigned long>(n)));
}

}  // namespace

RationalSeries binomial_series(const Rational& gamma, std::uint64_t order) {
    RationalSeries out(order);
    Rational c = 1;
    out[0] = c;
    for (std::uint64_t k = 1; k <= order; ++k) {
        c = c * (gamma - Rational(static_cast<long>(k - 1))) * inverse(k);
        out[k] = c;
    }
    return out;
}

RationalSeries artin_hasse(std::uint64_t p, std::uint64_t order, ArtinHasseMethod method) {
    require_prime(p);
    if (method == ArtinHasseMethod::exponential) {
        RationalSeries f(order);
        for (std::uint64_t q = 1; q <= order; q *= p) {
            f[q] = inverse(q);
            if (q > order / p) break;
        }
        return series_exp(f);
    }

    RationalSeries out(order);
    out[0] = 1;
    for (std::uint64_t d = 1; d <= order; ++d) {
        if (d % p == 0) continue;
        const int mu = mobius(d);
        if (mu == 0) continue;
        // (1 − z^d)^γ with γ = −μ(d)/d: substitute w = −z^d into (1 + w)^γ.
        const RationalSeries b = binomial_series(Rational(-mu) * inverse(d), order / d);
        RationalSeries factor(order);
        for (std::uint64_t k = 0; k * d <= order; ++k) {
            factor[k * d] = k % 2 == 0 ? b[k] : Rational(-b[k]);
        }
        out = out * factor;
    }
    return out;
}

bool is_p_integral(const RationalSeries& f, std::uint64_t p) {
    for (const auto& c : f.coefficients()) {
        if (!is_p_integral(c, p)) return false;
    }
    return true;
}

bool is_p_integral(const SymFuncSeries& f, std::uint64_t p, std::uint64_t bound) {
    for (const auto& c : f.coefficients()) {
        if (!is_p_integral(c, p, bound)) return false;
    }
    return true;
}

IndexSet IndexSet::all() { return IndexSet(); }

IndexSet IndexSet::of(std::set<std::uint64_t> members) {
    IndexSet s;
    s.kind_ = Kind::finite;
    s.members_ = std::move(members);
    return s;
}

IndexSet IndexSet::prime_power_multiples(std::uint64_t u, std::uint64_t p) {
    require_prime(p);
    if (u == 0) throw precondition_error("u must be positive");
    IndexSet s;
    s.kind_ = Kind::prime_powers;
    s.u_ = u;
    s.p_ = p;
    return s;
}

bool IndexSet::contains(std::uint64_t s) const {
    if (s == 0) return false;
    switch (kind_) {
        case Kind::all: return true;
        case Kind::finite: return members_.count(s) > 0;
        case Kind::prime_powers:
            if (s % u_ != 0) return false;
            s /= u_;
            while (s % p_ == 0) s /= p_;
            return s == 1;
    }
    return false;
}

SymFuncSeries powersum_gf(const IndexSet& S, std::uint64_t order, std::uint64_t bound) {
    require_bound(order, bound);
    SymFuncSeries out(order, SymFuncExpr(Basis::power_sum));
    for (std::uint64_t s = 1; s <= order; ++s) {
        if (!S.contains(s)) continue;
        const Rational c = (s % 2 == 1 ? Rational(1) : Rational(-1)) * inverse(s);
        out[s] = SymFuncExpr::basis_element(Basis::power_sum, Partition{s}, c);
    }
    return out;
}

SymFuncSeries g_u_series(std::uint64_t u, std::uint64_t p, std::uint64_t order, GuMethod method,
                         std::uint64_t bound) {
    require_prime(p);
    if (u == 0 || std::gcd(u, p) != 1) throw precondition_error("u must be positive and prime to p");
    require_bound(order, bound);
    const SymFuncExpr zero(Basis::power_sum);

    if (method == GuMethod::class_sum) {
        SymFuncSeries out(order, zero);
        for (std::uint64_t r = 0; u * r <= order; ++r) {
            out[u * r] = g_lambda(power(Partition{u}, r), p, bound);
        }
        return out;
    }

    if (p != 2) {
        // exp(ε_u/u · Σ_j p_{u p^j} t^{u p^j} / p^j), ε_u = (−1)^(u−1).
        const Rational eps = u % 2 == 1 ? Rational(1) : Rational(-1);
        SymFuncSeries f(order, zero);
        for (std::uint64_t q = 1; u * q <= order; q *= p) {
            f[u * q] = SymFuncExpr::basis_element(Basis::power_sum, Partition{u * q},
                                                  eps * inverse(u) * inverse(q));
        }
        return series_exp(f);
    }

    // p = 2 (u odd): Σ_k 2^k p_u^k t^{uk} / (u^k k!) times exp(−Σ_j p_{u 2^j} t^{u 2^j} / (u 2^j)).
    SymFuncSeries lead(order, zero);
    for (std::uint64_t k = 0; u * k <= order; ++k) {
        const Rational c = make_rational(ipow(Integer(2), k),
                                         ipow(Integer(static_cast<unsigned long>(u)), k) * factorial(k));
        lead[u * k] = SymFuncExpr::basis_element(Basis::power_sum, power(Partition{u}, k), c);
    }
    SymFuncSeries f(order, zero);
    for (std::uint64_t q = 1; u * q <= order; q *= 2) {
        f[u * q] = SymFuncExpr::basis_element(Basis::power_sum, Partition{u * q},
                                              Rational(-1) * inverse(u * q));
    }
    return lead * series_exp(f);
}

std::string to_string(ArtinHasseMethod m) {
    return m == ArtinHasseMethod::exponential ? "exponential" : "product";
}

std::string to_string(GuMethod m) { return m == GuMethod::class_sum ? "class-sum" : "artin-hasse"; }

ArtinHasseMethod parse_artin_hasse_method(const std::string& text) {
    if (text == "exponential") return ArtinHasseMethod::exponential;
    if (text == "product") return ArtinHasseMethod::product;
    throw precondition_error("unknown Artin-Hasse method '" + text + "'");
}

GuMethod parse_gu_method(const std::string& text) {
    if (text == "class-sum") return GuMethod::class_sum;
    if (text == "artin-hasse") return GuMethod::artin_hasse;
    throw precondition_error("unknown G_u method '" + text + "'");
}

}  // namespace pcong
