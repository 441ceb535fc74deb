#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "pcong/errors.hpp"
#include "pcong/symfunc.hpp"
#include "pcong/valuation.hpp"

namespace pcong {

inline Rational series_unit(const Rational&) { return Rational(1); }
inline SymFuncExpr series_unit(const SymFuncExpr& like) {
    return SymFuncExpr::constant(like.basis(), Rational(1));
}

/// c_0 + c_1 t + … + c_N t^N with coefficients in Q or in Λ_Q. Binary operations
/// require equal orders.
template <class T>
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::uint64_t order, T zero = T{})
        : c_(order + 1, std::move(zero)) {}
    TruncatedSeries(std::uint64_t order, std::vector<T> coefficients, T zero = T{})
        : c_(std::move(coefficients)) {
        if (c_.size() > order + 1) throw precondition_error("more coefficients than the order");
        c_.resize(order + 1, std::move(zero));
    }

    std::uint64_t order() const { return c_.size() - 1; }
    const T& operator[](std::uint64_t k) const { return c_.at(k); }
    T& operator[](std::uint64_t k) { return c_.at(k); }
    const std::vector<T>& coefficients() const { return c_; }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        require_same_order(a, b);
        TruncatedSeries out = a;
        for (std::uint64_t k = 0; k <= a.order(); ++k) {
            T sum = a.c_[k] + b.c_[k];
            out.c_[k] = std::move(sum);
        }
        return out;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        require_same_order(a, b);
        TruncatedSeries out = a;
        for (std::uint64_t k = 0; k <= a.order(); ++k) {
            T diff = a.c_[k] - b.c_[k];
            out.c_[k] = std::move(diff);
        }
        return out;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        require_same_order(a, b);
        TruncatedSeries out(a.order(), T{});
        for (std::uint64_t i = 0; i <= a.order(); ++i) {
            if (a.c_[i] == T{}) continue;
            for (std::uint64_t j = 0; i + j <= a.order(); ++j) {
                if (b.c_[j] == T{}) continue;
                T sum = out.c_[i + j] + a.c_[i] * b.c_[j];
                out.c_[i + j] = std::move(sum);
            }
        }
        return out;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const Rational& s) {
        TruncatedSeries out = a;
        for (auto& c : out.c_) {
            T scaled = c * s;
            c = std::move(scaled);
        }
        return out;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.c_ == b.c_;
    }

private:
    static void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (a.order() != b.order()) throw precondition_error("series orders differ");
    }

    std::vector<T> c_;
};

using RationalSeries = TruncatedSeries<Rational>;
using SymFuncSeries = TruncatedSeries<SymFuncExpr>;

/// exp f for f with zero constant term: n g_n = Σ_{k=1}^{n} k f_k g_{n−k}.
template <class T>
TruncatedSeries<T> series_exp(const TruncatedSeries<T>& f) {
    if (!(f[0] == T{})) throw precondition_error("exp needs a zero constant term");
    const std::uint64_t N = f.order();
    TruncatedSeries<T> g(N, T{});
    g[0] = series_unit(f[0]);
    for (std::uint64_t n = 1; n <= N; ++n) {
        T acc{};
        for (std::uint64_t k = 1; k <= n; ++k) {
            if (f[k] == T{}) continue;
            T term = f[k] * g[n - k];
            T scaled = term * Rational(static_cast<long>(k));
            T sum = acc + scaled;
            acc = std::move(sum);
        }
        T gn = acc * make_rational(Integer(1), Integer(static_cast<unsigned long>(n)));
        g[n] = std::move(gn);
    }
    return g;
}

/// log f for f with constant term 1: n g_n = n f_n − Σ_{k=1}^{n−1} k g_k f_{n−k}.
template <class T>
TruncatedSeries<T> series_log(const TruncatedSeries<T>& f) {
    if (!(f[0] == series_unit(f[0]))) throw precondition_error("log needs constant term 1");
    const std::uint64_t N = f.order();
    TruncatedSeries<T> g(N, T{});
    for (std::uint64_t n = 1; n <= N; ++n) {
        T acc = f[n] * Rational(static_cast<long>(n));
        for (std::uint64_t k = 1; k < n; ++k) {
            if (g[k] == T{} || f[n - k] == T{}) continue;
            T term = g[k] * f[n - k];
            T scaled = term * Rational(static_cast<long>(k));
            T diff = acc - scaled;
            acc = std::move(diff);
        }
        T gn = acc * make_rational(Integer(1), Integer(static_cast<unsigned long>(n)));
        g[n] = std::move(gn);
    }
    return g;
}

/// (1 + w)^γ = Σ_k binom(γ, k) w^k, using binom(γ, k) = binom(γ, k−1)·(γ − k + 1)/k.
RationalSeries binomial_series(const Rational& gamma, std::uint64_t order);

enum class ArtinHasseMethod { exponential, product };

/// F(z) = exp(Σ_j z^(p^j)/p^j), or Π_{p ∤ d} (1 − z^d)^(−μ(d)/d).
RationalSeries artin_hasse(std::uint64_t p, std::uint64_t order, ArtinHasseMethod method);

bool is_p_integral(const RationalSeries& f, std::uint64_t p);
bool is_p_integral(const SymFuncSeries& f, std::uint64_t p,
                   std::uint64_t bound = kDefaultWeightBound);

/// A set of positive integers: all of them, an explicit finite set, or {u p^j : j ≥ 0}.
class IndexSet {
public:
    static IndexSet all();
    static IndexSet of(std::set<std::uint64_t> members);
    static IndexSet prime_power_multiples(std::uint64_t u, std::uint64_t p);

    bool contains(std::uint64_t s) const;

private:
    enum class Kind { all, finite, prime_powers };
    Kind kind_ = Kind::all;
    std::set<std::uint64_t> members_;
    std::uint64_t u_ = 1;
    std::uint64_t p_ = 2;
};

/// Σ_{s ∈ S} (−1)^(s−1) p_s t^s / s.
SymFuncSeries powersum_gf(const IndexSet& S, std::uint64_t order,
                          std::uint64_t bound = kDefaultWeightBound);

enum class GuMethod { class_sum, artin_hasse };

/// G_u(t) = Σ_r g_{(u)^r} t^(ur), computed from class sums or from the Artin-Hasse form.
SymFuncSeries g_u_series(std::uint64_t u, std::uint64_t p, std::uint64_t order, GuMethod method,
                         std::uint64_t bound = kDefaultWeightBound);

std::string to_string(ArtinHasseMethod m);
std::string to_string(GuMethod m);
ArtinHasseMethod parse_artin_hasse_method(const std::string& text);
GuMethod parse_gu_method(const std::string& text);

}  // namespace pcong
