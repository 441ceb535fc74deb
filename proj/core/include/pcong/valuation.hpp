#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pcong {

using Integer = mpz_class;
using Rational = mpq_class;

bool is_prime(std::uint64_t n);

/// Throws precondition_error unless p is prime.
void require_prime(std::uint64_t p);

/// p-adic valuation with values in Q ∪ {+∞}. Fractional values arise in ramified rings.
class Valuation {
public:
    /// The valuation of zero.
    static Valuation infinity() { return Valuation{}; }

    Valuation(const Rational& v) : finite_(true), value_(v) {}
    Valuation(long v) : finite_(true), value_(v) {}

    bool is_infinite() const { return !finite_; }
    bool is_finite() const { return finite_; }

    /// Throws std::logic_error for +∞.
    const Rational& value() const;

    friend bool operator==(const Valuation& a, const Valuation& b);
    friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);
    friend Valuation operator+(const Valuation& a, const Valuation& b);

    /// "inf", an integer, or "num/den".
    std::string to_string() const;

private:
    Valuation() = default;

    bool finite_ = false;
    Rational value_ = 0;
};

/// v_p(n) for a nonzero machine integer.
unsigned vp_small(std::uint64_t n, std::uint64_t p);

Valuation valuation(const Integer& x, std::uint64_t p);
Valuation valuation(const Rational& x, std::uint64_t p);

/// v_p(n!) by Legendre's formula Σ_i floor(n / p^i).
std::uint64_t factorial_valuation(std::uint64_t n, std::uint64_t p);

/// v_p of the multinomial coefficient (Σ parts; parts), as the total of the carries produced
/// when the parts are added column by column in base p (Kummer).
std::uint64_t multinomial_valuation(std::span<const std::uint64_t> parts, std::uint64_t p);

/// Same quantity as v_p(m!) − Σ v_p(r_i!) via Legendre; kept as an independent path.
std::uint64_t multinomial_valuation_legendre(std::span<const std::uint64_t> parts,
                                             std::uint64_t p);

/// Exact multinomial coefficient.
Integer multinomial(std::span<const std::uint64_t> parts);

Integer factorial(std::uint64_t n);

/// Möbius function μ(d), d ≥ 1.
int mobius(std::uint64_t d);

/// Canonical text form: "n" for integers, "num/den" otherwise.
std::string to_string(const Rational& x);

/// Parses "n", "-n" or "num/den" (den ≠ 0) into canonical form.
Rational parse_rational(std::string_view text);

/// True iff the reduced denominator of x is prime to p.
bool is_p_integral(const Rational& x, std::uint64_t p);

Integer ipow(const Integer& base, std::uint64_t exp);

/// num/den in lowest terms; den ≠ 0.
Rational make_rational(const Integer& num, const Integer& den);

}  // namespace pcong
