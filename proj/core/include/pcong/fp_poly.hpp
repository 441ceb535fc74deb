#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pcong/valuation.hpp"

namespace pcong {

/// Dense univariate polynomial over the prime field F_p, coefficients stored low to high
/// and always trimmed (the zero polynomial has no coefficients).
class FpPoly {
public:
    explicit FpPoly(std::uint64_t p);
    FpPoly(std::uint64_t p, const std::vector<std::int64_t>& low_to_high);

    static FpPoly constant(std::uint64_t p, std::int64_t value);
    static FpPoly x(std::uint64_t p);
    /// X − root.
    static FpPoly linear(std::uint64_t p, std::int64_t root);
    static FpPoly from_integers(std::uint64_t p, std::span<const Integer> low_to_high);

    std::uint64_t prime() const { return p_; }
    /// −1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    std::uint64_t coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    std::uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<std::uint64_t>& coefficients() const { return c_; }

    FpPoly monic() const;
    FpPoly derivative() const;
    FpPoly scaled(std::uint64_t k) const;

    friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator/(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator%(const FpPoly& a, const FpPoly& b);
    friend bool operator==(const FpPoly& a, const FpPoly& b) = default;
    /// Orders by degree, then coefficients from the top down.
    friend bool operator<(const FpPoly& a, const FpPoly& b);

    /// Quotient and remainder; b must be nonzero.
    std::pair<FpPoly, FpPoly> divmod(const FpPoly& b) const;

    /// this^e mod m.
    FpPoly pow_mod(const Integer& e, const FpPoly& m) const;

    /// Display order, e.g. "X^4 + X^3 + X^2".
    std::string to_string() const;

private:
    void trim();

    std::uint64_t p_;
    std::vector<std::uint64_t> c_;
};

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p);

/// Monic gcd (zero if both arguments are zero).
FpPoly gcd(FpPoly a, FpPoly b);

/// Rabin's test.
bool is_irreducible(const FpPoly& f);

struct FactorPower {
    FpPoly factor;
    unsigned multiplicity;
};

/// Factorization of a monic polynomial into monic irreducibles: squarefree split, distinct-degree
/// split, then equal-degree split by exhaustive search over monic candidates of degree ≤ 4.
/// Output sorted by factor.
std::vector<FactorPower> factor(const FpPoly& f);

}  // namespace pcong
