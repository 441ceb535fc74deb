#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pcong/valuation.hpp"

namespace pcong {

/// An element Σ c_i α^i (0 ≤ i < e) of Q(α), α^e = p. The valuation ring
/// Z_(p)[α] consists of the elements whose coefficients all have p-free denominators.
class EisensteinElement {
public:
    EisensteinElement(std::uint64_t p, std::uint64_t e, std::vector<Rational> coefficients);

    std::uint64_t prime() const { return p_; }
    std::uint64_t ramification() const { return e_; }
    const std::vector<Rational>& coefficients() const { return c_; }

    bool is_zero() const;
    /// All coefficients p-integral, i.e. the element lies in Z_(p)[α].
    bool is_integral() const;

    /// min_i (v_p(c_i) + i/e); exact because the i/e are distinct mod 1.
    Valuation valuation() const;

    EisensteinElement pow(std::uint64_t n) const;

    EisensteinElement operator-() const;
    friend EisensteinElement operator+(const EisensteinElement& a, const EisensteinElement& b);
    friend EisensteinElement operator-(const EisensteinElement& a, const EisensteinElement& b);
    friend EisensteinElement operator*(const EisensteinElement& a, const EisensteinElement& b);
    friend bool operator==(const EisensteinElement& a, const EisensteinElement& b);

    /// "[c0, c1, ...]" with rationals in canonical text form.
    std::string to_string() const;

private:
    std::uint64_t p_;
    std::uint64_t e_;
    std::vector<Rational> c_;
};

class EisensteinRing {
public:
    using element_type = EisensteinElement;

    EisensteinRing(std::uint64_t p, std::uint64_t e);

    std::uint64_t prime() const { return p_; }
    std::uint64_t ramification() const { return e_; }

    EisensteinElement zero() const { return from_rational(Rational(0)); }
    EisensteinElement one() const { return from_rational(Rational(1)); }
    EisensteinElement from_integer(const Integer& n) const { return from_rational(Rational(n)); }
    EisensteinElement from_rational(const Rational& x) const;
    /// The uniformizer α.
    EisensteinElement uniformizer() const;
    EisensteinElement element(std::vector<Rational> coefficients) const;

    Valuation valuation(const EisensteinElement& x) const { return x.valuation(); }
    EisensteinElement divide(const EisensteinElement& x, const Integer& n) const;
    std::string to_string(const EisensteinElement& x) const { return x.to_string(); }

    friend bool operator==(const EisensteinRing&, const EisensteinRing&) = default;

private:
    std::uint64_t p_;
    std::uint64_t e_;
};

}  // namespace pcong
