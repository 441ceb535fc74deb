#pragma once

#include <cstdint>
#include <string>

#include "pcong/valuation.hpp"

namespace pcong {

/// Q viewed through the p-adic valuation; Z_(p) is the subring of valuation ≥ 0.
class RationalRing {
public:
    using element_type = Rational;

    explicit RationalRing(std::uint64_t p) : p_(p) { require_prime(p); }

    std::uint64_t prime() const { return p_; }
    std::uint64_t ramification() const { return 1; }

    Rational zero() const { return Rational(0); }
    Rational one() const { return Rational(1); }
    Rational from_integer(const Integer& n) const { return Rational(n); }
    Rational from_rational(const Rational& x) const { return x; }

    Valuation valuation(const Rational& x) const { return pcong::valuation(x, p_); }

    /// x / n for a nonzero integer n.
    Rational divide(const Rational& x, const Integer& n) const {
        Rational out = x / Rational(n);
        return out;
    }

    std::string to_string(const Rational& x) const { return pcong::to_string(x); }

    friend bool operator==(const RationalRing&, const RationalRing&) = default;

private:
    std::uint64_t p_;
};

}  // namespace pcong
