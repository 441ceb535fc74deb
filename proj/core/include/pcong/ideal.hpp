#pragma once

#include <cstdint>
#include <string>

#include "pcong/valuation.hpp"

namespace pcong {

/// A valuation-defined ideal {x : v_p(x) ≥ c} of Z_(p) (e = 1) or of the totally ramified
/// ring Z_(p)[α]/(α^e − p). Unramified Galois rings use the e = 1 form.
class IdealSpec {
public:
    /// The ideal p^c of Z_(p); c a positive integer.
    static IdealSpec localized(std::uint64_t p, const Integer& c);

    /// The ideal 𝔪^(c·e) of the Eisenstein ring; c > 0 with c·e integral.
    static IdealSpec eisenstein(std::uint64_t p, std::uint64_t e, const Rational& c);

    /// The maximal ideal: valuation 1/e.
    static IdealSpec maximal(std::uint64_t p, std::uint64_t e = 1);

    std::uint64_t prime() const { return p_; }
    std::uint64_t ramification() const { return e_; }
    const Rational& threshold() const { return c_; }
    bool is_eisenstein() const { return eisenstein_; }

    /// True iff v_p(x) ≥ c.
    bool contains(const Valuation& v) const { return v >= Valuation(c_); }

    std::string describe() const;

    friend bool operator==(const IdealSpec&, const IdealSpec&) = default;

private:
    IdealSpec(std::uint64_t p, std::uint64_t e, Rational c, bool eisenstein);

    std::uint64_t p_;
    std::uint64_t e_;
    Rational c_;
    bool eisenstein_;
};

/// An ideal of a p-adic DVR is divided-power iff its valuation is at least 1/(p − 1).
bool is_divided_power(const IdealSpec& ideal);

}  // namespace pcong
