#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "pcong/fp_poly.hpp"
#include "pcong/valuation.hpp"

namespace pcong {

class GaloisRingElement;

/// GR(p^S, k) = (Z/p^S)[x]/(f) for a monic f of degree k whose reduction mod p is irreducible.
/// Residue field F_q with q = p^k; residue elements are encoded as Σ c_i p^i.
class GaloisRing {
public:
    using element_type = GaloisRingElement;

    /// modulus is monic, listed low to high (k + 1 entries).
    GaloisRing(std::uint64_t p, unsigned precision, unsigned degree,
               const std::vector<Integer>& modulus);

    /// Uses the built-in irreducible for p ≤ 7, k ≤ 3.
    static GaloisRing with_default_modulus(std::uint64_t p, unsigned precision, unsigned degree);

    /// The built-in modulus table, low to high.
    static std::vector<Integer> default_modulus(std::uint64_t p, unsigned degree);

    std::uint64_t prime() const;
    unsigned precision() const;
    unsigned degree() const;
    std::uint64_t ramification() const { return 1; }
    const std::vector<Integer>& modulus() const;
    /// p^S.
    const Integer& characteristic() const;
    /// q = p^k.
    std::uint64_t residue_size() const;

    GaloisRingElement zero() const;
    GaloisRingElement one() const;
    GaloisRingElement from_integer(const Integer& n) const;
    /// Requires a denominator prime to p.
    GaloisRingElement from_rational(const Rational& x) const;
    GaloisRingElement element(const std::vector<Integer>& low_to_high) const;
    /// The lift of a residue with digits in [0, p) (not the Teichmüller lift).
    GaloisRingElement from_residue(std::uint64_t code) const;

    Valuation valuation(const GaloisRingElement& x) const;
    std::string to_string(const GaloisRingElement& x) const;

    /// The same construction at precision 1, i.e. the residue field F_q.
    GaloisRing residue_field() const;

    friend bool operator==(const GaloisRing& a, const GaloisRing& b);

private:
    struct Data;
    explicit GaloisRing(std::shared_ptr<const Data> data) : d_(std::move(data)) {}

    std::shared_ptr<const Data> d_;

    friend class GaloisRingElement;
};

class GaloisRingElement {
public:
    const GaloisRing& ring() const { return ring_; }
    /// Coefficients low to high, each in [0, p^S).
    const std::vector<Integer>& coefficients() const { return c_; }

    bool is_zero() const;
    /// Units are exactly the elements with nonzero reduction mod p.
    bool is_unit() const;
    /// Reduction mod p, digits low to high.
    std::vector<std::uint64_t> residue() const;
    std::uint64_t residue_code() const;

    /// min v_p(c_i); +∞ for zero. Meaningful below the precision S.
    Valuation valuation() const;

    GaloisRingElement pow(const Integer& n) const;
    GaloisRingElement pow(std::uint64_t n) const { return pow(Integer(static_cast<unsigned long>(n))); }
    /// Inverse of a unit.
    GaloisRingElement inverse() const;
    /// Divides every coefficient by p^s; each must be divisible.
    GaloisRingElement divide_by_prime_power(unsigned s) const;

    GaloisRingElement operator-() const;
    friend GaloisRingElement operator+(const GaloisRingElement& a, const GaloisRingElement& b);
    friend GaloisRingElement operator-(const GaloisRingElement& a, const GaloisRingElement& b);
    friend GaloisRingElement operator*(const GaloisRingElement& a, const GaloisRingElement& b);
    friend bool operator==(const GaloisRingElement& a, const GaloisRingElement& b);

    std::string to_string() const;

private:
    GaloisRingElement(GaloisRing ring, std::vector<Integer> coefficients);
    void normalize();

    GaloisRing ring_;
    std::vector<Integer> c_;

    friend class GaloisRing;
};

/// The Teichmüller lift t(x̄): the unique y with y^q = y and y ≡ x mod p, reached by
/// iterating y ↦ y^q; each step gains at least one p-adic digit of agreement.
GaloisRingElement teichmueller(const GaloisRingElement& x);

}  // namespace pcong
