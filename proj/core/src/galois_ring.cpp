#include "pcong/galois_ring.hpp"

#include "pcong/errors.hpp"

namespace pcong {

struct GaloisRing::Data {
    std::uint64_t p;
    unsigned precision;
    unsigned degree;
    std::vector<Integer> modulus;
    Integer characteristic;
    std::uint64_t residue_size;
};

namespace {

Integer mod_floor(const Integer& a, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

void require_same_ring(const GaloisRingElement& a, const GaloisRingElement& b) {
    if (!(a.ring() == b.ring())) throw ring_mismatch("Galois ring elements from different rings");
}

}  // namespace

GaloisRing::GaloisRing(std::uint64_t p, unsigned precision, unsigned degree,
                       const std::vector<Integer>& modulus) {
    require_prime(p);
    if (precision == 0) throw precondition_error("Galois ring precision must be at least 1");
    if (degree == 0) throw precondition_error("Galois ring degree must be at least 1");
    if (modulus.size() != degree + 1 || modulus.back() != 1) {
        throw precondition_error("Galois ring modulus must be monic of degree k");
    }
    if (!is_irreducible(FpPoly::from_integers(p, modulus))) {
        throw precondition_error("Galois ring modulus is not irreducible mod p");
    }
    auto d = std::make_shared<Data>();
    d->p = p;
    d->precision = precision;
    d->degree = degree;
    d->characteristic = ipow(Integer(static_cast<unsigned long>(p)), precision);
    for (const auto& m : modulus) d->modulus.push_back(mod_floor(m, d->characteristic));
    d->residue_size = 1;
    for (unsigned i = 0; i < degree; ++i) d->residue_size *= p;
    d_ = std::move(d);
}

std::vector<Integer> GaloisRing::default_modulus(std::uint64_t p, unsigned degree) {
    if (degree == 1) return {Integer(0), Integer(1)};
    auto ints = [](std::initializer_list<long> xs) {
        std::vector<Integer> out;
        for (long x : xs) out.emplace_back(x);
        return out;
    };
    if (degree == 2) {
        switch (p) {
            case 2: return ints({1, 1, 1});
            case 3: return ints({1, 0, 1});
            case 5: return ints({2, 0, 1});
            case 7: return ints({1, 0, 1});
            default: break;
        }
    }
    if (degree == 3) {
        switch (p) {
            case 2: return ints({1, 1, 0, 1});
            case 3: return ints({1, 2, 0, 1});
            case 5: return ints({1, 1, 0, 1});
            case 7: return ints({2, 0, 0, 1});
            default: break;
        }
    }
    throw precondition_error("no built-in Galois ring modulus for p = " + std::to_string(p) +
                             ", k = " + std::to_string(degree) + "; supply one");
}

GaloisRing GaloisRing::with_default_modulus(std::uint64_t p, unsigned precision,
                                            unsigned degree) {
    return GaloisRing(p, precision, degree, default_modulus(p, degree));
}

std::uint64_t GaloisRing::prime() const { return d_->p; }
unsigned GaloisRing::precision() const { return d_->precision; }
unsigned GaloisRing::degree() const { return d_->degree; }
const std::vector<Integer>& GaloisRing::modulus() const { return d_->modulus; }
const Integer& GaloisRing::characteristic() const { return d_->characteristic; }
std::uint64_t GaloisRing::residue_size() const { return d_->residue_size; }

bool operator==(const GaloisRing& a, const GaloisRing& b) {
    if (a.d_ == b.d_) return true;
    return a.d_->p == b.d_->p && a.d_->precision == b.d_->precision &&
           a.d_->degree == b.d_->degree && a.d_->modulus == b.d_->modulus;
}

GaloisRingElement GaloisRing::zero() const {
    return GaloisRingElement(*this, std::vector<Integer>(d_->degree, Integer(0)));
}

GaloisRingElement GaloisRing::one() const { return from_integer(Integer(1)); }

GaloisRingElement GaloisRing::from_integer(const Integer& n) const {
    std::vector<Integer> c(d_->degree, Integer(0));
    c[0] = n;
    return GaloisRingElement(*this, std::move(c));
}

GaloisRingElement GaloisRing::from_rational(const Rational& x) const {
    if (!is_p_integral(x, d_->p)) {
        throw precondition_error("rational " + pcong::to_string(x) +
                                 " has a denominator divisible by p");
    }
    Integer inv;
    const Integer den(x.get_den());
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), d_->characteristic.get_mpz_t());
    return from_integer(Integer(x.get_num()) * inv);
}

GaloisRingElement GaloisRing::element(const std::vector<Integer>& low_to_high) const {
    if (low_to_high.size() > d_->degree) {
        throw precondition_error("Galois ring element has more than k coefficients");
    }
    std::vector<Integer> c(low_to_high);
    c.resize(d_->degree, Integer(0));
    return GaloisRingElement(*this, std::move(c));
}

GaloisRingElement GaloisRing::from_residue(std::uint64_t code) const {
    if (code >= d_->residue_size) throw precondition_error("residue code out of range");
    std::vector<Integer> c(d_->degree, Integer(0));
    for (unsigned i = 0; i < d_->degree; ++i) {
        c[i] = Integer(static_cast<unsigned long>(code % d_->p));
        code /= d_->p;
    }
    return GaloisRingElement(*this, std::move(c));
}

Valuation GaloisRing::valuation(const GaloisRingElement& x) const { return x.valuation(); }

std::string GaloisRing::to_string(const GaloisRingElement& x) const { return x.to_string(); }

GaloisRing GaloisRing::residue_field() const {
    if (d_->precision == 1) return *this;
    return GaloisRing(d_->p, 1, d_->degree, d_->modulus);
}

GaloisRingElement::GaloisRingElement(GaloisRing ring, std::vector<Integer> coefficients)
    : ring_(std::move(ring)), c_(std::move(coefficients)) {
    normalize();
}

void GaloisRingElement::normalize() {
    const Integer& m = ring_.characteristic();
    for (auto& c : c_) c = mod_floor(c, m);
}

bool GaloisRingElement::is_zero() const {
    for (const auto& c : c_) {
        if (c != 0) return false;
    }
    return true;
}

bool GaloisRingElement::is_unit() const { return residue_code() != 0; }

std::vector<std::uint64_t> GaloisRingElement::residue() const {
    const Integer p(static_cast<unsigned long>(ring_.prime()));
    std::vector<std::uint64_t> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(mod_floor(c, p).get_ui());
    return out;
}

std::uint64_t GaloisRingElement::residue_code() const {
    std::uint64_t code = 0;
    const auto digits = residue();
    for (std::size_t i = digits.size(); i-- > 0;) code = code * ring_.prime() + digits[i];
    return code;
}

Valuation GaloisRingElement::valuation() const {
    Valuation best = Valuation::infinity();
    for (const auto& c : c_) {
        const Valuation v = pcong::valuation(c, ring_.prime());
        if (v < best) best = v;
    }
    return best;
}

GaloisRingElement GaloisRingElement::operator-() const {
    std::vector<Integer> c(c_);
    for (auto& v : c) v = -v;
    return GaloisRingElement(ring_, std::move(c));
}

GaloisRingElement operator+(const GaloisRingElement& a, const GaloisRingElement& b) {
    require_same_ring(a, b);
    std::vector<Integer> c(a.c_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.c_[i];
    return GaloisRingElement(a.ring_, std::move(c));
}

GaloisRingElement operator-(const GaloisRingElement& a, const GaloisRingElement& b) {
    require_same_ring(a, b);
    std::vector<Integer> c(a.c_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.c_[i];
    return GaloisRingElement(a.ring_, std::move(c));
}

GaloisRingElement operator*(const GaloisRingElement& a, const GaloisRingElement& b) {
    require_same_ring(a, b);
    const std::size_t k = a.c_.size();
    const Integer& m = a.ring_.characteristic();
    std::vector<Integer> prod(2 * k - 1, Integer(0));
    for (std::size_t i = 0; i < k; ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < k; ++j) prod[i + j] += a.c_[i] * b.c_[j];
    }
    // Reduce by the monic modulus from the top degree down.
    const auto& f = a.ring_.modulus();
    for (std::size_t top = prod.size(); top-- > k;) {
        const Integer lead = mod_floor(prod[top], m);
        prod[top] = 0;
        if (lead == 0) continue;
        for (std::size_t j = 0; j < k; ++j) prod[top - k + j] -= lead * f[j];
    }
    prod.resize(k);
    return GaloisRingElement(a.ring_, std::move(prod));
}

bool operator==(const GaloisRingElement& a, const GaloisRingElement& b) {
    return a.ring_ == b.ring_ && a.c_ == b.c_;
}

GaloisRingElement GaloisRingElement::pow(const Integer& n) const {
    if (n < 0) throw precondition_error("negative exponent");
    GaloisRingElement result = ring_.one();
    const std::size_t bits = n == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = result * result;
        if (mpz_tstbit(n.get_mpz_t(), i)) result = result * *this;
    }
    return result;
}

GaloisRingElement GaloisRingElement::inverse() const {
    if (!is_unit()) throw precondition_error("element is not a unit");
    // The unit group has order (q − 1) q^(S − 1) · … ; a^(|G| − 1) = a^(-1).
    const Integer q(static_cast<unsigned long>(ring_.residue_size()));
    const Integer order = (q - 1) * ipow(q, ring_.precision() - 1);
    return pow(Integer(order - 1));
}

GaloisRingElement GaloisRingElement::divide_by_prime_power(unsigned s) const {
    const Integer ps = ipow(Integer(static_cast<unsigned long>(ring_.prime())), s);
    std::vector<Integer> c(c_);
    for (auto& v : c) {
        if (mpz_divisible_p(v.get_mpz_t(), ps.get_mpz_t()) == 0) {
            throw precondition_error("element not divisible by p^" + std::to_string(s));
        }
        v /= ps;
    }
    return GaloisRingElement(ring_, std::move(c));
}

std::string GaloisRingElement::to_string() const {
    if (c_.size() == 1) return c_[0].get_str();
    std::string out = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i > 0) out += ", ";
        out += c_[i].get_str();
    }
    return out + "]";
}

GaloisRingElement teichmueller(const GaloisRingElement& x) {
    const GaloisRing& ring = x.ring();
    const Integer q(static_cast<unsigned long>(ring.residue_size()));
    GaloisRingElement y = x;
    for (unsigned i = 1; i < ring.precision(); ++i) y = y.pow(q);
    GaloisRingElement next = y.pow(q);
    while (!(next == y)) {
        y = next;
        next = y.pow(q);
    }
    return y;
}

}  // namespace pcong
