#include "pcong/eisenstein.hpp"

#include "pcong/errors.hpp"

namespace pcong {

namespace {

void require_same_ring(const EisensteinElement& a, const EisensteinElement& b) {
    if (a.prime() != b.prime() || a.ramification() != b.ramification()) {
        throw ring_mismatch("Eisenstein elements from different rings");
    }
}

}  // namespace

EisensteinElement::EisensteinElement(std::uint64_t p, std::uint64_t e,
                                     std::vector<Rational> coefficients)
    : p_(p), e_(e), c_(std::move(coefficients)) {
    if (e_ == 0) throw precondition_error("ramification degree must be at least 1");
    if (c_.size() > e_) {
        throw precondition_error("Eisenstein element has more than e coefficients");
    }
    c_.resize(e_, Rational(0));
}

bool EisensteinElement::is_zero() const {
    for (const auto& c : c_) {
        if (c != 0) return false;
    }
    return true;
}

bool EisensteinElement::is_integral() const {
    for (const auto& c : c_) {
        if (!is_p_integral(c, p_)) return false;
    }
    return true;
}

Valuation EisensteinElement::valuation() const {
    Valuation best = Valuation::infinity();
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        const Rational shift = make_rational(Integer(static_cast<unsigned long>(i)),
                                             Integer(static_cast<unsigned long>(e_)));
        const Valuation v = pcong::valuation(c_[i], p_) + Valuation(shift);
        if (v < best) best = v;
    }
    return best;
}

EisensteinElement EisensteinElement::pow(std::uint64_t n) const {
    EisensteinElement result(p_, e_, {Rational(1)});
    EisensteinElement base = *this;
    while (n > 0) {
        if (n & 1U) result = result * base;
        n >>= 1U;
        if (n > 0) base = base * base;
    }
    return result;
}

EisensteinElement EisensteinElement::operator-() const {
    EisensteinElement out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

EisensteinElement operator+(const EisensteinElement& a, const EisensteinElement& b) {
    require_same_ring(a, b);
    EisensteinElement out = a;
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] += b.c_[i];
    return out;
}

EisensteinElement operator-(const EisensteinElement& a, const EisensteinElement& b) {
    require_same_ring(a, b);
    EisensteinElement out = a;
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] -= b.c_[i];
    return out;
}

EisensteinElement operator*(const EisensteinElement& a, const EisensteinElement& b) {
    require_same_ring(a, b);
    const std::size_t e = a.c_.size();
    const Rational p(static_cast<unsigned long>(a.p_));
    std::vector<Rational> out(e, Rational(0));
    for (std::size_t i = 0; i < e; ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < e; ++j) {
            if (b.c_[j] == 0) continue;
            const std::size_t k = i + j;
            // α^e = p folds the high half back down.
            if (k < e) {
                out[k] += a.c_[i] * b.c_[j];
            } else {
                out[k - e] += p * a.c_[i] * b.c_[j];
            }
        }
    }
    return EisensteinElement(a.p_, a.e_, std::move(out));
}

bool operator==(const EisensteinElement& a, const EisensteinElement& b) {
    return a.p_ == b.p_ && a.e_ == b.e_ && a.c_ == b.c_;
}

std::string EisensteinElement::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i > 0) out += ", ";
        out += pcong::to_string(c_[i]);
    }
    return out + "]";
}

EisensteinRing::EisensteinRing(std::uint64_t p, std::uint64_t e) : p_(p), e_(e) {
    require_prime(p);
    if (e == 0) throw precondition_error("ramification degree must be at least 1");
}

EisensteinElement EisensteinRing::from_rational(const Rational& x) const {
    return EisensteinElement(p_, e_, {x});
}

EisensteinElement EisensteinRing::uniformizer() const {
    if (e_ == 1) return from_integer(Integer(static_cast<unsigned long>(p_)));
    std::vector<Rational> c(e_, Rational(0));
    c[1] = 1;
    return EisensteinElement(p_, e_, std::move(c));
}

EisensteinElement EisensteinRing::element(std::vector<Rational> coefficients) const {
    return EisensteinElement(p_, e_, std::move(coefficients));
}

EisensteinElement EisensteinRing::divide(const EisensteinElement& x, const Integer& n) const {
    if (n == 0) throw precondition_error("division by zero");
    std::vector<Rational> c = x.coefficients();
    for (auto& v : c) v /= Rational(n);
    return EisensteinElement(p_, e_, std::move(c));
}

}  // namespace pcong
