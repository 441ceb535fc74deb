#include "pcong/valuation.hpp"

#include <stdexcept>
#include <vector>

#include "pcong/errors.hpp"

namespace pcong {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

void require_prime(std::uint64_t p) {
    if (!is_prime(p)) {
        throw precondition_error("expected a prime, got " + std::to_string(p));
    }
}

const Rational& Valuation::value() const {
    if (!finite_) throw std::logic_error("valuation is +inf");
    return value_;
}

bool operator==(const Valuation& a, const Valuation& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (!a.finite_ || !b.finite_) {
        if (a.finite_ == b.finite_) return std::strong_ordering::equal;
        return a.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Valuation operator+(const Valuation& a, const Valuation& b) {
    if (!a.finite_ || !b.finite_) return Valuation::infinity();
    return Valuation(Rational(a.value_ + b.value_));
}

std::string Valuation::to_string() const {
    return finite_ ? pcong::to_string(value_) : std::string("inf");
}

unsigned vp_small(std::uint64_t n, std::uint64_t p) {
    if (n == 0) throw precondition_error("vp_small: zero has infinite valuation");
    unsigned v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

Valuation valuation(const Integer& x, std::uint64_t p) {
    if (x == 0) return Valuation::infinity();
    Integer prime(static_cast<unsigned long>(p));
    Integer rest(x);
    // mpz_remove strips every factor of p and reports how many it found.
    const mp_bitcnt_t v = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), prime.get_mpz_t());
    return Valuation(static_cast<long>(v));
}

Valuation valuation(const Rational& x, std::uint64_t p) {
    if (x == 0) return Valuation::infinity();
    const Valuation num = valuation(Integer(x.get_num()), p);
    const Valuation den = valuation(Integer(x.get_den()), p);
    return Valuation(Rational(num.value() - den.value()));
}

std::uint64_t factorial_valuation(std::uint64_t n, std::uint64_t p) {
    std::uint64_t total = 0;
    for (std::uint64_t q = p; q <= n; q *= p) {
        total += n / q;
        if (q > n / p) break;
    }
    return total;
}

std::uint64_t multinomial_valuation(std::span<const std::uint64_t> parts, std::uint64_t p) {
    if (parts.empty()) throw precondition_error("multinomial_valuation: no parts");
    std::vector<std::uint64_t> rest(parts.begin(), parts.end());
    std::uint64_t carry = 0;
    std::uint64_t carries = 0;
    bool more = true;
    while (more) {
        more = false;
        std::uint64_t column = carry;
        for (auto& r : rest) {
            column += r % p;
            r /= p;
            more = more || r != 0;
        }
        carry = column / p;
        carries += carry;
        more = more || carry != 0;
    }
    return carries;
}

std::uint64_t multinomial_valuation_legendre(std::span<const std::uint64_t> parts,
                                             std::uint64_t p) {
    if (parts.empty()) throw precondition_error("multinomial_valuation: no parts");
    std::uint64_t total = 0;
    std::uint64_t below = 0;
    for (auto r : parts) {
        total += r;
        below += factorial_valuation(r, p);
    }
    return factorial_valuation(total, p) - below;
}

Integer factorial(std::uint64_t n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

Integer multinomial(std::span<const std::uint64_t> parts) {
    std::uint64_t total = 0;
    for (auto r : parts) total += r;
    Integer out = factorial(total);
    for (auto r : parts) out /= factorial(r);
    return out;
}

int mobius(std::uint64_t d) {
    if (d == 0) throw precondition_error("mobius: d must be positive");
    int sign = 1;
    for (std::uint64_t q = 2; q * q <= d; ++q) {
        if (d % q != 0) continue;
        d /= q;
        if (d % q == 0) return 0;
        sign = -sign;
    }
    if (d > 1) sign = -sign;
    return sign;
}

std::string to_string(const Rational& x) {
    return x.get_str(10);
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw precondition_error("empty rational literal");
    Rational out;
    if (out.set_str(s, 10) != 0 || out.get_den() == 0) {
        throw precondition_error("malformed rational literal: " + s);
    }
    out.canonicalize();
    return out;
}

bool is_p_integral(const Rational& x, std::uint64_t p) {
    return mpz_divisible_ui_p(x.get_den_mpz_t(), static_cast<unsigned long>(p)) == 0;
}

Integer ipow(const Integer& base, std::uint64_t exp) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
    return out;
}

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw precondition_error("zero denominator");
    Rational out(num, den);
    out.canonicalize();
    return out;
}

}  // namespace pcong
