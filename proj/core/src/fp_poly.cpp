#include "pcong/fp_poly.hpp"

#include <algorithm>

#include "pcong/errors.hpp"

namespace pcong {

namespace {

std::uint64_t reduce(std::int64_t v, std::uint64_t p) {
    const auto sp = static_cast<std::int64_t>(p);
    std::int64_t r = v % sp;
    if (r < 0) r += sp;
    return static_cast<std::uint64_t>(r);
}

void require_same_field(const FpPoly& a, const FpPoly& b) {
    if (a.prime() != b.prime()) throw ring_mismatch("F_p polynomials over different primes");
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q != 0) continue;
        out.push_back(q);
        while (n % q == 0) n /= q;
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) throw precondition_error("zero has no inverse mod p");
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return reduce(t, p);
}

FpPoly::FpPoly(std::uint64_t p) : p_(p) {}

FpPoly::FpPoly(std::uint64_t p, const std::vector<std::int64_t>& low_to_high) : p_(p) {
    c_.reserve(low_to_high.size());
    for (auto v : low_to_high) c_.push_back(reduce(v, p));
    trim();
}

FpPoly FpPoly::constant(std::uint64_t p, std::int64_t value) { return FpPoly(p, {value}); }

FpPoly FpPoly::x(std::uint64_t p) { return FpPoly(p, {0, 1}); }

FpPoly FpPoly::linear(std::uint64_t p, std::int64_t root) {
    return FpPoly(p, {-(static_cast<std::int64_t>(reduce(root, p))), 1});
}

FpPoly FpPoly::from_integers(std::uint64_t p, std::span<const Integer> low_to_high) {
    FpPoly out(p);
    const Integer modulus(static_cast<unsigned long>(p));
    for (const auto& v : low_to_high) {
        Integer r;
        mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t());
        out.c_.push_back(r.get_ui());
    }
    out.trim();
    return out;
}

void FpPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(inverse_mod(leading(), p_));
}

FpPoly FpPoly::scaled(std::uint64_t k) const {
    FpPoly out(p_);
    out.c_.reserve(c_.size());
    for (auto v : c_) out.c_.push_back(v * (k % p_) % p_);
    out.trim();
    return out;
}

FpPoly FpPoly::derivative() const {
    FpPoly out(p_);
    for (std::size_t i = 1; i < c_.size(); ++i) out.c_.push_back(c_[i] * (i % p_) % p_);
    out.trim();
    return out;
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
    require_same_field(a, b);
    FpPoly out(a.p_);
    out.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < out.c_.size(); ++i) {
        out.c_[i] = (a.coefficient(i) + b.coefficient(i)) % a.p_;
    }
    out.trim();
    return out;
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
    require_same_field(a, b);
    FpPoly out(a.p_);
    out.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < out.c_.size(); ++i) {
        out.c_[i] = (a.coefficient(i) + a.p_ - b.coefficient(i)) % a.p_;
    }
    out.trim();
    return out;
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
    require_same_field(a, b);
    FpPoly out(a.p_);
    if (a.is_zero() || b.is_zero()) return out;
    out.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            out.c_[i + j] = (out.c_[i + j] + a.c_[i] * b.c_[j]) % a.p_;
        }
    }
    out.trim();
    return out;
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& b) const {
    require_same_field(*this, b);
    if (b.is_zero()) throw precondition_error("polynomial division by zero");
    FpPoly quotient(p_);
    FpPoly rem = *this;
    if (rem.degree() < b.degree()) return {quotient, rem};
    const std::uint64_t lead_inv = inverse_mod(b.leading(), p_);
    quotient.c_.assign(static_cast<std::size_t>(rem.degree() - b.degree() + 1), 0);
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        const auto shift = static_cast<std::size_t>(rem.degree() - b.degree());
        const std::uint64_t k = rem.leading() * lead_inv % p_;
        quotient.c_[shift] = k;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            auto& slot = rem.c_[shift + j];
            slot = (slot + p_ - k * b.c_[j] % p_) % p_;
        }
        rem.trim();
    }
    quotient.trim();
    return {quotient, rem};
}

FpPoly operator/(const FpPoly& a, const FpPoly& b) { return a.divmod(b).first; }

FpPoly operator%(const FpPoly& a, const FpPoly& b) { return a.divmod(b).second; }

bool operator<(const FpPoly& a, const FpPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = a.c_.size(); i-- > 0;) {
        if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    }
    return false;
}

FpPoly FpPoly::pow_mod(const Integer& e, const FpPoly& m) const {
    FpPoly result = FpPoly::constant(p_, 1) % m;
    FpPoly base = *this % m;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = (result * result) % m;
        if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * base) % m;
    }
    return result;
}

std::string FpPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!out.empty()) out += " + ";
        const bool show_coeff = c_[i] != 1 || i == 0;
        if (show_coeff) out += std::to_string(c_[i]);
        if (i > 0) {
            if (show_coeff) out += "*";
            out += "X";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

FpPoly gcd(FpPoly a, FpPoly b) {
    require_same_field(a, b);
    while (!b.is_zero()) {
        FpPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

bool is_irreducible(const FpPoly& f) {
    const int n = f.degree();
    if (n < 1) return false;
    if (n == 1) return true;
    const std::uint64_t p = f.prime();
    const FpPoly g = f.monic();
    const FpPoly x = FpPoly::x(p);
    const Integer prime(static_cast<unsigned long>(p));
    for (auto r : prime_factors(static_cast<std::uint64_t>(n))) {
        const Integer e = ipow(prime, static_cast<std::uint64_t>(n) / r);
        if (!gcd(x.pow_mod(e, g) - x, g).is_one()) return false;
    }
    return (x.pow_mod(ipow(prime, static_cast<std::uint64_t>(n)), g) - x % g).is_zero();
}

namespace {

// f is monic and nonconstant.
std::vector<FactorPower> squarefree_split(const FpPoly& f) {
    const std::uint64_t p = f.prime();
    std::vector<FactorPower> out;
    FpPoly c = gcd(f, f.derivative());
    FpPoly w = f / c;
    unsigned i = 1;
    while (!w.is_one()) {
        FpPoly y = gcd(w, c);
        FpPoly fac = w / y;
        if (!fac.is_one()) out.push_back({fac.monic(), i});
        w = y;
        c = c / y;
        ++i;
    }
    if (!c.is_one()) {
        // c is a polynomial in X^p; over F_p its p-th root takes every p-th coefficient.
        std::vector<std::int64_t> root;
        for (std::size_t k = 0; k < c.coefficients().size(); k += p) {
            root.push_back(static_cast<std::int64_t>(c.coefficients()[k]));
        }
        for (auto& part : squarefree_split(FpPoly(p, root).monic())) {
            out.push_back({part.factor, part.multiplicity * static_cast<unsigned>(p)});
        }
    }
    return out;
}

std::vector<std::pair<FpPoly, int>> distinct_degree_split(FpPoly f) {
    const std::uint64_t p = f.prime();
    const Integer prime(static_cast<unsigned long>(p));
    const FpPoly x = FpPoly::x(p);
    std::vector<std::pair<FpPoly, int>> out;
    FpPoly h = x % f;
    for (int i = 1; 2 * i <= f.degree(); ++i) {
        h = h.pow_mod(prime, f);
        FpPoly g = gcd(h - x, f);
        if (!g.is_one()) {
            out.emplace_back(g, i);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f.monic(), f.degree());
    return out;
}

FpPoly candidate(std::uint64_t p, int degree, std::uint64_t index) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(degree) + 1, 0);
    c.back() = 1;
    for (int k = 0; k < degree; ++k) {
        c[static_cast<std::size_t>(k)] = static_cast<std::int64_t>(index % p);
        index /= p;
    }
    return FpPoly(p, c);
}

std::vector<FpPoly> equal_degree_split(FpPoly g, int degree) {
    if (g.degree() == degree) return {g};
    constexpr int kMaxSearchDegree = 4;
    if (degree > kMaxSearchDegree) {
        throw precondition_error("equal-degree splitting supports irreducible degree <= 4");
    }
    const std::uint64_t p = g.prime();
    std::uint64_t count = 1;
    for (int k = 0; k < degree; ++k) count *= p;
    std::vector<FpPoly> out;
    for (std::uint64_t idx = 0; idx < count && g.degree() > 0; ++idx) {
        FpPoly cand = candidate(p, degree, idx);
        if (!(g % cand).is_zero()) continue;
        if (!is_irreducible(cand)) continue;
        out.push_back(cand);
        g = g / cand;
    }
    return out;
}

}  // namespace

std::vector<FactorPower> factor(const FpPoly& f) {
    if (f.degree() < 1) return {};
    std::vector<FactorPower> out;
    for (const auto& part : squarefree_split(f.monic())) {
        for (const auto& [block, degree] : distinct_degree_split(part.factor)) {
            for (auto& irreducible : equal_degree_split(block, degree)) {
                out.push_back({std::move(irreducible), part.multiplicity});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const FactorPower& a, const FactorPower& b) {
        if (a.factor == b.factor) return a.multiplicity < b.multiplicity;
        return a.factor < b.factor;
    });
    // Different squarefree layers never share an irreducible, so no merging is needed.
    return out;
}

}  // namespace pcong
