#include "pcong/symfunc.hpp"

#include <mutex>
#include <shared_mutex>
#include <vector>

namespace pcong {

namespace {

void require_bound(std::uint64_t n, std::uint64_t bound) {
    if (n > bound) {
        throw bound_exceeded("grade " + std::to_string(n) + " exceeds bound " +
                             std::to_string(bound));
    }
}

bool is_constant(const SymFuncExpr& f) {
    for (const auto& [lambda, c] : f.terms()) {
        if (!lambda.empty()) return false;
    }
    return true;
}

// Conversion of single basis elements b_λ into the other basis, shared by all callers.
class ConversionCache {
public:
    static ConversionCache& instance() {
        static ConversionCache cache;
        return cache;
    }

    SymFuncExpr lookup(Basis from, const Partition& lambda) {
        const Key key{from, lambda};
        {
            std::shared_lock lock(mutex_);
            auto it = table_.find(key);
            if (it != table_.end()) return it->second;
        }
        SymFuncExpr value = compute(from, lambda);
        std::unique_lock lock(mutex_);
        table_.emplace(key, value);
        return value;
    }

private:
    using Key = std::pair<Basis, Partition>;

    static SymFuncExpr generator(Basis from, std::uint64_t n) {
        return from == Basis::elementary ? e_in_p_basis(n, n) : p_in_e_basis(n, n);
    }

    SymFuncExpr compute(Basis from, const Partition& lambda) {
        const Basis to = from == Basis::elementary ? Basis::power_sum : Basis::elementary;
        SymFuncExpr out = SymFuncExpr::constant(to, Rational(1));
        for (auto a : lambda.parts()) out = multiply(out, generator(from, a));
        return out;
    }

    std::shared_mutex mutex_;
    std::map<Key, SymFuncExpr> table_;
};

}  // namespace

std::string to_string(Basis b) { return b == Basis::elementary ? "E" : "P"; }

Basis parse_basis(const std::string& text) {
    if (text == "E" || text == "e" || text == "elementary") return Basis::elementary;
    if (text == "P" || text == "p" || text == "power_sum") return Basis::power_sum;
    throw precondition_error("unknown basis '" + text + "'");
}

SymFuncExpr SymFuncExpr::basis_element(Basis basis, const Partition& lambda,
                                       const Rational& coefficient) {
    SymFuncExpr f(basis);
    f.add_term(lambda, coefficient);
    return f;
}

SymFuncExpr SymFuncExpr::constant(Basis basis, const Rational& value) {
    return basis_element(basis, Partition(), value);
}

std::uint64_t SymFuncExpr::max_weight() const {
    std::uint64_t w = 0;
    for (const auto& [lambda, c] : terms_) w = std::max(w, lambda.weight());
    return w;
}

Rational SymFuncExpr::coefficient(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SymFuncExpr::add_term(const Partition& lambda, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

SymFuncExpr SymFuncExpr::operator-() const {
    SymFuncExpr out = *this;
    for (auto& [lambda, c] : out.terms_) c = -c;
    return out;
}

namespace {

Basis common_basis(const SymFuncExpr& f, const SymFuncExpr& g) {
    if (f.basis() == g.basis()) return f.basis();
    if (f.is_zero() || is_constant(f)) return g.basis();
    if (g.is_zero() || is_constant(g)) return f.basis();
    throw ring_mismatch("symmetric functions in different bases");
}

}  // namespace

SymFuncExpr operator+(const SymFuncExpr& f, const SymFuncExpr& g) {
    SymFuncExpr out(common_basis(f, g));
    out.terms_ = f.terms_;
    for (const auto& [lambda, c] : g.terms_) out.add_term(lambda, c);
    return out;
}

SymFuncExpr operator-(const SymFuncExpr& f, const SymFuncExpr& g) { return f + (-g); }

SymFuncExpr operator*(const SymFuncExpr& f, const Rational& c) {
    SymFuncExpr out(f.basis_);
    if (c == 0) return out;
    out.terms_ = f.terms_;
    for (auto& [lambda, v] : out.terms_) v *= c;
    return out;
}

SymFuncExpr operator*(const SymFuncExpr& f, const SymFuncExpr& g) { return multiply(f, g); }

bool operator==(const SymFuncExpr& f, const SymFuncExpr& g) {
    if (f.is_zero() && g.is_zero()) return true;
    if (f.basis_ != g.basis_ && !(is_constant(f) && is_constant(g))) return false;
    return f.terms_ == g.terms_;
}

std::string SymFuncExpr::to_string() const {
    if (terms_.empty()) return "0";
    const std::string sym = basis_ == Basis::elementary ? "e" : "p";
    std::string out;
    bool first = true;
    for (const auto& [lambda, c] : terms_) {
        Rational mag = c;
        if (first) {
            if (c < 0) {
                out += "-";
                mag = -c;
            }
        } else {
            out += c < 0 ? " - " : " + ";
            if (c < 0) mag = -c;
        }
        first = false;
        if (lambda.empty()) {
            out += pcong::to_string(mag);
            continue;
        }
        if (mag != 1) out += pcong::to_string(mag) + " ";
        out += sym + lambda.to_string();
    }
    return out;
}

SymFuncExpr multiply(const SymFuncExpr& f, const SymFuncExpr& g) {
    SymFuncExpr out(common_basis(f, g));
    for (const auto& [lf, cf] : f.terms()) {
        for (const auto& [lg, cg] : g.terms()) out.add_term(multiply(lf, lg), cf * cg);
    }
    return out;
}

SymFuncExpr e_in_p_basis(std::uint64_t n, std::uint64_t bound) {
    require_bound(n, bound);
    SymFuncExpr out(Basis::power_sum);
    for (const auto& lambda : enumerate_partitions(n, bound)) {
        out.add_term(lambda, make_rational(Integer(partition_sign(lambda)), z_lambda(lambda)));
    }
    return out;
}

SymFuncExpr p_in_e_basis(std::uint64_t n, std::uint64_t bound) {
    if (n == 0) throw precondition_error("p_0 is not a symmetric-function symbol");
    require_bound(n, bound);
    SymFuncExpr out(Basis::elementary);
    const long sign_n = n % 2 == 0 ? 1 : -1;
    for (const auto& lambda : enumerate_partitions(n, bound)) {
        std::vector<std::uint64_t> r;
        for (const auto& [a, mult] : lambda.multiplicities()) r.push_back(mult);
        const auto m = static_cast<long>(lambda.length());
        const long sign_m = m % 2 == 0 ? 1 : -1;
        // (−1)^n n (−1)^m / m · multinomial(m; r_1, r_2, …)
        const Rational c = make_rational(
            Integer(sign_n * sign_m) * Integer(static_cast<unsigned long>(n)) * multinomial(r),
            Integer(m));
        out.add_term(lambda, c);
    }
    return out;
}

SymFuncExpr convert(const SymFuncExpr& f, Basis target, std::uint64_t bound) {
    if (f.basis() == target) return f;
    SymFuncExpr out(target);
    for (const auto& [lambda, c] : f.terms()) {
        require_bound(lambda.weight(), bound);
        const SymFuncExpr image = ConversionCache::instance().lookup(f.basis(), lambda);
        for (const auto& [mu, d] : image.terms()) out.add_term(mu, c * d);
    }
    return out;
}

SymFuncExpr g_lambda(const Partition& lambda, std::uint64_t p, std::uint64_t bound) {
    SymFuncExpr out(Basis::power_sum);
    for (const auto& mu : p_equivalence_class(lambda, p, bound)) {
        out.add_term(mu, make_rational(Integer(partition_sign(mu)), z_lambda(mu)));
    }
    return out;
}

bool is_p_integral(const SymFuncExpr& f, std::uint64_t p, std::uint64_t bound) {
    const SymFuncExpr e = convert(f, Basis::elementary, bound);
    for (const auto& [lambda, c] : e.terms()) {
        if (!is_p_integral(c, p)) return false;
    }
    return true;
}

}  // namespace pcong
