#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "pcong/errors.hpp"
#include "pcong/partition.hpp"
#include "pcong/valuation.hpp"

namespace pcong {

enum class Basis { elementary, power_sum };

std::string to_string(Basis b);
/// Accepts "E"/"e"/"elementary" and "P"/"p"/"power_sum".
Basis parse_basis(const std::string& text);

/// A finite Q-combination of e_λ or of p_λ. The empty partition stands for the constant 1.
class SymFuncExpr {
public:
    using Terms = std::map<Partition, Rational, std::greater<>>;

    explicit SymFuncExpr(Basis basis = Basis::power_sum) : basis_(basis) {}

    static SymFuncExpr basis_element(Basis basis, const Partition& lambda,
                                     const Rational& coefficient = Rational(1));
    static SymFuncExpr constant(Basis basis, const Rational& value);

    Basis basis() const { return basis_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Largest weight present; 0 for constants and zero.
    std::uint64_t max_weight() const;

    Rational coefficient(const Partition& lambda) const;
    /// Adds c·b_λ, dropping the term if it cancels.
    void add_term(const Partition& lambda, const Rational& c);

    SymFuncExpr operator-() const;
    friend SymFuncExpr operator+(const SymFuncExpr& f, const SymFuncExpr& g);
    friend SymFuncExpr operator-(const SymFuncExpr& f, const SymFuncExpr& g);
    friend SymFuncExpr operator*(const SymFuncExpr& f, const Rational& c);
    friend SymFuncExpr operator*(const Rational& c, const SymFuncExpr& f) { return f * c; }
    friend SymFuncExpr operator*(const SymFuncExpr& f, const SymFuncExpr& g);
    /// Zero is equal to zero in either basis.
    friend bool operator==(const SymFuncExpr& f, const SymFuncExpr& g);

    /// e.g. "1/2 p(1,1) - 1/2 p(2)"; "0" for zero.
    std::string to_string() const;

private:
    Basis basis_;
    Terms terms_;
};

/// e_n = Σ_{λ ⊢ n} (−1)^λ p_λ / z_λ.
SymFuncExpr e_in_p_basis(std::uint64_t n, std::uint64_t bound = kDefaultWeightBound);

/// p_n as an integral combination of the e_λ.
SymFuncExpr p_in_e_basis(std::uint64_t n, std::uint64_t bound = kDefaultWeightBound);

/// Rewrites f in the target basis; results for each generator and each partition are cached.
SymFuncExpr convert(const SymFuncExpr& f, Basis target,
                    std::uint64_t bound = kDefaultWeightBound);

/// Product in Λ_Q. Bases must match unless one factor is a constant.
SymFuncExpr multiply(const SymFuncExpr& f, const SymFuncExpr& g);

/// Σ over the p-equivalence class of λ of (−1)^μ p_μ / z_μ.
SymFuncExpr g_lambda(const Partition& lambda, std::uint64_t p,
                     std::uint64_t bound = kDefaultWeightBound);

/// Membership in Λ_{Z_(p)}, checked on e-basis coefficients.
bool is_p_integral(const SymFuncExpr& f, std::uint64_t p,
                   std::uint64_t bound = kDefaultWeightBound);

}  // namespace pcong
