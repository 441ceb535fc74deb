#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pcong/errors.hpp"

namespace pcong {

/// X^d + a_1 X^(d−1) + … + a_d over a coefficient ring (RationalRing, EisensteinRing, GaloisRing).
template <class Ring>
class MonicPoly {
public:
    using Element = typename Ring::element_type;

    /// Coefficients a_1..a_d below the implicit leading 1.
    MonicPoly(Ring ring, std::vector<Element> lower) : ring_(std::move(ring)), a_(std::move(lower)) {}

    /// Display order with the leading 1 included, e.g. {1, 1, 3} for X² + X + 3.
    static MonicPoly from_display(Ring ring, std::vector<Element> leading_to_constant) {
        if (leading_to_constant.empty() || !(leading_to_constant.front() == ring.one())) {
            throw precondition_error("monic polynomial must start with leading coefficient 1");
        }
        leading_to_constant.erase(leading_to_constant.begin());
        return MonicPoly(std::move(ring), std::move(leading_to_constant));
    }

    /// Π (X − r_i).
    static MonicPoly from_roots(Ring ring, const std::vector<Element>& roots) {
        MonicPoly out(ring, {});
        for (const auto& r : roots) {
            Element neg = -r;
            out = product(out, MonicPoly(ring, {neg}));
        }
        return out;
    }

    const Ring& ring() const { return ring_; }
    std::size_t degree() const { return a_.size(); }

    /// a_i for 1 ≤ i ≤ d; a_0 = 1.
    Element coefficient(std::size_t i) const {
        if (i == 0) return ring_.one();
        if (i > a_.size()) return ring_.zero();
        return a_[i - 1];
    }

    /// e_n(Q) = (−1)^n a_n; 1 at n = 0, 0 beyond the degree.
    Element elementary(std::size_t n) const {
        Element a = coefficient(n);
        if (n % 2 == 1) a = -a;
        return a;
    }

    std::vector<Element> display_coefficients() const {
        std::vector<Element> out;
        out.reserve(a_.size() + 1);
        out.push_back(ring_.one());
        out.insert(out.end(), a_.begin(), a_.end());
        return out;
    }

    friend MonicPoly product(const MonicPoly& f, const MonicPoly& g) {
        if (!(f.ring_ == g.ring_)) throw ring_mismatch("polynomials over different rings");
        const auto fc = f.display_coefficients();
        const auto gc = g.display_coefficients();
        std::vector<Element> out(fc.size() + gc.size() - 1, f.ring_.zero());
        for (std::size_t i = 0; i < fc.size(); ++i) {
            for (std::size_t j = 0; j < gc.size(); ++j) {
                Element sum = out[i + j] + fc[i] * gc[j];
                out[i + j] = sum;
            }
        }
        return from_display(f.ring_, std::move(out));
    }

    friend bool operator==(const MonicPoly& f, const MonicPoly& g) {
        return f.ring_ == g.ring_ && f.a_ == g.a_;
    }

    std::string to_string() const {
        std::string out = "[";
        const auto c = display_coefficients();
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i > 0) out += ", ";
            out += ring_.to_string(c[i]);
        }
        return out + "]";
    }

private:
    Ring ring_;
    std::vector<Element> a_;
};

}  // namespace pcong
