#include "pcong/ideal.hpp"

#include "pcong/errors.hpp"

namespace pcong {

IdealSpec::IdealSpec(std::uint64_t p, std::uint64_t e, Rational c, bool eisenstein)
    : p_(p), e_(e), c_(std::move(c)), eisenstein_(eisenstein) {
    require_prime(p_);
    if (e_ == 0) throw precondition_error("ramification degree must be at least 1");
    if (c_ <= 0) throw precondition_error("ideal valuation must be positive");
    const Rational scaled = c_ * Rational(static_cast<unsigned long>(e_));
    if (scaled.get_den() != 1) {
        throw precondition_error("ideal valuation " + to_string(c_) +
                                 " is not a multiple of 1/" + std::to_string(e_));
    }
}

IdealSpec IdealSpec::localized(std::uint64_t p, const Integer& c) {
    return IdealSpec(p, 1, Rational(c), false);
}

IdealSpec IdealSpec::eisenstein(std::uint64_t p, std::uint64_t e, const Rational& c) {
    return IdealSpec(p, e, c, true);
}

IdealSpec IdealSpec::maximal(std::uint64_t p, std::uint64_t e) {
    Rational c(1, static_cast<unsigned long>(e == 0 ? 1 : e));
    return IdealSpec(p, e, c, e > 1);
}

std::string IdealSpec::describe() const {
    std::string ring = eisenstein_ ? "Z_(" + std::to_string(p_) + ")[a]/(a^" +
                                         std::to_string(e_) + " - " + std::to_string(p_) + ")"
                                   : "Z_(" + std::to_string(p_) + ")";
    return "{x in " + ring + " : v_p(x) >= " + to_string(c_) + "}";
}

bool is_divided_power(const IdealSpec& ideal) {
    const Rational bound(1, static_cast<unsigned long>(ideal.prime() - 1));
    return ideal.threshold() >= bound;
}

}  // namespace pcong
