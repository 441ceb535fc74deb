#include "pcong/congruence.hpp"

namespace pcong {

std::string to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::consistent: return "consistent";
        case VerdictStatus::divergent: return "divergent";
        case VerdictStatus::internal_error: return "internal_error";
    }
    return "unknown";
}

std::vector<RamifiedDivergence> search_ramified_divergences(std::uint64_t p, std::uint64_t e,
                                                            std::uint64_t max_degree,
                                                            std::uint64_t trials,
                                                            std::uint64_t seed) {
    const EisensteinRing ring(p, e);
    const IdealSpec ideal = IdealSpec::maximal(p, e);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coeff(-static_cast<long>(p), static_cast<long>(p));
    std::uniform_int_distribution<std::uint64_t> degree(1, std::max<std::uint64_t>(1, max_degree));

    auto random_element = [&] {
        std::vector<Rational> c(e);
        for (auto& v : c) v = Rational(coeff(rng));
        return ring.element(std::move(c));
    };
    auto random_poly = [&](std::uint64_t d) {
        std::vector<EisensteinElement> lower;
        for (std::uint64_t i = 0; i < d; ++i) lower.push_back(random_element());
        return MonicPoly<EisensteinRing>(ring, std::move(lower));
    };

    std::vector<RamifiedDivergence> out;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const auto P = random_poly(degree(rng));
        const auto Q = random_poly(degree(rng));
        const CongruenceReport r = theorem_verdict(P, Q, ideal);
        if (r.elementary != r.deep) out.push_back({P, Q, r.elementary, r.deep});
    }
    return out;
}

}  // namespace pcong
