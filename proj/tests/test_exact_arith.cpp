#include <gtest/gtest.h>

#include <array>

#include "oracles.hpp"
#include "pcong/eisenstein.hpp"
#include "pcong/errors.hpp"
#include "pcong/fp_poly.hpp"
#include "pcong/galois_ring.hpp"
#include "pcong/ideal.hpp"
#include "pcong/valuation.hpp"

using namespace pcong;

TEST(Valuation, IntegersAndRationals) {
    EXPECT_EQ(valuation(Integer(12), 2), Valuation(2));
    EXPECT_EQ(valuation(make_rational(Integer(3), Integer(4)), 2), Valuation(-2));
    EXPECT_TRUE(valuation(Integer(0), 5).is_infinite());
    EXPECT_EQ(valuation(Integer(-250), 5), Valuation(3));
}

TEST(Valuation, OrderingAndArithmetic) {
    const Valuation inf = Valuation::infinity();
    EXPECT_LT(Valuation(100), inf);
    EXPECT_EQ(inf + Valuation(3), inf);
    EXPECT_EQ(Valuation(Rational(1, 3)) + Valuation(Rational(2, 3)), Valuation(1));
    EXPECT_EQ(inf.to_string(), "inf");
    EXPECT_EQ(Valuation(Rational(-3, 2)).to_string(), "-3/2");
    EXPECT_THROW((void)inf.value(), std::logic_error);
}

TEST(Valuation, MatchesRepeatedDivision) {
    for (long x = -300; x <= 300; ++x) {
        for (std::uint64_t p : {2, 3, 5, 7}) {
            const long expect = oracle::naive_valuation(Integer(x), p);
            const Valuation v = valuation(Integer(x), p);
            if (expect < 0) {
                EXPECT_TRUE(v.is_infinite());
            } else {
                EXPECT_EQ(v, Valuation(expect)) << x << " " << p;
            }
        }
    }
}

TEST(Rationals, ParseAndPrint) {
    EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
    EXPECT_EQ(parse_rational("-7"), Rational(-7));
    EXPECT_EQ(to_string(make_rational(Integer(-3), Integer(6))), "-1/2");
    EXPECT_EQ(to_string(Rational(4)), "4");
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
    EXPECT_TRUE(is_p_integral(Rational(1, 3), 2));
    EXPECT_FALSE(is_p_integral(Rational(1, 6), 2));
}

TEST(Primes, Recognition) {
    EXPECT_TRUE(is_prime(2));
    EXPECT_TRUE(is_prime(97));
    EXPECT_FALSE(is_prime(1));
    EXPECT_FALSE(is_prime(91));
    EXPECT_THROW(require_prime(4), precondition_error);
}

TEST(Mobius, SmallValues) {
    EXPECT_EQ(mobius(1), 1);
    EXPECT_EQ(mobius(6), 1);
    EXPECT_EQ(mobius(12), 0);
    EXPECT_EQ(mobius(30), -1);
    EXPECT_EQ(mobius(7), -1);
}

TEST(Mobius, DivisorSumIsIndicator) {
    for (std::uint64_t n = 1; n <= 300; ++n) {
        int s = 0;
        for (std::uint64_t d = 1; d <= n; ++d) {
            if (n % d == 0) s += mobius(d);
        }
        EXPECT_EQ(s, n == 1 ? 1 : 0) << n;
    }
}

TEST(Multinomial, WorkedValues) {
    const std::array<std::uint64_t, 2> a{2, 2};
    EXPECT_EQ(multinomial_valuation(a, 2), 1U);
    for (std::uint64_t p : {2, 3, 5, 7}) {
        for (std::uint64_t k = 1; k < p; ++k) {
            const std::array<std::uint64_t, 2> parts{k, p - k};
            EXPECT_EQ(multinomial_valuation(parts, p), 1U);
        }
    }
    const std::array<std::uint64_t, 2> trivial{9, 0};
    EXPECT_EQ(multinomial_valuation(trivial, 3), 0U);
    EXPECT_EQ(multinomial(a), Integer(6));
}

TEST(Multinomial, CarryCountMatchesExactValuation) {
    for (std::uint64_t p : {2, 3, 5}) {
        for (std::uint64_t a = 0; a <= 14; ++a) {
            for (std::uint64_t b = 0; b <= 14; ++b) {
                for (std::uint64_t c = 0; c <= 6; ++c) {
                    const std::vector<std::uint64_t> parts{a, b, c};
                    EXPECT_EQ(static_cast<long>(multinomial_valuation(parts, p)),
                              oracle::direct_multinomial_valuation(parts, p));
                }
            }
        }
    }
}

TEST(Ideals, DividedPowerThreshold) {
    EXPECT_TRUE(is_divided_power(IdealSpec::localized(5, Integer(1))));
    EXPECT_TRUE(is_divided_power(IdealSpec::localized(2, Integer(1))));
    for (std::uint64_t p : {2, 3, 5, 7}) {
        EXPECT_FALSE(is_divided_power(IdealSpec::maximal(p, p)));
        EXPECT_TRUE(is_divided_power(IdealSpec::maximal(p, p - 1)));
    }
    EXPECT_TRUE(is_divided_power(IdealSpec::maximal(3, 2)));
    EXPECT_TRUE(is_divided_power(IdealSpec::eisenstein(3, 3, Rational(2, 3))));
    EXPECT_THROW(IdealSpec::localized(2, Integer(0)), precondition_error);
    EXPECT_THROW(IdealSpec::eisenstein(3, 3, Rational(1, 2)), precondition_error);
}

TEST(Eisenstein, UniformizerValuation) {
    const EisensteinRing ring(3, 3);
    const EisensteinElement a = ring.uniformizer();
    EXPECT_EQ(a.valuation(), Valuation(Rational(1, 3)));
    EXPECT_EQ(a.pow(3), ring.from_integer(Integer(3)));
    EXPECT_EQ(a.pow(4).valuation(), Valuation(Rational(4, 3)));
    EXPECT_TRUE(ring.zero().valuation().is_infinite());
}

TEST(Eisenstein, MixedCoefficients) {
    const EisensteinRing ring(2, 2);
    // 4 + 2α has valuation min(2, 1 + 1/2).
    const EisensteinElement x = ring.element({Rational(4), Rational(2)});
    EXPECT_EQ(x.valuation(), Valuation(Rational(3, 2)));
    EXPECT_FALSE(ring.element({Rational(1, 2)}).is_integral());
    EXPECT_THROW(ring.element({Rational(1), Rational(1), Rational(1)}), precondition_error);
    EXPECT_THROW((void)(x + EisensteinRing(2, 3).one()), ring_mismatch);
}

TEST(FpPoly, ArithmeticAndFactoring) {
    const FpPoly f(2, {0, 0, 1, 1, 1});  // X^4 + X^3 + X^2
    EXPECT_EQ(f.to_string(), "X^4 + X^3 + X^2");
    const auto fs = factor(f);
    ASSERT_EQ(fs.size(), 2U);
    EXPECT_EQ(fs[0].factor, FpPoly::x(2));
    EXPECT_EQ(fs[0].multiplicity, 2U);
    EXPECT_EQ(fs[1].factor, FpPoly(2, {1, 1, 1}));
    EXPECT_TRUE(is_irreducible(FpPoly(3, {1, 0, 1})));
    EXPECT_FALSE(is_irreducible(FpPoly(5, {1, 0, 1})));
    const FpPoly g(7, {3, 1, 4, 1, 5});
    const FpPoly h(7, {2, 6, 1});
    const auto [q, r] = g.divmod(h);
    EXPECT_EQ(q * h + r, g);
}

TEST(GaloisRing, DefaultModuliAreIrreducible) {
    for (std::uint64_t p : {2, 3, 5, 7}) {
        for (unsigned k : {1U, 2U, 3U}) {
            EXPECT_NO_THROW(GaloisRing::with_default_modulus(p, 2, k)) << p << " " << k;
        }
    }
    EXPECT_THROW(GaloisRing(3, 1, 2, {Integer(2), Integer(0), Integer(1)}), precondition_error);
    EXPECT_THROW(GaloisRing::with_default_modulus(11, 1, 2), precondition_error);
}

TEST(GaloisRing, UnitsAndInverses) {
    const GaloisRing ring = GaloisRing::with_default_modulus(3, 2, 2);
    for (std::uint64_t code = 1; code < 9; ++code) {
        const GaloisRingElement x = ring.from_residue(code) + ring.from_integer(Integer(3));
        EXPECT_TRUE(x.is_unit());
        EXPECT_EQ(x * x.inverse(), ring.one());
    }
    EXPECT_FALSE(ring.from_integer(Integer(6)).is_unit());
    EXPECT_EQ(ring.from_integer(Integer(6)).valuation(), Valuation(1));
    EXPECT_TRUE(ring.from_integer(Integer(9)).is_zero());
    EXPECT_EQ(ring.from_rational(Rational(1, 2)) * ring.from_integer(Integer(2)), ring.one());
    EXPECT_THROW(ring.from_rational(Rational(1, 3)), precondition_error);
}

TEST(Teichmueller, WorkedValue) {
    const GaloisRing ring = GaloisRing::with_default_modulus(5, 3, 1);
    EXPECT_EQ(teichmueller(ring.from_integer(Integer(2))), ring.from_integer(Integer(57)));
    EXPECT_EQ(oracle::teichmueller_mod(2, 5, 3), 57U);
    EXPECT_EQ(teichmueller(ring.zero()), ring.zero());
    EXPECT_EQ(teichmueller(ring.one()), ring.one());
}

TEST(Teichmueller, FixedPointAndResidue) {
    for (std::uint64_t p : {2, 3, 5}) {
        for (unsigned k : {1U, 2U}) {
            const GaloisRing ring = GaloisRing::with_default_modulus(p, 3, k);
            const Integer q(static_cast<unsigned long>(ring.residue_size()));
            for (std::uint64_t code = 0; code < ring.residue_size(); ++code) {
                const GaloisRingElement x = ring.from_residue(code);
                const GaloisRingElement t = teichmueller(x);
                EXPECT_EQ(t.pow(q), t);
                EXPECT_EQ(t.residue_code(), code);
            }
        }
    }
    for (std::uint64_t x = 0; x < 7; ++x) {
        const GaloisRing ring = GaloisRing::with_default_modulus(7, 2, 1);
        EXPECT_EQ(teichmueller(ring.from_integer(Integer(static_cast<unsigned long>(x)))),
                  ring.from_integer(Integer(static_cast<unsigned long>(oracle::teichmueller_mod(x, 7, 2)))));
    }
}
