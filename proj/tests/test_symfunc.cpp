#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pcong/evaluation.hpp"
#include "pcong/rational_ring.hpp"
#include "pcong/symfunc.hpp"

using namespace pcong;

namespace {

SymFuncExpr P(const Partition& l, const Rational& c = Rational(1)) {
    return SymFuncExpr::basis_element(Basis::power_sum, l, c);
}
SymFuncExpr E(const Partition& l, const Rational& c = Rational(1)) {
    return SymFuncExpr::basis_element(Basis::elementary, l, c);
}

const RationalRing Q2(2);
const auto kP = MonicPoly<RationalRing>::from_display(Q2, {1, 1, 3});
const auto kQ = MonicPoly<RationalRing>::from_display(Q2, {1, 3, 5, 2, 6});

}  // namespace

TEST(EInP, LowGrades) {
    EXPECT_EQ(e_in_p_basis(0), SymFuncExpr::constant(Basis::power_sum, Rational(1)));
    EXPECT_EQ(e_in_p_basis(2), P({1, 1}, Rational(1, 2)) - P({2}, Rational(1, 2)));
    EXPECT_EQ(e_in_p_basis(3),
              P({1, 1, 1}, Rational(1, 6)) - P({2, 1}, Rational(1, 2)) + P({3}, Rational(1, 3)));
    EXPECT_THROW(e_in_p_basis(41), bound_exceeded);
}

TEST(PInE, LowGrades) {
    EXPECT_EQ(p_in_e_basis(1), E({1}));
    EXPECT_EQ(p_in_e_basis(2), E({1, 1}) - E({2}, Rational(2)));
    EXPECT_EQ(p_in_e_basis(3), E({1, 1, 1}) - E({2, 1}, Rational(3)) + E({3}, Rational(3)));
    EXPECT_THROW(p_in_e_basis(0), precondition_error);
}

TEST(PInE, MatchesNewtonIdentitiesAndIsIntegral) {
    for (std::uint64_t n = 1; n <= 20; ++n) {
        const SymFuncExpr f = p_in_e_basis(n);
        if (n <= 12) EXPECT_EQ(f, oracle::newton_p_in_e(n)) << n;
        for (const auto& [lambda, c] : f.terms()) EXPECT_EQ(c.get_den(), 1) << n;
    }
}

TEST(Convert, Examples) {
    EXPECT_EQ(convert(E({2}), Basis::power_sum), e_in_p_basis(2));
    EXPECT_EQ(convert(P({2, 1}), Basis::elementary), (E({1, 1}) - E({2}, Rational(2))) * E({1}));
    EXPECT_EQ(convert(SymFuncExpr(Basis::elementary), Basis::power_sum), SymFuncExpr());
}

TEST(Convert, RoundTripsThroughGrade8) {
    for (std::uint64_t n = 0; n <= 8; ++n) {
        for (const auto& lambda : enumerate_partitions(n)) {
            EXPECT_EQ(convert(convert(E(lambda), Basis::power_sum), Basis::elementary), E(lambda));
            EXPECT_EQ(convert(convert(P(lambda), Basis::elementary), Basis::power_sum), P(lambda));
        }
    }
}

TEST(Multiply, RingAxioms) {
    EXPECT_EQ(P({2}) * P({1}), P({2, 1}));
    const SymFuncExpr one = SymFuncExpr::constant(Basis::power_sum, Rational(1));
    EXPECT_EQ(P({3, 1}) * one, P({3, 1}));
    EXPECT_EQ((E({1}) + E({2})) * E({1}), E({1, 1}) + E({2, 1}));
    EXPECT_THROW(P({1}) * E({1}), ring_mismatch);
}

TEST(GLambda, WorkedValues) {
    EXPECT_EQ(g_lambda(Partition(), 2), SymFuncExpr::constant(Basis::power_sum, Rational(1)));
    EXPECT_EQ(g_lambda({1, 1}, 2), e_in_p_basis(2));
    EXPECT_EQ(g_lambda({2, 1}, 3), P({2, 1}, Rational(-1, 2)));
}

TEST(GLambda, ClassSumsGiveElementary) {
    for (std::uint64_t p : {2, 3, 5}) {
        for (std::uint64_t n = 0; n <= 10; ++n) {
            SymFuncExpr sum(Basis::power_sum);
            for (const auto& rep : enumerate_p_deprived(n, p)) sum = sum + g_lambda(rep, p);
            EXPECT_EQ(sum, e_in_p_basis(n)) << p << " " << n;
        }
    }
}

TEST(GLambda, MultiplicativeOnDisjointParts) {
    for (std::uint64_t p : {2, 3}) {
        for (std::uint64_t n = 1; n <= 6; ++n) {
            for (const auto& a : enumerate_p_deprived(n, p)) {
                for (std::uint64_t m = 1; n + m <= 10; ++m) {
                    for (const auto& b : enumerate_p_deprived(m, p)) {
                        bool disjoint = true;
                        for (auto x : a.parts()) disjoint = disjoint && b.multiplicity(x) == 0;
                        if (!disjoint) continue;
                        EXPECT_EQ(g_lambda(multiply(a, b), p), g_lambda(a, p) * g_lambda(b, p));
                    }
                }
            }
        }
    }
}

TEST(Integrality, Examples) {
    EXPECT_TRUE(is_p_integral(g_lambda({1, 1, 1}, 3), 3));
    for (std::uint64_t n = 0; n <= 6; ++n) EXPECT_TRUE(is_p_integral(E(Partition(power({1}, n))), 2));
    EXPECT_FALSE(is_p_integral(P({1}, Rational(1, 3)), 3));
    EXPECT_FALSE(is_p_integral(e_in_p_basis(2) * Rational(1, 2), 2));
}

TEST(Evaluate, WorkedPolynomials) {
    EXPECT_EQ(evaluate(E({1}), kQ), Rational(-3));
    EXPECT_EQ(evaluate(E({5}), kQ), Rational(0));
    EXPECT_EQ(evaluate(P({2}), kP), Rational(-5));
    EXPECT_EQ(evaluate(P({8}), kQ), Rational(1231));
}

TEST(Newton, WorkedValuesAndSingleRoot) {
    EXPECT_EQ(newton_power_sum(kP, 5), Rational(-31));
    EXPECT_EQ(newton_power_sum(kQ, 16), Rational(563871));
    EXPECT_EQ(newton_power_sum(kQ, 0), Rational(4));
    const auto lin = MonicPoly<RationalRing>::from_display(Q2, {1, -3});
    for (std::uint64_t n = 0; n <= 10; ++n) {
        EXPECT_EQ(newton_power_sum(lin, n), Rational(ipow(Integer(3), n)));
    }
}

TEST(PowerPolynomial, WorkedValues) {
    EXPECT_EQ(power_polynomial(kP, 1), kP);
    EXPECT_EQ(power_polynomial(kP, 2), MonicPoly<RationalRing>::from_display(Q2, {1, 5, 9}));
    const auto lin = MonicPoly<RationalRing>::from_display(Q2, {1, -2});
    EXPECT_EQ(power_polynomial(lin, 5), MonicPoly<RationalRing>::from_display(Q2, {1, -32}));
}

TEST(PowerPolynomial, MatchesResultant) {
    const std::vector<std::vector<Integer>> polys{
        {1, 1, 3}, {1, 3, 5, 2, 6}, {1, -2, 0, 7}, {1, 0, -1}, {1, 4, -3, 2, -1}};
    for (const auto& display : polys) {
        std::vector<Rational> c(display.begin(), display.end());
        const auto Q = MonicPoly<RationalRing>::from_display(Q2, c);
        for (unsigned n = 1; n <= 5; ++n) {
            const auto expect = oracle::resultant_power_polynomial(display, n);
            EXPECT_EQ(power_polynomial(Q, n).display_coefficients(), expect) << n;
        }
    }
}

TEST(Text, Rendering) {
    EXPECT_EQ(e_in_p_basis(2).to_string(), "-1/2 p(2) + 1/2 p(1,1)");
    EXPECT_EQ(SymFuncExpr().to_string(), "0");
}
