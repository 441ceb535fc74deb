#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "pcong/evaluation.hpp"
#include "pcong/module_compare.hpp"
#include "pcong/rational_ring.hpp"

using namespace pcong;

TEST(Traces, CompanionOfWorkedPolynomial) {
    const auto t = trace_powers(IntegerMatrix::companion({1, 1, 3}), 5).traces;
    EXPECT_EQ(t, (std::vector<Integer>{2, -1, -5, 8, 7, -31}));
}

TEST(Traces, IdentityZeroAndEmpty) {
    for (auto v : trace_powers(IntegerMatrix::identity(3), 6).traces) EXPECT_EQ(v, 3);
    const auto z = trace_powers(IntegerMatrix::zero(4), 3).traces;
    EXPECT_EQ(z, (std::vector<Integer>{4, 0, 0, 0}));
    EXPECT_EQ(trace_powers(IntegerMatrix(0), 3).traces, (std::vector<Integer>{0, 0, 0, 0}));
}

TEST(Charpoly, WorkedExamples) {
    EXPECT_EQ(charpoly(IntegerMatrix::companion({1, 3, 5, 2, 6})), (std::vector<Integer>{1, 3, 5, 2, 6}));
    EXPECT_EQ(charpoly_mod_p(IntegerMatrix::companion({1, 3, 5, 2, 6}), 2).to_string(), "X^4 + X^3 + X^2");
    EXPECT_EQ(charpoly(IntegerMatrix::diagonal({1, 2, 3})), (std::vector<Integer>{1, -6, 11, -6}));
    EXPECT_EQ(charpoly(IntegerMatrix(0)), std::vector<Integer>{1});
}

TEST(Charpoly, MatchesInterpolatedDeterminant) {
    gen::Source src(3);
    for (int trial = 0; trial < 60; ++trial) {
        const IntegerMatrix M = src.matrix(1 + src.index(6));
        EXPECT_EQ(charpoly(M), oracle::interpolated_charpoly(M));
    }
}

TEST(Traces, MatchNewtonOnCharpoly) {
    gen::Source src(4);
    const RationalRing ring(2);
    for (int trial = 0; trial < 40; ++trial) {
        const IntegerMatrix M = src.matrix(1 + src.index(6));
        const auto cp = charpoly(M);
        const auto Q = MonicPoly<RationalRing>::from_display(ring, std::vector<Rational>(cp.begin(), cp.end()));
        const auto newton = newton_power_sums(Q, 12);
        const auto tr = trace_powers(M, 12).traces;
        for (std::size_t n = 0; n <= 12; ++n) EXPECT_EQ(Rational(tr[n]), newton[n]);
    }
}

TEST(SsIsomorphic, Examples) {
    for (std::uint64_t p : {2, 3, 5}) {
        const auto r = ss_isomorphic(IntegerMatrix::scalar(p, Integer(4)),
                                     IntegerMatrix::scalar(p, Integer(4 + static_cast<long>(p))), p);
        EXPECT_TRUE(r.verdict);
        EXPECT_TRUE(r.oracle);
    }
    const IntegerMatrix M = IntegerMatrix::companion({1, 3, 5, 2, 6});
    EXPECT_TRUE(ss_isomorphic(M, M, 2).verdict);
    const auto bad = ss_isomorphic(IntegerMatrix::identity(2), IntegerMatrix::diagonal({1, 2}), 2);
    EXPECT_FALSE(bad.verdict);
    EXPECT_FALSE(bad.oracle);
    EXPECT_FALSE(bad.report.rows[0].deep_pass);
    EXPECT_FALSE(ss_isomorphic(IntegerMatrix::identity(2), IntegerMatrix::identity(3), 2).verdict);
}

TEST(SsIsomorphic, FactorReport) {
    const auto r = ss_isomorphic(IntegerMatrix::companion({1, 3, 5, 2, 6}),
                                 IntegerMatrix::companion({1, 1, 1, 0, 0}), 2);
    EXPECT_TRUE(r.verdict);
    ASSERT_EQ(r.factors_M.size(), 2U);
    EXPECT_EQ(r.factors_M[0].factor.to_string(), "X");
    EXPECT_EQ(r.factors_M[0].multiplicity, 2U);
    EXPECT_EQ(r.factors_M[1].factor.to_string(), "X^2 + X + 1");
}

TEST(Virtual, Examples) {
    const IntegerMatrix empty(0);
    EXPECT_TRUE(virtual_compare(IntegerMatrix::diagonal({1, 3}), IntegerMatrix::diagonal({1}),
                                IntegerMatrix::diagonal({1}), empty, 2, 10)
                    .verdict);
    const auto bad = virtual_compare(IntegerMatrix::diagonal({1, 2}), IntegerMatrix::diagonal({1}),
                                     IntegerMatrix::diagonal({3}), empty, 2);
    EXPECT_FALSE(bad.verdict);
    EXPECT_EQ(bad.first_failure, 1U);
    const IntegerMatrix M = IntegerMatrix::companion({1, 2, 7});
    const IntegerMatrix N = IntegerMatrix::diagonal({5});
    EXPECT_TRUE(virtual_compare(M, N, M, N, 3).verdict);
    EXPECT_THROW(virtual_compare(M, N, M, N, 3, 1), precondition_error);
}

TEST(Virtual, RankIdentityAtZero) {
    const auto r = virtual_compare(IntegerMatrix::identity(2), IntegerMatrix(0),
                                   IntegerMatrix::identity(1), IntegerMatrix(0), 2, 4);
    EXPECT_FALSE(r.rows[0].pass);
    EXPECT_EQ(r.first_failure, 0U);
}

TEST(InvariantFactors, Examples) {
    EXPECT_EQ(invariant_factors_mod_p(IntegerMatrix::companion({1, 1, 3}), 5),
              std::vector<FpPoly>{FpPoly(5, {3, 1, 1})});
    const auto scalar = invariant_factors_mod_p(IntegerMatrix::scalar(3, Integer(4)), 3);
    EXPECT_EQ(scalar, std::vector<FpPoly>(3, FpPoly::linear(3, 1)));
    const auto d = invariant_factors_mod_p(IntegerMatrix::diagonal({1, 1, 2}), 3);
    EXPECT_EQ(d, (std::vector<FpPoly>{FpPoly::linear(3, 1), FpPoly::linear(3, 1) * FpPoly::linear(3, 2)}));
    EXPECT_TRUE(invariant_factors_mod_p(IntegerMatrix(0), 2).empty());
}

TEST(InvariantFactors, DiagonalOracle) {
    gen::Source src(8);
    for (int trial = 0; trial < 80; ++trial) {
        const std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5}[src.index(3)];
        std::vector<std::int64_t> a;
        std::vector<Integer> ai;
        for (std::size_t i = 0, d = 1 + src.index(6); i < d; ++i) {
            a.push_back(src.integer(-4, 4));
            ai.emplace_back(static_cast<long>(a.back()));
        }
        EXPECT_EQ(invariant_factors_mod_p(IntegerMatrix::diagonal(ai), p),
                  oracle::diagonal_invariant_factors(a, p));
    }
}

TEST(InvariantFactors, ProductAndDivisibility) {
    gen::Source src(9);
    for (int trial = 0; trial < 80; ++trial) {
        const std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5}[src.index(3)];
        const IntegerMatrix M = src.matrix(1 + src.index(5), -3, 3);
        const auto fs = invariant_factors_mod_p(M, p);
        FpPoly prod = FpPoly::constant(p, 1);
        for (std::size_t i = 0; i < fs.size(); ++i) {
            prod = prod * fs[i];
            if (i > 0) EXPECT_TRUE((fs[i] % fs[i - 1]).is_zero());
        }
        EXPECT_EQ(prod, charpoly_mod_p(M, p));
    }
}

TEST(Embedding, InvariantFactorCriterion) {
    EXPECT_TRUE(embedding_possible(IntegerMatrix::diagonal({1}), IntegerMatrix::diagonal({1, 3}), 2));
    EXPECT_FALSE(embedding_possible(IntegerMatrix::identity(2), IntegerMatrix::companion({1, -2, 1}), 5));
    EXPECT_TRUE(embedding_possible(IntegerMatrix::diagonal({1}), IntegerMatrix::companion({1, -2, 1}), 5));
    EXPECT_FALSE(embedding_possible(IntegerMatrix::identity(3), IntegerMatrix::identity(2), 2));
}
