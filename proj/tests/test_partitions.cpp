#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "pcong/partition.hpp"

using namespace pcong;

TEST(Partition, NormalizesAndRejectsZero) {
    EXPECT_EQ(Partition({1, 3, 2}).parts(), (std::vector<std::uint64_t>{3, 2, 1}));
    EXPECT_THROW(Partition({2, 0}), precondition_error);
    EXPECT_EQ(Partition().to_string(), "()");
    EXPECT_EQ(Partition({3, 3, 1, 1}).to_string(), "(3,3,1,1)");
}

TEST(PartitionStats, EmptyPartition) {
    const auto s = partition_stats(Partition(), 2);
    EXPECT_EQ(s.weight, 0U);
    EXPECT_EQ(s.z, 1);
    EXPECT_EQ(s.sign, 1);
    EXPECT_TRUE(s.vp.is_infinite());
}

TEST(PartitionStats, TwoOne) {
    const auto s = partition_stats({2, 1}, 2);
    EXPECT_EQ(s.weight, 3U);
    EXPECT_EQ(s.z, 2);
    EXPECT_EQ(s.sign, -1);
    EXPECT_EQ(s.vp, Valuation(0));
    EXPECT_EQ(partition_vp({27}, 3), Valuation(3));
}

TEST(PartitionStats, CentralizerOrdersMatchSymmetricGroup) {
    for (unsigned n = 1; n <= 7; ++n) {
        const auto counts = oracle::cycle_type_counts(n);
        const auto parts = enumerate_partitions(n);
        ASSERT_EQ(parts.size(), counts.size());
        for (const auto& lambda : parts) {
            const Integer nfact = factorial(n);
            const Integer z = z_lambda(lambda);
            EXPECT_EQ(nfact % z, 0);
            EXPECT_EQ(Integer(nfact / z), Integer(static_cast<unsigned long>(counts.at(lambda.parts()))))
                << lambda.to_string();
        }
    }
}

TEST(Enumerate, SmallCases) {
    EXPECT_EQ(enumerate_partitions(0), std::vector<Partition>{Partition()});
    EXPECT_EQ(enumerate_partitions(1), std::vector<Partition>{Partition({1})});
    const std::vector<Partition> four{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    EXPECT_EQ(enumerate_partitions(4), four);
    EXPECT_THROW(enumerate_partitions(41), bound_exceeded);
    EXPECT_NO_THROW(enumerate_partitions(41, 41));
}

TEST(Enumerate, CountsMatchRecurrence) {
    for (std::uint64_t n = 0; n <= 25; ++n) {
        const auto all = enumerate_partitions(n);
        EXPECT_EQ(all.size(), oracle::partition_count(n)) << n;
        EXPECT_TRUE(std::is_sorted(all.begin(), all.end(), std::greater<>()));
        EXPECT_EQ(std::set<Partition>(all.begin(), all.end()).size(), all.size());
    }
}

TEST(Products, MultiplyAndPower) {
    EXPECT_EQ(multiply({3, 1}, {2, 1}), Partition({3, 2, 1, 1}));
    EXPECT_EQ(power({2}, 3), Partition({2, 2, 2}));
    EXPECT_EQ(multiply({5, 2}, Partition()), Partition({5, 2}));
    EXPECT_EQ(power({4, 1}, 0), Partition());
    EXPECT_EQ(scale({3, 1}, 2), Partition({6, 2}));
}

TEST(PDeprived, Representatives) {
    EXPECT_EQ(p_deprived_representative({6, 2}, 2), Partition({3, 3, 1, 1}));
    EXPECT_EQ(p_deprived_representative({4}, 2), Partition({1, 1, 1, 1}));
    EXPECT_EQ(p_deprived_representative({5, 1}, 3), Partition({5, 1}));
    for (std::uint64_t p : {2, 3, 5}) {
        for (const auto& lambda : enumerate_partitions(9)) {
            const Partition r = p_deprived_representative(lambda, p);
            EXPECT_TRUE(is_p_deprived(r, p));
            EXPECT_EQ(p_deprived_representative(r, p), r);
            EXPECT_EQ(r.weight(), lambda.weight());
        }
    }
}

TEST(PEquivalence, WorkedClasses) {
    const std::vector<Partition> cls{{6, 2}, {6, 1, 1}, {3, 3, 2}, {3, 3, 1, 1}};
    EXPECT_EQ(p_equivalence_class({3, 3, 1, 1}, 2), cls);
    EXPECT_EQ(p_equivalence_class({1, 1}, 2), (std::vector<Partition>{{2}, {1, 1}}));
    EXPECT_EQ(p_equivalence_class({2, 1}, 3), std::vector<Partition>{Partition({2, 1})});
    EXPECT_TRUE(are_p_equivalent({6, 2}, {3, 3, 2}, 2));
    EXPECT_TRUE(are_p_equivalent({4, 1}, {4, 1}, 5));
    EXPECT_FALSE(are_p_equivalent({2}, {1, 1}, 3));
    EXPECT_EQ(p_equivalence_class(Partition(), 2), std::vector<Partition>{Partition()});
}

TEST(PEquivalence, ClassesPartitionEveryGrade) {
    for (std::uint64_t p : {2, 3, 5}) {
        for (std::uint64_t n = 0; n <= 15; ++n) {
            std::set<Partition> seen;
            std::size_t total = 0;
            for (const auto& rep : enumerate_p_deprived(n, p)) {
                const auto cls = p_equivalence_class(rep, p);
                total += cls.size();
                seen.insert(cls.begin(), cls.end());
            }
            EXPECT_EQ(total, seen.size()) << "classes overlap at n=" << n;
            EXPECT_EQ(seen.size(), oracle::partition_count(n)) << n;
        }
    }
}

TEST(PEquivalence, MatchesSplittingClosure) {
    for (std::uint64_t p : {2, 3}) {
        for (std::uint64_t n = 1; n <= 10; ++n) {
            for (const auto& lambda : enumerate_partitions(n)) {
                const auto cls = p_equivalence_class(lambda, p);
                const auto bfs = oracle::splitting_closure(lambda, p);
                EXPECT_EQ(std::set<Partition>(cls.begin(), cls.end()), bfs) << lambda.to_string();
            }
        }
    }
}

TEST(Signs, MultiplicativeAndClassConstantForOddP) {
    const auto parts = enumerate_partitions(6);
    for (const auto& a : parts) {
        for (const auto& b : enumerate_partitions(4)) {
            EXPECT_EQ(partition_sign(multiply(a, b)), partition_sign(a) * partition_sign(b));
        }
    }
    for (std::uint64_t p : {3, 5}) {
        for (std::uint64_t n = 1; n <= 12; ++n) {
            for (const auto& rep : enumerate_p_deprived(n, p)) {
                for (const auto& mu : p_equivalence_class(rep, p)) {
                    EXPECT_EQ(partition_sign(mu), partition_sign(rep));
                }
            }
        }
    }
}

TEST(Valuations, PowersOfPartitions) {
    for (std::uint64_t p : {2, 3}) {
        for (const auto& lambda : enumerate_partitions(5)) {
            std::uint64_t pk = 1;
            for (long k = 0; k <= 2; ++k, pk *= p) {
                EXPECT_EQ(partition_vp(scale(lambda, pk), p),
                          partition_vp(lambda, p) + Valuation(k));
                EXPECT_EQ(partition_vp(power(lambda, pk), p), partition_vp(lambda, p));
            }
        }
    }
}
