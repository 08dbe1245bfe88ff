#include "nrssp/model.hpp"

#include <random>

#include <gtest/gtest.h>

#include "nrssp/gen.hpp"
#include "test_support.hpp"

namespace nrssp {
namespace {

using testing::R;
using testing::Rs;

Instance two_unit_jobs(std::vector<Rational> u, std::vector<Rational> b) {
    return Instance::from_vectors(Rs({"1", "1"}), Rs({"1", "1"}), std::move(u), std::move(b));
}

TEST(InstanceTest, RejectsInvalidData) {
    EXPECT_THROW(Instance({}, {{R("0"), R("1")}}), InvalidInstance);
    EXPECT_THROW(Instance({{R("1"), R("1")}}, {}), InvalidInstance);
    EXPECT_THROW(Instance::from_vectors(Rs({"0"}), Rs({"1"}), Rs({"0"}), Rs({"1"})),
                 InvalidInstance);
    EXPECT_THROW(Instance::from_vectors(Rs({"1"}), Rs({"-1"}), Rs({"0"}), Rs({"1"})),
                 InvalidInstance);
    EXPECT_THROW(Instance::from_vectors(Rs({"1"}), Rs({"1"}), Rs({"0"}), Rs({"0"})),
                 InvalidInstance);
    EXPECT_THROW(Instance::from_vectors(Rs({"1"}), Rs({"1"}), Rs({"-1/2"}), Rs({"1"})),
                 InvalidInstance);
    EXPECT_THROW(Instance::from_vectors(Rs({"1"}), Rs({"1"}), Rs({"1", "1"}), Rs({"1", "1"})),
                 InvalidInstance);
    EXPECT_THROW(Instance::from_vectors(Rs({"1"}), Rs({"1", "2"}), Rs({"0"}), Rs({"1"})),
                 DimensionMismatch);
}

TEST(ObjectiveTest, Examples) {
    const Instance tight = gen_tight(R("1/20"));
    EXPECT_EQ(objective(tight, {Rs({"1/20", "2/20", "22/20"})}), R("521/400"));
    EXPECT_EQ(objective(tight, {Rs({"23/20", "22/20", "21/20"})}), R("1318/400"));
    const Instance single = Instance::from_vectors(Rs({"1"}), Rs({"1"}), Rs({"0"}), Rs({"1"}));
    EXPECT_EQ(objective(single, {Rs({"1"})}), R("1"));
    EXPECT_THROW(objective(single, {Rs({"1", "2"})}), DimensionMismatch);
}

TEST(CumulativeSupplyTest, Examples) {
    const Instance tight = gen_tight(R("1/20"));
    EXPECT_EQ(cumulative_supply(tight, R("0")), R("19/20"));
    EXPECT_EQ(cumulative_supply(tight, R("1/20")), R("39/20"));
    EXPECT_EQ(cumulative_supply(tight, R("-1")), R("0"));
    EXPECT_EQ(cumulative_supply(tight, R("99/1000")), R("39/20"));
    EXPECT_EQ(cumulative_supply(tight, R("1/10")), R("3"));
    const Instance late = two_unit_jobs(Rs({"1", "3"}), Rs({"1", "1"}));
    EXPECT_EQ(cumulative_supply(late, R("1/2")), R("0"));
}

TEST(CheckFeasibilityTest, OptimalTightScheduleIsFeasible) {
    const Instance tight = gen_tight(R("1/20"));
    const FeasibilityReport report = check_feasibility(tight, {Rs({"1/20", "2/20", "22/20"})});
    EXPECT_TRUE(report.feasible);
    EXPECT_TRUE(report.violations.empty());
}

TEST(CheckFeasibilityTest, DetectsOverlap) {
    const Instance inst = two_unit_jobs(Rs({"0"}), Rs({"2"}));
    const FeasibilityReport report = check_feasibility(inst, {Rs({"1", "3/2"})});
    EXPECT_FALSE(report.feasible);
    ASSERT_EQ(report.violations.size(), 1u);
    const Violation& v = report.violations[0];
    EXPECT_EQ(v.kind, Violation::Kind::Overlap);
    EXPECT_EQ(v.job, 0u);
    EXPECT_EQ(v.other_job, 1u);
    EXPECT_EQ(v.time, R("1/2"));
}

TEST(CheckFeasibilityTest, TouchingIntervalsDoNotOverlap) {
    const Instance inst = two_unit_jobs(Rs({"0"}), Rs({"2"}));
    EXPECT_TRUE(check_feasibility(inst, {Rs({"1", "2"})}).feasible);
}

TEST(CheckFeasibilityTest, DetectsResourceShortfall) {
    const Instance inst = two_unit_jobs(Rs({"0", "3"}), Rs({"1", "1"}));
    const FeasibilityReport report = check_feasibility(inst, {Rs({"1", "3"})});
    EXPECT_FALSE(report.feasible);
    ASSERT_EQ(report.violations.size(), 1u);
    const Violation& v = report.violations[0];
    EXPECT_EQ(v.kind, Violation::Kind::ResourceBalance);
    EXPECT_EQ(v.job, 1u);
    EXPECT_EQ(v.time, R("2"));
    EXPECT_EQ(v.demand, R("2"));
    EXPECT_EQ(v.supply, R("1"));
    EXPECT_NE(v.describe().find("T = 2"), std::string::npos);
}

TEST(CheckFeasibilityTest, DetectsNegativeStartAndChecksBalanceAtZero) {
    const Instance inst = two_unit_jobs(Rs({"1", "2"}), Rs({"1", "1"}));
    const FeasibilityReport report = check_feasibility(inst, {Rs({"1/2", "3"})});
    ASSERT_FALSE(report.feasible);
    bool negative = false;
    bool balance_at_zero = false;
    for (const Violation& v : report.violations) {
        negative |= v.kind == Violation::Kind::NegativeStart && v.time == R("-1/2");
        balance_at_zero |= v.kind == Violation::Kind::ResourceBalance && v.time == R("0");
    }
    EXPECT_TRUE(negative);
    EXPECT_TRUE(balance_at_zero);
}

TEST(CheckFeasibilityTest, SimultaneousStartsAreAggregated) {
    // Two jobs starting together both draw at T = 0; overlap is reported too.
    const Instance inst = two_unit_jobs(Rs({"0"}), Rs({"1"}));
    const FeasibilityReport report = check_feasibility(inst, {Rs({"1", "1"})});
    ASSERT_FALSE(report.feasible);
    int balance = 0;
    for (const Violation& v : report.violations) {
        if (v.kind == Violation::Kind::ResourceBalance) {
            ++balance;
            EXPECT_EQ(v.demand, R("2"));
        }
    }
    EXPECT_EQ(balance, 1);
}

TEST(CheckFeasibilityTest, DimensionMismatch) {
    EXPECT_THROW(check_feasibility(gen_tight(R("1/20")), {Rs({"1"})}), DimensionMismatch);
}

TEST(CheckFeasibilityTest, AgreesWithDenseSampling) {
    std::mt19937_64 rng(11);
    int feasible_seen = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        const Instance inst = testing::random_instance(rng, 1, 5, 1, 4, false, trial % 2 == 0);
        Schedule sched = trial % 3 == 0 ? testing::random_staircase(rng, inst)
                                        : testing::random_schedule(rng, inst);
        const bool expected = testing::dense_feasible(inst, sched);
        feasible_seen += expected ? 1 : 0;
        ASSERT_EQ(check_feasibility(inst, sched).feasible, expected) << "trial " << trial;
    }
    EXPECT_GT(feasible_seen, 100);
}

TEST(NormalizeTest, Examples) {
    const Instance trimmed = normalize(two_unit_jobs(Rs({"0", "1"}), Rs({"1", "3"})));
    EXPECT_EQ(trimmed, two_unit_jobs(Rs({"0", "1"}), Rs({"1", "1"})));

    const Instance balanced = gen_tight(R("1/20"));
    EXPECT_EQ(normalize(balanced), balanced);

    const Instance three = Instance::from_vectors(Rs({"1", "1"}), Rs({"2", "2"}),
                                                  Rs({"0", "1", "2"}), Rs({"1", "1", "5"}));
    EXPECT_EQ(normalize(three), Instance::from_vectors(Rs({"1", "1"}), Rs({"2", "2"}),
                                                       Rs({"0", "1", "2"}), Rs({"1", "1", "2"})));
}

TEST(NormalizeTest, DropsEmptiedSupplies) {
    const Instance inst = two_unit_jobs(Rs({"0", "1", "2"}), Rs({"2", "1", "1"}));
    EXPECT_EQ(normalize(inst), two_unit_jobs(Rs({"0"}), Rs({"2"})));
}

TEST(NormalizeTest, RejectsShortSupply) {
    EXPECT_THROW(normalize(two_unit_jobs(Rs({"0"}), Rs({"3/2"}))), InfeasibleInstance);
}

TEST(NormalizeTest, PreservesFeasibilityAndObjective) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 1000; ++trial) {
        const Instance inst = testing::random_instance(rng, 1, 5, 1, 4, false, true);
        const Instance norm = normalize(inst);
        ASSERT_EQ(norm.total_supply(), norm.total_requirement());
        ASSERT_EQ(norm.jobs(), inst.jobs());
        for (int k = 0; k < 5; ++k) {
            const Schedule sched = k % 2 ? testing::random_staircase(rng, inst)
                                         : testing::random_schedule(rng, inst);
            ASSERT_EQ(check_feasibility(norm, sched).feasible,
                      check_feasibility(inst, sched).feasible);
            ASSERT_EQ(objective(norm, sched), objective(inst, sched));
        }
    }
}

TEST(ScaleResourcesTest, Examples) {
    const Instance inst = Instance::from_vectors(Rs({"1", "1"}), Rs({"2", "4"}), Rs({"0"}),
                                                 Rs({"6"}));
    const Instance scaled = scale_resources(inst, R("1/4"));
    EXPECT_EQ(scaled.a(0), R("1/2"));
    EXPECT_EQ(scaled.a(1), R("1"));
    EXPECT_EQ(scaled.max_ratio(), R("1"));
    EXPECT_EQ(scaled.supply(0).amount, R("3/2"));
    EXPECT_EQ(scaled.jobs()[0].processing, R("1"));

    EXPECT_EQ(scale_resources(inst, R("1")), inst);

    const Instance tight = gen_tight(R("1/20"));
    EXPECT_EQ(tight.max_ratio(), R("20"));
    const Instance tight_scaled = scale_resources(tight, R("1/20"));
    EXPECT_EQ(tight_scaled.a(0), R("19/400"));
    EXPECT_EQ(tight_scaled.a(1), R("1/20"));
    EXPECT_EQ(tight_scaled.a(2), R("21/400"));
    EXPECT_EQ(tight_scaled.max_ratio(), R("1"));
    EXPECT_EQ(tight_scaled.supply(1).time, R("1/20"));

    EXPECT_THROW(scale_resources(inst, R("0")), std::invalid_argument);
    EXPECT_THROW(scale_resources(inst, R("-1")), std::invalid_argument);
}

TEST(ScaleResourcesTest, FeasibilityIsInvariant) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 1000; ++trial) {
        const Instance inst = testing::random_instance(rng, 1, 5, 1, 4, false);
        const Rational c(std::uniform_int_distribution<int>(1, 50)(rng),
                         std::uniform_int_distribution<int>(1, 50)(rng));
        const Instance scaled = scale_resources(inst, c);
        const Schedule sched = testing::random_schedule(rng, inst);
        ASSERT_EQ(check_feasibility(scaled, sched).feasible,
                  check_feasibility(inst, sched).feasible);
    }
}

TEST(OrderStatsTest, TightExample) {
    const OrderStats stats =
        compute_order_stats(gen_tight(R("1/20")), Permutation::from_one_based({3, 2, 1}));
    EXPECT_EQ(stats.natural_tail, Rs({"3", "41/20", "21/20", "0"}));
    EXPECT_EQ(stats.permuted_tail, Rs({"3", "39/20", "19/20", "0"}));
    // (1, 1, 2, 4) in 1-based positions.
    EXPECT_EQ(stats.lambda, (std::vector<std::size_t>{0, 0, 1, 3}));
    EXPECT_EQ(stats.ratio, Rs({"19", "20", "21/20"}));
}

TEST(OrderStatsTest, SingleJob) {
    const Instance inst = Instance::from_vectors(Rs({"2"}), Rs({"5/3"}), Rs({"0"}), Rs({"5/3"}));
    const OrderStats stats = compute_order_stats(inst, Permutation::identity(1));
    EXPECT_EQ(stats.natural_tail, Rs({"5/3", "0"}));
    EXPECT_EQ(stats.permuted_tail, Rs({"5/3", "0"}));
    EXPECT_EQ(stats.lambda, (std::vector<std::size_t>{0, 1}));
}

TEST(OrderStatsTest, IdentityOrder) {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 200; ++trial) {
        const Instance inst = testing::random_instance(rng, 1, 8, 1, 3, false);
        const OrderStats stats = compute_order_stats(inst, Permutation::identity(inst.job_count()));
        ASSERT_EQ(stats.natural_tail, stats.permuted_tail);
        for (std::size_t j = 0; j <= inst.job_count(); ++j) ASSERT_EQ(stats.lambda[j], j);
    }
}

TEST(OrderStatsTest, LambdaBracketsTheNaturalTail) {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 2000; ++trial) {
        const Instance inst = testing::random_instance(rng, 1, 8, 1, 3, false);
        const std::size_t n = inst.job_count();
        const OrderStats stats =
            compute_order_stats(inst, Permutation(testing::random_order(rng, n)));
        ASSERT_EQ(stats.natural_tail[n], R("0"));
        ASSERT_EQ(stats.permuted_tail[n], R("0"));
        ASSERT_EQ(stats.lambda[n], n);
        for (std::size_t j = 0; j < n; ++j) {
            ASSERT_GE(stats.natural_tail[j], stats.natural_tail[j + 1]);
            ASSERT_GE(stats.permuted_tail[j], stats.permuted_tail[j + 1]);
            const std::size_t k = stats.lambda[j];
            ASSERT_LT(k, n);
            ASSERT_LT(stats.permuted_tail[k + 1], stats.natural_tail[j]);
            ASSERT_LE(stats.natural_tail[j], stats.permuted_tail[k]);
        }
    }
}

TEST(PermutationTest, Validation) {
    EXPECT_THROW(Permutation({0, 0}), std::invalid_argument);
    EXPECT_THROW(Permutation({0, 2}), std::invalid_argument);
    EXPECT_THROW(Permutation::from_one_based({0, 1}), std::invalid_argument);
    const Permutation o = Permutation::from_one_based({3, 1, 2});
    EXPECT_EQ(o[0], 2u);
    EXPECT_EQ(o.to_string(), "(3, 1, 2)");
    EXPECT_EQ(o.one_based(), (std::vector<std::size_t>{3, 1, 2}));
}

}  // namespace
}  // namespace nrssp
