#include <gtest/gtest.h>

#include "gcurv/simplex.hpp"
#include "oracles.hpp"

namespace gcurv {
namespace {

using testing::R;
using testing::Rs;

// min -x - y  s.t.  x + 2y + s1 = 4, 3x + y + s2 = 6  -> x = 8/5, y = 6/5.
TEST(SimplexTest, SmallOptimum) {
    LinearProgram lp;
    lp.a = {Rs({"1", "2", "1", "0"}), Rs({"3", "1", "0", "1"})};
    lp.b = Rs({"4", "6"});
    lp.c = Rs({"-1", "-1", "0", "0"});
    const auto r = solve_lp(lp);
    ASSERT_EQ(r.status, LpStatus::Optimal);
    EXPECT_EQ(r.x[0], R("8/5"));
    EXPECT_EQ(r.x[1], R("6/5"));
    EXPECT_EQ(r.objective, R("-14/5"));
}

TEST(SimplexTest, NeedsPhaseOne) {
    // min x + y  s.t.  x + y - s = 2,  x - y = 0.
    LinearProgram lp;
    lp.a = {Rs({"1", "1", "-1"}), Rs({"1", "-1", "0"})};
    lp.b = Rs({"2", "0"});
    lp.c = Rs({"1", "1", "0"});
    const auto r = solve_lp(lp);
    ASSERT_EQ(r.status, LpStatus::Optimal);
    EXPECT_EQ(r.x[0], R("1"));
    EXPECT_EQ(r.x[1], R("1"));
    EXPECT_EQ(r.objective, R("2"));
}

TEST(SimplexTest, NegativeRightHandSide) {
    // -x = -3  ->  x = 3.
    LinearProgram lp;
    lp.a = {Rs({"-1"})};
    lp.b = Rs({"-3"});
    lp.c = Rs({"1"});
    const auto r = solve_lp(lp);
    ASSERT_EQ(r.status, LpStatus::Optimal);
    EXPECT_EQ(r.x[0], R("3"));
}

TEST(SimplexTest, Infeasible) {
    LinearProgram lp;
    lp.a = {Rs({"1", "1"})};
    lp.b = Rs({"-1"});
    lp.c = Rs({"0", "0"});
    EXPECT_EQ(solve_lp(lp).status, LpStatus::Infeasible);
}

TEST(SimplexTest, Unbounded) {
    LinearProgram lp;
    lp.a = {Rs({"1", "-1"})};
    lp.b = Rs({"1"});
    lp.c = Rs({"-1", "0"});
    EXPECT_EQ(solve_lp(lp).status, LpStatus::Unbounded);
}

TEST(SimplexTest, RedundantRowsAreDropped) {
    // The second and third rows repeat the first.
    LinearProgram lp;
    lp.a = {Rs({"1", "1", "1"}), Rs({"2", "2", "2"}), Rs({"1", "1", "1"})};
    lp.b = Rs({"3", "6", "3"});
    lp.c = Rs({"1", "2", "3"});
    const auto r = solve_lp(lp);
    ASSERT_EQ(r.status, LpStatus::Optimal);
    EXPECT_EQ(r.objective, R("3"));
    EXPECT_EQ(r.x, Rs({"3", "0", "0"}));
}

// Beale's example cycles forever under Dantzig's largest-coefficient rule.
// Optimum: x1 = 1/25, x3 = 1, objective -1/20.
TEST(SimplexTest, BlandRuleTerminatesOnBealeExample) {
    LinearProgram lp;
    lp.a = {Rs({"1/4", "-60", "-1/25", "9", "1", "0", "0"}),
            Rs({"1/2", "-90", "-1/50", "3", "0", "1", "0"}),
            Rs({"0", "0", "1", "0", "0", "0", "1"})};
    lp.b = Rs({"0", "0", "1"});
    lp.c = Rs({"-3/4", "150", "-1/50", "6", "0", "0", "0"});
    const auto r = solve_lp(lp);
    ASSERT_EQ(r.status, LpStatus::Optimal);
    EXPECT_EQ(r.objective, R("-1/20"));
    EXPECT_EQ(r.x[0], R("1/25"));
    EXPECT_EQ(r.x[2], R("1"));
}

TEST(SimplexTest, ShapeErrors) {
    LinearProgram lp;
    lp.a = {Rs({"1", "1"})};
    lp.b = Rs({"1", "2"});
    lp.c = Rs({"0", "0"});
    EXPECT_THROW(solve_lp(lp), Error);
}

}  // namespace
}  // namespace gcurv
