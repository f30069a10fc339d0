// Copyright 2026 The cfgkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace cfgkit {
namespace {

using testing::read_fixture;

std::vector<std::string> lines(const IneqSystem& sys) {
  std::vector<std::string> out;
  for (const auto& c : sys.constraints()) out.push_back(c.str());
  return out;
}

class RunningSystems : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { analysis_ = new UldAnalysis(analyze(testing::running_example_lattice())); }
  static void TearDownTestSuite() { delete analysis_; }
  static const IrreducibleContext& ctx() { return analysis_->context; }
  static UldAnalysis* analysis_;
};
UldAnalysis* RunningSystems::analysis_ = nullptr;

TEST(VarIds, Naming) {
  EXPECT_EQ(VarId::w("a").str(), "w[a]");
  EXPECT_EQ(VarId::e("x", "m").str(), "e[x->m]");
  EXPECT_THROW(VarId::e("m", "m"), PreconditionError);
  EXPECT_NE(VarId::w("a"), VarId::e("b", "a"));
}

TEST(SystemDump, ParseRoundTrip) {
  IneqSystem sys = parse_system("w[a] <= e[b->a] + 2*e[c->a]\ne[c->a] > w[a]\nw[b] >= 1\ne[b->a] = e[a->b]\n");
  EXPECT_EQ(lines(sys), (std::vector<std::string>{"w[a] <= e[b->a] + 2*e[c->a]", "w[a] < e[c->a]",
                                                  "w[b] >= 1", "e[b->a] = e[a->b]"}));
  EXPECT_EQ(parse_system(sys.str()).canonical_set(), sys.canonical_set());
}

TEST(SystemDump, Errors) {
  EXPECT_THROW(parse_system("w[a] e[b->a]\n"), ParseError);
  EXPECT_THROW(parse_system("w[a] <= e[a->a]\n"), ParseError);
  try {
    parse_system("w[a] >= 1\nw[a] <= + e[b->a]\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST_F(RunningSystems, SingleThresholds) {
  EXPECT_EQ(lines(build_threshold_system(ctx(), "c8")), std::vector<std::string>{"w[c8] >= 1"});
  EXPECT_EQ(lines(build_threshold_system(ctx(), "c9")), std::vector<std::string>{"w[c9] >= 1"});
}

TEST_F(RunningSystems, ThreeConstraintSystems) {
  EXPECT_EQ(build_threshold_system(ctx(), "c6").canonical_set(),
            parse_system("w[c6] <= e[c8->c6]\nw[c6] <= e[c7->c6] + e[c9->c6]\ne[c9->c6] < w[c6]\n").canonical_set());
  EXPECT_EQ(build_threshold_system(ctx(), "c7").canonical_set(),
            parse_system("w[c7] <= e[c9->c7]\nw[c7] <= e[c6->c7] + e[c8->c7]\ne[c8->c7] < w[c7]\n").canonical_set());
  const IneqSystem e6 = build_threshold_system(ctx(), "c6");
  ASSERT_FALSE(e6.variables().empty());
  EXPECT_EQ(e6.variables().front(), VarId::w("c6"));
  EXPECT_EQ(e6.e_variable_count(), 3u);
}

TEST_F(RunningSystems, NotMeetIrreducible) { EXPECT_THROW(build_threshold_system(ctx(), "nope"), PreconditionError); }

TEST_F(RunningSystems, NonStrictVersion) {
  IneqSystem p = make_nonstrict(build_threshold_system(ctx(), "c6"));
  EXPECT_FALSE(p.has_strict());
  EXPECT_TRUE(p.canonical_set().count("e[c9->c6] + 1 <= w[c6]"));
  EXPECT_EQ(lines(make_nonstrict(build_threshold_system(ctx(), "c8"))), std::vector<std::string>{"w[c8] >= 1"});
  EXPECT_TRUE(make_nonstrict(IneqSystem{}).constraints().empty());
}

TEST_F(RunningSystems, SolveAndSubstitute) {
  IneqSystem strict = build_threshold_system(ctx(), "c6");
  IneqSystem p = make_nonstrict(strict);
  auto sol = solve_nonneg(p);
  ASSERT_TRUE(sol);
  EXPECT_TRUE(sol->satisfies(p));
  Solution given;
  given.values = {{VarId::w("c6"), 1}, {VarId::e("c8", "c6"), 1}, {VarId::e("c7", "c6"), 1}, {VarId::e("c9", "c6"), 0}};
  EXPECT_TRUE(given.satisfies(p));
  EXPECT_THROW(solve_nonneg(strict), PreconditionError);
}

TEST_F(RunningSystems, IntegerizeScalesByTwiceN) {
  IneqSystem strict = build_threshold_system(ctx(), "c6");
  Solution given;
  given.values = {{VarId::w("c6"), 1}, {VarId::e("c8", "c6"), 1}, {VarId::e("c7", "c6"), 1}, {VarId::e("c9", "c6"), 0}};
  IntegerSolution f = integerize(given, strict, ctx(), "c6");
  EXPECT_EQ(f.at(VarId::e("c8", "c6")), 6);
  EXPECT_EQ(f.at(VarId::e("c7", "c6")), 6);
  EXPECT_EQ(f.at(VarId::e("c9", "c6")), 0);
  EXPECT_EQ(f.at(VarId::w("c6")), 6);
  EXPECT_TRUE(f.satisfies(strict));
}

TEST_F(RunningSystems, IntegerizeUnitThreshold) {
  IneqSystem strict = build_threshold_system(ctx(), "c8");
  Solution s;
  s.values = {{VarId::w("c8"), 1}};
  EXPECT_EQ(integerize(s, strict, ctx(), "c8").at(VarId::w("c8")), 1);
}

TEST(Integerize, HalfIntegral) {
  UldAnalysis a = testing::analyze_game(testing::two_parent_game());
  ASSERT_EQ(a.context.meet_irreducibles, (std::vector<ElementId>{"m", "x", "y"}));
  IneqSystem strict = build_threshold_system(a.context, "m");
  ASSERT_EQ(strict.e_variable_count(), 2u);
  Solution half;
  for (const auto& v : strict.variables()) half.values[v] = Rational(1, 2);
  IntegerSolution f = integerize(half, strict, a.context, "m");
  EXPECT_EQ(f.at(VarId::e("x", "m")), 2);
  EXPECT_EQ(f.at(VarId::e("y", "m")), 2);
  EXPECT_EQ(f.at(VarId::w("m")), 4);
  EXPECT_TRUE(f.satisfies(strict));
}

TEST(Simplex, Basics) {
  auto one = solve_nonneg(parse_system("w[a] >= 1\n"));
  ASSERT_TRUE(one);
  EXPECT_GE(one->at(VarId::w("a")), 1);
  EXPECT_FALSE(solve_nonneg(parse_system("w[a] + w[b] <= 1\nw[a] >= 2\n")));
  EXPECT_FALSE(solve_nonneg(parse_system("w[a] = 1\nw[a] = 2\n")));
  EXPECT_FALSE(solve_nonneg(parse_system("w[a] + 1 <= 0\n")));
  auto exact = solve_nonneg(parse_system("3*w[a] = 1\n"));
  ASSERT_TRUE(exact);
  EXPECT_EQ(exact->at(VarId::w("a")), Rational(1, 3));
  EXPECT_TRUE(solve_nonneg(IneqSystem{}));
}

TEST(Simplex, Deterministic) {
  IneqSystem sys = parse_system(read_fixture("running_omega.txt"));
  IneqSystem p = make_nonstrict(sys);
  auto a = solve_nonneg(p), b = solve_nonneg(p);
  ASSERT_TRUE(a && b);
  EXPECT_EQ(a->values, b->values);
}

TEST(Simplex, DegenerateCyclingCandidate) {
  // Beale's classic cycling example as a feasibility problem with an extra
  // bound that forces pivots through degenerate vertices.
  IneqSystem sys = parse_system(
      "w[a] + w[b] + w[c] + w[d] >= 1\n"
      "w[a] - 32*w[b] - 4*w[c] + 36*w[d] <= 0\n"
      "w[a] - 24*w[b] - w[c] + 6*w[d] <= 0\n"
      "w[c] <= 1\n");
  auto sol = solve_nonneg(sys);
  ASSERT_TRUE(sol);
  EXPECT_TRUE(sol->satisfies(sys));
}

TEST(JointSystem, RunningLatticeMatchesFixture) {
  UldAnalysis a = analyze(testing::running_example_lattice());
  IneqSystem omega = build_joint_system(a.context);
  IneqSystem expected = parse_system(read_fixture("running_omega.txt"));
  EXPECT_EQ(omega.constraints().size(), 9u);
  EXPECT_EQ(omega.canonical_set(), expected.canonical_set());
}

TEST(JointSystem, DiamondHasNoEqualities) {
  UldAnalysis a = analyze(testing::diamond());
  EXPECT_EQ(build_joint_system(a.context).canonical_set(), (std::set<std::string>{"w[a] >= 1", "w[b] >= 1"}));
}

TEST(JointSystem, StrictnessFixtureInfeasible) {
  IneqSystem omega = parse_system(read_fixture("asm_strictness_omega.txt"));
  EXPECT_EQ(omega.constraints().size(), 19u);
  EXPECT_EQ(omega.canonical_set().size(), 18u);
  EXPECT_FALSE(solve_nonneg(make_nonstrict(omega)));
}

TEST(JointSystem, IntegerizeRunningExample) {
  UldAnalysis a = analyze(testing::running_example_lattice());
  IneqSystem omega = build_joint_system(a.context);
  auto sol = solve_nonneg(make_nonstrict(omega));
  ASSERT_TRUE(sol);
  IntegerSolution f = integerize_joint(*sol, omega, a.context);
  EXPECT_TRUE(f.satisfies(omega));
}

}  // namespace
}  // namespace cfgkit
