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

TEST(MultiGraphText, ParseAndPrint) {
  MultiGraph g = parse_multigraph("# star\nv a 1\nv b 1\nv b 1\nlonely\n");
  EXPECT_EQ(g.vertices(), (std::vector<VertexId>{"a", "b", "lonely", "v"}));
  EXPECT_EQ(g.multiplicity(g.index_of("v"), g.index_of("b")), 2u);
  EXPECT_EQ(g.out_degree(g.index_of("v")), 3u);
  EXPECT_EQ(g.in_degree(g.index_of("b")), 2u);
  EXPECT_EQ(parse_multigraph(to_text(g)), g);
  EXPECT_THROW(parse_multigraph("a b 0\n"), ParseError);
  EXPECT_THROW(parse_multigraph("a b x\n"), ParseError);
}

TEST(ConfigurationText, UnknownVertex) {
  MultiGraph g = parse_multigraph("v s 1\n");
  EXPECT_THROW(parse_configuration("w 1\n", g), ParseError);
  EXPECT_THROW(parse_configuration("v 1\nv 2\n", g), ParseError);
  Configuration c = parse_configuration("v 4\n", g);
  EXPECT_EQ(parse_configuration(to_text(c, g), g), c);
}

TEST(Firing, Threshold) {
  MultiGraph g = parse_multigraph("v a 1\nv b 1\nu a 3\n");
  Configuration c = parse_configuration("v 2\nu 2\na 9\n", g);
  EXPECT_TRUE(firable(g, c, g.index_of("v")));
  EXPECT_FALSE(firable(g, c, g.index_of("u")));
  EXPECT_FALSE(firable(g, c, g.index_of("a")));
  Configuration d = fire(g, c, g.index_of("v"));
  EXPECT_EQ(d, parse_configuration("a 10\nb 1\nu 2\n", g));
  EXPECT_THROW(fire(g, c, g.index_of("u")), PreconditionError);
  EXPECT_THROW(firable(g, c, 99), InvalidInput);
}

TEST(Firing, LoopReturnsChip) {
  MultiGraph g = parse_multigraph("v v 1\nv s 1\n");
  Configuration c = parse_configuration("v 2\n", g);
  ASSERT_TRUE(firable(g, c, g.index_of("v")));
  Configuration d = fire(g, c, g.index_of("v"));
  EXPECT_EQ(d, parse_configuration("v 1\ns 1\n", g));
  EXPECT_FALSE(firable(g, d, g.index_of("v")));
}

TEST(Firing, LoopOnlyVertexIsSink) {
  MultiGraph g = parse_multigraph("v v 2\n");
  EXPECT_TRUE(g.is_sink(g.index_of("v")));
  EXPECT_FALSE(firable(g, parse_configuration("v 10\n", g), g.index_of("v")));
}

TEST(Firing, TwoFirableVerticesTwoSuccessors) {
  MultiGraph g = parse_multigraph("a b 1\na s 1\nb s 1\nc s 1\n");
  Configuration c = parse_configuration("a 2\nc 1\n", g);
  Configuration x = fire(g, c, g.index_of("a")), y = fire(g, c, g.index_of("c"));
  EXPECT_NE(x, y);
  EXPECT_EQ(fire(g, x, g.index_of("c")), fire(g, y, g.index_of("a")));
}

TEST(ClosedComponents, Examples) {
  auto two_cycle = parse_multigraph("a b 1\nb a 1\n");
  ASSERT_EQ(closed_components(two_cycle).size(), 1u);
  EXPECT_EQ(closed_components(two_cycle)[0].size(), 2u);
  EXPECT_TRUE(closed_components(parse_multigraph("a b 1\nb c 2\na c 1\n")).empty());
  EXPECT_TRUE(closed_components(parse_multigraph("a b 1\nb a 1\nb s 1\n")).empty());
  EXPECT_THROW(generate_space(two_cycle, parse_configuration("a 1\n", two_cycle)), InvalidInput);
}

TEST(Space, SingleVertexChain) {
  GameWitness w = testing::single_vertex_game(3);
  LabeledSpace s = generate_space(w.graph, w.initial);
  EXPECT_EQ(s.size(), 4u);
  EXPECT_FALSE(is_simple(s));
  Lattice l = space_to_lattice(s);
  EXPECT_EQ(l.height(), 3u);
  EXPECT_EQ(l.meet_irreducibles().size(), 3u);
  EXPECT_NE(l.dag().find("v@1"), npos);
  EXPECT_NE(l.dag().find("v@3"), npos);
}

TEST(Space, IndependentVerticesGiveDiamond) {
  MultiGraph g = parse_multigraph("a s 1\nb s 1\n");
  LabeledSpace s = generate_space(g, parse_configuration("a 1\nb 1\n", g));
  EXPECT_EQ(s.size(), 4u);
  EXPECT_TRUE(is_simple(s));
  Lattice l = space_to_lattice(s);
  EXPECT_EQ(l.meet_irreducibles().size(), 2u);
  const std::size_t a = s.find(fire(g, s.configurations[0], g.index_of("a")));
  const std::size_t b = s.find(fire(g, s.configurations[0], g.index_of("b")));
  EXPECT_FALSE(reachable(s, a, b));
  EXPECT_FALSE(reachable(s, b, a));
  EXPECT_TRUE(reachable(s, s.bottom, s.top));
  EXPECT_TRUE(reachable(s, a, s.top));
  EXPECT_THROW(reachable(s, 0, 17), InvalidInput);
}

TEST(Space, CapExceeded) {
  GameWitness w = testing::single_vertex_game(50);
  EXPECT_THROW(generate_space(w.graph, w.initial, 10), CapExceeded);
  EXPECT_EQ(generate_space(w.graph, w.initial, 51).size(), 51u);
}

TEST(Space, ExplorationOrderIrrelevant) {
  GameWitness w = testing::running_example_game();
  LabeledSpace a = generate_space(w.graph, w.initial, kDefaultCap, ExploreOrder::Ascending);
  LabeledSpace b = generate_space(w.graph, w.initial, kDefaultCap, ExploreOrder::Descending);
  EXPECT_EQ(a.size(), 11u);
  EXPECT_EQ(space_to_cover_dag(a).covers(), space_to_cover_dag(b).covers());
}

// Searches three-vertex games for one in which some vertex fires four times.
TEST(Space, NonSimpleGameWithShotFour) {
  bool found = false;
  for (Count ab = 0; ab <= 2 && !found; ++ab)
    for (Count ba = 0; ba <= 2 && !found; ++ba)
      for (Count bc = 0; bc <= 2 && !found; ++bc)
        for (Count chips = 0; chips <= 4 && !found; ++chips) {
          MultiGraph g({"a", "b", "c", "s"});
          auto [a, b, c, s] = std::tuple{g.index_of("a"), g.index_of("b"), g.index_of("c"), g.index_of("s")};
          g.set_multiplicity(a, b, ab);
          g.set_multiplicity(b, a, ba);
          g.set_multiplicity(b, c, bc);
          g.set_multiplicity(a, s, 1);
          g.set_multiplicity(b, s, 1);
          g.set_multiplicity(c, s, 1);
          Configuration o;
          o.chips = {chips, chips, 0, 0};
          LabeledSpace space = generate_space(g, o);
          const auto& top = space.shots[space.top].fires;
          if (*std::max_element(top.begin(), top.end()) == 4) {
            found = true;
            EXPECT_FALSE(is_simple(space));
            EXPECT_NO_THROW(analyze(space_to_cover_dag(space)));
          }
        }
  EXPECT_TRUE(found);
}

TEST(Space, ReachableAgreesOnAllPairs) {
  GameWitness w = testing::running_example_game();
  LabeledSpace s = generate_space(w.graph, w.initial);
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b) reachable(s, a, b);
  EXPECT_TRUE(reachable(s, s.bottom, s.top));
}

TEST(Space, LabeledCoverListParsesBack) {
  GameWitness w = testing::two_parent_game();
  LabeledSpace s = generate_space(w.graph, w.initial);
  CoverDag d = parse_poset(to_labeled_cover_list(s));
  EXPECT_EQ(d.covers(), space_to_cover_dag(s).covers());
}

}  // namespace
}  // namespace cfgkit
