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

using testing::chain;
using testing::diamond;

TEST(PosetParse, CommentsAndWhitespace) {
  std::vector<std::string> warnings;
  CoverDag d = parse_poset("# header\n  0   a  # trailing\n\n0 b\na 1\nb 1\n", &warnings);
  EXPECT_EQ(d.size(), 4u);
  EXPECT_EQ(d.covers().size(), 4u);
  EXPECT_TRUE(warnings.empty());
}

TEST(PosetParse, TransitiveEdgeIsDroppedWithWarning) {
  std::vector<std::string> warnings;
  CoverDag d = parse_poset("0 a\na 1\n0 1\n", &warnings);
  EXPECT_EQ(d.covers().size(), 2u);
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("0 1"), std::string::npos);
}

TEST(PosetParse, CycleRejected) { EXPECT_THROW(parse_poset("a b\nb c\nc a\n"), InvalidInput); }

TEST(PosetParse, BadLineReportsLineNumber) {
  try {
    parse_poset("0 a\n0 a b\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(PosetParse, SingleElement) {
  CoverDag d = parse_poset("x\n");
  Lattice l = validate_lattice(d);
  EXPECT_EQ(l.size(), 1u);
  EXPECT_EQ(l.bottom(), l.top());
  EXPECT_TRUE(l.meet_irreducibles().empty());
}

TEST(LatticeCheck, BowtieHasNoJoin) {
  CoverDag d = parse_poset("0 a\n0 b\na c\na d\nb c\nb d\nc 1\nd 1\n");
  try {
    validate_lattice(d);
    FAIL();
  } catch (const NotALattice& e) {
    EXPECT_TRUE((e.x == "a" && e.y == "b") || (e.x == "b" && e.y == "a"));
    EXPECT_TRUE(e.upper);
    EXPECT_EQ(e.bounds.size(), 2u);
  }
}

TEST(LatticeCheck, TwoMinimalElementsRejected) {
  EXPECT_THROW(validate_lattice(parse_poset("a 1\nb 1\n")), NotALattice);
}

TEST(LatticeCheck, DiamondTables) {
  Lattice l = validate_lattice(diamond());
  auto a = l.index_of("a"), b = l.index_of("b");
  EXPECT_EQ(l.name(l.meet(a, b)), "0");
  EXPECT_EQ(l.name(l.join(a, b)), "1");
  EXPECT_EQ(l.meet_irreducibles().size(), 2u);
  EXPECT_EQ(l.join_irreducibles().size(), 2u);
  EXPECT_TRUE(is_distributive(l));
  EXPECT_EQ(l.height(), 2u);
}

TEST(LatticeCheck, ChainIrreducibles) {
  Lattice l = validate_lattice(chain(4));
  EXPECT_EQ(l.meet_irreducibles().size(), 3u);
  EXPECT_EQ(l.join_irreducibles().size(), 3u);
  EXPECT_EQ(l.height(), 3u);
}

TEST(Uld, DiamondLabels) {
  Lattice l = validate_lattice(diamond());
  UldCertificate c = check_uld(l);
  EXPECT_EQ(l.name(c.label(l, l.index_of("0"), l.index_of("a"))), "b");
  EXPECT_EQ(l.name(c.label(l, l.index_of("a"), l.index_of("1"))), "a");
}

TEST(Uld, M3Rejected) {
  Lattice l = validate_lattice(testing::m3());
  EXPECT_THROW(check_uld(l), NotUld);
}

TEST(Uld, N5Rejected) {
  // M = {a, b, c}; the cover 0 < c loses both a and b.
  Lattice l = validate_lattice(testing::n5());
  try {
    check_uld(l);
    FAIL();
  } catch (const NotUld& e) {
    EXPECT_EQ(e.x, "0");
    EXPECT_EQ(e.y, "c");
  }
}

TEST(Context, ThreeChain) {
  Lattice l = validate_lattice(parse_poset("0 x\nx 1\n"));
  UldCertificate c = check_uld(l);
  IrreducibleContext ctx = compute_context(l, c);
  ASSERT_EQ(ctx.meet_irreducibles, (std::vector<ElementId>{"0", "x"}));
  EXPECT_EQ(ctx.at("0").upper, std::vector<ElementId>{"0"});
  EXPECT_EQ(ctx.at("x").upper, std::vector<ElementId>{"x"});
  EXPECT_EQ(ctx.at("x").lower, std::vector<ElementId>{"0"});
}

}  // namespace
}  // namespace cfgkit
