#include <gtest/gtest.h>

#include "oracles.hpp"
#include "phyloag/error.hpp"
#include "phyloag/tree.hpp"

using namespace phyloag;

namespace {

std::vector<std::string> edge_names(const Tree& t) {
  std::vector<std::string> out;
  for (const auto& e : t.edges()) {
    std::string child = t.is_leaf(e.child) ? t.node(e.child).label : "x" + std::to_string(e.child);
    out.push_back(child);
  }
  return out;
}

}  // namespace

TEST(Newick, ThreeLeafTreeHasFourEdgesInLetterOrder) {
  Tree t = parse_newick("(1,(2,3));");
  EXPECT_EQ(t.leaf_count(), 3u);
  ASSERT_EQ(t.edge_count(), 4u);
  // a to leaf 1, b to the interior node, c to leaf 2, d to leaf 3.
  EXPECT_EQ(t.node(t.edge(0).child).label, "1");
  EXPECT_FALSE(t.is_leaf(t.edge(1).child));
  EXPECT_EQ(t.node(t.edge(2).child).label, "2");
  EXPECT_EQ(t.node(t.edge(3).child).label, "3");
  EXPECT_EQ(t.edge(2).parent, t.edge(1).child);
}

TEST(Newick, StarTree) {
  Tree t = parse_newick("(1,2,3,4);");
  EXPECT_EQ(t.edge_count(), 4u);
  for (const auto& e : t.edges()) EXPECT_EQ(e.parent, t.root());
  EXPECT_EQ(t.leaf_label(3), "4");
}

TEST(Newick, QuartetEdgeOrderGroupsRootEdgesBetweenSubtrees) {
  Tree t = parse_newick("((1,2),(3,4));");
  auto names = edge_names(t);
  ASSERT_EQ(names.size(), 6u);
  EXPECT_EQ(names[0], "1");
  EXPECT_EQ(names[1], "2");
  EXPECT_EQ(t.edge(2).parent, t.root());
  EXPECT_EQ(t.edge(3).parent, t.root());
  EXPECT_EQ(names[4], "3");
  EXPECT_EQ(names[5], "4");
}

TEST(Newick, Errors) {
  EXPECT_THROW(parse_newick("((1,2);"), ParseError);
  EXPECT_THROW(parse_newick("(1,,2);"), ParseError);
  EXPECT_THROW(parse_newick("(1,1);"), Error);
  EXPECT_THROW(parse_newick("(1,2)"), ParseError);
  try {
    parse_newick("((1,2);");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("unbalanced"), std::string::npos);
  }
}

TEST(Newick, LabelsLengthsAndWhitespace) {
  Tree t = parse_newick(" ( A:0.1 , ( B:0.2 , C ) x:0.3 ) root ; ");
  EXPECT_EQ(t.leaf_label(0), "A");
  EXPECT_EQ(t.node(t.edge(1).child).label, "x");
  EXPECT_EQ(t.node(t.leaves()[0]).length.value(), "0.1");
}

TEST(Newick, RoundTripIsIdempotent) {
  for (const char* text : {"(1,(2,3));", "((1,2),(3,4));", "((1,2),(3,(4,5)));", "(a:1,(b:2,c:3)n:4)r;",
                           "(1,2,3,4);"}) {
    Tree t = parse_newick(text);
    std::string once = to_newick(t);
    EXPECT_EQ(to_newick(parse_newick(once)), once) << text;
    EXPECT_EQ(parse_newick(once).edge_count(), t.edge_count());
  }
}

TEST(Splits, EdgeSplits) {
  Tree q = parse_newick("((1,2),(3,4));");
  Split s = edge_split(q, 2);
  EXPECT_EQ(s.below, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(s.complement, (std::vector<std::size_t>{2, 3}));

  Tree t3 = parse_newick("(1,(2,3));");
  Split d = edge_split(t3, 3);
  EXPECT_EQ(d.below, (std::vector<std::size_t>{2}));
  EXPECT_EQ(d.complement, (std::vector<std::size_t>{0, 1}));

  Tree star = parse_newick("(1,2,3,4);");
  Split l2 = edge_split(star, 1);
  EXPECT_EQ(l2.below, (std::vector<std::size_t>{1}));
  EXPECT_EQ(l2.complement, (std::vector<std::size_t>{0, 2, 3}));

  EXPECT_THROW(edge_split(star, 4), ValidationError);
}

TEST(Splits, ParseForms) {
  Tree q = parse_newick("((1,2),(3,4));");
  EXPECT_EQ(parse_split(q, "12|34").below, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(parse_split(q, "1,3|2,4").below, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(parse_split(q, "{1,4}|{2,3}").complement, (std::vector<std::size_t>{1, 2}));
  EXPECT_TRUE(parse_split(q, "12|34").edge.has_value());
}

TEST(Subforests, ThreeLeafTreeListsFive) {
  Tree t = parse_newick("(1,(2,3));");
  auto s = enumerate_subforests(t);
  std::vector<std::string> got;
  for (const auto& f : s) got.push_back(f.to_string());
  EXPECT_EQ(got, (std::vector<std::string>{"0000", "0011", "1101", "1110", "1111"}));
}

TEST(Subforests, FibonacciCounts) {
  EXPECT_EQ(enumerate_subforests(parse_newick("((1,2),(3,4));")).size(), 13u);
  EXPECT_EQ(enumerate_subforests(parse_newick("((1,2),(3,(4,5)));")).size(), 34u);
}

TEST(Subforests, AgreesWithBruteForceOverAllEdgeSubsets) {
  for (const char* text : {"(1,(2,3));", "((1,2),(3,4));", "((1,2),(3,(4,5)));", "(1,2,3,4);",
                           "((1,2,3),(4,(5,6)));", "(((1,2),3),((4,5),6));"}) {
    Tree t = parse_newick(text);
    const std::size_t e = t.edge_count();
    ASSERT_LE(e, 12u);
    std::vector<Subforest> brute;
    for (std::size_t mask = 0; mask < (std::size_t{1} << e); ++mask) {
      Subforest s;
      for (std::size_t i = 0; i < e; ++i) s.edges.push_back((mask >> (e - 1 - i)) & 1);
      EXPECT_EQ(is_subforest(t, s), oracle::subforest_by_degrees(t, s.edges)) << text << " " << s.to_string();
      if (oracle::subforest_by_degrees(t, s.edges)) brute.push_back(s);
    }
    std::sort(brute.begin(), brute.end());
    EXPECT_EQ(enumerate_subforests(t), brute) << text;
  }
}

TEST(Subforests, IndicatorParsing) {
  EXPECT_EQ(parse_indicator("1101").edges, (std::vector<std::uint8_t>{1, 1, 0, 1}));
  EXPECT_THROW(parse_indicator("12"), ParseError);
}
