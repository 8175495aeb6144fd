#include <gtest/gtest.h>

#include "support.hpp"

using namespace gorcheck;
using gorcheck::testing::fixture;
using gorcheck::testing::from_text;
using gorcheck::testing::path_of;

TEST(Parse, FixturesLoadAndValidate) {
  for (const char* name : {"C8", "DT", "L2", "A2", "GR", "SR"}) {
    SCOPED_TRACE(name);
    EXPECT_NO_THROW(fixture(name));
  }
}

TEST(Parse, DeclarationOrderIsKept) {
  const auto bq = fixture("DT");
  const auto& q = bq.quiver();
  EXPECT_EQ(q.vertex_count(), 13);
  EXPECT_EQ(q.arrow_count(), 14);
  const auto outs = q.out_arrows(5);
  ASSERT_EQ(outs.size(), 2u);
  EXPECT_EQ(q.arrow(outs[0]).label, "a54");
  EXPECT_EQ(q.arrow(outs[1]).label, "a54'");
}

TEST(Parse, RoundTrip) {
  for (const char* name : {"C8", "DT", "L2"}) {
    const auto bq = fixture(name);
    const auto again = from_text(print_algebra(bq));
    EXPECT_EQ(again.quiver(), bq.quiver());
    EXPECT_EQ(again.relations(), bq.relations());
    EXPECT_EQ(print_algebra(again), print_algebra(bq));
  }
}

TEST(Parse, ReportsLineNumbers) {
  const auto res = parse_algebra("algebra X\nvertices 2\narrow a 1 3\n");
  ASSERT_FALSE(res.ok());
  ASSERT_EQ(res.errors.size(), 1u);
  EXPECT_EQ(res.errors[0].line, 3);
}

TEST(Parse, Rejects) {
  EXPECT_FALSE(parse_algebra("").ok());
  EXPECT_FALSE(parse_algebra("vertices 2\n").ok());
  EXPECT_FALSE(parse_algebra("algebra X\n").ok());
  EXPECT_FALSE(parse_algebra("algebra X\nvertices 0\n").ok());
  EXPECT_FALSE(parse_algebra("algebra X\nvertices 2\narrow a 1 2\narrow a 2 1\n").ok());
  EXPECT_FALSE(parse_algebra("algebra X\nvertices 2\narrow a 1 2\nrelation a\n").ok());
  EXPECT_FALSE(parse_algebra("algebra X\nvertices 2\narrow a 1 2\nrelation a q\n").ok());
  EXPECT_FALSE(parse_algebra("algebra X\nvertices 2\narrow a 1 2\nrelation a a\n").ok());
  EXPECT_FALSE(parse_algebra("algebra X\nvertices 2\nbogus\n").ok());
}

TEST(Parse, CommentsAndBlankLines) {
  const auto res = parse_algebra("# hi\n\nalgebra X # name\nvertices 1\n  arrow a 1 1\nrelation a a\n");
  ASSERT_TRUE(res.ok());
  EXPECT_EQ(res.algebra->relation_count(), 1);
}

TEST(Parse, RedundantRelationsAreDropped) {
  const auto res = parse_algebra("algebra X\nvertices 1\narrow a 1 1\nrelation a a\nrelation a a a\nrelation a a\n");
  ASSERT_TRUE(res.ok());
  EXPECT_EQ(res.algebra->relation_count(), 1);
  EXPECT_EQ(res.dropped_relations.size(), 2u);
}

TEST(BoundQuiver, ZeroPaths) {
  const auto bq = fixture("C8");
  EXPECT_TRUE(bq.is_zero_path(path_of(bq, {"h", "a", "b", "c", "d"})));
  EXPECT_FALSE(bq.is_zero_path(path_of(bq, {"b", "c", "d"})));
  EXPECT_TRUE(bq.composes_to_zero(*bq.quiver().find("a"), *bq.quiver().find("x")));
  EXPECT_FALSE(bq.composes_to_zero(*bq.quiver().find("a"), *bq.quiver().find("b")));
}

TEST(Validate, FixturesAreStringAlgebras) {
  for (const char* name : {"C8", "DT", "L2", "A2", "GR", "SR"}) {
    auto bq = parse_algebra_file(gorcheck::testing::fixture_path(name)).algebra.value();
    const auto rep = validate_string_quiver(bq);
    EXPECT_TRUE(rep.valid()) << name;
    EXPECT_TRUE(bq.validated());
  }
}

namespace {
std::vector<std::string> axioms(const std::string& text) {
  auto bq = parse_algebra(text).algebra.value();
  std::vector<std::string> out;
  for (const auto& v : validate_string_quiver(bq).violations) out.push_back(v.axiom);
  return out;
}
}  // namespace

TEST(Validate, DegreeCap) {
  const auto a = axioms("algebra X\nvertices 4\narrow a 1 4\narrow b 2 4\narrow c 3 4\n");
  EXPECT_NE(std::find(a.begin(), a.end(), "1"), a.end());
}

TEST(Validate, UniqueContinuation) {
  const auto a = axioms("algebra X\nvertices 4\narrow a 1 2\narrow b 2 3\narrow c 2 4\n");
  EXPECT_NE(std::find(a.begin(), a.end(), "2"), a.end());
  const auto b = axioms("algebra X\nvertices 4\narrow a 1 3\narrow b 2 3\narrow c 3 4\n");
  EXPECT_NE(std::find(b.begin(), b.end(), "3"), b.end());
}

TEST(Validate, RelationFreeCycle) {
  const auto a = axioms("algebra X\nvertices 2\narrow a 1 2\narrow b 2 1\n");
  EXPECT_EQ(a, std::vector<std::string>{"admissible"});
  EXPECT_TRUE(axioms("algebra X\nvertices 2\narrow a 1 2\narrow b 2 1\nrelation a b\n").empty());
}

TEST(Validate, DisconnectedIsOnlyAWarning) {
  auto bq = parse_algebra("algebra X\nvertices 2\n").algebra.value();
  const auto rep = validate_string_quiver(bq);
  EXPECT_TRUE(rep.valid());
  EXPECT_EQ(rep.warnings.size(), 1u);
}

TEST(Taxonomy, Profiles) {
  const auto bq = fixture("C8");
  EXPECT_EQ(vertex_profile(bq, 2).type_tag(), "(1in,2out)");
  EXPECT_EQ(vertex_profile(bq, 10).type_tag(), "(2in,0out)");
  EXPECT_THROW(vertex_profile(bq, 11), std::out_of_range);
}

TEST(Taxonomy, Classes) {
  EXPECT_EQ(classify_vertex(fixture("GR"), 3), VertexClass::GentlyRelational);
  EXPECT_EQ(classify_vertex(fixture("SR"), 1), VertexClass::StrictlyRelational);
  EXPECT_EQ(classify_vertex(fixture("DT"), 5), VertexClass::StrictlyRelational);
  EXPECT_EQ(classify_vertex(fixture("C8"), 3), VertexClass::NonRelational);
  // a x is a relation and a b lies inside abcd.
  EXPECT_EQ(classify_vertex(fixture("C8"), 2), VertexClass::StrictlyRelational);
  EXPECT_EQ(classify_vertex(fixture("C8"), 6), VertexClass::StrictlyRelational);
}

TEST(Taxonomy, PairSidesForcedPairFirst) {
  const auto bq = fixture("SR");
  const auto& q = bq.quiver();
  const auto pairs = pair_sides(bq, 1);
  ASSERT_EQ(pairs.size(), 2u);
  for (const auto& [a, b] : pairs) {
    ASSERT_TRUE(a.has_value());
    if (q.arrow(b).label == "e") {
      EXPECT_EQ(q.arrow(*a).label, "b");
    }
    if (q.arrow(b).label == "a") {
      EXPECT_EQ(q.arrow(*a).label, "d");
    }
  }
}

TEST(Taxonomy, PairSidesCrosswiseWhenAllZero) {
  // At DT vertex 5 every composition through 5 is a relation.
  const auto bq = fixture("DT");
  const auto& q = bq.quiver();
  for (const auto& [a, b] : pair_sides(bq, 5)) {
    ASSERT_TRUE(a.has_value());
    if (q.arrow(b).label == "a54'") {
      EXPECT_EQ(q.arrow(*a).label, "a65");
    }
    if (q.arrow(b).label == "a54") {
      EXPECT_EQ(q.arrow(*a).label, "a6'5");
    }
  }
}

TEST(Taxonomy, NonzeroPathsOfA2) {
  const auto paths = nonzero_paths(fixture("A2"));
  EXPECT_EQ(paths.size(), 1u);
}
