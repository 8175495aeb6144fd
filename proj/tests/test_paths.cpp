#include <gtest/gtest.h>

#include "support.hpp"

using namespace gorcheck;
using gorcheck::testing::fixture;
using gorcheck::testing::path_of;

namespace {

DimensionVector oracle_cosyzygy_dims(const BoundQuiver& bq, const oracle::Representation& m) {
  return oracle::cosyzygy_rep(gf::Field(2), bq, m).dim_vector();
}

DimensionVector piece_dims(const Quiver& q, const std::vector<CosyzygyPiece>& pieces) {
  DimensionVector d;
  for (const auto& p : pieces)
    for (auto [v, k] : dim_vector(q, to_word(q, p.summand))) d[v] += k;
  return d;
}

bool oracle_d_cosyzygy_injective(const BoundQuiver& bq, VertexId v) {
  const gf::Field f(2);
  const auto e = first_cosyzygy_projective(bq, v);
  const auto c = oracle::cosyzygy_rep(f, bq, oracle::string_rep(bq, e.d));
  return oracle::is_injective_rep(f, bq, c);
}

}  // namespace

TEST(Windows, LeftWindowBranches) {
  const auto bq = fixture("C8");
  const auto ws = left_window(bq, path_of(bq, {"b", "c", "d"}), 3);
  ASSERT_EQ(ws.size(), 1u);  // the cycle has a single in-arrow everywhere
  EXPECT_EQ(ws[0].arrows, path_of(bq, {"g", "h", "a", "b", "c", "d"}));
  EXPECT_EQ(ws[0].origin, 3u);
  EXPECT_TRUE(ws[0].extendable_left);

  const auto dt = fixture("DT");
  EXPECT_EQ(left_window(dt, path_of(dt, {"a54"}), 2).size(), 2u);
  const auto src = left_window(dt, path_of(dt, {"a87"}), 5);
  ASSERT_EQ(src.size(), 1u);
  EXPECT_FALSE(src[0].extendable_left);
}

TEST(Windows, PrependChecksEndpoint) {
  const auto bq = fixture("C8");
  const auto w = seed_window(bq.quiver(), 2, path_of(bq, {"b"}));
  EXPECT_THROW(w.prepend(bq.quiver(), *bq.quiver().find("b")), std::invalid_argument);
  EXPECT_EQ(w.prepend(bq.quiver(), *bq.quiver().find("a")).vertex_at(bq.quiver(), 0), 1);
}

TEST(Occurrences, SortedByEnd) {
  const auto bq = fixture("C8");
  const auto w = seed_window(bq.quiver(), 1, path_of(bq, {"a", "b", "c", "d", "e", "f"}));
  const auto occ = relations_on(bq, w);
  ASSERT_EQ(occ.size(), 3u);
  EXPECT_EQ(bq.relation_label(occ[0].relation), "abcd");
  EXPECT_EQ(bq.relation_label(occ[1].relation), "bcde");
  EXPECT_EQ(bq.relation_label(occ[2].relation), "cdef");
  EXPECT_EQ(occ[2].start, 2u);
  EXPECT_EQ(occ[2].end, 6u);
}

TEST(Occurrences, Distances) {
  const RelationOccurrence o{0, 3, 6};
  EXPECT_EQ(left_distance(1, o), 2u);
  EXPECT_EQ(left_distance(3, o), 0u);
  EXPECT_EQ(right_distance(o, 8), 2u);
  EXPECT_THROW(left_distance(4, o), std::invalid_argument);
  EXPECT_THROW(right_distance(o, 5), std::invalid_argument);
}

TEST(Occurrences, MinimalRelationUp) {
  const auto bq = fixture("C8");
  const auto w = seed_window(bq.quiver(), 1, path_of(bq, {"a", "b", "c", "d", "e", "f"}));
  EXPECT_EQ(bq.relation_label(minimal_relation_up(bq, w, 6)->relation), "cdef");
  EXPECT_EQ(bq.relation_label(minimal_relation_up(bq, w, 5)->relation), "bcde");
  EXPECT_FALSE(minimal_relation_up(bq, w, 3).has_value());
  EXPECT_THROW(minimal_relation_up(bq, w, 7), std::out_of_range);
}

TEST(Occurrences, MinimaAreUniqueOnDeepWindows) {
  // SR branches at two vertices on a cycle, so its windows multiply fast.
  for (auto [name, depth] : {std::pair{"C8", 30}, {"DT", 30}, {"GR", 30}, {"L2", 30}, {"SR", 16}}) {
    const auto bq = fixture(name);
    const auto& q = bq.quiver();
    for (ArrowId a = 0; a < q.arrow_count(); ++a)
      for (const auto& w : left_window(bq, Path{a}, static_cast<std::size_t>(depth)))
        for (std::size_t t = 0; t < w.vertex_count(); ++t) EXPECT_NO_THROW(minimal_relation_up(bq, w, t));
  }
}

TEST(Occurrences, BranchMinimaStableUnderGrowth) {
  // The minimum found on a branch does not move when the window grows.
  const auto bq = fixture("DT");
  const auto& q = bq.quiver();
  const auto seed = seed_window(q, 5, path_of(bq, {"a54"}));
  for (const auto& b : minimal_relation_up_branches(bq, seed, 1, 10)) {
    if (!b.minimum) continue;
    for (const auto& w : left_window(bq, b.window.leftmost, b.window.arrows, 4)) {
      const auto m = minimal_relation_up(bq, w, 1 + b.window.origin + w.origin);
      ASSERT_TRUE(m.has_value());
      EXPECT_EQ(m->relation, b.minimum->relation);
    }
  }
}

TEST(Extensions, BlockerAndLeftExtend) {
  const auto bq = fixture("C8");
  const auto e = left_extend(bq, path_of(bq, {"c", "d"}));
  EXPECT_EQ(e.extension, path_of(bq, {"b"}));
  EXPECT_EQ(bq.relation_label(*e.blocker), "abcd");
  EXPECT_THROW(left_extend(bq, path_of(bq, {"a", "x"})), std::invalid_argument);
  const auto a2 = fixture("A2");
  EXPECT_FALSE(left_extend(a2, path_of(a2, {"a"})).blocker.has_value());
}

TEST(DirectedCosyzygy, L2Simple) {
  const auto bq = fixture("L2");
  const auto c = cosyzygy_directed(bq, trivial_string(1));
  EXPECT_EQ(render(bq.quiver(), c.envelope), "a");
  ASSERT_EQ(c.pieces.size(), 1u);
  EXPECT_EQ(c.pieces[0].summand, (DirectedString{1, {}}));
}

TEST(DirectedCosyzygy, InjectiveHasNoPieces) {
  const auto bq = fixture("C8");
  const auto w = injective_string(bq, 4);  // h a b c
  ASSERT_TRUE(is_directed(w));
  EXPECT_TRUE(cosyzygy_directed(bq, w).pieces.empty());
  EXPECT_THROW(cosyzygy_directed(bq, parse_string(bq.quiver(), "x^-1 b")), std::invalid_argument);
}

TEST(DirectedCosyzygy, A2SimpleMatchesOracle) {
  const auto bq = fixture("A2");
  const auto c = cosyzygy_directed(bq, trivial_string(2));
  EXPECT_EQ(piece_dims(bq.quiver(), c.pieces), oracle_cosyzygy_dims(bq, oracle::string_rep(bq, trivial_string(2))));
}

TEST(DirectedCosyzygy, ExhaustiveOnSmallFixtures) {
  for (const char* name : {"L2", "A2", "GR", "SR"}) {
    const auto bq = fixture(name);
    const auto& q = bq.quiver();
    ASSERT_LE(q.vertex_count(), 8);
    std::vector<StringWord> words;
    for (VertexId v = 1; v <= q.vertex_count(); ++v) words.push_back(trivial_string(v));
    for (const auto& p : nonzero_paths(bq))
      if (!p.empty() && p.size() <= 5) words.push_back(path_string(q, p));
    for (const auto& w : words) {
      const auto c = cosyzygy_directed(bq, w);
      EXPECT_EQ(piece_dims(q, c.pieces), oracle_cosyzygy_dims(bq, oracle::string_rep(bq, w)))
          << name << " " << render(q, w);
    }
  }
}

TEST(Envelope, C8Vertex2) {
  const auto bq = fixture("C8");
  const auto& q = bq.quiver();
  const auto e = first_cosyzygy_projective(bq, 2);
  EXPECT_EQ(e.arm_c, path_of(bq, {"b", "c", "d"}));
  EXPECT_EQ(e.arm_d, path_of(bq, {"x", "z"}));
  EXPECT_TRUE(e.s_a.empty());
  EXPECT_TRUE(e.s_b.empty());
  EXPECT_EQ(e.vertex_ld(q), 5);
  EXPECT_EQ(e.vertex_rd(q), 10);
  EXPECT_EQ(render(q, e.d), "e_2");
  ASSERT_EQ(e.sides.size(), 1u);
  EXPECT_EQ(bq.relation_label(*e.sides[0].seed), "abcd");
}

TEST(Envelope, DTVertex5) {
  const auto bq = fixture("DT");
  const auto e = first_cosyzygy_projective(bq, 5);
  ASSERT_EQ(e.sides.size(), 2u);
  std::set<std::string> seeds;
  for (const auto& s : e.sides) seeds.insert(bq.relation_label(*s.seed));
  EXPECT_EQ(seeds, (std::set<std::string>{"a65a54'", "a6'5a54"}));
  EXPECT_FALSE(e.d_injective);
  EXPECT_THROW(first_cosyzygy_projective(bq, 1), std::invalid_argument);
}

TEST(Envelope, DimensionIdentityOnFixtures) {
  for (const char* name : {"C8", "DT", "GR", "SR", "A2", "L2"}) {
    const auto bq = fixture(name);
    const auto& q = bq.quiver();
    for (VertexId v = 1; v <= q.vertex_count(); ++v) {
      if (q.out_arrows(v).size() != 2) continue;
      const auto e = first_cosyzygy_projective(bq, v);
      EXPECT_EQ(first_cosyzygy_dims(bq, e), oracle_cosyzygy_dims(bq, oracle::projective_rep(bq, v))) << name << v;
    }
  }
}

TEST(Envelope, DimensionIdentityOnRandomAlgebras) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto bq = seed % 2 ? random_string_algebra(seed) : random_gentle_algebra(seed);
    const auto& q = bq.quiver();
    for (VertexId v = 1; v <= q.vertex_count(); ++v) {
      if (q.out_arrows(v).size() != 2) continue;
      EXPECT_EQ(first_cosyzygy_dims(bq, first_cosyzygy_projective(bq, v)),
                oracle_cosyzygy_dims(bq, oracle::projective_rep(bq, v)))
          << bq.name() << " v" << v;
    }
  }
}

TEST(Envelope, DInjectiveFlagMatchesOracle) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto bq = seed % 2 ? random_string_algebra(seed) : random_gentle_algebra(seed);
    const auto& q = bq.quiver();
    for (VertexId v = 1; v <= q.vertex_count(); ++v) {
      if (q.out_arrows(v).size() != 2) continue;
      const auto e = first_cosyzygy_projective(bq, v);
      EXPECT_EQ(e.d_injective, oracle::is_injective_rep(gf::Field(2), bq, oracle::string_rep(bq, e.d))) << bq.name() << " v" << v;
    }
  }
}

TEST(RSets, DTVertex5) {
  const auto bq = fixture("DT");
  const auto s = d_injectivity_sets(bq, 5);
  ASSERT_EQ(s.left.size(), 1u);
  ASSERT_EQ(s.right.size(), 1u);
  std::set<std::string> labels{bq.relation_label(s.left[0].relation), bq.relation_label(s.right[0].relation)};
  EXPECT_EQ(labels, (std::set<std::string>{"a87a76a65", "a8'7'a7'6'a6'5"}));
  EXPECT_FALSE(oracle_d_cosyzygy_injective(bq, 5));
  EXPECT_THROW(d_injectivity_sets(fixture("C8"), 2), std::invalid_argument);
}

TEST(RSets, GentleVertexIsEmpty) {
  const auto bq = fixture("GR");
  const auto s = d_injectivity_sets(bq, 3);
  EXPECT_TRUE(s.left.empty());
  EXPECT_TRUE(s.right.empty());
  EXPECT_TRUE(oracle_d_cosyzygy_injective(bq, 3));
}

TEST(RSets, AllRelationsReadingOverCounts) {
  // e g crosses the blocker g f of s_a = f c b, but nothing is cut off on
  // that side: the cosyzygy of D is the injective E(5).
  const auto bq = fixture("SR");
  EXPECT_TRUE(oracle_d_cosyzygy_injective(bq, 1));
  const auto all = d_injectivity_sets(bq, 1, RelationSetReading::AllOnBranch);
  ASSERT_EQ(all.left.size(), 1u);
  EXPECT_EQ(bq.relation_label(all.left[0].relation), "eg");
  const auto minimal = d_injectivity_sets(bq, 1);
  EXPECT_TRUE(minimal.left.empty());
  EXPECT_TRUE(minimal.right.empty());
}

TEST(RSets, EmptinessMatchesOracleOnRandomAlgebras) {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto bq = seed % 2 ? random_string_algebra(seed) : random_gentle_algebra(seed);
    const auto& q = bq.quiver();
    for (VertexId v = 1; v <= q.vertex_count(); ++v) {
      if (q.out_arrows(v).size() != 2 || q.in_arrows(v).size() != 2) continue;
      const auto s = d_injectivity_sets(bq, v);
      EXPECT_EQ(s.left.empty() && s.right.empty(), oracle_d_cosyzygy_injective(bq, v)) << bq.name() << " v" << v;
      ++checked;
    }
  }
  EXPECT_GT(checked, 50);
}
