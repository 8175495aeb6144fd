#include <gtest/gtest.h>

#include "support.hpp"

using namespace gorcheck;
using namespace gorcheck::oracle;
using gorcheck::testing::fixture;

namespace {
const char* kFixtures[] = {"C8", "DT", "L2", "A2", "GR", "SR"};
}

TEST(Field, Arithmetic) {
  const gf::Field f(5);
  EXPECT_EQ(f.add(3, 4), 2u);
  EXPECT_EQ(f.sub(1, 3), 3u);
  EXPECT_EQ(f.mul(3, 4), 2u);
  for (std::uint32_t a = 1; a < 5; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
}

TEST(Field, KernelAndEchelon) {
  const gf::Field f(3);
  gf::Matrix m(3, 2);
  m(0, 0) = 1;
  m(1, 0) = 2;
  m(2, 1) = 1;
  const auto k = gf::left_kernel(f, m);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_TRUE(gf::apply(f, k[0], m) == gf::Vec(2, 0));
  const auto e = gf::echelon(f, {{1, 1, 0}, {2, 2, 0}, {0, 0, 1}}, 3);
  EXPECT_EQ(e.rank(), 2u);
  EXPECT_TRUE(e.contains(f, {1, 1, 2}));
  EXPECT_FALSE(e.contains(f, {1, 0, 0}));
}

TEST(Representations, SatisfyRelations) {
  const gf::Field f(2);
  for (const char* name : kFixtures) {
    const auto bq = fixture(name);
    for (VertexId v = 1; v <= bq.quiver().vertex_count(); ++v) {
      EXPECT_TRUE(satisfies_relations(f, bq, projective_rep(bq, v))) << name << v;
      EXPECT_TRUE(satisfies_relations(f, bq, injective_rep(bq, v))) << name << v;
    }
  }
}

TEST(Representations, StringRepMatchesDimVector) {
  const auto bq = fixture("C8");
  const auto w = projective_string(bq, 2);
  EXPECT_EQ(string_rep(bq, w).dim_vector(), dim_vector(bq.quiver(), w));
  EXPECT_EQ(projective_rep(bq, 2).dim_vector(), dim_vector(bq.quiver(), w));
}

TEST(Socle, ProjectiveOfC8Vertex2) {
  const gf::Field f(2);
  const auto bq = fixture("C8");
  const auto s = socle_rep(f, bq.quiver(), projective_rep(bq, 2));
  EXPECT_EQ(s.total(), 2u);
  EXPECT_EQ(s.dim(5), 1u);
  EXPECT_EQ(s.dim(10), 1u);
}

TEST(Socle, InjectiveHasSimpleSocle) {
  const gf::Field f(3);
  const auto bq = fixture("DT");
  for (VertexId v = 1; v <= bq.quiver().vertex_count(); ++v) {
    const auto s = socle_rep(f, bq.quiver(), injective_rep(bq, v));
    EXPECT_EQ(s.total(), 1u);
    EXPECT_EQ(s.dim(v), 1u);
  }
}

TEST(Envelope, TwoSummandsForC8Vertex2) {
  const gf::Field f(2);
  const auto bq = fixture("C8");
  const auto p = projective_rep(bq, 2);
  const auto env = envelope_embed(f, bq, p);
  EXPECT_EQ(env.summands, (std::vector<VertexId>{5, 10}));
  EXPECT_TRUE(is_module_map(f, bq.quiver(), p, env.injective, env.embedding));
  for (VertexId v = 1; v <= bq.quiver().vertex_count(); ++v) EXPECT_GE(env.injective.dim(v), p.dim(v));
}

TEST(Envelope, IsEssentialAndInjectiveEverywhere) {
  // The embedding is a module map, injective at every vertex, and its image
  // contains the socle of the envelope.
  for (std::uint32_t prime : {2u, 3u}) {
    const gf::Field f(prime);
    for (const char* name : kFixtures) {
      const auto bq = fixture(name);
      const auto& q = bq.quiver();
      for (VertexId v = 1; v <= q.vertex_count(); ++v) {
        const auto p = projective_rep(bq, v);
        const auto env = envelope_embed(f, bq, p);
        ASSERT_TRUE(is_module_map(f, q, p, env.injective, env.embedding)) << name << v;
        const auto soc = socle_rep(f, q, env.injective);
        for (VertexId w = 1; w <= q.vertex_count(); ++w) {
          const auto& m = env.embedding.components[static_cast<std::size_t>(w)];
          std::vector<gf::Vec> rows;
          for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
          const auto img = gf::echelon(f, rows, env.injective.dim(w));
          EXPECT_EQ(img.rank(), p.dim(w)) << name << v;
          for (const auto& s : soc.basis[static_cast<std::size_t>(w)]) EXPECT_TRUE(img.contains(f, s)) << name << v;
        }
      }
    }
  }
}

TEST(Cosyzygy, DimensionBookkeeping) {
  const gf::Field f(2);
  for (const char* name : kFixtures) {
    const auto bq = fixture(name);
    const auto& q = bq.quiver();
    for (VertexId v = 1; v <= q.vertex_count(); ++v) {
      auto m = projective_rep(bq, v);
      for (int i = 0; i < 4 && !m.is_zero(); ++i) {
        const auto env = envelope_embed(f, bq, m);
        const auto next = cosyzygy_rep(f, bq, m);
        EXPECT_TRUE(satisfies_relations(f, bq, next));
        for (VertexId w = 1; w <= q.vertex_count(); ++w) EXPECT_EQ(next.dim(w) + m.dim(w), env.injective.dim(w));
        m = next;
      }
    }
  }
}

TEST(Cosyzygy, Examples) {
  const gf::Field f(2);
  const auto l2 = fixture("L2");
  const auto s1 = string_rep(l2, trivial_string(1));
  const auto c = cosyzygy_rep(f, l2, s1);
  EXPECT_EQ(c.dim_vector(), s1.dim_vector());
  EXPECT_TRUE(cosyzygy_rep(f, l2, injective_rep(l2, 1)).is_zero());
}

TEST(Injectivity, Basics) {
  const gf::Field f(2);
  EXPECT_TRUE(is_injective_rep(f, fixture("L2"), projective_rep(fixture("L2"), 1)));
  EXPECT_FALSE(is_injective_rep(f, fixture("C8"), projective_rep(fixture("C8"), 2)));
  const auto dt = fixture("DT");
  for (VertexId v = 1; v <= dt.quiver().vertex_count(); ++v) EXPECT_TRUE(is_injective_rep(f, dt, injective_rep(dt, v)));
}

TEST(InjDim, Examples) {
  const gf::Field f(2);
  EXPECT_EQ(inj_dim_upto(f, fixture("DT"), projective_rep(fixture("DT"), 5), 12), OracleDim::Finite(3));
  EXPECT_EQ(inj_dim_upto(f, fixture("C8"), projective_rep(fixture("C8"), 2), 12), OracleDim::AtLeast(12));
  EXPECT_EQ(inj_dim_upto(f, fixture("L2"), projective_rep(fixture("L2"), 1), 12), OracleDim::Finite(0));
  EXPECT_EQ(inj_dim_upto(f, fixture("A2"), projective_rep(fixture("A2"), 2), 12), OracleDim::Finite(1));
  EXPECT_EQ(inj_dim_upto(f, fixture("DT"), projective_rep(fixture("DT"), 5), 2), OracleDim::AtLeast(2));
}

TEST(InjDim, FieldIndependence) {
  for (const char* name : kFixtures) {
    const auto bq = fixture(name);
    for (VertexId v = 1; v <= bq.quiver().vertex_count(); ++v) {
      const auto p = projective_rep(bq, v);
      const auto base = inj_dim_upto(gf::Field(2), bq, p, 12);
      EXPECT_EQ(inj_dim_upto(gf::Field(3), bq, p, 12), base) << name << v;
      EXPECT_EQ(inj_dim_upto(gf::Field(5), bq, p, 12), base) << name << v;
    }
  }
}

TEST(InjDim, AgreesWithPlainIteration) {
  // The split and memoized search must match iterating cosyzygies directly
  // while the dimensions stay small.
  const gf::Field f(2);
  for (const char* name : kFixtures) {
    const auto bq = fixture(name);
    for (VertexId v = 1; v <= bq.quiver().vertex_count(); ++v) {
      const auto p = projective_rep(bq, v);
      const auto chain = coresolution(f, bq, p, 6);
      int first = -1;
      for (std::size_t i = 0; i < chain.size() && first < 0; ++i)
        if (is_injective_rep(f, bq, chain[i])) first = static_cast<int>(i);
      const auto d = inj_dim_upto(f, bq, p, 6);
      if (first >= 0) {
        EXPECT_EQ(d, OracleDim::Finite(first)) << name << v;
      } else {
        EXPECT_EQ(d, OracleDim::AtLeast(6)) << name << v;
      }
    }
  }
}

TEST(Split, ComponentsSumBack) {
  const auto bq = fixture("C8");
  const gf::Field f(2);
  const auto m = cosyzygy_rep(f, bq, projective_rep(bq, 2));
  const auto parts = split_components(bq.quiver(), m);
  EXPECT_GE(parts.size(), 2u);
  DimensionVector sum;
  for (const auto& p : parts)
    for (auto [v, k] : p.dim_vector()) sum[v] += k;
  EXPECT_EQ(sum, m.dim_vector());
}

TEST(Crosscheck, Fixtures) {
  for (const char* name : kFixtures) {
    const auto r = crosscheck(fixture(name), 12);
    EXPECT_TRUE(r.ok()) << name;
  }
}

TEST(Crosscheck, C8InfinitePairsWithAtLeast) {
  const auto r = crosscheck(fixture("C8"), 12);
  for (const auto& c : r.vertices) {
    if (!c.elis.finite) {
      EXPECT_EQ(c.oracle, OracleDim::AtLeast(12));
    }
  }
  EXPECT_FALSE(r.vertices[1].elis.finite);
}

TEST(Crosscheck, AgreementRule) {
  EXPECT_TRUE(agrees(InjDim::Finite(2), OracleDim::Finite(2)));
  EXPECT_FALSE(agrees(InjDim::Finite(2), OracleDim::Finite(3)));
  EXPECT_FALSE(agrees(InjDim::Finite(13), OracleDim::AtLeast(12)));
  EXPECT_TRUE(agrees(InjDim::Infinite(), OracleDim::AtLeast(12)));
  EXPECT_FALSE(agrees(InjDim::Infinite(), OracleDim::Finite(4)));
}
