// Per-vertex comparison of the ELIS verdict against the linear-algebra oracle.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gorcheck/elis.hpp"
#include "gorcheck/oracle.hpp"

namespace gorcheck {

struct VertexCheck {
  VertexId vertex = 0;
  InjDim elis;
  oracle::OracleDim oracle;
  bool match = false;
  /// For a finite chain of length n: whether the (n+1)-th cosyzygy of P(v)
  /// is nonzero. Empty when not checked.
  std::optional<bool> nonvanishing;
};

struct CrosscheckReport {
  std::vector<VertexCheck> vertices;

  std::vector<VertexCheck> mismatches() const {
    std::vector<VertexCheck> out;
    for (const auto& c : vertices)
      if (!c.match || c.nonvanishing == false) out.push_back(c);
    return out;
  }
  bool ok() const { return mismatches().empty(); }
};

/// Finite n agrees only with Finite n; Infinite agrees only with "no
/// injective cosyzygy up to the cutoff".
inline bool agrees(const InjDim& e, const oracle::OracleDim& o) {
  if (e.finite) return o.finite && o.value == e.value;
  return !o.finite;
}

inline VertexCheck check_vertex(const BoundQuiver& bq, VertexId v, int cutoff, const gf::Field& f,
                                std::size_t budget = kDefaultStateBudget, int nonvanishing_limit = 10) {
  VertexCheck c;
  c.vertex = v;
  const auto outcome = elis_outcome(bq, v, budget);
  c.elis = !outcome.finite ? InjDim::Infinite() : InjDim::Finite(outcome.projective_injective ? 0 : outcome.length + 1);
  const auto p = oracle::projective_rep(bq, v);
  c.oracle = oracle::inj_dim_upto(f, bq, p, cutoff);
  c.match = agrees(c.elis, c.oracle);
  // The (n+1)-th cosyzygy is nonzero exactly when the n-th is not injective.
  const int n = outcome.length;
  if (outcome.finite && !outcome.witnesses.empty() && n <= nonvanishing_limit) {
    if (c.oracle.finite) c.nonvanishing = c.oracle.value > n;
    else if (n < c.oracle.value) c.nonvanishing = true;
  }
  return c;
}

inline CrosscheckReport crosscheck(const BoundQuiver& bq, int cutoff = 12, std::uint32_t prime = 2,
                                   std::size_t budget = kDefaultStateBudget) {
  const gf::Field f(prime);
  CrosscheckReport r;
  for (VertexId v = 1; v <= bq.quiver().vertex_count(); ++v) r.vertices.push_back(check_vertex(bq, v, cutoff, f, budget));
  return r;
}

}  // namespace gorcheck
