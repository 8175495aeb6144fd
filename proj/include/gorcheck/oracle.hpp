// Brute-force homological oracle: explicit representations of kQ/I over a
// prime field, socles, injective envelopes and iterated cosyzygies.
//
// Nothing here consults relation chains or cosyzygy formulas; modules are
// matrices and every answer comes from linear algebra.
#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gorcheck/field.hpp"
#include "gorcheck/quiver.hpp"
#include "gorcheck/strings.hpp"

namespace gorcheck::oracle {

using gf::Field;
using gf::Matrix;
using gf::Vec;

/// A right module: a vector space per vertex and, per arrow a: s -> t, a
/// matrix of shape dim(s) x dim(t) acting on row vectors.
struct Representation {
  std::vector<std::size_t> dims;  // indexed by vertex id; dims[0] unused
  std::vector<Matrix> maps;       // indexed by arrow id

  std::size_t dim(VertexId v) const { return dims.at(static_cast<std::size_t>(v)); }
  std::size_t total() const { return std::accumulate(dims.begin(), dims.end(), std::size_t{0}); }
  bool is_zero() const { return total() == 0; }

  DimensionVector dim_vector() const {
    DimensionVector d;
    for (std::size_t v = 1; v < dims.size(); ++v)
      if (dims[v]) d[static_cast<VertexId>(v)] = static_cast<int>(dims[v]);
    return d;
  }
};

/// A morphism: one matrix per vertex, dim M_v x dim N_v.
struct RepMap {
  std::vector<Matrix> components;
};

inline Representation zero_rep(const Quiver& q) {
  Representation r;
  r.dims.assign(static_cast<std::size_t>(q.vertex_count() + 1), 0);
  for (const auto& a : q.arrows()) {
    (void)a;
    r.maps.emplace_back(0, 0);
  }
  return r;
}

/// Product of the arrow matrices along a path.
inline Matrix path_action(const Field& f, const Quiver& q, const Representation& rep, const Path& p) {
  Matrix m = Matrix::identity(rep.dim(q.arrow(p.front()).source));
  for (ArrowId a : p) m = gf::multiply(f, m, rep.maps[static_cast<std::size_t>(a)]);
  return m;
}

inline bool satisfies_relations(const Field& f, const BoundQuiver& bq, const Representation& rep) {
  for (const auto& r : bq.relations())
    if (!path_action(f, bq.quiver(), rep, r.path).is_zero()) return false;
  return true;
}

inline void check_relations(const Field& f, const BoundQuiver& bq, const Representation& rep) {
  if (!satisfies_relations(f, bq, rep)) throw std::logic_error("representation does not annihilate I");
}

namespace detail {

/// Builds a representation from a basis of labelled vectors: each basis
/// element lives at a vertex, and `step(i, a)` gives the index hit by arrow a
/// (or -1 for zero).
template <class Step>
Representation from_basis(const Quiver& q, const std::vector<VertexId>& at, Step step) {
  Representation r;
  r.dims.assign(static_cast<std::size_t>(q.vertex_count() + 1), 0);
  std::vector<std::size_t> local(at.size());
  for (std::size_t i = 0; i < at.size(); ++i) local[i] = r.dims[static_cast<std::size_t>(at[i])]++;
  for (ArrowId a = 0; a < q.arrow_count(); ++a)
    r.maps.emplace_back(r.dim(q.arrow(a).source), r.dim(q.arrow(a).target));
  for (std::size_t i = 0; i < at.size(); ++i)
    for (ArrowId a : q.out_arrows(at[i])) {
      const long j = step(i, a);
      if (j >= 0) r.maps[static_cast<std::size_t>(a)](local[i], local[static_cast<std::size_t>(j)]) = 1;
    }
  return r;
}

}  // namespace detail

/// Positional 0/1 representation of a string module.
inline Representation string_rep(const BoundQuiver& bq, const StringWord& w) {
  if (!is_valid_string(bq, w)) throw std::invalid_argument("invalid string");
  const auto& q = bq.quiver();
  const auto vs = vertices_of(q, w);
  return detail::from_basis(q, vs, [&](std::size_t i, ArrowId a) -> long {
    if (i < w.letters.size() && w.letters[i] == direct(a)) return static_cast<long>(i + 1);
    if (i > 0 && w.letters[i - 1] == inverse_of(a)) return static_cast<long>(i - 1);
    return -1;
  });
}

/// e_v A: basis of nonzero paths starting at v.
inline Representation projective_rep(const BoundQuiver& bq, VertexId v) {
  const auto& q = bq.quiver();
  std::vector<Path> basis{{}};
  for (const auto& p : nonzero_paths(bq))
    if (q.arrow(p.front()).source == v) basis.push_back(p);
  std::map<Path, long> index;
  std::vector<VertexId> at;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    index[basis[i]] = static_cast<long>(i);
    at.push_back(basis[i].empty() ? v : q.arrow(basis[i].back()).target);
  }
  return detail::from_basis(q, at, [&](std::size_t i, ArrowId a) -> long {
    Path p = basis[i];
    p.push_back(a);
    auto it = index.find(p);
    return it == index.end() ? -1 : it->second;
  });
}

/// D(A e_v): basis of duals of nonzero paths ending at v; an arrow a strips
/// a leading a from the path.
inline Representation injective_rep(const BoundQuiver& bq, VertexId v) {
  const auto& q = bq.quiver();
  std::vector<Path> basis{{}};
  for (const auto& p : nonzero_paths(bq))
    if (q.arrow(p.back()).target == v) basis.push_back(p);
  std::map<Path, long> index;
  std::vector<VertexId> at;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    index[basis[i]] = static_cast<long>(i);
    at.push_back(basis[i].empty() ? v : q.arrow(basis[i].front()).source);
  }
  return detail::from_basis(q, at, [&](std::size_t i, ArrowId a) -> long {
    const Path& p = basis[i];
    if (p.empty() || p.front() != a) return -1;
    return index.at(Path(p.begin() + 1, p.end()));
  });
}

struct Socle {
  std::vector<std::vector<Vec>> basis;  // per vertex, rows spanning soc at that vertex

  std::size_t dim(VertexId v) const { return basis.at(static_cast<std::size_t>(v)).size(); }
  std::size_t total() const {
    std::size_t t = 0;
    for (const auto& b : basis) t += b.size();
    return t;
  }
};

/// Common kernel of all arrows leaving each vertex.
inline Socle socle_rep(const Field& f, const Quiver& q, const Representation& rep) {
  Socle s;
  s.basis.resize(rep.dims.size());
  for (VertexId v = 1; v <= q.vertex_count(); ++v) {
    std::vector<const Matrix*> outs;
    for (ArrowId a : q.out_arrows(v)) outs.push_back(&rep.maps[static_cast<std::size_t>(a)]);
    s.basis[static_cast<std::size_t>(v)] = gf::common_left_kernel(f, rep.dim(v), outs);
  }
  return s;
}

/// The socle as a representation together with its inclusion.
inline std::pair<Representation, RepMap> socle_subrep(const Field& f, const Quiver& q, const Representation& rep) {
  const auto s = socle_rep(f, q, rep);
  Representation sub = zero_rep(q);
  RepMap inc;
  inc.components.resize(rep.dims.size());
  for (VertexId v = 1; v <= q.vertex_count(); ++v) {
    const auto& b = s.basis[static_cast<std::size_t>(v)];
    sub.dims[static_cast<std::size_t>(v)] = b.size();
    Matrix m(b.size(), rep.dim(v));
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < rep.dim(v); ++j) m(i, j) = b[i][j];
    inc.components[static_cast<std::size_t>(v)] = m;
  }
  for (ArrowId a = 0; a < q.arrow_count(); ++a)
    sub.maps[static_cast<std::size_t>(a)] = Matrix(sub.dim(q.arrow(a).source), sub.dim(q.arrow(a).target));
  return {sub, inc};
}

inline Representation direct_sum(const Quiver& q, const std::vector<Representation>& parts) {
  Representation r = zero_rep(q);
  for (const auto& p : parts)
    for (std::size_t v = 1; v < r.dims.size(); ++v) r.dims[v] += p.dims[v];
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const auto s = q.arrow(a).source, t = q.arrow(a).target;
    Matrix m(r.dim(s), r.dim(t));
    std::size_t ro = 0, co = 0;
    for (const auto& p : parts) {
      const auto& pm = p.maps[static_cast<std::size_t>(a)];
      for (std::size_t i = 0; i < pm.rows(); ++i)
        for (std::size_t j = 0; j < pm.cols(); ++j) m(ro + i, co + j) = pm(i, j);
      ro += p.dim(s);
      co += p.dim(t);
    }
    r.maps[static_cast<std::size_t>(a)] = m;
  }
  return r;
}

struct Envelope {
  Representation injective;   // sum of E(w) over socle multiplicities
  RepMap embedding;           // rep -> injective
  std::vector<VertexId> summands;  // socle vertex of each E(w) summand, in order
};

/// Injective envelope E(soc M) with an explicit essential embedding. For each
/// socle basis vector at w a functional phi on M_w dual to it gives the map
/// m |-> sum_q phi(m q) q* into D(A e_w), q ranging over paths ending at w.
inline Envelope envelope_embed(const Field& f, const BoundQuiver& bq, const Representation& rep) {
  const auto& q = bq.quiver();
  const auto soc = socle_rep(f, q, rep);
  const auto paths = nonzero_paths(bq);

  Envelope env;
  std::vector<Representation> parts;
  // Per summand: functional (coordinate index in M_w) and E(w) basis paths.
  struct Piece { VertexId w; std::size_t coord; std::vector<Path> basis; };
  std::vector<Piece> pieces;
  for (VertexId w = 1; w <= q.vertex_count(); ++w) {
    const auto& b = soc.basis[static_cast<std::size_t>(w)];
    if (b.empty()) continue;
    const auto e = gf::echelon(f, b, rep.dim(w));
    std::vector<Path> ebasis{{}};
    for (const auto& p : paths)
      if (q.arrow(p.back()).target == w) ebasis.push_back(p);
    for (std::size_t i = 0; i < e.rank(); ++i) {
      pieces.push_back({w, e.pivots[i], ebasis});
      env.summands.push_back(w);
      parts.push_back(injective_rep(bq, w));
    }
  }
  env.injective = direct_sum(q, parts);

  env.embedding.components.resize(rep.dims.size());
  for (VertexId u = 1; u <= q.vertex_count(); ++u) {
    Matrix m(rep.dim(u), env.injective.dim(u));
    std::size_t col = 0;
    for (const auto& pc : pieces) {
      // E(w) basis at u, in the same order injective_rep uses.
      for (const auto& p : pc.basis) {
        const VertexId at = p.empty() ? pc.w : q.arrow(p.front()).source;
        if (at != u) continue;
        // Column of the path's action picked out by phi, built right to left.
        Vec y(rep.dim(pc.w), 0);
        y[pc.coord] = 1;
        for (auto it = p.rbegin(); it != p.rend(); ++it) {
          const auto& a = rep.maps[static_cast<std::size_t>(*it)];
          Vec z(a.rows(), 0);
          for (std::size_t r = 0; r < a.rows(); ++r)
            for (std::size_t c = 0; c < a.cols(); ++c)
              if (a(r, c) && y[c]) z[r] = f.add(z[r], f.mul(a(r, c), y[c]));
          y = std::move(z);
        }
        for (std::size_t i = 0; i < rep.dim(u); ++i) m(i, col) = y[i];
        ++col;
      }
    }
    env.embedding.components[static_cast<std::size_t>(u)] = m;
  }
  return env;
}

inline bool is_module_map(const Field& f, const Quiver& q, const Representation& from, const Representation& to, const RepMap& m) {
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const auto s = static_cast<std::size_t>(q.arrow(a).source), t = static_cast<std::size_t>(q.arrow(a).target);
    auto lhs = gf::multiply(f, from.maps[static_cast<std::size_t>(a)], m.components[t]);
    auto rhs = gf::multiply(f, m.components[s], to.maps[static_cast<std::size_t>(a)]);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

/// Cokernel of the envelope embedding.
inline Representation cosyzygy_rep(const Field& f, const BoundQuiver& bq, const Representation& rep) {
  const auto& q = bq.quiver();
  const auto env = envelope_embed(f, bq, rep);
  const auto& e = env.injective;
  std::vector<gf::Echelon> images(e.dims.size());
  std::vector<std::vector<std::size_t>> freecols(e.dims.size());
  Representation out = zero_rep(q);
  for (VertexId u = 1; u <= q.vertex_count(); ++u) {
    const auto& m = env.embedding.components[static_cast<std::size_t>(u)];
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    images[static_cast<std::size_t>(u)] = gf::echelon(f, rows, e.dim(u));
    if (images[static_cast<std::size_t>(u)].rank() != rep.dim(u))
      throw std::logic_error("envelope map is not injective");
    freecols[static_cast<std::size_t>(u)] = images[static_cast<std::size_t>(u)].free_columns();
    out.dims[static_cast<std::size_t>(u)] = freecols[static_cast<std::size_t>(u)].size();
  }
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const auto s = static_cast<std::size_t>(q.arrow(a).source), t = static_cast<std::size_t>(q.arrow(a).target);
    Matrix m(out.dims[s], out.dims[t]);
    for (std::size_t i = 0; i < freecols[s].size(); ++i) {
      Vec x(e.dims[s], 0);
      x[freecols[s][i]] = 1;
      Vec y = images[t].reduce(f, gf::apply(f, x, e.maps[static_cast<std::size_t>(a)]));
      for (std::size_t j = 0; j < freecols[t].size(); ++j) m(i, j) = y[freecols[t][j]];
    }
    out.maps[static_cast<std::size_t>(a)] = m;
  }
  return out;
}

inline bool is_injective_rep(const Field& f, const BoundQuiver& bq, const Representation& rep) {
  const auto soc = socle_rep(f, bq.quiver(), rep);
  std::size_t total = 0;
  for (VertexId w = 1; w <= bq.quiver().vertex_count(); ++w)
    if (const auto k = soc.dim(w)) total += k * injective_rep(bq, w).total();
  return total == rep.total();
}

/// Finite(n): the n-th cosyzygy is the first injective one. AtLeast(c): none
/// of the cosyzygies 0..c is injective.
struct OracleDim {
  bool finite = true;
  int value = 0;

  static OracleDim Finite(int n) { return {true, n}; }
  static OracleDim AtLeast(int c) { return {false, c}; }
  friend bool operator==(const OracleDim&, const OracleDim&) = default;
};

inline std::string to_string(const OracleDim& d) {
  return (d.finite ? "Finite(" : "AtLeast(") + std::to_string(d.value) + ")";
}

/// Cosyzygies 0..count of rep (fewer if one vanishes first).
inline std::vector<Representation> coresolution(const Field& f, const BoundQuiver& bq, const Representation& rep, int count) {
  std::vector<Representation> out{rep};
  for (int i = 0; i < count && !out.back().is_zero(); ++i) out.push_back(cosyzygy_rep(f, bq, out.back()));
  return out;
}

/// Splits a representation along the connected components of its basis:
/// two basis vectors are linked when some arrow matrix has a nonzero entry
/// between them. Each component spans a direct summand.
inline std::vector<Representation> split_components(const Quiver& q, const Representation& rep) {
  std::vector<std::size_t> offset(rep.dims.size() + 1, 0);
  for (std::size_t v = 0; v < rep.dims.size(); ++v) offset[v + 1] = offset[v] + rep.dims[v];
  const std::size_t n = offset.back();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const auto s = static_cast<std::size_t>(q.arrow(a).source), t = static_cast<std::size_t>(q.arrow(a).target);
    const auto& m = rep.maps[static_cast<std::size_t>(a)];
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (m(i, j)) parent[root(offset[s] + i)] = root(offset[t] + j);
  }
  std::map<std::size_t, std::size_t> comp_of_root;
  std::vector<std::size_t> comp(n), local(n);
  std::vector<std::vector<std::size_t>> counts;
  for (std::size_t v = 0; v < rep.dims.size(); ++v)
    for (std::size_t i = 0; i < rep.dims[v]; ++i) {
      const std::size_t x = offset[v] + i;
      auto [it, fresh] = comp_of_root.try_emplace(root(x), counts.size());
      if (fresh) counts.emplace_back(rep.dims.size(), 0);
      comp[x] = it->second;
      local[x] = counts[it->second][v]++;
    }
  std::vector<Representation> parts;
  for (const auto& c : counts) {
    Representation r = zero_rep(q);
    r.dims = c;
    for (ArrowId a = 0; a < q.arrow_count(); ++a)
      r.maps[static_cast<std::size_t>(a)] = Matrix(r.dim(q.arrow(a).source), r.dim(q.arrow(a).target));
    parts.push_back(std::move(r));
  }
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const auto s = static_cast<std::size_t>(q.arrow(a).source), t = static_cast<std::size_t>(q.arrow(a).target);
    const auto& m = rep.maps[static_cast<std::size_t>(a)];
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (m(i, j)) {
          const std::size_t x = offset[s] + i, y = offset[t] + j;
          parts[comp[x]].maps[static_cast<std::size_t>(a)](local[x], local[y]) = m(i, j);
        }
  }
  return parts;
}

namespace detail {

inline std::vector<std::uint32_t> rep_key(const Representation& r) {
  std::vector<std::uint32_t> k;
  for (auto d : r.dims) k.push_back(static_cast<std::uint32_t>(d));
  for (const auto& m : r.maps)
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) k.push_back(m(i, j));
  return k;
}

/// Smallest n <= remaining with the n-th cosyzygy injective, or empty.
/// A cosyzygy of a direct sum is the sum of the cosyzygies, so the search
/// recurses into the block components and memoizes on exact matrices.
class InjDimSearch {
 public:
  InjDimSearch(const Field& f, const BoundQuiver& bq) : f_(f), bq_(bq) {}

  std::optional<int> run(const Representation& rep, int remaining) {
    if (rep.is_zero() || is_injective_rep(f_, bq_, rep)) return 0;
    if (remaining == 0) return std::nullopt;
    auto key = rep_key(rep);
    if (auto it = memo_.find(key); it != memo_.end()) {
      const auto& [finite, value] = it->second;
      if (finite) return value <= remaining ? std::optional<int>(value) : std::nullopt;
      if (remaining <= value) return std::nullopt;
    }
    std::optional<int> best = 0;
    for (const auto& part : split_components(bq_.quiver(), cosyzygy_rep(f_, bq_, rep))) {
      auto sub = run(part, remaining - 1);
      if (!sub) {
        best.reset();
        break;
      }
      best = std::max(*best, *sub);
    }
    if (best) {
      memo_[key] = {true, *best + 1};
      return *best + 1;
    }
    memo_[key] = {false, remaining};
    return std::nullopt;
  }

 private:
  const Field& f_;
  const BoundQuiver& bq_;
  std::map<std::vector<std::uint32_t>, std::pair<bool, int>> memo_;
};

}  // namespace detail

inline OracleDim inj_dim_upto(const Field& f, const BoundQuiver& bq, const Representation& rep, int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("cutoff must be nonnegative");
  detail::InjDimSearch search(f, bq);
  std::optional<int> best = 0;
  for (const auto& part : split_components(bq.quiver(), rep)) {
    auto n = search.run(part, cutoff);
    if (!n) return OracleDim::AtLeast(cutoff);
    best = std::max(*best, *n);
  }
  return OracleDim::Finite(*best);
}

}  // namespace gorcheck::oracle
