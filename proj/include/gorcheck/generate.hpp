// Seeded random string algebras and gentle algebras for property tests.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gorcheck/quiver.hpp"

namespace gorcheck {

struct GenLimits {
  int max_vertices = 6;
  int max_arrows = 10;
  int max_relation_length = 4;
};

namespace detail {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

inline std::string arrow_name(int i) {
  std::string s(1, static_cast<char>('a' + i % 26));
  if (i >= 26) s += std::to_string(i / 26);
  return s;
}

/// Random connected quiver with every in- and out-degree at most 2.
inline Quiver random_quiver(Rng& rng, const GenLimits& lim) {
  const int n = uniform(rng, 1, std::max(1, lim.max_vertices));
  Quiver q(n);
  std::vector<int> indeg(static_cast<std::size_t>(n + 1)), outdeg(static_cast<std::size_t>(n + 1));
  auto try_add = [&](VertexId s, VertexId t) {
    if (outdeg[static_cast<std::size_t>(s)] >= 2 || indeg[static_cast<std::size_t>(t)] >= 2) return false;
    if (q.arrow_count() >= lim.max_arrows) return false;
    q.add_arrow(arrow_name(q.arrow_count()), s, t);
    ++outdeg[static_cast<std::size_t>(s)];
    ++indeg[static_cast<std::size_t>(t)];
    return true;
  };
  for (VertexId v = 2; v <= n; ++v) {
    bool added = false;
    for (int attempt = 0; attempt < 32 && !added; ++attempt) {
      const VertexId u = uniform(rng, 1, v - 1);
      added = coin(rng) ? try_add(u, v) : try_add(v, u);
    }
    if (!added)
      for (VertexId u = 1; u < v && !added; ++u) added = try_add(u, v) || try_add(v, u);
    if (!added) throw std::logic_error("could not connect vertex");
  }
  const int extra = uniform(rng, 0, std::max(0, lim.max_arrows - q.arrow_count()));
  for (int i = 0; i < extra; ++i) try_add(uniform(rng, 1, n), uniform(rng, 1, n));
  return q;
}

/// Pairs (a, b) at each vertex whose composition stays nonzero: a random
/// partial matching between in- and out-arrows.
inline std::set<std::pair<ArrowId, ArrowId>> random_matching(Rng& rng, const Quiver& q, double keep) {
  std::set<std::pair<ArrowId, ArrowId>> nonzero;
  for (VertexId v = 1; v <= q.vertex_count(); ++v) {
    auto ins = q.in_arrows(v);
    auto outs = q.out_arrows(v);
    std::shuffle(ins.begin(), ins.end(), rng);
    std::shuffle(outs.begin(), outs.end(), rng);
    for (std::size_t i = 0; i < std::min(ins.size(), outs.size()); ++i)
      if (coin(rng, keep)) nonzero.insert({ins[i], outs[i]});
  }
  return nonzero;
}

inline std::vector<Relation> quadratic_complement(const Quiver& q, const std::set<std::pair<ArrowId, ArrowId>>& nonzero) {
  std::vector<Relation> rels;
  for (ArrowId a = 0; a < q.arrow_count(); ++a)
    for (ArrowId b : q.out_arrows(q.arrow(a).target))
      if (!nonzero.count({a, b})) rels.push_back({{a, b}});
  return rels;
}

}  // namespace detail

/// A string algebra: degree caps, quadratic zero relations from a random
/// partial matching at each vertex, a few longer monomial relations, and
/// extra relations cutting every relation-free cycle.
inline BoundQuiver random_string_algebra(std::uint64_t seed, const GenLimits& lim = {}) {
  detail::Rng rng(seed);
  for (;;) {
    Quiver q = detail::random_quiver(rng, lim);
    const auto nonzero = detail::random_matching(rng, q, 0.7);
    auto rels = detail::quadratic_complement(q, nonzero);
    BoundQuiver bq("random-" + std::to_string(seed), q, rels);

    // Longer relations along nonzero paths.
    if (lim.max_relation_length >= 3) {
      const int longer = detail::uniform(rng, 0, 3);
      for (int i = 0; i < longer && q.arrow_count() > 0; ++i) {
        Path p{detail::uniform(rng, 0, q.arrow_count() - 1)};
        const int len = detail::uniform(rng, 3, lim.max_relation_length);
        while (static_cast<int>(p.size()) < len) {
          std::optional<ArrowId> next;
          for (ArrowId b : q.out_arrows(q.arrow(p.back()).target))
            if (nonzero.count({p.back(), b})) next = b;
          if (!next) break;
          p.push_back(*next);
        }
        if (static_cast<int>(p.size()) >= 3 && !bq.is_zero_path(p)) {
          rels.push_back({p});
          bq = BoundQuiver(bq.name(), q, rels);
        }
      }
    }

    // Admissibility: cut each relation-free cycle with a window along it.
    bool ok = true;
    for (int round = 0; round < 64; ++round) {
      auto cyc = relation_free_cycle(bq);
      if (!cyc) break;
      Path twice = *cyc;
      twice.insert(twice.end(), cyc->begin(), cyc->end());
      const auto len = static_cast<std::size_t>(detail::uniform(rng, 2, std::max(2, lim.max_relation_length)));
      const auto start = static_cast<std::size_t>(detail::uniform(rng, 0, static_cast<int>(cyc->size()) - 1));
      Path r;
      for (std::size_t k = 0; k < len; ++k) r.push_back(twice[(start + k) % twice.size()]);
      rels.push_back({r});
      bq = BoundQuiver(bq.name(), q, rels);
      if (round == 63) ok = false;
    }
    if (!ok) continue;
    if (validate_string_quiver(bq).valid()) return bq;
  }
}

/// A gentle algebra: at each vertex the quadratic relations and the nonzero
/// compositions each form a matching, with the two matchings complementary
/// where both degrees are two.
inline BoundQuiver random_gentle_algebra(std::uint64_t seed, const GenLimits& lim = {}) {
  detail::Rng rng(seed);
  for (;;) {
    Quiver q = detail::random_quiver(rng, lim);
    std::set<std::pair<ArrowId, ArrowId>> nonzero;
    // Choose, per vertex, which in-arrow continues through which out-arrow.
    auto choose = [&](VertexId v, std::optional<std::pair<ArrowId, ArrowId>> forbid) {
      for (auto it = nonzero.begin(); it != nonzero.end();)
        it = q.arrow(it->first).target == v ? nonzero.erase(it) : std::next(it);
      const auto ins = q.in_arrows(v);
      const auto outs = q.out_arrows(v);
      if (ins.empty() || outs.empty()) return;
      if (ins.size() == 1 && outs.size() == 1) {
        const std::pair<ArrowId, ArrowId> p{ins[0], outs[0]};
        if (p != forbid && detail::coin(rng, 0.6)) nonzero.insert(p);
        return;
      }
      std::vector<std::vector<std::pair<ArrowId, ArrowId>>> options;
      if (ins.size() == 2 && outs.size() == 2) {
        options = {{{ins[0], outs[0]}, {ins[1], outs[1]}}, {{ins[0], outs[1]}, {ins[1], outs[0]}}};
      } else {
        for (ArrowId a : ins)
          for (ArrowId b : outs) options.push_back({{a, b}});
      }
      std::vector<std::vector<std::pair<ArrowId, ArrowId>>> allowed;
      for (const auto& o : options)
        if (!forbid || std::find(o.begin(), o.end(), *forbid) == o.end()) allowed.push_back(o);
      const auto& pick = allowed[static_cast<std::size_t>(detail::uniform(rng, 0, static_cast<int>(allowed.size()) - 1))];
      nonzero.insert(pick.begin(), pick.end());
    };
    for (VertexId v = 1; v <= q.vertex_count(); ++v) choose(v, std::nullopt);

    bool ok = false;
    for (int round = 0; round < 64; ++round) {
      BoundQuiver bq("gentle-" + std::to_string(seed), q, detail::quadratic_complement(q, nonzero));
      auto cyc = relation_free_cycle(bq);
      if (!cyc) {
        ok = validate_string_quiver(bq).valid();
        if (ok) return bq;
        break;
      }
      const auto i = static_cast<std::size_t>(detail::uniform(rng, 0, static_cast<int>(cyc->size()) - 1));
      const ArrowId a = (*cyc)[i], b = (*cyc)[(i + 1) % cyc->size()];
      choose(q.arrow(a).target, std::pair{a, b});
    }
  }
}

}  // namespace gorcheck
