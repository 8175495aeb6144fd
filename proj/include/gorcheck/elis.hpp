// Effective left-intersecting sequences of projectives, and the injective
// dimension of a string algebra computed from them.
//
// elis_outcome walks the graph of cosyzygy summands of P(v): the summands
// D_L, D, D_R of the first cosyzygy, then directed strings forever after.
// Each edge carries the generator that cut the envelope there; the labels
// along a longest walk are the ELIS. A reachable cycle means the chain never
// stops.
#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gorcheck/paths.hpp"
#include "gorcheck/quiver.hpp"
#include "gorcheck/strings.hpp"

namespace gorcheck {

/// Strict version of both clauses: s(lower) inside (s(upper), t(upper)) and
/// t(upper) inside (s(lower), t(lower)).
inline bool left_intersects(const RelationOccurrence& upper, const RelationOccurrence& lower) {
  return upper.start < lower.start && lower.start < upper.end && upper.end < lower.end;
}

struct InjDim {
  bool finite = true;
  int value = 0;

  static InjDim Finite(int n) { return {true, n}; }
  static InjDim Infinite() { return {false, 0}; }
  friend bool operator==(const InjDim&, const InjDim&) = default;
};

inline std::string to_string(const InjDim& d) {
  return d.finite ? "Finite(" + std::to_string(d.value) + ")" : "Infinite";
}

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::size_t budget)
      : std::runtime_error("state budget of " + std::to_string(budget) + " exhausted") {}
};

/// A chain label: a generator id, or empty where the envelope reached a source.
using ChainLabel = std::optional<int>;

struct CycleStep {
  DirectedString node;
  ChainLabel label;  // label of the edge leaving this node along the cycle
};

struct ElisOutcome {
  bool finite = true;
  int length = 0;
  bool projective_injective = false;
  /// Chains in the order (r_n, ..., r_1), deduplicated.
  std::vector<std::vector<ChainLabel>> witnesses;
  std::vector<CycleStep> cycle;
};

inline constexpr std::size_t kDefaultStateBudget = 1000000;
inline constexpr std::size_t kWitnessCap = 64;

namespace detail {

class ArmGraph {
 public:
  ArmGraph(const BoundQuiver& bq, std::size_t budget) : bq_(bq), budget_(budget) {}

  struct Info {
    bool done = false;
    int height = 0;
    std::vector<std::vector<ChainLabel>> tails;  // label sequences along longest walks
  };

  /// False when a cycle was found (then cycle() is filled).
  bool visit(const DirectedString& u) {
    if (auto it = memo_.find(u); it != memo_.end()) {
      if (it->second.done) return true;
      auto pos = std::find_if(stack_.begin(), stack_.end(), [&](const auto& s) { return s.node == u; });
      cycle_.assign(pos, stack_.end());
      return false;
    }
    if (++expanded_ > budget_) throw BudgetExceeded(budget_);
    memo_[u];
    stack_.push_back({u, std::nullopt});
    std::vector<std::pair<ChainLabel, DirectedString>> kids;
    for (ArrowId g : bq_.quiver().in_arrows(u.end))
      if (auto c = arm_child(bq_, u, g)) kids.emplace_back(c->label, c->summand);
    Info info;
    for (const auto& [label, child] : kids) {
      stack_.back().label = label;
      if (!visit(child)) return false;
      merge(info, label, memo_.at(child));
    }
    if (kids.empty()) info.tails = {{}};
    info.done = true;
    memo_[u] = std::move(info);
    stack_.pop_back();
    return true;
  }

  const Info& info(const DirectedString& u) const { return memo_.at(u); }
  const std::vector<CycleStep>& cycle() const { return cycle_; }

  /// Folds the walks through one child into a parent's running maximum.
  static void merge(Info& parent, const ChainLabel& label, const Info& child) {
    const int h = child.height + 1;
    if (h < parent.height) return;
    if (h > parent.height) {
      parent.height = h;
      parent.tails.clear();
    }
    for (const auto& t : child.tails) {
      if (parent.tails.size() >= kWitnessCap) break;
      std::vector<ChainLabel> s{label};
      s.insert(s.end(), t.begin(), t.end());
      if (std::find(parent.tails.begin(), parent.tails.end(), s) == parent.tails.end()) parent.tails.push_back(std::move(s));
    }
  }

 private:
  const BoundQuiver& bq_;
  std::size_t budget_;
  std::size_t expanded_ = 0;
  std::map<DirectedString, Info> memo_;
  std::vector<CycleStep> stack_;
  std::vector<CycleStep> cycle_;
};

}  // namespace detail

inline ElisOutcome elis_outcome(const BoundQuiver& bq, VertexId v, std::size_t budget = kDefaultStateBudget) {
  const auto& q = bq.quiver();
  if (!q.has_vertex(v)) throw std::out_of_range("unknown vertex " + std::to_string(v));
  detail::ArmGraph g(bq, budget);
  ElisOutcome out;
  detail::ArmGraph::Info root;

  auto infinite = [&]() {
    out.finite = false;
    out.cycle = g.cycle();
    return out;
  };

  const auto outs = q.out_arrows(v);
  if (outs.size() < 2) {
    DirectedString u{v, {}};
    if (!outs.empty()) {
      u.path = max_path_from(bq, outs.front());
      u.end = q.arrow(u.path.back()).target;
    }
    if (!g.visit(u)) return infinite();
    root = g.info(u);
  } else {
    const auto env = first_cosyzygy_projective(bq, v);
    // D itself is always an edge, even when it is injective.
    root.height = 1;
    root.tails = {{std::nullopt}};
    for (const auto* side : {&env.left, &env.right})
      for (const auto& piece : *side) {
        if (!g.visit(piece.summand)) return infinite();
        detail::ArmGraph::merge(root, piece.label, g.info(piece.summand));
      }
    for (const auto& s : env.sides) {
      detail::ArmGraph::Info half;
      half.tails = {{}};
      if (s.next) {
        if (!g.visit(s.next->summand)) return infinite();
        half = {};
        detail::ArmGraph::merge(half, s.next->label, g.info(s.next->summand));
      }
      detail::ArmGraph::merge(root, s.seed, half);
    }
  }

  out.projective_injective = root.height == 0;
  out.length = std::max(0, root.height - 1);
  for (const auto& t : root.tails) {
    std::vector<ChainLabel> w(t.begin(), t.begin() + out.length);
    std::reverse(w.begin(), w.end());
    if (!w.empty() && std::find(out.witnesses.begin(), out.witnesses.end(), w) == out.witnesses.end())
      out.witnesses.push_back(std::move(w));
  }
  return out;
}

inline InjDim inj_dim_projective(const BoundQuiver& bq, VertexId v, std::size_t budget = kDefaultStateBudget) {
  const auto o = elis_outcome(bq, v, budget);
  if (!o.finite) return InjDim::Infinite();
  return InjDim::Finite(o.projective_injective ? 0 : o.length + 1);
}

inline InjDim inj_dim_algebra(const BoundQuiver& bq, std::size_t budget = kDefaultStateBudget) {
  InjDim best = InjDim::Finite(0);
  for (VertexId v = 1; v <= bq.quiver().vertex_count(); ++v) {
    const auto d = inj_dim_projective(bq, v, budget);
    if (!d.finite) return d;
    best.value = std::max(best.value, d.value);
  }
  return best;
}

inline bool is_self_injective(const BoundQuiver& bq) {
  for (VertexId v = 1; v <= bq.quiver().vertex_count(); ++v)
    if (!is_injective_module(bq, projective_string(bq, v))) return false;
  return true;
}

inline bool is_gorenstein(const BoundQuiver& bq, std::size_t budget = kDefaultStateBudget) {
  return inj_dim_algebra(bq, budget).finite;
}

inline std::string chain_label(const BoundQuiver& bq, const ChainLabel& l) {
  return l ? bq.relation_label(*l) : "-";
}

// ---------------------------------------------------------------------------
// The chain on a single left maximal path, step by step

/// A chain r_1, r_2, ... built on one left maximal path through an arm of P(v).
struct LiteralTrace {
  VertexId vertex = 0;
  int arm = 0;
  PathWindow window;
  std::vector<RelationOccurrence> chain;  // r_1 first
  bool periodic = false;
};

namespace detail {

/// Branch choice when growing a window: the in-arrow that composes with the
/// current first arrow outside I, otherwise the first declared one.
inline std::optional<ArrowId> preferred_in_arrow(const BoundQuiver& bq, const PathWindow& w) {
  const auto ins = bq.quiver().in_arrows(w.leftmost);
  if (ins.empty()) return std::nullopt;
  if (!w.arrows.empty())
    for (ArrowId a : ins)
      if (!bq.composes_to_zero(a, w.arrows.front())) return a;
  return ins.front();
}

inline void grow(const BoundQuiver& bq, LiteralTrace& t, std::size_t& target) {
  auto a = preferred_in_arrow(bq, t.window);
  if (!a) return;
  t.window = t.window.prepend(bq.quiver(), *a);
  for (auto& o : t.chain) {
    ++o.start;
    ++o.end;
  }
  ++target;
}

/// r^u at `target`, growing the window until found or a source is reached.
inline std::optional<RelationOccurrence> find_up(const BoundQuiver& bq, LiteralTrace& t, std::size_t target) {
  const std::size_t cap = bq.max_relation_length() * static_cast<std::size_t>(bq.quiver().arrow_count() + 2);
  for (std::size_t i = 0;; ++i) {
    if (auto m = minimal_relation_up(bq, t.window, target)) return m;
    if (!t.window.extendable_left || i > cap) return std::nullopt;
    grow(bq, t, target);
  }
}

}  // namespace detail

/// Chains of length at most 2 started from each arm of P(v).
inline std::vector<LiteralTrace> seed_states(const BoundQuiver& bq, VertexId v) {
  const auto& q = bq.quiver();
  if (is_injective_module(bq, projective_string(bq, v))) throw std::invalid_argument("P(" + std::to_string(v) + ") is injective");
  const auto outs = q.out_arrows(v);
  std::vector<LiteralTrace> seeds;
  for (std::size_t k = 0; k < outs.size(); ++k) {
    const Path arm = max_path_from(bq, outs[k]);
    LiteralTrace t{v, static_cast<int>(k), seed_window(q, v, arm), {}, false};
    auto r1 = detail::find_up(bq, t, arm.size());
    if (!r1) continue;
    t.chain.push_back(*r1);
    // With a second arm the next relation must end by v0; otherwise one step
    // further left.
    std::size_t target = t.window.origin;
    if (outs.size() < 2) {
      if (target == 0) {
        if (!t.window.extendable_left) {
          seeds.push_back(std::move(t));
          continue;
        }
        detail::grow(bq, t, target);
      }
      --target;
    }
    if (auto r2 = detail::find_up(bq, t, target); r2 && left_intersects(*r2, t.chain[0])) t.chain.push_back(*r2);
    seeds.push_back(std::move(t));
  }
  return seeds;
}

/// Appends r_{i+1} = r^u(s(r_{i-1})) if it left-intersects r_i.
inline bool extend(const BoundQuiver& bq, LiteralTrace& t) {
  if (t.chain.size() < 2) return false;
  const std::size_t target = t.chain[t.chain.size() - 2].start;
  auto r = detail::find_up(bq, t, target);
  if (!r || !left_intersects(*r, t.chain.back())) return false;
  t.chain.push_back(*r);
  return true;
}

/// Runs extend until the chain stops, repeats its shape, or reaches max_len.
inline LiteralTrace literal_trace(const BoundQuiver& bq, VertexId v, int arm, std::size_t max_len = 16) {
  auto seeds = seed_states(bq, v);
  auto it = std::find_if(seeds.begin(), seeds.end(), [&](const auto& s) { return s.arm == arm; });
  if (it == seeds.end()) throw std::invalid_argument("no chain starts on that arm");
  LiteralTrace t = *it;
  std::set<std::tuple<int, int, std::size_t, std::size_t>> seen;
  while (t.chain.size() < max_len && extend(bq, t)) {
    const auto& a = t.chain.back();
    const auto& b = t.chain[t.chain.size() - 2];
    if (!seen.insert({a.relation, b.relation, b.start - a.start, b.end - a.start}).second) {
      t.periodic = true;
      break;
    }
  }
  return t;
}

/// Text diagram: the window on one line, each relation of the chain under the
/// positions it spans.
inline std::string render_trace(const BoundQuiver& bq, const LiteralTrace& t) {
  const auto& q = bq.quiver();
  std::vector<std::size_t> col;
  std::string line;
  for (std::size_t i = 0; i < t.window.vertex_count(); ++i) {
    col.push_back(line.size());
    line += std::to_string(t.window.vertex_at(q, i));
    if (i < t.window.arrows.size()) line += " -" + q.arrow(t.window.arrows[i]).label + "-> ";
  }
  std::string out = line + "\n";
  for (std::size_t k = 0; k < t.chain.size(); ++k) {
    const auto& o = t.chain[k];
    std::string row(col[o.end] + 1, ' ');
    for (std::size_t c = col[o.start]; c <= col[o.end]; ++c) row[c] = '=';
    out += row + " r" + std::to_string(k + 1) + " = " + bq.relation_label(o.relation) + "\n";
  }
  if (t.periodic) out += "(periodic)\n";
  return out;
}

}  // namespace gorcheck
