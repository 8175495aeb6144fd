// Left maximal paths as finite windows, relation occurrences and distances,
// and the combinatorial first cosyzygies of projectives and directed strings.
#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gorcheck/quiver.hpp"
#include "gorcheck/strings.hpp"

namespace gorcheck {

/// A finite stretch of a left maximal path. Vertex positions run from 0 (the
/// leftmost vertex) to arrows.size(); `origin` is the position where the seed
/// path starts.
struct PathWindow {
  VertexId leftmost = 0;
  Path arrows;
  std::size_t origin = 0;
  bool extendable_left = false;

  std::size_t vertex_count() const { return arrows.size() + 1; }

  VertexId vertex_at(const Quiver& q, std::size_t pos) const {
    if (pos > arrows.size()) throw std::out_of_range("window position out of range");
    if (pos == 0) return leftmost;
    return q.arrow(arrows[pos - 1]).target;
  }

  /// One arrow further left; `a` must end at the leftmost vertex.
  PathWindow prepend(const Quiver& q, ArrowId a) const {
    if (q.arrow(a).target != leftmost) throw std::invalid_argument("arrow does not end at the window's left end");
    PathWindow w = *this;
    w.arrows.insert(w.arrows.begin(), a);
    w.leftmost = q.arrow(a).source;
    ++w.origin;
    w.extendable_left = !q.in_arrows(w.leftmost).empty();
    return w;
  }
};

inline PathWindow seed_window(const Quiver& q, VertexId start, const Path& p) {
  if (!p.empty() && (q.arrow(p.front()).source != start || !q.composable(p)))
    throw std::invalid_argument("seed is not a composable path from the given vertex");
  return {start, p, 0, !q.in_arrows(start).empty()};
}

/// All windows extending p leftward by min(depth, available) arrows, one per
/// branch. Relations are ignored: these are paths in Q.
inline std::vector<PathWindow> left_window(const BoundQuiver& bq, VertexId start, const Path& p, std::size_t depth) {
  const auto& q = bq.quiver();
  std::vector<PathWindow> out;
  std::vector<std::pair<PathWindow, std::size_t>> stack{{seed_window(q, start, p), 0}};
  while (!stack.empty()) {
    auto [w, d] = std::move(stack.back());
    stack.pop_back();
    const auto ins = q.in_arrows(w.leftmost);
    if (d == depth || ins.empty()) {
      out.push_back(std::move(w));
      continue;
    }
    for (auto it = ins.rbegin(); it != ins.rend(); ++it) stack.emplace_back(w.prepend(q, *it), d + 1);
  }
  return out;
}

inline std::vector<PathWindow> left_window(const BoundQuiver& bq, const Path& p, std::size_t depth) {
  if (p.empty()) throw std::invalid_argument("use the vertex overload for trivial paths");
  return left_window(bq, bq.quiver().arrow(p.front()).source, p, depth);
}

struct RelationOccurrence {
  int relation = -1;
  std::size_t start = 0;  // position of s(r)
  std::size_t end = 0;    // position of t(r)

  friend bool operator==(const RelationOccurrence&, const RelationOccurrence&) = default;
};

/// Every generator occurring in the window, sorted by end then start.
inline std::vector<RelationOccurrence> relations_on(const BoundQuiver& bq, const PathWindow& w) {
  std::vector<RelationOccurrence> out;
  for (int r = 0; r < bq.relation_count(); ++r) {
    const auto& rp = bq.relation(r).path;
    if (rp.size() > w.arrows.size()) continue;
    for (std::size_t i = 0; i + rp.size() <= w.arrows.size(); ++i)
      if (std::equal(rp.begin(), rp.end(), w.arrows.begin() + static_cast<std::ptrdiff_t>(i)))
        out.push_back({r, i, i + rp.size()});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.end != b.end ? a.end < b.end : a.start < b.start;
  });
  return out;
}

inline std::size_t left_distance(std::size_t vertex_pos, const RelationOccurrence& occ) {
  if (vertex_pos > occ.start) throw std::invalid_argument("vertex lies to the right of the subpath start");
  return occ.start - vertex_pos;
}

inline std::size_t right_distance(const RelationOccurrence& occ, std::size_t vertex_pos) {
  if (vertex_pos < occ.end) throw std::invalid_argument("vertex lies to the left of the subpath end");
  return vertex_pos - occ.end;
}

/// The occurrence ending at or before `target` with the smallest
/// right-distance, if the window contains one.
inline std::optional<RelationOccurrence> minimal_relation_up(const BoundQuiver& bq, const PathWindow& w, std::size_t target) {
  if (target >= w.vertex_count()) throw std::out_of_range("target outside window");
  std::optional<RelationOccurrence> best;
  bool tie = false;
  for (const auto& o : relations_on(bq, w)) {
    if (o.end > target) continue;
    if (!best || o.end > best->end) {
      best = o;
      tie = false;
    } else if (o.end == best->end) {
      tie = true;
    }
  }
  if (tie) throw std::logic_error("two generators end at the same position; relations are not minimal");
  return best;
}

/// Grows the window leftward, branch by branch, until a relation ending at
/// or before `target` (a position counted from the seed's left end) shows up,
/// a source is reached, or `max_depth` arrows have been added. A relation
/// further left always ends strictly earlier than one already found, so the
/// first hit on a branch is its minimum.
struct BranchMinimum {
  PathWindow window;
  std::optional<RelationOccurrence> minimum;
};

inline std::vector<BranchMinimum> minimal_relation_up_branches(const BoundQuiver& bq, const PathWindow& seed,
                                                              std::size_t target, std::size_t max_depth) {
  const auto& q = bq.quiver();
  std::vector<BranchMinimum> out;
  std::vector<std::pair<PathWindow, std::size_t>> stack{{seed, 0}};
  while (!stack.empty()) {
    auto [w, d] = std::move(stack.back());
    stack.pop_back();
    const std::size_t shift = w.origin - seed.origin;
    if (auto m = minimal_relation_up(bq, w, target + shift)) {
      out.push_back({std::move(w), m});
      continue;
    }
    const auto ins = q.in_arrows(w.leftmost);
    if (ins.empty() || d == max_depth) {
      out.push_back({std::move(w), std::nullopt});
      continue;
    }
    for (auto it = ins.rbegin(); it != ins.rend(); ++it) stack.emplace_back(w.prepend(q, *it), d + 1);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Maximal extensions

/// The generator that stops a maximal nonzero path q from growing further to
/// the left: for each arrow b into s(q), bq is zero and exactly one generator
/// is a prefix of bq. The longest such generator wins (it ends closest to
/// t(q)); ties go to the smaller relation id. Empty when s(q) is a source.
inline std::optional<int> left_blocker(const BoundQuiver& bq, VertexId start, const Path& q) {
  std::optional<int> best;
  for (ArrowId b : bq.quiver().in_arrows(start)) {
    Path e{b};
    e.insert(e.end(), q.begin(), q.end());
    for (int r = 0; r < bq.relation_count(); ++r) {
      const auto& rp = bq.relation(r).path;
      if (rp.size() > e.size() || !std::equal(rp.begin(), rp.end(), e.begin())) continue;
      if (!best || rp.size() > bq.relation(*best).length() ||
          (rp.size() == bq.relation(*best).length() && r < *best))
        best = r;
    }
  }
  return best;
}

struct LeftExtension {
  Path extension;                // the arrows added in front
  std::optional<int> blocker;    // generator stopping further growth
};

/// Longest e with e·p nonzero, for a nonempty nonzero path p.
inline LeftExtension left_extend(const BoundQuiver& bq, const Path& p) {
  if (p.empty() || bq.is_zero_path(p)) throw std::invalid_argument("left_extend needs a nonempty nonzero path");
  const Path full = max_path_into(bq, p.back());
  if (full.size() < p.size() || !std::equal(p.begin(), p.end(), full.end() - static_cast<std::ptrdiff_t>(p.size())))
    throw std::logic_error("maximal left extension does not contain the path");
  LeftExtension e;
  e.extension.assign(full.begin(), full.end() - static_cast<std::ptrdiff_t>(p.size()));
  e.blocker = left_blocker(bq, bq.quiver().arrow(full.front()).source, full);
  return e;
}

// ---------------------------------------------------------------------------
// Directed strings and their first cosyzygy

/// A directed string given by the path read in composition order, anchored at
/// its end vertex (so a trivial path still names its vertex).
struct DirectedString {
  VertexId end = 0;
  Path path;

  VertexId start(const Quiver& q) const { return path.empty() ? end : q.arrow(path.front()).source; }
  friend bool operator==(const DirectedString&, const DirectedString&) = default;
  friend auto operator<=>(const DirectedString&, const DirectedString&) = default;
};

inline StringWord to_word(const Quiver& q, const DirectedString& s) {
  return s.path.empty() ? trivial_string(s.end) : path_string(q, s.path);
}

inline DirectedString to_directed(const Quiver& q, const StringWord& w) {
  if (!is_directed(w)) throw std::invalid_argument("string is not directed");
  if (w.trivial()) return {w.base, {}};
  Path p = directed_runs(w).front();
  return {q.arrow(p.back()).target, p};
}

/// One summand of the first cosyzygy of a directed string, reached through
/// the arrow `via` into the socle vertex, with the generator that cut the
/// envelope there (empty when the envelope reached a source).
struct CosyzygyPiece {
  ArrowId via = 0;
  bool own_arm = false;          // continues the string itself rather than the other in-arm
  Path envelope_arm;             // the full maximal path into the socle through `via`
  DirectedString summand;
  std::optional<int> label;
};

/// The summand of the first cosyzygy of the directed string u coming from
/// the in-arrow g at its end; empty when that part of the envelope is u itself.
inline std::optional<CosyzygyPiece> arm_child(const BoundQuiver& bq, const DirectedString& u, ArrowId g) {
  const auto& q = bq.quiver();
  if (q.arrow(g).target != u.end) throw std::invalid_argument("arrow does not end at the string's socle");
  const Path full = max_path_into(bq, g);
  CosyzygyPiece piece{g, false, full, {}, left_blocker(bq, q.arrow(full.front()).source, full)};
  if (!u.path.empty() && u.path.back() == g) {
    piece.own_arm = true;
    const auto ext = left_extend(bq, u.path);
    if (ext.extension.empty()) return std::nullopt;
    piece.summand = {q.arrow(ext.extension.back()).source, Path(ext.extension.begin(), ext.extension.end() - 1)};
    piece.label = ext.blocker;
    return piece;
  }
  piece.summand = {q.arrow(g).source, Path(full.begin(), full.end() - 1)};
  return piece;
}

/// The injective envelope string of a directed string and the (at most two)
/// summands of its first cosyzygy, own arm first.
struct DirectedCosyzygy {
  StringWord envelope;
  std::vector<CosyzygyPiece> pieces;
};

inline DirectedCosyzygy cosyzygy_directed(const BoundQuiver& bq, const StringWord& word) {
  const auto& q = bq.quiver();
  if (!is_directed(word)) throw std::invalid_argument("cosyzygy_directed needs a directed string");
  if (!is_valid_string(bq, word)) throw std::invalid_argument("invalid string");
  const auto u = to_directed(q, word);
  DirectedCosyzygy out;
  out.envelope = injective_string(bq, u.end);
  auto ins = q.in_arrows(u.end);
  std::stable_partition(ins.begin(), ins.end(), [&](ArrowId g) { return !u.path.empty() && u.path.back() == g; });
  for (ArrowId g : ins)
    if (auto c = arm_child(bq, u, g)) out.pieces.push_back(std::move(*c));
  return out;
}

// ---------------------------------------------------------------------------
// First cosyzygy of a projective with two arms

/// One side of D: the in-arrow at v0, the arm it is paired with, the part of
/// the arm's maximal left extension lying left of v0, and the minimal relation
/// ending at or before the arm's end on the branch through that in-arrow.
struct DSide {
  ArrowId in_arrow = 0;
  int arm = 0;                   // 0 for c, 1 for d
  Path upper;                    // s_a or s_b (possibly empty)
  std::optional<int> seed;       // r^u at the arm's end on this branch
  std::optional<CosyzygyPiece> next;  // summand of the cosyzygy of D on this side
};

struct EnvelopeData {
  VertexId v0 = 0;
  Path arm_c, arm_d;              // maximal paths out of v0, in out-arrow declaration order
  Path s_a, s_b;                  // s_a extends d, s_b extends c (left of v0)
  std::vector<CosyzygyPiece> left, right;  // overhang summands at t(c) and t(d)
  StringWord envelope_left, envelope_right;
  StringWord d;                   // the summand D = s_a s_b^-1, socle at v0
  std::vector<DSide> sides;
  bool d_injective = false;      // D is injective: its cosyzygy vanishes on both sides

  VertexId vertex_ld(const Quiver& q) const { return q.arrow(arm_c.back()).target; }
  VertexId vertex_rd(const Quiver& q) const { return q.arrow(arm_d.back()).target; }
};

/// The generator that starts with `g` inside g·arm (g·arm is zero).
inline std::optional<int> prefix_relation(const BoundQuiver& bq, ArrowId g, const Path& arm) {
  Path e{g};
  e.insert(e.end(), arm.begin(), arm.end());
  for (int r = 0; r < bq.relation_count(); ++r) {
    const auto& rp = bq.relation(r).path;
    if (rp.size() <= e.size() && std::equal(rp.begin(), rp.end(), e.begin())) return r;
  }
  return std::nullopt;
}

inline EnvelopeData first_cosyzygy_projective(const BoundQuiver& bq, VertexId v0) {
  const auto& q = bq.quiver();
  const auto outs = q.out_arrows(v0);
  if (outs.size() != 2) throw std::invalid_argument("vertex " + std::to_string(v0) + " does not have two out-arrows");
  if (q.in_arrows(v0).size() > 2) throw std::invalid_argument("vertex has more than two in-arrows");

  EnvelopeData e;
  e.v0 = v0;
  e.arm_c = max_path_from(bq, outs[0]);
  e.arm_d = max_path_from(bq, outs[1]);
  e.s_b = left_extend(bq, e.arm_c).extension;
  e.s_a = left_extend(bq, e.arm_d).extension;

  auto overhangs = [&](const Path& arm) {
    std::vector<CosyzygyPiece> pieces;
    const DirectedString u{q.arrow(arm.back()).target, arm};
    for (ArrowId g : q.in_arrows(u.end))
      if (g != arm.back())
        if (auto c = arm_child(bq, u, g)) pieces.push_back(std::move(*c));
    return pieces;
  };
  e.left = overhangs(e.arm_c);
  e.right = overhangs(e.arm_d);
  e.envelope_left = injective_string(bq, e.vertex_ld(q));
  e.envelope_right = injective_string(bq, e.vertex_rd(q));

  // D = s_a s_b^-1
  StringWord dw{v0, {}};
  if (!e.s_a.empty()) {
    dw.base = q.arrow(e.s_a.front()).source;
    for (ArrowId a : e.s_a) dw.letters.push_back(direct(a));
  }
  for (auto it = e.s_b.rbegin(); it != e.s_b.rend(); ++it) dw.letters.push_back(inverse_of(*it));
  e.d = canonicalize(q, dw);

  for (const auto& [in, out] : pair_sides(bq, v0)) {
    if (!in) continue;
    DSide side;
    side.in_arrow = *in;
    side.arm = out == outs[0] ? 0 : 1;
    const Path& arm = side.arm == 0 ? e.arm_c : e.arm_d;
    side.upper = side.arm == 0 ? e.s_b : e.s_a;
    if (!side.upper.empty() && side.upper.back() != *in)
      throw std::logic_error("arm extension leaves v0 through the unpaired in-arrow");
    if (side.upper.empty()) {
      side.seed = prefix_relation(bq, *in, arm);
    } else {
      Path full = side.upper;
      full.insert(full.end(), arm.begin(), arm.end());
      side.seed = left_blocker(bq, q.arrow(full.front()).source, full);
    }
    const DirectedString u{v0, side.upper};
    side.next = arm_child(bq, u, *in);
    e.sides.push_back(std::move(side));
  }
  e.d_injective = std::none_of(e.sides.begin(), e.sides.end(), [](const DSide& s) { return s.next.has_value(); });
  return e;
}

/// Dimension vector of D_L + D + D_R.
inline DimensionVector first_cosyzygy_dims(const BoundQuiver& bq, const EnvelopeData& e) {
  const auto& q = bq.quiver();
  DimensionVector d = dim_vector(q, e.d);
  for (const auto* side : {&e.left, &e.right})
    for (const auto& p : *side)
      for (auto [v, k] : dim_vector(q, to_word(q, p.summand))) d[v] += k;
  return d;
}

// ---------------------------------------------------------------------------
// Injectivity of the cosyzygy of D

struct DInjectivitySets {
  std::vector<RelationOccurrence> left, right;  // positions on the window of each entry
  std::vector<PathWindow> left_windows, right_windows;
};

/// Which relations on a branch are tested against the seed. `MinimalPerBranch`
/// takes only the relation ending closest to v0 on each branch; `AllOnBranch`
/// takes every relation ending at or before v0. Only the first makes empty
/// sets equivalent to an injective cosyzygy of D (see the paths tests).
enum class RelationSetReading { MinimalPerBranch, AllOnBranch };

/// For the side paired with each arm: relations on leftward branches of
/// s·arm that end at or before v0 and left-intersect the minimal relation
/// ending at or before the arm's end on the same branch.
inline DInjectivitySets d_injectivity_sets(const BoundQuiver& bq, VertexId v0,
                                           RelationSetReading reading = RelationSetReading::MinimalPerBranch) {
  const auto& q = bq.quiver();
  if (q.in_arrows(v0).size() != 2 || q.out_arrows(v0).size() != 2)
    throw std::invalid_argument("vertex " + std::to_string(v0) + " is not of type (2in,2out)");
  const auto env = first_cosyzygy_projective(bq, v0);
  DInjectivitySets out;
  const std::size_t depth = bq.max_relation_length() + 2;
  for (const auto& side : env.sides) {
    const Path& arm = side.arm == 0 ? env.arm_c : env.arm_d;
    Path p = side.upper;
    VertexId start = v0;
    if (p.empty()) {
      p.push_back(side.in_arrow);
      start = q.arrow(side.in_arrow).source;
    } else {
      start = q.arrow(p.front()).source;
    }
    const std::size_t v0_pos = p.size();
    p.insert(p.end(), arm.begin(), arm.end());
    const std::size_t end_pos = p.size();
    auto& bucket = side.arm == 1 ? out.left : out.right;
    auto& windows = side.arm == 1 ? out.left_windows : out.right_windows;
    for (const auto& w : left_window(bq, start, p, depth)) {
      const std::size_t shift = w.origin;
      const auto seed = minimal_relation_up(bq, w, end_pos + shift);
      if (!seed) continue;
      std::vector<RelationOccurrence> candidates;
      if (reading == RelationSetReading::MinimalPerBranch) {
        if (auto r = minimal_relation_up(bq, w, v0_pos + shift)) candidates.push_back(*r);
      } else {
        for (const auto& o : relations_on(bq, w))
          if (o.end <= v0_pos + shift) candidates.push_back(o);
      }
      for (const auto& o : candidates) {
        if (o == *seed) continue;
        const bool crosses = o.start < seed->start && seed->start < o.end && o.end < seed->end;
        if (!crosses) continue;
        if (std::find_if(bucket.begin(), bucket.end(), [&](const auto& b) { return b.relation == o.relation; }) == bucket.end()) {
          bucket.push_back(o);
          windows.push_back(w);
        }
      }
    }
  }
  return out;
}

}  // namespace gorcheck
