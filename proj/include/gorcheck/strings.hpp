// Strings over a string quiver: validity, orientation, the strings of
// indecomposable projectives and injectives, and combinatorial module data.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gorcheck/quiver.hpp"

namespace gorcheck {

struct Letter {
  ArrowId arrow = 0;
  bool inverse = false;

  friend bool operator==(const Letter&, const Letter&) = default;
  /// Letter order used for canonical representatives: by arrow id, direct first.
  friend auto operator<=>(const Letter& a, const Letter& b) {
    if (a.arrow != b.arrow) return a.arrow <=> b.arrow;
    return a.inverse <=> b.inverse;
  }
};

inline Letter direct(ArrowId a) { return {a, false}; }
inline Letter inverse_of(ArrowId a) { return {a, true}; }

inline VertexId letter_source(const Quiver& q, Letter l) {
  return l.inverse ? q.arrow(l.arrow).target : q.arrow(l.arrow).source;
}
inline VertexId letter_target(const Quiver& q, Letter l) {
  return l.inverse ? q.arrow(l.arrow).source : q.arrow(l.arrow).target;
}

/// A walk of letters; `base` is the starting vertex (the vertex itself for a
/// trivial string).
struct StringWord {
  VertexId base = 0;
  std::vector<Letter> letters;

  bool trivial() const { return letters.empty(); }
  std::size_t length() const { return letters.size(); }
  friend bool operator==(const StringWord&, const StringWord&) = default;
};

inline StringWord trivial_string(VertexId v) { return {v, {}}; }

/// The string read along a path of arrows (nonempty).
inline StringWord path_string(const Quiver& q, const Path& p) {
  if (p.empty()) throw std::invalid_argument("path_string needs a nonempty path");
  StringWord w{q.arrow(p.front()).source, {}};
  for (ArrowId a : p) w.letters.push_back(direct(a));
  return w;
}

/// Vertex sequence visited by the word (length + 1 entries).
inline std::vector<VertexId> vertices_of(const Quiver& q, const StringWord& w) {
  std::vector<VertexId> vs{w.base};
  for (const auto& l : w.letters) vs.push_back(letter_target(q, l));
  return vs;
}

inline StringWord inverse(const Quiver& q, const StringWord& w) {
  if (w.trivial()) return w;
  StringWord r{letter_target(q, w.letters.back()), {}};
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back({it->arrow, !it->inverse});
  return r;
}

/// Maximal runs of equally oriented letters, each returned as the underlying
/// path of arrows in composition order.
inline std::vector<Path> directed_runs(const StringWord& w) {
  std::vector<Path> runs;
  std::size_t i = 0;
  while (i < w.letters.size()) {
    std::size_t j = i;
    while (j < w.letters.size() && w.letters[j].inverse == w.letters[i].inverse) ++j;
    Path p;
    for (std::size_t k = i; k < j; ++k) p.push_back(w.letters[k].arrow);
    if (w.letters[i].inverse) std::reverse(p.begin(), p.end());
    runs.push_back(std::move(p));
    i = j;
  }
  return runs;
}

inline bool is_valid_string(const BoundQuiver& bq, const StringWord& w) {
  const auto& q = bq.quiver();
  if (!q.has_vertex(w.base)) return false;
  for (const auto& l : w.letters)
    if (l.arrow < 0 || l.arrow >= q.arrow_count()) throw std::out_of_range("unknown arrow id");
  VertexId at = w.base;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (letter_source(q, w.letters[i]) != at) return false;
    at = letter_target(q, w.letters[i]);
    if (i + 1 < w.letters.size() && w.letters[i].arrow == w.letters[i + 1].arrow &&
        w.letters[i].inverse != w.letters[i + 1].inverse)
      return false;
  }
  for (const auto& run : directed_runs(w))
    if (bq.is_zero_path(run)) return false;
  return true;
}

inline bool is_directed(const StringWord& w) {
  return std::all_of(w.letters.begin(), w.letters.end(), [&](const Letter& l) { return l.inverse == w.letters.front().inverse; });
}

/// Canonical representative of {w, w^-1}: the lexicographically smaller
/// letter sequence; trivial strings are their own representative.
inline StringWord canonicalize(const Quiver& q, const StringWord& w) {
  if (w.trivial()) return w;
  auto r = inverse(q, w);
  return std::lexicographical_compare(r.letters.begin(), r.letters.end(), w.letters.begin(), w.letters.end()) ? r : w;
}

inline bool equivalent(const Quiver& q, const StringWord& a, const StringWord& b) {
  return canonicalize(q, a) == canonicalize(q, b);
}

// ---------------------------------------------------------------------------
// Maximal paths

/// Longest nonzero path starting with arrow `first` (unique by axiom 2).
inline Path max_path_from(const BoundQuiver& bq, ArrowId first) {
  Path p{first};
  for (;;) {
    std::optional<ArrowId> next;
    for (ArrowId g : bq.quiver().out_arrows(bq.quiver().arrow(p.back()).target)) {
      Path e = p;
      e.push_back(g);
      if (!bq.is_zero_path(e)) next = g;
    }
    if (!next) return p;
    p.push_back(*next);
  }
}

/// Longest nonzero path ending with arrow `last` (unique by axiom 3).
inline Path max_path_into(const BoundQuiver& bq, ArrowId last) {
  Path p{last};
  for (;;) {
    std::optional<ArrowId> prev;
    for (ArrowId a : bq.quiver().in_arrows(bq.quiver().arrow(p.front()).source)) {
      Path e{a};
      e.insert(e.end(), p.begin(), p.end());
      if (!bq.is_zero_path(e)) prev = a;
    }
    if (!prev) return p;
    p.insert(p.begin(), *prev);
  }
}

/// The string of P(v): both maximal arms out of v joined at v, c^-1 d.
inline StringWord projective_string(const BoundQuiver& bq, VertexId v) {
  const auto& q = bq.quiver();
  const auto outs = q.out_arrows(v);
  if (outs.empty()) return trivial_string(v);
  std::vector<Path> arms;
  for (ArrowId b : outs) arms.push_back(max_path_from(bq, b));
  StringWord w{v, {}};
  if (arms.size() == 2) {
    w.base = q.arrow(arms[0].back()).target;
    for (auto it = arms[0].rbegin(); it != arms[0].rend(); ++it) w.letters.push_back(inverse_of(*it));
  }
  for (ArrowId a : arms.back()) w.letters.push_back(direct(a));
  return canonicalize(q, w);
}

/// The string of E(v): both maximal arms into v joined at v, p q^-1.
inline StringWord injective_string(const BoundQuiver& bq, VertexId v) {
  const auto& q = bq.quiver();
  const auto ins = q.in_arrows(v);
  if (ins.empty()) return trivial_string(v);
  std::vector<Path> arms;
  for (ArrowId a : ins) arms.push_back(max_path_into(bq, a));
  StringWord w{q.arrow(arms[0].front()).source, {}};
  for (ArrowId a : arms[0]) w.letters.push_back(direct(a));
  if (arms.size() == 2)
    for (auto it = arms[1].rbegin(); it != arms[1].rend(); ++it) w.letters.push_back(inverse_of(*it));
  return canonicalize(q, w);
}

/// Positions (indices into vertices_of) with no outgoing letter action.
inline std::vector<std::size_t> sink_positions(const StringWord& w) {
  std::vector<std::size_t> out;
  const std::size_t n = w.letters.size();
  for (std::size_t k = 0; k <= n; ++k) {
    bool has_out = (k < n && !w.letters[k].inverse) || (k > 0 && w.letters[k - 1].inverse);
    if (!has_out) out.push_back(k);
  }
  return out;
}

inline std::vector<std::size_t> source_positions(const StringWord& w) {
  std::vector<std::size_t> out;
  const std::size_t n = w.letters.size();
  for (std::size_t k = 0; k <= n; ++k) {
    bool has_in = (k > 0 && !w.letters[k - 1].inverse) || (k < n && w.letters[k].inverse);
    if (!has_in) out.push_back(k);
  }
  return out;
}

using DimensionVector = std::map<VertexId, int>;

inline DimensionVector dim_vector(const Quiver& q, const StringWord& w) {
  DimensionVector d;
  for (VertexId v : vertices_of(q, w)) ++d[v];
  return d;
}

/// Socle vertices with multiplicity, sorted.
inline std::vector<VertexId> socle(const Quiver& q, const StringWord& w) {
  const auto vs = vertices_of(q, w);
  std::vector<VertexId> out;
  for (auto k : sink_positions(w)) out.push_back(vs[k]);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<VertexId> top(const Quiver& q, const StringWord& w) {
  const auto vs = vertices_of(q, w);
  std::vector<VertexId> out;
  for (auto k : source_positions(w)) out.push_back(vs[k]);
  std::sort(out.begin(), out.end());
  return out;
}

/// A valid string is the string of an injective module iff it has a single
/// socle vertex and coincides with the injective string there.
inline bool is_injective_module(const BoundQuiver& bq, const StringWord& w) {
  if (!is_valid_string(bq, w)) throw std::invalid_argument("invalid string");
  const auto soc = socle(bq.quiver(), w);
  if (soc.size() != 1) return false;
  return equivalent(bq.quiver(), w, injective_string(bq, soc.front()));
}

// ---------------------------------------------------------------------------
// Rendering

/// Space-separated letters with ^-1 for inverses; e_<v> for trivial strings.
inline std::string render(const Quiver& q, const StringWord& w) {
  if (w.trivial()) return "e_" + std::to_string(w.base);
  std::string s;
  for (const auto& l : w.letters) {
    if (!s.empty()) s += ' ';
    s += q.arrow(l.arrow).label;
    if (l.inverse) s += "^-1";
  }
  return s;
}

/// Parses the rendering produced by render(); throws on unknown labels.
inline StringWord parse_string(const Quiver& q, const std::string& text) {
  auto tok = detail::tokens(text);
  if (tok.size() == 1 && tok[0].rfind("e_", 0) == 0) {
    auto v = detail::to_int(tok[0].substr(2));
    if (!v || !q.has_vertex(*v)) throw std::invalid_argument("unknown vertex in " + tok[0]);
    return trivial_string(*v);
  }
  if (tok.empty()) throw std::invalid_argument("empty string word");
  StringWord w;
  for (auto t : tok) {
    bool inv = false;
    if (t.size() > 3 && t.compare(t.size() - 3, 3, "^-1") == 0) {
      inv = true;
      t.resize(t.size() - 3);
    }
    auto a = q.find(t);
    if (!a) throw std::invalid_argument("unknown arrow label " + t);
    w.letters.push_back({*a, inv});
  }
  w.base = letter_source(q, w.letters.front());
  return w;
}

}  // namespace gorcheck
