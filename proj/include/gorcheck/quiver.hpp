// Bound quivers with monomial relations: parsing, normalization, string-quiver
// validation and the local vertex taxonomy used by the cosyzygy formulas.
#pragma once

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gorcheck {

using VertexId = int;  // 1..n
using ArrowId = int;   // index into Quiver::arrows
using Path = std::vector<ArrowId>;

struct Arrow {
  std::string label;
  VertexId source = 0;
  VertexId target = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

class Quiver {
 public:
  Quiver() = default;
  explicit Quiver(int vertex_count) : vertex_count_(vertex_count) {}

  int vertex_count() const { return vertex_count_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(ArrowId a) const { return arrows_.at(static_cast<std::size_t>(a)); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  bool has_vertex(VertexId v) const { return v >= 1 && v <= vertex_count_; }

  ArrowId add_arrow(std::string label, VertexId source, VertexId target) {
    if (!has_vertex(source) || !has_vertex(target))
      throw std::invalid_argument("arrow " + label + " has an undeclared endpoint");
    if (find(label))
      throw std::invalid_argument("duplicate arrow label " + label);
    arrows_.push_back({std::move(label), source, target});
    return static_cast<ArrowId>(arrows_.size() - 1);
  }

  std::optional<ArrowId> find(std::string_view label) const {
    for (std::size_t i = 0; i < arrows_.size(); ++i)
      if (arrows_[i].label == label) return static_cast<ArrowId>(i);
    return std::nullopt;
  }

  /// Arrows ending at v, in declaration order.
  std::vector<ArrowId> in_arrows(VertexId v) const {
    std::vector<ArrowId> out;
    for (std::size_t i = 0; i < arrows_.size(); ++i)
      if (arrows_[i].target == v) out.push_back(static_cast<ArrowId>(i));
    return out;
  }

  /// Arrows starting at v, in declaration order.
  std::vector<ArrowId> out_arrows(VertexId v) const {
    std::vector<ArrowId> out;
    for (std::size_t i = 0; i < arrows_.size(); ++i)
      if (arrows_[i].source == v) out.push_back(static_cast<ArrowId>(i));
    return out;
  }

  bool composable(const Path& p) const {
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (arrow(p[i]).target != arrow(p[i + 1]).source) return false;
    return true;
  }

  bool connected() const {
    if (vertex_count_ <= 1) return true;
    std::vector<int> parent(static_cast<std::size_t>(vertex_count_ + 1));
    for (int v = 0; v <= vertex_count_; ++v) parent[static_cast<std::size_t>(v)] = v;
    auto root = [&](int v) {
      while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
      return v;
    };
    for (const auto& a : arrows_) parent[static_cast<std::size_t>(root(a.source))] = root(a.target);
    const int r = root(1);
    for (int v = 2; v <= vertex_count_; ++v)
      if (root(v) != r) return false;
    return true;
  }

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  int vertex_count_ = 0;
  std::vector<Arrow> arrows_;
};

/// A monomial generator of the ideal I, read left to right in composition order.
struct Relation {
  Path path;

  std::size_t length() const { return path.size(); }
  friend bool operator==(const Relation&, const Relation&) = default;
};

/// True iff `needle` occurs as a contiguous block inside `hay`.
inline bool contains_subpath(const Path& hay, const Path& needle) {
  if (needle.empty() || needle.size() > hay.size()) return false;
  return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
}

/// Drops generators that contain another generator (or a duplicate of one).
/// Returns the indices of the dropped relations in the input order.
inline std::vector<std::size_t> minimalize(std::vector<Relation>& relations) {
  std::vector<std::size_t> dropped;
  std::vector<Relation> kept;
  for (std::size_t i = 0; i < relations.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < relations.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& a = relations[i].path;
      const auto& b = relations[j].path;
      if (a == b) redundant = j < i;
      else if (contains_subpath(a, b)) redundant = true;
    }
    if (redundant) dropped.push_back(i);
    else kept.push_back(relations[i]);
  }
  relations = std::move(kept);
  return dropped;
}

class BoundQuiver {
 public:
  BoundQuiver() = default;
  BoundQuiver(std::string name, Quiver quiver, std::vector<Relation> relations)
      : name_(std::move(name)), quiver_(std::move(quiver)), relations_(std::move(relations)) {
    minimalize(relations_);
  }

  const std::string& name() const { return name_; }
  const Quiver& quiver() const { return quiver_; }
  const std::vector<Relation>& relations() const { return relations_; }
  const Relation& relation(int r) const { return relations_.at(static_cast<std::size_t>(r)); }
  int relation_count() const { return static_cast<int>(relations_.size()); }
  bool validated() const { return validated_; }
  void mark_validated(bool v) { validated_ = v; }

  std::size_t max_relation_length() const {
    std::size_t m = 0;
    for (const auto& r : relations_) m = std::max(m, r.length());
    return m;
  }

  /// The path is zero in kQ/I iff some generator occurs inside it.
  bool is_zero_path(const Path& p) const {
    for (const auto& r : relations_)
      if (contains_subpath(p, r.path)) return true;
    return false;
  }

  /// Index of the relation equal to `p`, if any.
  std::optional<int> relation_index(const Path& p) const {
    for (std::size_t i = 0; i < relations_.size(); ++i)
      if (relations_[i].path == p) return static_cast<int>(i);
    return std::nullopt;
  }

  /// True iff the length-2 path ab is a generator (equivalently ab lies in I).
  bool composes_to_zero(ArrowId a, ArrowId b) const {
    return relation_index(Path{a, b}).has_value();
  }

  std::string path_label(const Path& p) const {
    std::string s;
    for (ArrowId a : p) s += quiver_.arrow(a).label;
    return s;
  }

  std::string relation_label(int r) const { return path_label(relation(r).path); }

 private:
  std::string name_;
  Quiver quiver_;
  std::vector<Relation> relations_;
  bool validated_ = false;
};

// ---------------------------------------------------------------------------
// Text format

struct ParseError {
  int line = 0;
  std::string message;
};

struct ParseResult {
  std::optional<BoundQuiver> algebra;
  std::vector<ParseError> errors;
  /// Human-readable descriptions of generators removed by minimalization.
  std::vector<std::string> dropped_relations;

  bool ok() const { return algebra.has_value(); }
};

namespace detail {

inline std::vector<std::string> tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

inline bool valid_label(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    const auto u = static_cast<unsigned char>(c);
    if (!(std::isalnum(u) || c == '\'' || c == '_')) return false;
  }
  return true;
}

inline std::optional<int> to_int(const std::string& s) {
  if (s.empty() || s.size() > 9) return std::nullopt;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  return std::stoi(s);
}

}  // namespace detail

/// Parses the line-oriented algebra description. Relations are minimalized;
/// the result is not validated as a string quiver.
inline ParseResult parse_algebra(std::string_view text) {
  ParseResult res;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  std::optional<std::string> name;
  std::optional<int> n;
  Quiver q;
  std::vector<std::pair<int, std::vector<std::string>>> pending_relations;
  auto fail = [&](int line, std::string msg) { res.errors.push_back({line, std::move(msg)}); };

  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto tok = detail::tokens(raw);
    if (tok.empty()) continue;
    const std::string& kw = tok[0];
    if (!name) {
      if (kw != "algebra" || tok.size() != 2) {
        fail(lineno, "expected 'algebra <name>' as the first directive");
        return res;
      }
      name = tok[1];
      continue;
    }
    if (kw == "algebra") {
      fail(lineno, "duplicate 'algebra' directive");
    } else if (kw == "vertices") {
      if (n) { fail(lineno, "duplicate 'vertices' directive"); continue; }
      auto v = tok.size() == 2 ? detail::to_int(tok[1]) : std::nullopt;
      if (!v || *v < 1) { fail(lineno, "vertex count must be a positive integer"); continue; }
      n = *v;
      q = Quiver(*v);
    } else if (kw == "arrow") {
      if (!n) { fail(lineno, "'arrow' before 'vertices'"); continue; }
      if (tok.size() != 4) { fail(lineno, "expected 'arrow <label> <src> <dst>'"); continue; }
      if (!detail::valid_label(tok[1])) { fail(lineno, "invalid arrow label '" + tok[1] + "'"); continue; }
      auto s = detail::to_int(tok[2]);
      auto t = detail::to_int(tok[3]);
      if (!s || !t || !q.has_vertex(*s) || !q.has_vertex(*t)) {
        fail(lineno, "arrow " + tok[1] + " refers to an undeclared vertex");
        continue;
      }
      if (q.find(tok[1])) { fail(lineno, "duplicate arrow label '" + tok[1] + "'"); continue; }
      q.add_arrow(tok[1], *s, *t);
    } else if (kw == "relation") {
      pending_relations.emplace_back(lineno, std::vector<std::string>(tok.begin() + 1, tok.end()));
    } else {
      fail(lineno, "unknown directive '" + kw + "'");
    }
  }
  if (!name) { fail(lineno, "missing 'algebra <name>' directive"); return res; }
  if (!n) { fail(lineno, "missing 'vertices' directive (empty vertex set)"); return res; }

  std::vector<Relation> rels;
  for (const auto& [line, labels] : pending_relations) {
    if (labels.size() < 2) {
      fail(line, "relation must have length at least 2");
      continue;
    }
    Path p;
    bool bad = false;
    for (const auto& l : labels) {
      auto a = q.find(l);
      if (!a) { fail(line, "unknown arrow label '" + l + "'"); bad = true; break; }
      p.push_back(*a);
    }
    if (bad) continue;
    if (!q.composable(p)) { fail(line, "relation is not a composable path"); continue; }
    rels.push_back({std::move(p)});
  }
  if (!res.errors.empty()) return res;

  auto all = rels;
  auto dropped = minimalize(rels);
  for (auto i : dropped) {
    std::string s;
    for (ArrowId a : all[i].path) s += (s.empty() ? "" : " ") + q.arrow(a).label;
    res.dropped_relations.push_back(s);
  }
  res.algebra = BoundQuiver(*name, std::move(q), std::move(rels));
  return res;
}

/// Reads and parses a file; throws std::runtime_error when it cannot be read.
inline ParseResult parse_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra(buf.str());
}

/// Renders an algebra in the text format accepted by parse_algebra.
inline std::string print_algebra(const BoundQuiver& bq) {
  std::ostringstream out;
  out << "algebra " << (bq.name().empty() ? "unnamed" : bq.name()) << "\n";
  out << "vertices " << bq.quiver().vertex_count() << "\n";
  for (const auto& a : bq.quiver().arrows())
    out << "arrow " << a.label << " " << a.source << " " << a.target << "\n";
  for (const auto& r : bq.relations()) {
    out << "relation";
    for (ArrowId a : r.path) out << " " << bq.quiver().arrow(a).label;
    out << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Finite dimensionality

/// Returns a composable cycle of arrows that can be repeated forever without
/// meeting a relation, or nullopt when kQ/I is finite dimensional.
inline std::optional<Path> relation_free_cycle(const BoundQuiver& bq) {
  const auto& q = bq.quiver();
  // States are the last k arrows of a nonzero path; appending an arrow is
  // allowed when no relation ends at it.
  const std::size_t k = std::max<std::size_t>(1, bq.max_relation_length() > 0 ? bq.max_relation_length() - 1 : 1);
  std::map<Path, int> color;  // 0 unseen, 1 on stack, 2 done
  std::vector<Path> stack_paths;
  std::optional<Path> found;

  auto ends_in_relation = [&](const Path& p) {
    for (const auto& r : bq.relations()) {
      if (r.length() > p.size()) continue;
      if (std::equal(r.path.begin(), r.path.end(), p.end() - static_cast<std::ptrdiff_t>(r.length())))
        return true;
    }
    return false;
  };

  // Enumerate nonzero paths of length exactly k (shorter maximal ones cannot cycle).
  std::vector<Path> starts;
  std::vector<Path> frontier;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) frontier.push_back({a});
  for (std::size_t len = 1; len < k; ++len) {
    std::vector<Path> next;
    for (const auto& p : frontier)
      for (ArrowId b : q.out_arrows(q.arrow(p.back()).target)) {
        Path e = p;
        e.push_back(b);
        if (!ends_in_relation(e)) next.push_back(std::move(e));
      }
    frontier = std::move(next);
  }
  starts = frontier;

  // Iterative DFS with explicit stack to find a cycle in the state graph.
  for (const auto& s : starts) {
    if (found) break;
    if (color[s] != 0) continue;
    struct Frame { Path state; std::vector<ArrowId> succ; std::size_t next = 0; };
    std::vector<Frame> st;
    auto make = [&](const Path& p) {
      Frame f{p, {}, 0};
      for (ArrowId b : q.out_arrows(q.arrow(p.back()).target)) {
        Path e = p;
        e.push_back(b);
        if (!ends_in_relation(e)) f.succ.push_back(b);
      }
      return f;
    };
    color[s] = 1;
    st.push_back(make(s));
    while (!st.empty() && !found) {
      auto& f = st.back();
      if (f.next == f.succ.size()) {
        color[f.state] = 2;
        st.pop_back();
        continue;
      }
      ArrowId b = f.succ[f.next++];
      Path nxt(f.state.begin() + 1, f.state.end());
      nxt.push_back(b);
      if (k == 1) nxt = {b};
      int& c = color[nxt];
      if (c == 1) {
        // Cycle: collect the arrows appended from nxt's frame to here.
        Path cyc;
        bool in = false;
        for (auto& fr : st) {
          if (fr.state == nxt) in = true;
          if (in) cyc.push_back(fr.state.back());
        }
        // The cycle closes with b which re-enters nxt; rotate so it is composable.
        std::rotate(cyc.begin(), cyc.begin() + 1, cyc.end());
        cyc.back() = b;
        found = cyc;
      } else if (c == 0) {
        c = 1;
        st.push_back(make(nxt));
      }
    }
  }
  return found;
}

/// All nonzero paths of positive length (finite when the algebra is admissible).
inline std::vector<Path> nonzero_paths(const BoundQuiver& bq, std::size_t cap = 100000) {
  std::vector<Path> out;
  std::vector<Path> frontier;
  for (ArrowId a = 0; a < bq.quiver().arrow_count(); ++a) frontier.push_back({a});
  while (!frontier.empty()) {
    std::vector<Path> next;
    for (auto& p : frontier) {
      if (bq.is_zero_path(p)) continue;
      if (out.size() >= cap) throw std::runtime_error("path enumeration exceeded cap");
      for (ArrowId b : bq.quiver().out_arrows(bq.quiver().arrow(p.back()).target)) {
        Path e = p;
        e.push_back(b);
        next.push_back(std::move(e));
      }
      out.push_back(std::move(p));
    }
    frontier = std::move(next);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Validation

struct Violation {
  std::string axiom;  // "1" | "2" | "3" | "4" | "admissible"
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::vector<std::string> warnings;

  bool valid() const { return violations.empty(); }
};

/// Checks the four string-quiver axioms plus finite dimensionality, and marks
/// `bq` validated iff nothing is violated.
inline ValidationReport validate_string_quiver(BoundQuiver& bq) {
  ValidationReport rep;
  const auto& q = bq.quiver();
  for (VertexId v = 1; v <= q.vertex_count(); ++v) {
    const auto in = q.in_arrows(v);
    const auto out = q.out_arrows(v);
    if (in.size() > 2)
      rep.violations.push_back({"1", "vertex " + std::to_string(v) + " is the target of " + std::to_string(in.size()) + " arrows"});
    if (out.size() > 2)
      rep.violations.push_back({"1", "vertex " + std::to_string(v) + " is the source of " + std::to_string(out.size()) + " arrows"});
  }
  for (ArrowId b = 0; b < q.arrow_count(); ++b) {
    int succ = 0, pred = 0;
    for (ArrowId g : q.out_arrows(q.arrow(b).target))
      if (!bq.composes_to_zero(b, g)) ++succ;
    for (ArrowId a : q.in_arrows(q.arrow(b).source))
      if (!bq.composes_to_zero(a, b)) ++pred;
    if (succ > 1)
      rep.violations.push_back({"2", "arrow " + q.arrow(b).label + " has " + std::to_string(succ) + " successors outside I"});
    if (pred > 1)
      rep.violations.push_back({"3", "arrow " + q.arrow(b).label + " has " + std::to_string(pred) + " predecessors outside I"});
  }
  for (const auto& r : bq.relations())
    if (r.length() < 2)
      rep.violations.push_back({"4", "relation " + bq.path_label(r.path) + " has length " + std::to_string(r.length())});
  if (auto cyc = relation_free_cycle(bq))
    rep.violations.push_back({"admissible", "infinite-dimensional algebra: cycle " + bq.path_label(*cyc) + " avoids every relation"});
  if (!q.connected()) rep.warnings.push_back("quiver is not connected");
  bq.mark_validated(rep.valid());
  return rep;
}

// ---------------------------------------------------------------------------
// Vertex taxonomy

struct VertexProfile {
  VertexId vertex = 0;
  std::vector<ArrowId> in_arrows;
  std::vector<ArrowId> out_arrows;

  int in_degree() const { return static_cast<int>(in_arrows.size()); }
  int out_degree() const { return static_cast<int>(out_arrows.size()); }
  /// Rendered as e.g. "(1in,2out)".
  std::string type_tag() const {
    return "(" + std::to_string(in_degree()) + "in," + std::to_string(out_degree()) + "out)";
  }
};

inline VertexProfile vertex_profile(const BoundQuiver& bq, VertexId v) {
  if (!bq.quiver().has_vertex(v)) throw std::out_of_range("unknown vertex " + std::to_string(v));
  return {v, bq.quiver().in_arrows(v), bq.quiver().out_arrows(v)};
}

enum class VertexClass { NonRelational, GentlyRelational, StrictlyRelational, OtherRelational };

inline const char* to_string(VertexClass c) {
  switch (c) {
    case VertexClass::NonRelational: return "non-relational";
    case VertexClass::GentlyRelational: return "gently-relational";
    case VertexClass::StrictlyRelational: return "strictly-relational";
    case VertexClass::OtherRelational: return "other-relational";
  }
  return "?";
}

/// Which compositions through a (2in,2out) vertex are tested against the
/// generators. `Paired` tests the composition of each out-arrow with the
/// in-arrow it is paired with (see pair_sides); `CaptionPairs` tests the
/// complementary, crossing compositions.
enum class CompositionReading { Paired, CaptionPairs };

/// Pairs every out-arrow of v with at most one in-arrow. A pair (a, b) with
/// ab outside I is forced; the remaining arrows are matched crosswise in
/// declaration order (first free in-arrow with last free out-arrow).
inline std::vector<std::pair<std::optional<ArrowId>, ArrowId>> pair_sides(const BoundQuiver& bq, VertexId v) {
  const auto in = bq.quiver().in_arrows(v);
  const auto out = bq.quiver().out_arrows(v);
  std::vector<std::pair<std::optional<ArrowId>, ArrowId>> pairs;
  std::set<ArrowId> used_in;
  std::vector<ArrowId> free_out;
  for (ArrowId b : out) {
    std::optional<ArrowId> forced;
    for (ArrowId a : in)
      if (!bq.composes_to_zero(a, b)) forced = a;
    if (forced) {
      pairs.emplace_back(forced, b);
      used_in.insert(*forced);
    } else {
      free_out.push_back(b);
    }
  }
  std::vector<ArrowId> free_in;
  for (ArrowId a : in)
    if (!used_in.count(a)) free_in.push_back(a);
  for (std::size_t i = 0; i < free_out.size(); ++i) {
    const ArrowId b = free_out[free_out.size() - 1 - i];
    std::optional<ArrowId> a;
    if (i < free_in.size()) a = free_in[i];
    pairs.emplace_back(a, b);
  }
  std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) { return x.second < y.second; });
  return pairs;
}

/// True iff the path is contained in some generator of I (including being one).
inline bool is_subpath_of_generator(const BoundQuiver& bq, const Path& p) {
  for (const auto& r : bq.relations())
    if (contains_subpath(r.path, p)) return true;
  return false;
}

inline VertexClass classify_vertex(const BoundQuiver& bq, VertexId v,
                                   CompositionReading reading = CompositionReading::Paired) {
  const auto prof = vertex_profile(bq, v);
  bool relational = false;
  for (ArrowId a : prof.in_arrows)
    for (ArrowId b : prof.out_arrows)
      if (bq.composes_to_zero(a, b)) relational = true;
  if (!relational) return VertexClass::NonRelational;

  if (prof.in_degree() == 2 && prof.out_degree() == 2) {
    const auto pairs = pair_sides(bq, v);
    bool strict = false;
    for (const auto& [a, b] : pairs) {
      if (!a) { strict = true; continue; }
      ArrowId other_in = prof.in_arrows[0] == *a ? prof.in_arrows[1] : prof.in_arrows[0];
      const Path tested = reading == CompositionReading::Paired ? Path{*a, b} : Path{other_in, b};
      if (is_subpath_of_generator(bq, tested)) strict = true;
    }
    return strict ? VertexClass::StrictlyRelational : VertexClass::GentlyRelational;
  }
  if (prof.in_degree() == 1 && prof.out_degree() == 2) {
    bool all = true;
    for (ArrowId b : prof.out_arrows)
      if (!is_subpath_of_generator(bq, {prof.in_arrows[0], b})) all = false;
    return all ? VertexClass::StrictlyRelational : VertexClass::GentlyRelational;
  }
  return VertexClass::OtherRelational;
}

}  // namespace gorcheck
