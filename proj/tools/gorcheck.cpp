// gorcheck: injective dimension and Gorenstein checks for string algebras.
//
// Exit codes: 0 success, 1 validation failure or crosscheck mismatch,
// 2 usage error (bad flags, unreadable file), 3 internal failure.

#include <cstdlib>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "gorcheck/gorcheck.hpp"

using json = nlohmann::ordered_json;
using namespace gorcheck;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kUsage = 2, kInternal = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string file;
  std::optional<int> vertex;
  int cutoff = 12;
  int seeds = 0;
  std::uint32_t prime = 2;
  std::size_t budget = kDefaultStateBudget;
  bool trace = false;
  std::string kind = "string";
  std::uint64_t seed = 1;
};

bool color_enabled() {
  const char* c = std::getenv("GORCHECK_COLOR");
  return c && std::string(c) == "1";
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

json validation_json(const ValidationReport& rep) {
  json v = json::array();
  for (const auto& x : rep.violations) v.push_back({{"axiom", x.axiom}, {"detail", x.detail}});
  return {{"valid", rep.valid()}, {"violations", v}};
}

json inj_dim_json(const InjDim& d) {
  if (!d.finite) return "infinite";
  return {{"finite", d.value}};
}

json oracle_dim_json(const oracle::OracleDim& d) {
  if (d.finite) return {{"finite", d.value}};
  return {{"at_least", d.value}};
}

json chain_json(const BoundQuiver& bq, const std::vector<ChainLabel>& chain) {
  json out = json::array();
  for (const auto& l : chain) out.push_back(l ? json(bq.relation_label(*l)) : json(nullptr));
  return out;
}

json elis_json(const BoundQuiver& bq, const ElisOutcome& o) {
  json j;
  if (o.finite) {
    j["kind"] = "finite";
    j["length"] = o.length;
    j["projective_injective"] = o.projective_injective;
    json w = json::array();
    for (const auto& c : o.witnesses) w.push_back(chain_json(bq, c));
    j["witness"] = w;
  } else {
    j["kind"] = "infinite";
    json c = json::array();
    for (const auto& s : o.cycle)
      c.push_back({{"string", render(bq.quiver(), to_word(bq.quiver(), s.node))},
                   {"relation", s.label ? json(bq.relation_label(*s.label)) : json(nullptr)}});
    j["cycle"] = c;
  }
  return j;
}

json vertex_json(const BoundQuiver& bq, VertexId v, const Options& opt) {
  const auto o = elis_outcome(bq, v, opt.budget);
  const InjDim d = !o.finite ? InjDim::Infinite() : InjDim::Finite(o.projective_injective ? 0 : o.length + 1);
  return {{"vertex", v}, {"elis", elis_json(bq, o)}, {"inj_dim", inj_dim_json(d)}};
}

json algebra_json(const BoundQuiver& bq, const Options& opt) {
  const auto d = inj_dim_algebra(bq, opt.budget);
  return {{"algebra", bq.name()},
          {"self_injective", d.finite && d.value == 0},
          {"inj_dim", inj_dim_json(d)},
          {"gorenstein", d.finite}};
}

/// Parses and validates; on failure prints the report and returns nullopt.
std::optional<BoundQuiver> load(const std::string& path, json* report = nullptr) {
  ParseResult res;
  try {
    res = parse_algebra_file(path);
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
  if (!res.ok()) {
    json v = json::array();
    for (const auto& e : res.errors) v.push_back({{"axiom", "parse"}, {"detail", "line " + std::to_string(e.line) + ": " + e.message}});
    json j = {{"valid", false}, {"violations", v}};
    if (report) *report = j;
    else print(j);
    return std::nullopt;
  }
  BoundQuiver bq = *res.algebra;
  const auto rep = validate_string_quiver(bq);
  if (report) *report = validation_json(rep);
  if (!rep.valid()) {
    if (!report) print(validation_json(rep));
    return std::nullopt;
  }
  return bq;
}

VertexId require_vertex(const BoundQuiver& bq, const Options& opt) {
  if (!opt.vertex) throw UsageError("--vertex is required");
  if (!bq.quiver().has_vertex(*opt.vertex)) throw UsageError("no vertex " + std::to_string(*opt.vertex));
  return *opt.vertex;
}

int cmd_validate(const Options& opt) {
  json report;
  const bool ok = load(opt.file, &report).has_value();
  print(report);
  return ok ? kOk : kInvalid;
}

int cmd_injdim(const Options& opt) {
  auto bq = load(opt.file);
  if (!bq) return kInvalid;
  if (opt.vertex) {
    print(vertex_json(*bq, require_vertex(*bq, opt), opt));
    return kOk;
  }
  json j = algebra_json(*bq, opt);
  json per = json::array();
  for (VertexId v = 1; v <= bq->quiver().vertex_count(); ++v) per.push_back(vertex_json(*bq, v, opt));
  j["vertices"] = per;
  print(j);
  return kOk;
}

int cmd_gorenstein(const Options& opt) {
  auto bq = load(opt.file);
  if (!bq) return kInvalid;
  const auto d = inj_dim_algebra(*bq, opt.budget);
  print({{"gorenstein", d.finite}, {"inj_dim", inj_dim_json(d)}});
  return kOk;
}

std::string colorize(const std::string& text) {
  std::string out;
  bool in_bar = false;
  for (char c : text) {
    if (c == '=' && !in_bar) {
      out += "\x1b[36m";
      in_bar = true;
    } else if (c != '=' && in_bar) {
      out += "\x1b[0m";
      in_bar = false;
    }
    out += c;
  }
  return out;
}

int cmd_elis(const Options& opt) {
  auto bq = load(opt.file);
  if (!bq) return kInvalid;
  const VertexId v = require_vertex(*bq, opt);
  print(vertex_json(*bq, v, opt));
  if (opt.trace) {
    if (is_injective_module(*bq, projective_string(*bq, v))) {
      std::cerr << "P(" << v << ") is injective; no chain\n";
      return kOk;
    }
    const bool color = color_enabled();
    for (const auto& seed : seed_states(*bq, v)) {
      const auto t = literal_trace(*bq, v, seed.arm);
      const std::string text = render_trace(*bq, t);
      std::cerr << "arm " << seed.arm << ":\n" << (color ? colorize(text) : text) << "\n";
    }
  }
  return kOk;
}

int cmd_oracle(const Options& opt) {
  auto bq = load(opt.file);
  if (!bq) return kInvalid;
  const gf::Field f(opt.prime);
  json out = json::array();
  for (VertexId v = 1; v <= bq->quiver().vertex_count(); ++v) {
    if (opt.vertex && v != *opt.vertex) continue;
    const auto c = check_vertex(*bq, v, opt.cutoff, f, opt.budget);
    out.push_back({{"vertex", v}, {"oracle_dim", oracle_dim_json(c.oracle)}, {"match", c.match}});
  }
  print(out);
  return kOk;
}

json report_json(const BoundQuiver& bq, const CrosscheckReport& r) {
  json vs = json::array();
  for (const auto& c : r.vertices) {
    json j = {{"vertex", c.vertex}, {"inj_dim", inj_dim_json(c.elis)}, {"oracle_dim", oracle_dim_json(c.oracle)}, {"match", c.match}};
    if (c.nonvanishing) j["nonvanishing"] = *c.nonvanishing;
    vs.push_back(j);
  }
  return {{"algebra", bq.name()}, {"ok", r.ok()}, {"mismatches", r.mismatches().size()}, {"vertices", vs}};
}

int cmd_check(const Options& opt) {
  json out;
  bool ok = true;
  if (!opt.file.empty()) {
    auto bq = load(opt.file);
    if (!bq) return kInvalid;
    const auto r = crosscheck(*bq, opt.cutoff, opt.prime, opt.budget);
    ok = r.ok();
    out["file"] = report_json(*bq, r);
  }
  if (opt.seeds > 0) {
    json failures = json::array();
    std::size_t vertices = 0;
    for (int s = 0; s < opt.seeds; ++s) {
      const auto bq = random_string_algebra(opt.seed + static_cast<std::uint64_t>(s));
      const auto r = crosscheck(bq, opt.cutoff, opt.prime, opt.budget);
      vertices += r.vertices.size();
      if (!r.ok()) {
        failures.push_back({{"seed", opt.seed + static_cast<std::uint64_t>(s)}, {"algebra", print_algebra(bq)}, {"report", report_json(bq, r)}});
        ok = false;
      }
    }
    out["sweep"] = {{"instances", opt.seeds}, {"vertices", vertices}, {"failures", failures}};
  }
  if (out.is_null()) throw UsageError("check needs a file or --seeds");
  print(out);
  return ok ? kOk : kInvalid;
}

int cmd_gen(const Options& opt) {
  if (opt.kind == "string") std::cout << print_algebra(random_string_algebra(opt.seed));
  else if (opt.kind == "gentle") std::cout << print_algebra(random_gentle_algebra(opt.seed));
  else throw UsageError("--kind must be string or gentle");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Injective dimension and Gorenstein checks for string algebras"};
  app.require_subcommand(1, 1);
  Options opt;
  app.add_option("--prime", opt.prime, "Field characteristic for the oracle")->check(CLI::PositiveNumber);
  app.add_option("--state-budget", opt.budget, "Maximum cosyzygy states explored per vertex");

  auto* validate = app.add_subcommand("validate", "Check the string-algebra axioms");
  validate->add_option("file", opt.file)->required();

  auto* injdim = app.add_subcommand("injdim", "Injective dimension of P(v) or of the algebra");
  injdim->add_option("file", opt.file)->required();
  injdim->add_option("--vertex", opt.vertex);

  auto* gorenstein = app.add_subcommand("gorenstein", "Gorenstein verdict");
  gorenstein->add_option("file", opt.file)->required();

  auto* elis = app.add_subcommand("elis", "Witness chains for one vertex");
  elis->add_option("file", opt.file)->required();
  elis->add_option("--vertex", opt.vertex)->required();
  elis->add_flag("--trace", opt.trace, "Draw the chain under its path on stderr");

  auto* orc = app.add_subcommand("oracle", "Injective dimension by linear algebra");
  orc->add_option("file", opt.file)->required();
  orc->add_option("--cutoff", opt.cutoff)->check(CLI::NonNegativeNumber);
  orc->add_option("--vertex", opt.vertex);

  auto* check = app.add_subcommand("check", "Compare chains against the oracle");
  check->add_option("file", opt.file);
  check->add_option("--cutoff", opt.cutoff)->check(CLI::NonNegativeNumber);
  check->add_option("--seeds", opt.seeds, "Also sweep this many random string algebras");
  check->add_option("--seed", opt.seed, "First seed of the sweep");

  auto* gen = app.add_subcommand("gen", "Write a random algebra");
  gen->add_option("--kind", opt.kind)->check(CLI::IsMember({"string", "gentle"}));
  gen->add_option("--seed", opt.seed);

  for (auto* sub : {validate, injdim, gorenstein, elis, orc, check, gen}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return cmd_validate(opt);
    if (*injdim) return cmd_injdim(opt);
    if (*gorenstein) return cmd_gorenstein(opt);
    if (*elis) return cmd_elis(opt);
    if (*orc) return cmd_oracle(opt);
    if (*check) return cmd_check(opt);
    if (*gen) return cmd_gen(opt);
  } catch (const UsageError& e) {
    std::cerr << "gorcheck: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "gorcheck: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "gorcheck: internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
