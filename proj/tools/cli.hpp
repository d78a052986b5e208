// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The `gammoid` command line. `run` is separate from `main` so tests can
// drive it with string streams.
//
// Exit codes: 0 success or property holds, 1 property fails, 2 usage or
// input error.

#ifndef GAMMOID_TOOLS_CLI_HPP_
#define GAMMOID_TOOLS_CLI_HPP_

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "gammoid/gammoid.hpp"
#include "json.hpp"

namespace gammoid::cli {

inline constexpr int kOk = 0;
inline constexpr int kPropertyFails = 1;
inline constexpr int kUsage = 2;

using Input = std::variant<Dimaze, BipartiteGraph, MatroidView>;

struct Context {
  std::istream& in;
  std::ostream& out;
  std::string in_path;
  bool json = false;
  bool dot = false;

  std::string ReadText() const {
    if (in_path.empty() || in_path == "-") {
      std::ostringstream s;
      s << in.rdbuf();
      return s.str();
    }
    std::ifstream f(in_path);
    if (!f) throw ParameterError("cannot open " + in_path);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
  }

  /// Parses the input, choosing the format from its header line.
  Input Read() const {
    const std::string text = ReadText();
    auto lines = detail::TokenizeLines(text);
    const std::string kind = lines.empty() ? "" : lines.front().second[0];
    if (kind == "bigraph") return parse_bigraph(text);
    if (kind == "matroid") return parse_matroid(text);
    return parse_dimaze(text);
  }

  Dimaze ReadDimaze() const {
    auto input = Read();
    if (auto* d = std::get_if<Dimaze>(&input)) return *d;
    throw ParameterError("this command needs a dimaze v1 input");
  }

  /// Bipartite input, converting a tree dimaze when one is given.
  BipartiteGraph ReadBigraph() const {
    auto input = Read();
    if (auto* g = std::get_if<BipartiteGraph>(&input)) return *g;
    if (auto* d = std::get_if<Dimaze>(&input)) {
      return dimaze_tree_to_bipartite(*d);
    }
    throw ParameterError("this command needs a bigraph v1 input");
  }

  MatroidView ReadMatroid() const {
    auto input = Read();
    if (auto* d = std::get_if<Dimaze>(&input)) {
      return MatroidView::FromDimaze(*d);
    }
    if (auto* g = std::get_if<BipartiteGraph>(&input)) {
      return MatroidView::FromBipartite(*g);
    }
    return std::get<MatroidView>(std::move(input));
  }

  void Json(const nlohmann::json& j) const { out << j.dump(2) << "\n"; }
};

namespace detail {

inline std::string MaskText(const MatroidView& m, Mask s) {
  return s ? gammoid::detail::Join(m.names(s), ",") : "-";
}

inline VertexSet LeftSet(const BipartiteGraph& g, const std::string& text) {
  if (text == "-" || text.empty()) return {};
  return g.left_ids(gammoid::detail::Split(text, ','));
}

inline std::string LeftText(const BipartiteGraph& g, const VertexSet& s) {
  return s.empty() ? "-" : gammoid::detail::Join(g.left_names(s), ",");
}

inline std::string MatchingText(const BipartiteGraph& g, const Matching& m) {
  if (m.empty()) return "-";
  std::vector<std::string> parts;
  for (auto [v, w] : m) parts.push_back(g.left_name(v) + "-" + g.right_name(w));
  return gammoid::detail::Join(parts, ",");
}

inline nlohmann::json MatchingJson(const BipartiteGraph& g, const Matching& m) {
  nlohmann::json out = nlohmann::json::array();
  for (auto [v, w] : m) out.push_back({g.left_name(v), g.right_name(w)});
  return out;
}

inline std::pair<int, int> ParseRange(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int k = std::stoi(text);
      return {k, k};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw ParameterError("bad depth range " + text + " (expected k or a..b)");
  }
}

}  // namespace detail

inline int CmdGen(const Context& c, const std::string& family,
                  const std::vector<int>& params) {
  FamilyGenerator g;
  g.family = parse_family(family);
  const std::size_t wanted =
      g.family == Family::kTurbine || g.family == Family::kBranchingTree ? 2 : 1;
  if (params.size() != wanted) {
    throw ParameterError(family + " takes " + std::to_string(wanted) +
                         " parameter(s)");
  }
  if (g.family == Family::kTurbine) {
    g.copies = params[0];
    g.depth = params[1];
  } else if (g.family == Family::kBranchingTree) {
    g.branching = params[0];
    g.depth = params[1];
  } else {
    g.depth = params[0];
  }
  const Dimaze d = generate(g);
  if (c.json) {
    c.Json(to_json(d));
  } else if (c.dot) {
    c.out << to_dot(d);
  } else {
    c.out << serialize(d);
  }
  return kOk;
}

inline int CmdValidate(const Context& c) {
  const Dimaze d = c.ReadDimaze();
  const auto problems = validate(d);
  if (c.json) {
    c.Json({{"valid", problems.empty()}, {"violations", problems}});
  } else if (problems.empty()) {
    c.out << "valid\n";
  } else {
    for (const auto& p : problems) c.out << p << "\n";
  }
  return problems.empty() ? kOk : kPropertyFails;
}

inline int CmdIndep(const Context& c, const std::string& set_text) {
  const Dimaze d = c.ReadDimaze();
  require_valid(d);
  const auto r = is_independent(d, parse_vertex_set(d, set_text));
  if (c.json) {
    c.Json({{"independent", r.independent},
            {"witness", r.independent ? linkage_json(d, r.witness)
                                      : nlohmann::json(nullptr)}});
  } else {
    c.out << (r.independent ? "true" : "false") << "\n";
    if (r.independent) c.out << "witness: " << format_linkage(d, r.witness) << "\n";
  }
  return r.independent ? kOk : kPropertyFails;
}

inline int CmdLink(const Context& c, const std::string& set_text) {
  const Dimaze d = c.ReadDimaze();
  require_valid(d);
  const auto m = max_linkage(d, parse_vertex_set(d, set_text));
  if (c.json) {
    c.Json({{"linkage", linkage_json(d, m.linkage)},
            {"separator", d.names(m.separator)},
            {"size", m.linkage.size()}});
  } else {
    c.out << "linkage: " << format_linkage(d, m.linkage) << "\n"
          << "separator: " << format_vertex_set(d, m.separator) << "\n"
          << "size: " << m.linkage.size() << "\n";
  }
  return kOk;
}

inline int CmdAugment(const Context& c, const std::string& x_text,
                      const std::string& link_text) {
  const Dimaze d = c.ReadDimaze();
  const auto r = augment(d, parse_vertex_set(d, x_text),
                         parse_linkage(d, link_text));
  if (auto* a = std::get_if<AugmentedLinkage>(&r)) {
    std::vector<std::string> walk;
    for (Vertex v : a->walk.vertices) walk.push_back(d.name(v));
    if (c.json) {
      c.Json({{"augmented", true},
              {"linkage", linkage_json(d, a->linkage)},
              {"walk", walk}});
    } else {
      c.out << "linkage: " << format_linkage(d, a->linkage) << "\n"
            << "walk: " << gammoid::detail::Join(walk, " ") << "\n";
    }
  } else {
    const auto& s = std::get<SeparatorOnLinkage>(r);
    if (c.json) {
      c.Json({{"augmented", false}, {"separator", d.names(s.separator)}});
    } else {
      c.out << "separator: " << format_vertex_set(d, s.separator) << "\n";
    }
  }
  return kOk;
}

inline int CmdExtendOnto(const Context& c, const std::string& link_text) {
  const Dimaze d = c.ReadDimaze();
  const auto r = extend_onto(d, parse_linkage(d, link_text));
  if (c.json) {
    c.Json({{"complete", r.complete},
            {"linkage", linkage_json(d, r.linkage)},
            {"unreachable", d.names(r.unreachable)}});
  } else {
    c.out << "complete: " << (r.complete ? "true" : "false") << "\n"
          << "linkage: " << format_linkage(d, r.linkage) << "\n";
    if (!r.complete) {
      c.out << "unreachable: " << format_vertex_set(d, r.unreachable) << "\n";
    }
  }
  return r.complete ? kOk : kPropertyFails;
}

inline int CmdTowardBase(const Context& c, const std::string& i_text,
                         const std::string& b_text) {
  const Dimaze d = c.ReadDimaze();
  const auto r = augment_toward_base(d, parse_vertex_set(d, i_text),
                                     parse_vertex_set(d, b_text));
  using Kind = BaseAugmentation::Kind;
  const char* kind = r.kind == Kind::kExtended  ? "extended"
                     : r.kind == Kind::kMaximal ? "maximal"
                                                : "base-not-maximal";
  if (c.json) {
    nlohmann::json j = {{"kind", kind}};
    if (r.kind == Kind::kExtended) {
      j["x"] = d.name(r.x);
      j["witness"] = linkage_json(d, r.witness);
    } else if (r.kind == Kind::kBaseNotMaximal) {
      j["separator"] = d.names(r.separator);
      j["relinked"] = linkage_json(d, r.relinked);
      j["missed_exit"] = d.name(r.missed_exit);
    }
    c.Json(j);
  } else {
    c.out << kind << "\n";
    if (r.kind == Kind::kExtended) {
      c.out << "x: " << d.name(r.x) << "\n"
            << "witness: " << format_linkage(d, r.witness) << "\n";
    } else if (r.kind == Kind::kBaseNotMaximal) {
      c.out << "relinked: " << format_linkage(d, r.relinked) << "\n"
            << "missed exit: " << d.name(r.missed_exit) << "\n";
    }
  }
  return r.kind == Kind::kBaseNotMaximal ? kPropertyFails : kOk;
}

inline int CmdMerge(const Context& c, const std::string& red_text,
                    const std::string& blue_text, bool trace) {
  const Dimaze d = c.ReadDimaze();
  const auto r = merge(d, parse_linkage(d, red_text), parse_linkage(d, blue_text),
                       {.record_history = trace});
  if (c.json) {
    nlohmann::json j = {{"linkage", linkage_json(d, r.linkage)},
                        {"steps", r.state.step}};
    if (trace) {
      nlohmann::json steps = nlohmann::json::array();
      for (const auto& s : r.state.history) {
        nlohmann::json f = nlohmann::json::object();
        nlohmann::json t = nlohmann::json::object();
        for (auto [x, fx] : s.f) f[d.name(x)] = d.name(fx);
        for (auto [y, ty] : s.t) t[d.name(y)] = d.name(ty);
        steps.push_back({{"i", s.index}, {"f", f}, {"t", t}});
      }
      j["trace"] = steps;
    }
    c.Json(j);
  } else {
    c.out << "linkage: " << format_linkage(d, r.linkage) << "\n"
          << "steps: " << r.state.step << "\n";
    if (trace) c.out << format_trace(d, r.state);
  }
  return kOk;
}

inline int CmdExchange(const Context& c, const std::string& i_text,
                       const std::string& j_text, const std::string& v) {
  const Dimaze d = c.ReadDimaze();
  const auto r = exchange(d, parse_vertex_set(d, i_text),
                          parse_vertex_set(d, j_text), d.at(v));
  const bool none = r.kind == ExchangeResult::Kind::kNoneNeeded;
  if (c.json) {
    c.Json({{"u", none ? nlohmann::json(nullptr) : nlohmann::json(d.name(r.u))},
            {"none_needed", none},
            {"witness", linkage_json(d, r.witness)}});
  } else {
    c.out << (none ? std::string("none needed") : "u: " + d.name(r.u)) << "\n"
          << "witness: " << format_linkage(d, r.witness) << "\n";
  }
  return kOk;
}

inline int CmdCombTrace(const Context& c, const std::string& i_text,
                        const std::string& x0, int depth) {
  const Dimaze d = c.ReadDimaze();
  const auto tr = comb_trace(d, parse_vertex_set(d, i_text), d.at(x0), depth);
  const auto problems = comb_prefix_problems(d, tr);
  const auto& p = tr.prefix;
  auto names = [&](const std::vector<Vertex>& vs) {
    std::vector<std::string> out;
    for (Vertex v : vs) out.push_back(d.name(v));
    return out;
  };
  if (c.json) {
    nlohmann::json blue = nlohmann::json::array(), red = nlohmann::json::array();
    for (const auto& s : p.blue_segments) blue.push_back(names(s.vertices));
    for (const auto& s : p.red_segments) red.push_back(names(s.vertices));
    c.Json({{"depth", p.depth},
            {"stop", stop_name(tr.stop)},
            {"stopped_at", tr.stopped_at},
            {"x", names(p.x)},
            {"q", names(p.q)},
            {"p", names(p.p)},
            {"step_index", p.step_index},
            {"blue_segments", blue},
            {"red_segments", red},
            {"problems", problems}});
  } else {
    auto list = [&](const std::vector<Vertex>& vs) {
      return vs.empty() ? std::string("-")
                        : gammoid::detail::Join(names(vs), ",");
    };
    c.out << "depth: " << p.depth << "\n"
          << "stop: " << stop_name(tr.stop) << " at k=" << tr.stopped_at << "\n"
          << "x: " << list(p.x) << "\n"
          << "q: " << list(p.q) << "\n"
          << "p: " << list(p.p) << "\n";
    for (const auto& s : problems) c.out << "problem: " << s << "\n";
  }
  return problems.empty() ? kOk : kPropertyFails;
}

inline int CmdDagger(const Context& c) {
  const Dimaze d = c.ReadDimaze();
  const auto w = check_dagger(d);
  if (c.json) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& x : w) {
      list.push_back({{"set", d.names(x.onto_set)},
                      {"v", d.name(x.v)},
                      {"onto", linkage_json(d, x.onto)},
                      {"plus", linkage_json(d, x.plus)}});
    }
    c.Json({{"holds", w.empty()}, {"witnesses", list}});
  } else if (w.empty()) {
    c.out << "holds\n";
  } else {
    for (const auto& x : w) {
      c.out << format_vertex_set(d, x.onto_set) << " + " << d.name(x.v)
            << ": " << format_linkage(d, x.plus) << "\n";
    }
  }
  return w.empty() ? kOk : kPropertyFails;
}

inline int CmdAxioms(const Context& c) {
  const MatroidView m = c.ReadMatroid();
  const auto r = check_axioms(m);
  if (c.json) {
    c.Json(axioms_json(m, r));
  } else {
    for (const auto& a : r.checks) {
      c.out << a.axiom << " " << (a.pass ? "pass" : "FAIL");
      for (const auto& [label, s] : a.sets) {
        c.out << " " << label << "=" << detail::MaskText(m, s);
      }
      if (a.element) c.out << " x=" << m.ground()[*a.element];
      c.out << "\n";
    }
  }
  return r.all_pass() ? kOk : kPropertyFails;
}

inline int CmdCircuits(const Context& c, std::size_t max_size, bool co) {
  const MatroidView m = c.ReadMatroid();
  const auto list = co ? cocircuits(m, max_size) : circuits(m, max_size);
  if (c.json) {
    nlohmann::json j = nlohmann::json::array();
    for (Mask s : list) j.push_back(m.names(s));
    c.Json({{co ? "cocircuits" : "circuits", j}});
  } else {
    for (Mask s : list) c.out << detail::MaskText(m, s) << "\n";
  }
  return kOk;
}

inline int CmdSeparation(const Context& c, const std::string& x_text) {
  const MatroidView m = c.ReadMatroid();
  const Mask x = x_text == "-" ? 0 : m.mask_of(gammoid::detail::Split(x_text, ','));
  const auto r = separation_value(m, x);
  if (c.json) {
    c.Json(separation_json(m, r));
  } else {
    c.out << "X: " << detail::MaskText(m, r.x) << "\n"
          << "Y: " << detail::MaskText(m, r.y) << "\n"
          << "d: " << r.d << "\n"
          << "choices: " << r.choices << "\n"
          << "k-separation for k:";
    if (r.separation_orders.empty()) c.out << " none";
    for (int k : r.separation_orders) c.out << " " << k;
    c.out << "\n";
  }
  return kOk;
}

inline int CmdBaseCriterion(const Context& c) {
  const Dimaze d = c.ReadDimaze();
  const auto r = base_criterion(d);
  const MatroidView m = MatroidView::FromDimaze(d);
  auto sets = [&](const std::vector<Mask>& v) {
    nlohmann::json j = nlohmann::json::array();
    for (Mask s : v) j.push_back(m.names(s));
    return j;
  };
  if (c.json) {
    c.Json({{"coincide", r.coincide()},
            {"onto_linkable", sets(r.onto_linkable)},
            {"maximal", sets(r.maximal)},
            {"onto_not_maximal", sets(r.onto_not_maximal)},
            {"maximal_not_onto", sets(r.maximal_not_onto)}});
  } else {
    c.out << (r.coincide() ? "coincide" : "MISMATCH") << "\n";
    for (Mask s : r.onto_linkable) c.out << detail::MaskText(m, s) << "\n";
    for (Mask s : r.onto_not_maximal) {
      c.out << "onto-linkable, not maximal: " << detail::MaskText(m, s) << "\n";
    }
    for (Mask s : r.maximal_not_onto) {
      c.out << "maximal, not onto-linkable: " << detail::MaskText(m, s) << "\n";
    }
  }
  return r.coincide() ? kOk : kPropertyFails;
}

struct ProbeArgs {
  std::string family;
  std::string rule;
  std::string range;
  int copies = 2;
  int branching = 2;
  int lookahead = -1;
  std::size_t budget = 2000;
  int samples = 32;
  long long bound = -1;
};

inline int CmdFinProbe(const Context& c, const ProbeArgs& a,
                       std::uint64_t seed) {
  FamilyGenerator g;
  g.family = parse_family(a.family);
  g.copies = a.copies;
  g.branching = a.branching;
  auto [lo, hi] = detail::ParseRange(a.range);
  ProbeOptions opt;
  opt.lookahead = a.lookahead;
  opt.budget = a.budget;
  opt.samples = a.samples;
  opt.seed = seed;
  if (a.bound >= 0) opt.bound = static_cast<std::size_t>(a.bound);
  const auto rows = finitarisation_probe(g, parse_probe_rule(a.rule), lo, hi, opt);
  bool ok = true;
  for (const auto& r : rows) {
    if (r.within_bound && !*r.within_bound) ok = false;
  }
  if (c.json) {
    c.Json({{"family", g.describe()}, {"rule", a.rule}, {"rows", probe_json(rows)}});
  } else {
    for (const auto& r : rows) {
      c.out << "k=" << r.k << " member=" << (r.rule_member ? "true" : "false")
            << " rule_distance=" << r.rule_distance
            << " maximal=" << r.maximal_count
            << " max_distance=" << r.max_distance
            << " exhausted=" << (r.budget_exhausted ? "true" : "false");
      if (r.within_bound) {
        c.out << " within_bound=" << (*r.within_bound ? "true" : "false");
      }
      c.out << "\n";
    }
  }
  return ok ? kOk : kPropertyFails;
}

inline int CmdTreeBase(const Context& c, const std::string& i_text) {
  const BipartiteGraph g = c.ReadBigraph();
  const auto r = tree_maximal_extension(g, detail::LeftSet(g, i_text));
  if (c.json) {
    nlohmann::json stages = nlohmann::json::array();
    for (const auto& s : r.stages) {
      stages.push_back({{"alpha", s.alpha},
                        {"m", detail::MatchingJson(g, s.m)},
                        {"C", g.left_names(s.c)},
                        {"S", g.left_names(s.s)}});
    }
    c.Json({{"base", g.left_names(r.base)},
            {"matching", detail::MatchingJson(g, r.matching)},
            {"gamma", r.gamma},
            {"stages", stages},
            {"violations", r.violations}});
  } else {
    c.out << "B: " << detail::LeftText(g, r.base) << "\n"
          << "matching: " << detail::MatchingText(g, r.matching) << "\n"
          << "gamma: " << r.gamma << "\n";
    for (const auto& s : r.stages) {
      c.out << "stage " << s.alpha << " | m " << detail::MatchingText(g, s.m)
            << " | C " << detail::LeftText(g, s.c) << " | S "
            << detail::LeftText(g, s.s) << "\n";
    }
    for (const auto& v : r.violations) c.out << "violation: " << v << "\n";
  }
  return r.violations.empty() ? kOk : kPropertyFails;
}

inline int CmdMtAugment(const Context& c, const std::string& i_text,
                        const std::string& b_text) {
  const BipartiteGraph g = c.ReadBigraph();
  const auto r =
      mt_augment(g, detail::LeftSet(g, i_text), detail::LeftSet(g, b_text));
  if (c.json) {
    c.Json({{"y", g.left_name(r.y)},
            {"x", g.left_name(r.x)},
            {"matching", detail::MatchingJson(g, r.matching)}});
  } else {
    c.out << "y: " << g.left_name(r.y) << "\n"
          << "matching: " << detail::MatchingText(g, r.matching) << "\n";
  }
  return kOk;
}

inline int CmdToBigraph(const Context& c) {
  const BipartiteGraph g = dimaze_tree_to_bipartite(c.ReadDimaze());
  if (c.json) {
    c.Json(to_json(g));
  } else if (c.dot) {
    c.out << to_dot(g);
  } else {
    c.out << serialize(g);
  }
  return kOk;
}

/// Runs one command line (without the program name).
inline int run(const std::vector<std::string>& args, std::istream& in,
               std::ostream& out, std::ostream& err) {
  CLI::App app{"Linkability systems of dimazes and transversal systems",
               "gammoid"};
  app.require_subcommand(1);
  std::string in_path;
  bool json = false, dot = false;
  std::uint64_t seed = 1;
  app.add_option("--in", in_path, "Input file (default: stdin)");
  app.add_flag("--json", json, "JSON output");
  app.add_flag("--dot", dot, "Graphviz output where applicable");
  app.add_option("--seed", seed, "Seed for randomized steps");

  std::function<int(const Context&)> action;
  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  std::string family, a1, a2, a3;
  std::vector<int> params;
  auto* gen = sub("gen", "Generate a family truncation: gen <family> <params>");
  gen->add_option("family", family)->required();
  gen->add_option("params", params)->required();
  gen->callback([&] { action = [&](const Context& c) { return CmdGen(c, family, params); }; });

  sub("validate", "List dimaze invariant violations")->callback([&] {
    action = CmdValidate;
  });

  auto* indep = sub("indep", "Independence test: indep <set>");
  indep->add_option("set", a1)->required();
  indep->callback([&] { action = [&](const Context& c) { return CmdIndep(c, a1); }; });

  auto* link = sub("link", "Maximum linkage and separator: link <X>");
  link->add_option("X", a1)->required();
  link->callback([&] { action = [&](const Context& c) { return CmdLink(c, a1); }; });

  auto* aug = sub("augment", "One augmentation round: augment <X> [linkage]");
  aug->add_option("X", a1)->required();
  aug->add_option("linkage", a2);
  aug->callback([&] { action = [&](const Context& c) { return CmdAugment(c, a1, a2); }; });

  auto* onto = sub("extend-onto", "Extend a linkage onto the exits");
  onto->add_option("linkage", a1);
  onto->callback([&] { action = [&](const Context& c) { return CmdExtendOnto(c, a1); }; });

  auto* toward = sub("toward-base", "Augment I from a maximal B: toward-base <I> <B>");
  toward->add_option("I", a1)->required();
  toward->add_option("B", a2)->required();
  toward->callback([&] { action = [&](const Context& c) { return CmdTowardBase(c, a1, a2); }; });

  bool trace = false;
  auto* mrg = sub("merge", "Merge linkages: merge <red> <blue> [--trace]");
  mrg->add_option("red", a1)->required();
  mrg->add_option("blue", a2)->required();
  mrg->add_flag("--trace", trace, "Print one line per step");
  mrg->callback([&] { action = [&](const Context& c) { return CmdMerge(c, a1, a2, trace); }; });

  auto* exch = sub("exchange", "Exchange step: exchange <I> <J> <v>");
  exch->add_option("I", a1)->required();
  exch->add_option("J", a2)->required();
  exch->add_option("v", a3)->required();
  exch->callback([&] { action = [&](const Context& c) { return CmdExchange(c, a1, a2, a3); }; });

  int depth = 8;
  auto* comb = sub("comb-trace", "Comb prefix: comb-trace <I> <x0> --depth N");
  comb->add_option("I", a1)->required();
  comb->add_option("x0", a2)->required();
  comb->add_option("--depth", depth, "Maximum number of alternations");
  comb->callback([&] { action = [&](const Context& c) { return CmdCombTrace(c, a1, a2, depth); }; });

  sub("dagger", "Onto-linkable sets that are not maximal")->callback([&] {
    action = CmdDagger;
  });
  sub("axioms", "Check I1 I2 I3 IM B1 B2")->callback([&] { action = CmdAxioms; });

  std::size_t max_size = 3;
  bool co = false;
  auto* circ = sub("circuits", "Circuits up to --max elements (--co: cocircuits)");
  circ->add_option("--max", max_size, "Largest size listed");
  circ->add_flag("--co", co, "List cocircuits instead");
  circ->callback([&] { action = [&](const Context& c) { return CmdCircuits(c, max_size, co); }; });
  auto* cocirc = sub("cocircuits", "Cocircuits up to --max elements");
  cocirc->add_option("--max", max_size, "Largest size listed");
  cocirc->callback([&] { action = [&](const Context& c) { return CmdCircuits(c, max_size, true); }; });

  auto* sep = sub("separation", "Separation value of (X, E-X): separation <X>");
  sep->add_option("X", a1)->required();
  sep->callback([&] { action = [&](const Context& c) { return CmdSeparation(c, a1); }; });

  sub("base-criterion", "Compare onto-linkable and maximal sets")->callback([&] {
    action = CmdBaseCriterion;
  });

  ProbeArgs probe;
  auto* fin = sub("finprobe", "Finitarisation probe: finprobe <family> <rule> <k|a..b>");
  fin->add_option("family", probe.family)->required();
  fin->add_option("rule", probe.rule)->required();
  fin->add_option("krange", probe.range)->required();
  fin->add_option("--n", probe.copies, "Turbine copies");
  fin->add_option("--b", probe.branching, "Tree branching");
  fin->add_option("--lookahead", probe.lookahead, "Extra depth L (default k)");
  fin->add_option("--budget", probe.budget, "Maximal members enumerated per k");
  fin->add_option("--samples", probe.samples, "Random maximal members per k");
  fin->add_option("--bound", probe.bound, "Deletion-distance bound c");
  fin->callback([&] { action = [&](const Context& c) { return CmdFinProbe(c, probe, seed); }; });

  auto* tree = sub("tree-base", "Stage extension on a tree: tree-base <I>");
  tree->add_option("I", a1)->required();
  tree->callback([&] { action = [&](const Context& c) { return CmdTreeBase(c, a1); }; });

  auto* mta = sub("mt-augment", "Transversal exchange: mt-augment <I> <B>");
  mta->add_option("I", a1)->required();
  mta->add_option("B", a2)->required();
  mta->callback([&] { action = [&](const Context& c) { return CmdMtAugment(c, a1, a2); }; });

  sub("to-bigraph", "Tree dimaze to bipartite graph")->callback([&] {
    action = CmdToBigraph;
  });

  std::vector<std::string> argv{"gammoid"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::vector<const char*> ptrs;
  for (const auto& a : argv) ptrs.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(ptrs.size()), ptrs.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }
  try {
    Context ctx{in, out, in_path, json, dot};
    return action(ctx);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace gammoid::cli

#endif  // GAMMOID_TOOLS_CLI_HPP_
