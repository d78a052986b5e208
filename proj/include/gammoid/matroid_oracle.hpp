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

// Exhaustive checks on a finite independence system: the independence and
// base axioms, circuits and cocircuits, separation values, the comparison
// of onto-linkable and maximal sets, and the finitarisation probe on
// truncated families.
//
//   matroid v1
//   element <id>
//   indep <a,b,...>    # `-` for the empty set

#ifndef GAMMOID_MATROID_ORACLE_HPP_
#define GAMMOID_MATROID_ORACLE_HPP_

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gammoid/dimaze.hpp"
#include "gammoid/enumeration.hpp"
#include "gammoid/generators.hpp"
#include "gammoid/io.hpp"
#include "gammoid/linkage_engine.hpp"
#include "gammoid/transversal.hpp"
#include "json.hpp"

namespace gammoid {

/// An independence oracle over a small ground set, tabulated on all 2^n
/// subsets at construction. Element i is the i-th identifier in order.
class MatroidView {
 public:
  enum class Source { kDimaze, kBipartite, kExplicit };

  MatroidView(std::vector<std::string> ground,
              const std::function<bool(const VertexSet&)>& oracle,
              Source source, std::size_t guard = size_guard())
      : ground_(std::move(ground)), source_(source) {
    require_enumerable(ground_.size(), guard);
    const Mask full = Full();
    indep_.assign(full + 1, false);
    for (Mask m = 0; m <= full; ++m) indep_[m] = oracle(mask_to_set(m));
    Derive();
  }

  static MatroidView FromDimaze(const Dimaze& d,
                                std::size_t guard = size_guard()) {
    require_valid(d);
    return MatroidView(
        d.names(),
        [&](const VertexSet& s) { return is_independent(d, s).independent; },
        Source::kDimaze, guard);
  }

  static MatroidView FromBipartite(const BipartiteGraph& g,
                                   std::size_t guard = size_guard()) {
    return MatroidView(
        g.left_names(),
        [&](const VertexSet& s) { return mt_is_independent(g, s).independent; },
        Source::kBipartite, guard);
  }

  /// Exactly the listed sets are independent.
  static MatroidView FromExplicit(const std::vector<std::string>& ground,
                                  const std::vector<VertexSet>& independent,
                                  std::size_t guard = size_guard()) {
    std::set<VertexSet> listed(independent.begin(), independent.end());
    return MatroidView(
        ground, [&](const VertexSet& s) { return listed.count(s) != 0; },
        Source::kExplicit, guard);
  }

  std::size_t size() const { return ground_.size(); }
  const std::vector<std::string>& ground() const { return ground_; }
  Source source() const { return source_; }
  Mask full() const { return Full(); }

  bool independent(Mask m) const { return indep_[m]; }
  /// Independent with no independent proper superset.
  bool maximal(Mask m) const { return maximal_[m]; }
  /// Some maximal independent set lies inside `m`.
  bool contains_base(Mask m) const { return contains_base_[m]; }
  /// Largest independent subset of `m`.
  int rank(Mask m) const { return rank_[m]; }

  std::vector<std::string> names(Mask m) const {
    std::vector<std::string> out;
    for (Vertex v : mask_to_set(m)) out.push_back(ground_[v]);
    return out;
  }

  Mask mask_of(const std::vector<std::string>& ids) const {
    Mask m = 0;
    for (const auto& id : ids) {
      auto it = std::lower_bound(ground_.begin(), ground_.end(), id);
      if (it == ground_.end() || *it != id) {
        throw ReferenceError("unknown element " + id);
      }
      m |= Mask{1} << (it - ground_.begin());
    }
    return m;
  }

 private:
  Mask Full() const { return (Mask{1} << ground_.size()) - 1; }

  void Derive() {
    const Mask full = Full();
    const std::size_t n = ground_.size();
    std::vector<bool> above(full + 1, false);  // independent superset exists
    for (Mask m = full + 1; m-- > 0;) {
      bool a = indep_[m];
      for (std::size_t x = 0; x < n && !a; ++x) {
        if (!(m >> x & 1)) a = above[m | Mask{1} << x];
      }
      above[m] = a;
    }
    maximal_.assign(full + 1, false);
    contains_base_.assign(full + 1, false);
    rank_.assign(full + 1, 0);
    for (Mask m = 0; m <= full; ++m) {
      bool mx = indep_[m];
      for (std::size_t x = 0; x < n && mx; ++x) {
        if (!(m >> x & 1) && above[m | Mask{1} << x]) mx = false;
      }
      maximal_[m] = mx;
      bool cb = mx;
      int r = indep_[m] ? popcount(m) : 0;
      for (std::size_t x = 0; x < n; ++x) {
        if (m >> x & 1) {
          cb = cb || contains_base_[m & ~(Mask{1} << x)];
          r = std::max(r, rank_[m & ~(Mask{1} << x)]);
        }
      }
      contains_base_[m] = cb;
      rank_[m] = r;
    }
  }

  std::vector<std::string> ground_;
  Source source_;
  std::vector<bool> indep_;
  std::vector<bool> maximal_;
  std::vector<bool> contains_base_;
  std::vector<int> rank_;
};

inline std::string_view source_name(MatroidView::Source s) {
  switch (s) {
    case MatroidView::Source::kDimaze: return "dimaze";
    case MatroidView::Source::kBipartite: return "bipartite";
    case MatroidView::Source::kExplicit: return "explicit";
  }
  return "?";
}

inline MatroidView parse_matroid(std::string_view text) {
  auto lines = detail::TokenizeLines(text);
  detail::ExpectHeader(lines, "matroid");
  std::vector<std::string> ground;
  std::vector<std::pair<std::size_t, std::string>> sets;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [number, t] = lines[i];
    if (t[0] == "element" && t.size() == 2) {
      ground.push_back(t[1]);
    } else if (t[0] == "indep" && t.size() <= 2) {
      sets.emplace_back(number, t.size() == 2 ? t[1] : "-");
    } else {
      throw ParseError(number, "malformed line '" + detail::Join(t, " ") + "'");
    }
  }
  std::sort(ground.begin(), ground.end());
  ground.erase(std::unique(ground.begin(), ground.end()), ground.end());
  std::vector<VertexSet> independent;
  for (const auto& [number, text_set] : sets) {
    VertexSet s;
    if (text_set != "-") {
      for (const auto& id : detail::Split(text_set, ',')) {
        auto it = std::lower_bound(ground.begin(), ground.end(), id);
        if (it == ground.end() || *it != id) {
          throw ReferenceError("line " + std::to_string(number) +
                               ": unknown element " + id);
        }
        s.insert(static_cast<Vertex>(it - ground.begin()));
      }
    }
    independent.push_back(std::move(s));
  }
  return MatroidView::FromExplicit(ground, independent);
}

/// Explicit-list text of the independent sets of `m`.
inline std::string serialize(const MatroidView& m) {
  std::string out = "matroid v1\n";
  for (const auto& e : m.ground()) out += "element " + e + "\n";
  std::vector<Mask> sets;
  for (Mask s = 0; s <= m.full(); ++s) {
    if (m.independent(s)) sets.push_back(s);
  }
  std::sort(sets.begin(), sets.end(), canonical_less);
  for (Mask s : sets) {
    out += "indep " + (s ? detail::Join(m.names(s), ",") : "-") + "\n";
  }
  return out;
}

struct AxiomCheck {
  std::string axiom;
  bool pass = true;
  std::vector<std::pair<std::string, Mask>> sets;  // labelled counterexample
  std::optional<Vertex> element;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const AxiomCheck& c) { return c.pass; });
  }
  const AxiomCheck& at(std::string_view axiom) const {
    for (const auto& c : checks) {
      if (c.axiom == axiom) return c;
    }
    throw ParameterError("no axiom " + std::string(axiom));
  }
};

namespace detail {

/// Masks of an n-element ground set sorted by cardinality, then
/// lexicographically.
inline std::vector<Mask> CanonicalMasks(std::size_t n) {
  std::vector<Mask> out((Mask{1} << n));
  for (Mask m = 0; m < out.size(); ++m) out[m] = m;
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace detail

/// Checks I1, I2, I3, IM, B1 and B2 exhaustively. Each failing axiom carries
/// its least counterexample (by cardinality, then lexicographic order).
inline AxiomReport check_axioms(const MatroidView& m) {
  const std::size_t n = m.size();
  const auto order = detail::CanonicalMasks(n);
  AxiomReport report;

  AxiomCheck i1;
  i1.axiom = "I1";
  i1.pass = m.independent(0);
  report.checks.push_back(i1);

  AxiomCheck i2;
  i2.axiom = "I2";
  for (Mask sup : order) {
    if (!m.independent(sup) || !i2.pass) continue;
    std::vector<Mask> subs;
    for (Mask s = sup;; s = (s - 1) & sup) {
      subs.push_back(s);
      if (s == 0) break;
    }
    std::sort(subs.begin(), subs.end(), canonical_less);
    for (Mask s : subs) {
      if (!m.independent(s)) {
        i2.pass = false;
        i2.sets = {{"subset", s}, {"superset", sup}};
        break;
      }
    }
  }
  report.checks.push_back(i2);

  AxiomCheck i3;
  i3.axiom = "I3";
  for (Mask i : order) {
    if (!i3.pass) break;
    if (!m.independent(i) || m.maximal(i)) continue;
    for (Mask b : order) {
      if (!m.maximal(b)) continue;
      bool found = false;
      for (std::size_t x = 0; x < n && !found; ++x) {
        const Mask bit = Mask{1} << x;
        if ((b & bit) && !(i & bit)) found = m.independent(i | bit);
      }
      if (!found) {
        i3.pass = false;
        i3.sets = {{"I", i}, {"B", b}};
        break;
      }
    }
  }
  report.checks.push_back(i3);

  // IM: for independent I inside X, climb to an independent set of X with
  // no independent proper superset inside X. Larger jumps are only needed
  // when I2 fails.
  AxiomCheck im;
  im.axiom = "IM";
  const bool downward_closed = i2.pass;
  for (Mask x : order) {
    if (!im.pass) break;
    for (Mask i = x;; i = (i - 1) & x) {
      if (m.independent(i)) {
        Mask g = i;
        bool climbed = true;
        std::size_t guard = 0;
        while (climbed) {
          climbed = false;
          for (std::size_t e = 0; e < n; ++e) {
            const Mask bit = Mask{1} << e;
            if ((x & bit) && !(g & bit) && m.independent(g | bit)) {
              g |= bit;
              climbed = true;
              break;
            }
          }
          if (!climbed && !downward_closed) {
            const Mask rest = x & ~g;
            for (Mask s = rest; s; s = (s - 1) & rest) {
              if (m.independent(g | s)) {
                g |= s;
                climbed = true;
                break;
              }
            }
          }
          if (++guard > n + 1) break;
        }
        if (climbed) {
          im.pass = false;
          im.sets = {{"I", i}, {"X", x}};
          break;
        }
      }
      if (i == 0) break;
    }
  }
  report.checks.push_back(im);

  std::vector<Mask> bases;
  for (Mask b : order) {
    if (m.maximal(b)) bases.push_back(b);
  }
  AxiomCheck b1;
  b1.axiom = "B1";
  b1.pass = !bases.empty();
  report.checks.push_back(b1);

  AxiomCheck b2;
  b2.axiom = "B2";
  for (Mask p : bases) {
    if (!b2.pass) break;
    for (Mask q : bases) {
      if (!b2.pass) break;
      for (std::size_t x = 0; x < n; ++x) {
        const Mask bx = Mask{1} << x;
        if (!(p & bx) || (q & bx)) continue;
        bool found = false;
        for (std::size_t y = 0; y < n && !found; ++y) {
          const Mask by = Mask{1} << y;
          if ((q & by) && !(p & by)) found = m.maximal((p & ~bx) | by);
        }
        if (!found) {
          b2.pass = false;
          b2.sets = {{"B1", p}, {"B2", q}};
          b2.element = static_cast<Vertex>(x);
          break;
        }
      }
    }
  }
  report.checks.push_back(b2);
  return report;
}

inline nlohmann::json axioms_json(const MatroidView& m, const AxiomReport& r) {
  nlohmann::json axioms = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json entry = {{"axiom", c.axiom}, {"pass", c.pass}};
    if (!c.pass) {
      nlohmann::json cx = nlohmann::json::object();
      for (const auto& [label, s] : c.sets) cx[label] = m.names(s);
      if (c.element) cx["x"] = m.ground()[*c.element];
      entry["counterexample"] = cx;
    }
    axioms.push_back(entry);
  }
  return {{"source", source_name(m.source())},
          {"ground", m.ground()},
          {"axioms", axioms},
          {"pass", r.all_pass()}};
}

/// Minimal dependent sets with at most `max_size` elements, canonical order.
inline std::vector<Mask> circuits(const MatroidView& m, std::size_t max_size) {
  std::vector<Mask> out;
  for (Mask s : detail::CanonicalMasks(m.size())) {
    if (static_cast<std::size_t>(popcount(s)) > max_size) break;
    if (m.independent(s)) continue;
    bool minimal = true;
    for (Mask t = (s - 1) & s;; t = (t - 1) & s) {
      if (!m.independent(t)) {
        minimal = false;
        break;
      }
      if (t == 0) break;
    }
    if (minimal) out.push_back(s);
  }
  return out;
}

/// Minimal sets meeting every maximal independent set, canonical order.
inline std::vector<Mask> cocircuits(const MatroidView& m,
                                    std::size_t max_size) {
  const Mask full = m.full();
  auto meets_all = [&](Mask s) { return !m.contains_base(full & ~s); };
  std::vector<Mask> out;
  for (Mask s : detail::CanonicalMasks(m.size())) {
    if (static_cast<std::size_t>(popcount(s)) > max_size) break;
    if (s == 0 || !meets_all(s)) continue;
    bool minimal = true;
    for (Vertex x : mask_to_set(s)) {
      if (meets_all(s & ~(Mask{1} << x))) minimal = false;
    }
    if (minimal) out.push_back(s);
  }
  return out;
}

struct SeparationReport {
  Mask x = 0;
  Mask y = 0;
  Mask base_x = 0;   // a base of M restricted to X
  Mask base_y = 0;   // a base of M restricted to Y
  Mask base = 0;     // a base of M inside base_x | base_y
  int d = 0;
  int choices = 0;   // (B_X, B_Y, B) triples compared
  std::vector<int> separation_orders;  // k with (X, Y) a k-separation
};

inline constexpr int kSeparationChoices = 3;

namespace detail {

/// Up to `count` maximal independent subsets of `within`, spread over the
/// canonical order (first, last, middle, ...).
inline std::vector<Mask> SpreadBases(const MatroidView& m, Mask within,
                                     bool whole_matroid, int count) {
  std::vector<Mask> all;
  for (Mask s = within;; s = (s - 1) & within) {
    bool ok = whole_matroid ? m.maximal(s) : m.independent(s);
    if (ok && !whole_matroid) {
      for (Vertex e : mask_to_set(within & ~s)) {
        if (m.independent(s | Mask{1} << e)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) all.push_back(s);
    if (s == 0) break;
  }
  std::sort(all.begin(), all.end(), canonical_less);
  std::vector<Mask> out;
  std::vector<std::size_t> picks{0, all.size() - 1, all.size() / 2};
  for (std::size_t p : picks) {
    if (all.empty() || static_cast<int>(out.size()) >= count) break;
    if (std::find(out.begin(), out.end(), all[p]) == out.end()) {
      out.push_back(all[p]);
    }
  }
  return out;
}

}  // namespace detail

/// d = |B_X + B_Y| - |B| over several choices of B_X, B_Y and B, which must
/// agree; (X, Y) is a k-separation iff |X|, |Y| >= k and d < k.
inline SeparationReport separation_value(const MatroidView& m, Mask x) {
  const Mask full = m.full();
  if (x == 0 || (x & ~full) || x == full) {
    throw ParameterError("X must be a nonempty proper subset of the ground set");
  }
  SeparationReport r;
  r.x = x;
  r.y = full & ~x;
  const auto bx = detail::SpreadBases(m, r.x, false, kSeparationChoices);
  const auto by = detail::SpreadBases(m, r.y, false, kSeparationChoices);
  std::optional<int> d;
  for (Mask a : bx) {
    for (Mask b : by) {
      const auto bs = detail::SpreadBases(m, a | b, true, kSeparationChoices);
      if (bs.empty()) {
        throw InternalError("no base of M inside B_X + B_Y");
      }
      for (Mask base : bs) {
        const int value = popcount(a | b) - popcount(base);
        ++r.choices;
        if (!d) {
          d = value;
          r.base_x = a;
          r.base_y = b;
          r.base = base;
        } else if (*d != value) {
          throw InternalError("separation value depends on the choice of "
                              "bases: " + std::to_string(*d) + " vs " +
                              std::to_string(value));
        }
      }
    }
  }
  if (!d) throw InternalError("restriction has no base");
  r.d = *d;
  const int limit = std::min(popcount(r.x), popcount(r.y));
  for (int k = 1; k <= limit; ++k) {
    if (r.d < k) r.separation_orders.push_back(k);
  }
  return r;
}

inline nlohmann::json separation_json(const MatroidView& m,
                                      const SeparationReport& r) {
  return {{"X", m.names(r.x)},         {"Y", m.names(r.y)},
          {"B_X", m.names(r.base_x)},  {"B_Y", m.names(r.base_y)},
          {"B", m.names(r.base)},      {"d", r.d},
          {"choices", r.choices},      {"separations", r.separation_orders}};
}

struct BaseCriterion {
  std::vector<Mask> onto_linkable;
  std::vector<Mask> maximal;
  std::vector<Mask> onto_not_maximal;
  std::vector<Mask> maximal_not_onto;
  bool coincide() const {
    return onto_not_maximal.empty() && maximal_not_onto.empty();
  }
};

/// Compares the sets linkable onto the exits with the maximal independent
/// sets of the dimaze.
inline BaseCriterion base_criterion(const Dimaze& d,
                                    std::size_t guard = size_guard()) {
  const MatroidView m = MatroidView::FromDimaze(d, guard);
  BaseCriterion out;
  for (Mask s : detail::CanonicalMasks(m.size())) {
    if (!m.independent(s)) continue;
    const VertexSet set = mask_to_set(s);
    auto witness = is_independent(d, set).witness;
    auto onto = extend_onto(d, witness);
    const bool is_onto = onto.complete && onto.linkage.ini() == set;
    if (is_onto) out.onto_linkable.push_back(s);
    if (m.maximal(s)) out.maximal.push_back(s);
    if (is_onto && !m.maximal(s)) out.onto_not_maximal.push_back(s);
    if (!is_onto && m.maximal(s)) out.maximal_not_onto.push_back(s);
  }
  return out;
}

// Finitarisation probe.
//
// For each depth k the infinite dimaze is approximated by the deeper
// truncation D_(k+L): a subset of V(D_k) counts as a member of the
// finitarisation when it is independent there. Maximal members are the
// maximal independent subsets of V(D_k) in D_(k+L); the deletion distance
// of such a B is |B| - rank(B) measured in D_k itself.

enum class ProbeRule { kAll, kExits, kNonExits, kSpine, kDiagonal };

inline ProbeRule parse_probe_rule(std::string_view s) {
  if (s == "all") return ProbeRule::kAll;
  if (s == "exits") return ProbeRule::kExits;
  if (s == "nonexits") return ProbeRule::kNonExits;
  if (s == "spine") return ProbeRule::kSpine;
  if (s == "diagonal") return ProbeRule::kDiagonal;
  throw ParameterError("unknown rule " + std::string(s) +
                       " (all, exits, nonexits, spine, diagonal)");
}

/// The rule's vertex set inside `d`, the depth-`k` truncation of `g`.
/// `spine` is the first copy's spine for turbine and the non-exits
/// otherwise; `diagonal` is {(x,x)} plus the exits of half_grid.
inline VertexSet apply_rule(const FamilyGenerator& g, const Dimaze& d,
                            ProbeRule rule, int k) {
  VertexSet out;
  switch (rule) {
    case ProbeRule::kAll:
      return d.all_vertices();
    case ProbeRule::kExits:
      return d.exits();
    case ProbeRule::kNonExits:
      return set_minus(d.all_vertices(), d.exits());
    case ProbeRule::kSpine:
      if (g.family == Family::kTurbine) {
        for (int i = 0; i <= k; ++i) {
          out.insert(d.at("r1." + std::to_string(i)));
        }
        return out;
      }
      return set_minus(d.all_vertices(), d.exits());
    case ProbeRule::kDiagonal:
      if (g.family != Family::kHalfGrid) {
        throw ParameterError("rule diagonal needs family half_grid");
      }
      out = d.exits();
      for (int x = 1; x <= k; ++x) {
        out.insert(d.at("(" + std::to_string(x) + "," + std::to_string(x) +
                        ")"));
      }
      return out;
  }
  return out;
}

struct ProbeOptions {
  int lookahead = -1;         // L; negative means L = k
  std::size_t budget = 2000;  // maximal members enumerated per k
  int samples = 32;           // random greedy maximal members per k
  std::uint64_t seed = 1;
  std::optional<std::size_t> bound;  // c
};

struct ProbeRow {
  int k = 0;
  std::vector<std::string> rule_set;
  bool rule_member = false;          // rule set in the finitarisation
  std::size_t rule_distance = 0;     // |I| - rank_(D_k)(I)
  std::size_t maximal_count = 0;     // distinct maximal members examined
  bool budget_exhausted = false;
  std::size_t max_distance = 0;      // over the maximal members examined
  std::vector<std::string> worst;    // a maximal member attaining it
  std::optional<bool> within_bound;  // every distance <= c
};

namespace detail {

/// Maximal independent subsets of `ground` in `big`, by depth-first search
/// in element order; stops after `budget` sets.
inline std::vector<VertexSet> EnumerateBases(const Dimaze& big,
                                             const std::vector<Vertex>& ground,
                                             std::size_t budget,
                                             bool& exhausted) {
  const VertexSet all(ground.begin(), ground.end());
  const std::size_t r = rank_of(big, all);
  std::vector<VertexSet> out;
  exhausted = false;
  VertexSet cur;
  std::function<void(std::size_t)> dfs = [&](std::size_t idx) {
    if (exhausted) return;
    if (cur.size() == r) {
      if (out.size() == budget) {
        exhausted = true;
        return;
      }
      out.push_back(cur);
      return;
    }
    if (idx == ground.size()) return;
    const Vertex e = ground[idx];
    cur.insert(e);
    if (is_independent(big, cur).independent) dfs(idx + 1);
    cur.erase(e);
    VertexSet rest = cur;
    rest.insert(ground.begin() + idx + 1, ground.end());
    if (rank_of(big, rest) == r) dfs(idx + 1);
  };
  dfs(0);
  return out;
}

}  // namespace detail

/// Per depth k in [k_min, k_max]: whether the rule set is a finitarisation
/// member, its deletion distance, and the largest deletion distance over
/// the enumerated maximal members.
inline std::vector<ProbeRow> finitarisation_probe(const FamilyGenerator& g,
                                                  ProbeRule rule, int k_min,
                                                  int k_max,
                                                  const ProbeOptions& opt = {}) {
  if (k_min < 1 || k_max < k_min) {
    throw ParameterError("bad depth range " + std::to_string(k_min) + ".." +
                         std::to_string(k_max));
  }
  std::vector<ProbeRow> rows;
  std::mt19937_64 rng(opt.seed);
  for (int k = k_min; k <= k_max; ++k) {
    const int lookahead = opt.lookahead < 0 ? k : opt.lookahead;
    const Dimaze small = generate(g.with_depth(k));
    const Dimaze big = generate(g.with_depth(k + lookahead));
    auto lift = [&](const VertexSet& s) {
      VertexSet out;
      for (Vertex v : s) out.insert(big.at(small.name(v)));
      return out;
    };
    auto lower = [&](const VertexSet& s) {
      VertexSet out;
      for (Vertex v : s) out.insert(small.at(big.name(v)));
      return out;
    };
    ProbeRow row;
    row.k = k;
    const VertexSet rule_set = apply_rule(g, small, rule, k);
    row.rule_set = small.names(rule_set);
    row.rule_member = is_independent(big, lift(rule_set)).independent;
    row.rule_distance = rule_set.size() - rank_of(small, rule_set);

    std::vector<Vertex> ground;
    for (Vertex v : lift(small.all_vertices())) ground.push_back(v);
    auto bases =
        detail::EnumerateBases(big, ground, opt.budget, row.budget_exhausted);
    std::set<VertexSet> seen(bases.begin(), bases.end());
    for (int s = 0; s < opt.samples; ++s) {
      std::vector<Vertex> order = ground;
      std::shuffle(order.begin(), order.end(), rng);
      VertexSet b;
      for (Vertex v : order) {
        if (is_independent(big, with(b, v)).independent) b.insert(v);
      }
      seen.insert(b);
    }
    row.maximal_count = seen.size();
    for (const auto& b : seen) {
      const VertexSet in_small = lower(b);
      const std::size_t dist = in_small.size() - rank_of(small, in_small);
      if (row.worst.empty() || dist > row.max_distance) {
        row.max_distance = dist;
        row.worst = small.names(in_small);
      }
    }
    if (opt.bound) {
      row.within_bound = row.max_distance <= *opt.bound &&
                         (!row.rule_member || row.rule_distance <= *opt.bound);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline nlohmann::json probe_json(const std::vector<ProbeRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json j = {{"k", r.k},
                        {"rule_set", r.rule_set},
                        {"rule_member", r.rule_member},
                        {"rule_distance", r.rule_distance},
                        {"maximal_examined", r.maximal_count},
                        {"budget_exhausted", r.budget_exhausted},
                        {"max_distance", r.max_distance},
                        {"worst", r.worst}};
    j["within_bound"] =
        r.within_bound ? nlohmann::json(*r.within_bound) : nullptr;
    out.push_back(j);
  }
  return out;
}

}  // namespace gammoid

#endif  // GAMMOID_MATROID_ORACLE_HPP_
