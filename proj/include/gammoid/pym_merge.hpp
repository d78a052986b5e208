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

// Merging a red linkage P = {P_x} with a blue linkage Q = {Q_y} into one
// linkage that starts at every red initial vertex and ends at every blue
// terminal vertex, and the two constructions that run on top of it: the
// exchange step (J + v - u independent) and the alternating-comb trace.
//
// Step i keeps a marker f^i_x on every red path and t^i_y on every blue
// path. f^0_x = x, Q^0 = Q, t^0_y is the initial vertex of Q_y. Then
//
//   f^i_x  first vertex at or after f^(i-1)_x on P_x lying on Q^(i-1),
//          or the terminal vertex of P_x if there is none;
//   t^i_y  last vertex of Q_y equal to some f^i_x, else the initial vertex;
//   A^i    blue paths carrying no f^i_x;
//   B^i    P_x f^i_x Q_y whenever f^i_x = t^i_y;
//   C^i    red paths whose f^i_x is their terminal vertex and no t^i_y;
//   Q^i    A^i + B^i + C^i.
//
// The markers only move forward, so the sequence reaches a fixed point.

#ifndef GAMMOID_PYM_MERGE_HPP_
#define GAMMOID_PYM_MERGE_HPP_

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gammoid/dimaze.hpp"
#include "gammoid/enumeration.hpp"
#include "gammoid/io.hpp"
#include "gammoid/linkage_engine.hpp"

namespace gammoid {

using Markers = std::map<Vertex, Vertex>;

struct MergeStep {
  int index = 0;
  Markers f;  // red initial vertex x -> f^i_x
  Markers t;  // blue terminal vertex y -> t^i_y
  Linkage q;  // Q^i
};

struct MergeState {
  Linkage red;
  Linkage blue;
  int step = 0;  // first i with Q^(i+1) = Q^i
  Markers f;     // f^inf
  Markers t;     // t^inf
  std::vector<DirectedPath> a;  // A^inf (blue paths)
  std::vector<DirectedPath> b;  // B^inf (red initial + blue terminal)
  std::vector<DirectedPath> c;  // C^inf (red paths)
  std::vector<MergeStep> history;  // steps 0..step+1 when recorded
};

struct MergeResult {
  Linkage linkage;  // Q^inf
  MergeState state;
};

struct MergeOptions {
  bool record_history = false;
};

namespace detail {

struct MergeRound {
  Markers f;
  Markers t;
  std::vector<DirectedPath> a, b, c;
  Linkage q;
};

inline std::size_t PositionOn(const DirectedPath& p, Vertex v) {
  return *p.index_of(v);
}

inline MergeRound ComputeRound(const Linkage& red, const Linkage& blue,
                               const Markers& f_prev, const Linkage& q_prev) {
  MergeRound r;
  const VertexSet covered = q_prev.vertices();
  for (const auto& p : red.paths()) {
    std::size_t j = PositionOn(p, f_prev.at(p.front()));
    while (j + 1 < p.size() && !covered.count(p.vertices[j])) ++j;
    r.f[p.front()] = p.vertices[j];
  }
  std::map<Vertex, Vertex> owner;  // f-vertex -> red initial
  for (auto [x, fx] : r.f) owner[fx] = x;
  std::vector<DirectedPath> paths;
  for (const auto& q : blue.paths()) {
    std::optional<std::size_t> last;
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (owner.count(q.vertices[j])) last = j;
    }
    r.t[q.back()] = q.vertices[last.value_or(0)];
    if (!last) {
      r.a.push_back(q);
    } else {
      const Vertex meet = q.vertices[*last];
      r.b.push_back(DirectedPath::Join(*red.starting_at(owner[meet]), meet, q));
    }
  }
  VertexSet t_values;
  for (auto [y, ty] : r.t) t_values.insert(ty);
  for (const auto& p : red.paths()) {
    const Vertex fx = r.f[p.front()];
    if (fx == p.back() && !t_values.count(fx)) r.c.push_back(p);
  }
  paths.insert(paths.end(), r.a.begin(), r.a.end());
  paths.insert(paths.end(), r.b.begin(), r.b.end());
  paths.insert(paths.end(), r.c.begin(), r.c.end());
  r.q = Linkage(std::move(paths));
  return r;
}

}  // namespace detail

/// Runs the merge to its first fixed point. Throws InternalError if a
/// monotonicity or linkage invariant fails at any step.
inline MergeResult merge(const Dimaze& d, const Linkage& red,
                         const Linkage& blue, MergeOptions options = {}) {
  require_valid(d);
  for (const auto* link : {&red, &blue}) {
    if (auto problems = linkage_problems(d, *link); !problems.empty()) {
      throw ContractViolation("merge input is not a linkage: " +
                              problems.front());
    }
  }
  MergeState st;
  st.red = red;
  st.blue = blue;
  Markers f;
  Markers t;
  for (const auto& p : red.paths()) f[p.front()] = p.front();
  for (const auto& q : blue.paths()) t[q.back()] = q.front();
  Linkage q_cur = blue;
  if (options.record_history) st.history.push_back({0, f, t, q_cur});

  const VertexSet blue_ter = blue.ter();
  std::size_t budget = 2;
  for (const auto& p : red.paths()) budget += p.size();
  for (int i = 1;; ++i) {
    if (static_cast<std::size_t>(i) > budget) {
      throw InternalError("merge did not reach a fixed point");
    }
    auto round = detail::ComputeRound(red, blue, f, q_cur);
    for (const auto& p : red.paths()) {
      const Vertex x = p.front();
      if (detail::PositionOn(p, round.f[x]) < detail::PositionOn(p, f[x])) {
        throw InternalError("f marker moved backwards on " + d.name(x));
      }
    }
    for (const auto& q : blue.paths()) {
      const Vertex y = q.back();
      if (detail::PositionOn(q, round.t[y]) < detail::PositionOn(q, t[y])) {
        throw InternalError("t marker moved backwards on " + d.name(y));
      }
    }
    if (auto problems = linkage_problems(d, round.q); !problems.empty()) {
      throw InternalError("Q^" + std::to_string(i) +
                          " is not a linkage: " + problems.front());
    }
    if (!is_subset(blue_ter, round.q.ter())) {
      throw InternalError("Q^" + std::to_string(i) +
                          " does not cover the blue terminals");
    }
    if (options.record_history) {
      st.history.push_back({i, round.f, round.t, round.q});
    }
    const bool fixed = round.f == f && round.q == q_cur;
    f = std::move(round.f);
    t = std::move(round.t);
    q_cur = std::move(round.q);
    st.a = std::move(round.a);
    st.b = std::move(round.b);
    st.c = std::move(round.c);
    if (fixed) {
      st.step = i - 1;
      break;
    }
  }
  st.f = std::move(f);
  st.t = std::move(t);
  return {std::move(q_cur), std::move(st)};
}

/// One line per step: `i | moved x | their f^i_x | t-updates`, with `-`
/// for empty fields.
inline std::string format_trace(const Dimaze& d, const MergeState& st) {
  std::string out;
  auto names = [&](const std::vector<Vertex>& vs) {
    if (vs.empty()) return std::string("-");
    std::vector<std::string> n;
    for (Vertex v : vs) n.push_back(d.name(v));
    return detail::Join(n, ",");
  };
  for (std::size_t k = 0; k < st.history.size(); ++k) {
    const auto& s = st.history[k];
    std::vector<Vertex> xs, fs;
    std::vector<std::string> tu;
    for (auto [x, fx] : s.f) {
      if (k == 0 || st.history[k - 1].f.at(x) != fx) {
        xs.push_back(x);
        fs.push_back(fx);
      }
    }
    for (auto [y, ty] : s.t) {
      if (k == 0 || st.history[k - 1].t.at(y) != ty) {
        tu.push_back(d.name(y) + "=" + d.name(ty));
      }
    }
    out += std::to_string(s.index) + " | " + names(xs) + " | " + names(fs) +
           " | " + (tu.empty() ? "-" : detail::Join(tu, ",")) + "\n";
  }
  return out;
}

/// Per-step record of the claim tracked by the exchange proof.
struct ExchangeStep {
  int index = 0;
  Vertex unhappy = 0;                // x^(i-1)
  std::optional<Vertex> blue_path;   // y^i, the blue path f^i_(x^(i-1)) hit
  bool displaced = false;            // case (i): another red marker on it
};

struct ExchangeResult {
  enum class Kind { kExchange, kNoneNeeded };
  Kind kind = Kind::kNoneNeeded;
  Vertex u = 0;
  Linkage witness;       // from J+v-u, or from J+v when none is needed
  VertexSet reduced_i;   // I restricted to J+v
  std::vector<ExchangeStep> steps;
  std::optional<int> settled_at;  // first step where case (ii) occurred
  MergeState merge;
};

/// For independent I, J and v in I\J, finds u in J\I with J+v-u
/// independent, or reports that J+v itself is independent.
inline ExchangeResult exchange(const Dimaze& d, const VertexSet& i_set,
                               const VertexSet& j_set, Vertex v) {
  require_valid(d);
  if (!i_set.count(v) || j_set.count(v)) {
    throw ContractViolation("exchange needs v in I\\J");
  }
  auto ind_i = is_independent(d, i_set);
  auto ind_j = is_independent(d, j_set);
  if (!ind_i.independent || !ind_j.independent) {
    throw ContractViolation("exchange needs independent I and J");
  }
  ExchangeResult out;
  const VertexSet jv = with(j_set, v);
  out.reduced_i = set_intersection(i_set, jv);
  if (is_subset(j_set, i_set)) {
    out.witness = ind_i.witness.restricted_to(jv);
    return out;
  }
  const Linkage red = out.reduced_i == i_set
                          ? ind_i.witness
                          : is_independent(d, out.reduced_i).witness;
  const Linkage& blue = ind_j.witness;
  auto merged = merge(d, red, blue, {.record_history = true});
  const auto& hist = merged.state.history;

  // Follow the unique uncovered vertex of J+v from step to step.
  Vertex unhappy = v;
  for (std::size_t i = 1; i < hist.size(); ++i) {
    const auto& prev = hist[i - 1];
    const auto& cur = hist[i];
    if (prev.q == merged.linkage) break;
    ExchangeStep step;
    step.index = static_cast<int>(i);
    step.unhappy = unhappy;
    const Vertex fx = cur.f.at(unhappy);
    if (const DirectedPath* qy = blue.through(fx)) {
      step.blue_path = qy->back();
      for (auto [x, other] : cur.f) {
        if (x != step.unhappy && qy->contains(other)) {
          step.displaced = true;
          unhappy = x;
        }
      }
    }
    out.steps.push_back(step);
    if (!step.displaced) {
      out.settled_at = step.index;
      break;
    }
  }

  const VertexSet missing = set_minus(jv, merged.linkage.ini());
  out.merge = std::move(merged.state);
  if (missing.size() > 1) {
    throw InternalError("merge left more than one vertex of J+v uncovered");
  }
  if (missing.empty()) {
    out.kind = ExchangeResult::Kind::kNoneNeeded;
    out.witness = merged.linkage;
  } else {
    out.kind = ExchangeResult::Kind::kExchange;
    out.u = *missing.begin();
    out.witness = merged.linkage;
    if (!j_set.count(out.u) || out.reduced_i.count(out.u)) {
      throw InternalError("exchanged vertex is not in J\\I");
    }
    if (out.settled_at && out.steps.back().blue_path) {
      const Vertex y = *out.steps.back().blue_path;
      if (blue.ending_at(y)->front() != out.u) {
        throw InternalError("exchanged vertex differs from t^0 of y^i");
      }
    }
  }
  return out;
}

/// A bounded prefix of the alternating comb built from a merge.
struct CombPrefix {
  int depth = 0;
  std::vector<Vertex> x;        // x_0..x_depth
  std::vector<Vertex> p;        // p_0..p_depth, p_k = f^inf of x_k
  std::vector<Vertex> q;        // q_1..q_depth
  std::vector<int> step_index;  // i_0..i_depth
  std::vector<DirectedPath> blue_segments;  // q_k Q_k p_(k-1)
  std::vector<DirectedPath> red_segments;   // q_k P_(x_k) p_k
  std::vector<DirectedPath> teeth;          // p_k to its exit
};

struct CombTrace {
  enum class Stop {
    kMaxDepth,      // max_depth alternations completed
    kBoundary,      // p_k lies on no blue path (a red path kept whole)
    kEmptySegment,  // p_k is the initial vertex of its blue path
    kNoRedVertex,   // no vertex before p_k on its blue path lies on Q^inf
    kRepeated,      // x_k was already used
    kTrivialRed,    // q_k = p_k
  };
  CombPrefix prefix;
  Stop stop = Stop::kMaxDepth;
  int stopped_at = 0;  // the k at which the construction stopped
  Linkage red;
  Linkage blue;
  MergeState merge;
};

inline std::string_view stop_name(CombTrace::Stop s) {
  switch (s) {
    case CombTrace::Stop::kMaxDepth: return "max-depth";
    case CombTrace::Stop::kBoundary: return "boundary";
    case CombTrace::Stop::kEmptySegment: return "empty-blue-segment";
    case CombTrace::Stop::kNoRedVertex: return "no-red-vertex";
    case CombTrace::Stop::kRepeated: return "repeated-red-path";
    case CombTrace::Stop::kTrivialRed: return "trivial-red-segment";
  }
  return "?";
}

/// Structural problems of a comb prefix; empty when all segment, spine and
/// tooth invariants hold.
inline std::vector<std::string> comb_prefix_problems(const Dimaze& d,
                                                     const CombTrace& tr) {
  std::vector<std::string> problems;
  const auto& c = tr.prefix;
  auto meets = [](const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    for (Vertex v : a) {
      if (std::find(b.begin(), b.end(), v) != b.end()) return true;
    }
    return false;
  };
  for (int k = 0; k < c.depth; ++k) {
    if (c.blue_segments[k].trivial()) {
      problems.push_back("blue segment " + std::to_string(k + 1) + " trivial");
    }
    if (c.red_segments[k].trivial()) {
      problems.push_back("red segment " + std::to_string(k + 1) + " trivial");
    }
    for (int j = 0; j < k; ++j) {
      if (meets(c.blue_segments[k].vertices, c.blue_segments[j].vertices)) {
        problems.push_back("blue segments " + std::to_string(j + 1) + " and " +
                           std::to_string(k + 1) + " meet");
      }
      if (meets(c.red_segments[k].vertices, c.red_segments[j].vertices)) {
        problems.push_back("red segments " + std::to_string(j + 1) + " and " +
                           std::to_string(k + 1) + " meet");
      }
      // q_j Q_j: the whole blue path from q_j on.
      const DirectedPath* qj = tr.blue.through(c.q[j]);
      if (meets(c.red_segments[k].vertices, qj->from(c.q[j]).vertices)) {
        problems.push_back("red segment " + std::to_string(k + 1) +
                           " meets blue path " + std::to_string(j + 1));
      }
    }
    if (c.step_index[k + 1] <= c.step_index[k]) {
      problems.push_back("step index did not increase at " +
                         std::to_string(k + 1));
    }
  }
  // Spine p_0 <- ... q_1 -> ... p_1 <- ... as one vertex sequence.
  std::vector<Vertex> spine{c.p[0]};
  for (int k = 0; k < c.depth; ++k) {
    const auto& blue = c.blue_segments[k].vertices;
    for (auto it = blue.rbegin() + 1; it != blue.rend(); ++it) {
      spine.push_back(*it);
    }
    const auto& red = c.red_segments[k].vertices;
    spine.insert(spine.end(), red.begin() + 1, red.end());
  }
  VertexSet spine_set(spine.begin(), spine.end());
  if (spine_set.size() != spine.size()) {
    problems.push_back("spine repeats a vertex");
  }
  VertexSet tooth_vertices;
  for (std::size_t k = 0; k < c.teeth.size(); ++k) {
    const auto& tooth = c.teeth[k];
    for (std::size_t j = 0; j < tooth.size(); ++j) {
      Vertex v = tooth.vertices[j];
      if (j > 0 && spine_set.count(v)) {
        problems.push_back("tooth at " + d.name(tooth.front()) +
                           " re-enters the spine");
      }
      if (!tooth_vertices.insert(v).second) {
        problems.push_back("teeth share vertex " + d.name(v));
      }
    }
    if (!d.is_exit(tooth.back())) {
      problems.push_back("tooth at " + d.name(tooth.front()) +
                         " does not end at an exit");
    }
  }
  return problems;
}

/// Builds the comb prefix x_k, q_k, p_k from the merge of a red linkage
/// from I + x0 with a blue linkage from I.
inline CombTrace comb_trace(const Dimaze& d, const VertexSet& i_set,
                            Vertex x0, int max_depth) {
  require_valid(d);
  if (i_set.count(x0)) throw ContractViolation("x0 must not be in I");
  auto blue = is_independent(d, i_set);
  if (!blue.independent) throw ContractViolation("I is not independent");
  auto red = is_independent(d, with(i_set, x0));
  if (!red.independent) {
    throw ContractViolation("I + x0 is not independent");
  }
  CombTrace tr;
  tr.red = red.witness;
  tr.blue = blue.witness;
  auto merged = merge(d, tr.red, tr.blue, {.record_history = true});
  tr.merge = std::move(merged.state);
  const MergeState& st = tr.merge;
  const Linkage& q_inf = merged.linkage;
  if (!st.a.empty()) {
    throw InternalError("blue initials lie among red initials, yet A is "
                        "nonempty");
  }
  if (is_subset(tr.red.ter(), tr.blue.ter()) && !st.c.empty()) {
    throw InternalError("red terminals lie among blue ones, yet C is "
                        "nonempty");
  }

  auto settle_index = [&](Vertex x) {
    const Vertex target = st.f.at(x);
    for (const auto& s : st.history) {
      if (s.f.at(x) == target) return s.index;
    }
    return st.step;
  };
  // Red part P_x f_x of each path of Q^inf that starts on a red path.
  auto red_owner = [&](Vertex v) -> std::optional<Vertex> {
    for (const auto& p : tr.red.paths()) {
      auto pos = p.index_of(v);
      if (pos && *pos <= *p.index_of(st.f.at(p.front()))) return p.front();
    }
    return std::nullopt;
  };
  auto tooth_from = [&](Vertex pk, Vertex xk) {
    if (const DirectedPath* qb = tr.blue.through(pk)) return qb->from(pk);
    return tr.red.starting_at(xk)->from(pk);
  };

  CombPrefix& c = tr.prefix;
  c.x.push_back(x0);
  c.p.push_back(st.f.at(x0));
  c.step_index.push_back(settle_index(x0));
  c.teeth.push_back(tooth_from(c.p[0], x0));
  VertexSet used{x0};
  const VertexSet on_q_inf = q_inf.vertices();
  for (int k = 1;; ++k) {
    tr.stopped_at = k;
    if (k > max_depth) {
      tr.stop = CombTrace::Stop::kMaxDepth;
      break;
    }
    const Vertex prev = c.p.back();
    const DirectedPath* qk = tr.blue.through(prev);
    if (!qk) {
      tr.stop = CombTrace::Stop::kBoundary;
      break;
    }
    const auto before = qk->before(prev);
    if (before.empty()) {
      tr.stop = CombTrace::Stop::kEmptySegment;
      break;
    }
    std::optional<Vertex> qv;
    for (Vertex v : before) {
      if (on_q_inf.count(v)) qv = v;
    }
    std::optional<Vertex> xk = qv ? red_owner(*qv) : std::nullopt;
    if (!xk) {
      tr.stop = CombTrace::Stop::kNoRedVertex;
      break;
    }
    if (used.count(*xk)) {
      tr.stop = CombTrace::Stop::kRepeated;
      break;
    }
    const Vertex pk = st.f.at(*xk);
    if (pk == *qv) {
      tr.stop = CombTrace::Stop::kTrivialRed;
      break;
    }
    const DirectedPath& red_path = *tr.red.starting_at(*xk);
    c.blue_segments.push_back(qk->from(*qv).up_to(prev));
    c.red_segments.push_back(red_path.from(*qv).up_to(pk));
    c.q.push_back(*qv);
    c.x.push_back(*xk);
    c.p.push_back(pk);
    c.step_index.push_back(settle_index(*xk));
    c.teeth.push_back(tooth_from(pk, *xk));
    used.insert(*xk);
    c.depth = k;
  }
  return tr;
}

/// An onto-linkable set B1 together with v such that B1 + v is independent.
struct DaggerWitness {
  VertexSet onto_set;
  Vertex v = 0;
  Linkage onto;  // from B1 onto the exits
  Linkage plus;  // from B1 + v
};

/// Onto-linkable sets that are not maximally independent (empty on every
/// finite dimaze).
inline std::vector<DaggerWitness> check_dagger(const Dimaze& d) {
  require_valid(d);
  require_enumerable(d.size(), size_guard());
  const std::size_t n = d.size();
  const std::size_t exits = d.exits().size();
  std::vector<DaggerWitness> out;
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    if (static_cast<std::size_t>(popcount(m)) != exits) continue;
    const VertexSet b1 = mask_to_set(m);
    auto onto = is_independent(d, b1);
    if (!onto.independent || onto.witness.ter() != d.exits()) continue;
    for (Vertex v = 0; v < n; ++v) {
      if (b1.count(v)) continue;
      auto plus = is_independent(d, with(b1, v));
      if (plus.independent) {
        out.push_back({b1, v, onto.witness, plus.witness});
      }
    }
  }
  return out;
}

}  // namespace gammoid

#endif  // GAMMOID_PYM_MERGE_HPP_
