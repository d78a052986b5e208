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

// Text, JSON and DOT forms of dimazes, vertex sets and linkages.
//
//   dimaze v1
//   vertex <id>
//   exit <id>
//   edge <tail> <head>
//
// `#` starts a comment. Identifiers are non-whitespace tokens.

#ifndef GAMMOID_IO_HPP_
#define GAMMOID_IO_HPP_

#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gammoid/dimaze.hpp"
#include "json.hpp"

namespace gammoid {

namespace detail {

/// Splits `text` into whitespace-separated tokens per line, dropping
/// comments and blank lines. Each entry is (1-based line number, tokens).
inline std::vector<std::pair<std::size_t, std::vector<std::string>>>
TokenizeLines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream words(line);
    std::vector<std::string> tokens;
    for (std::string w; words >> w;) tokens.push_back(std::move(w));
    if (!tokens.empty()) out.emplace_back(number, std::move(tokens));
  }
  return out;
}

inline void ExpectHeader(
    const std::vector<std::pair<std::size_t, std::vector<std::string>>>& lines,
    std::string_view kind) {
  if (lines.empty()) throw ParseError(1, "missing header '" + std::string(kind) + " v1'");
  const auto& [number, tokens] = lines.front();
  if (tokens.size() != 2 || tokens[0] != kind || tokens[1] != "v1") {
    throw ParseError(number, "expected header '" + std::string(kind) + " v1'");
  }
}

inline std::string Join(const std::vector<std::string>& parts,
                        std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

inline std::vector<std::string> Split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace detail

inline Dimaze parse_dimaze(std::string_view text) {
  auto lines = detail::TokenizeLines(text);
  detail::ExpectHeader(lines, "dimaze");
  std::vector<std::string> vertices;
  std::vector<std::pair<std::size_t, std::pair<std::string, std::string>>> edges;
  std::vector<std::pair<std::size_t, std::string>> exits;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [number, t] = lines[i];
    if (t[0] == "vertex" && t.size() == 2) {
      vertices.push_back(t[1]);
    } else if (t[0] == "exit" && t.size() == 2) {
      exits.emplace_back(number, t[1]);
    } else if (t[0] == "edge" && t.size() == 3) {
      edges.push_back({number, {t[1], t[2]}});
    } else {
      throw ParseError(number, "malformed line '" + detail::Join(t, " ") + "'");
    }
  }
  std::vector<std::string> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  auto declared = [&](std::size_t number, const std::string& id) {
    if (!std::binary_search(sorted.begin(), sorted.end(), id)) {
      throw ReferenceError("line " + std::to_string(number) +
                           ": unknown vertex " + id);
    }
  };
  std::vector<std::pair<std::string, std::string>> edge_ids;
  for (const auto& [number, e] : edges) {
    declared(number, e.first);
    declared(number, e.second);
    edge_ids.push_back(e);
  }
  std::vector<std::string> exit_ids;
  for (const auto& [number, e] : exits) {
    declared(number, e);
    exit_ids.push_back(e);
  }
  return Dimaze(std::move(vertices), edge_ids, exit_ids);
}

/// Canonical text: vertices, then exits, then edges, each sorted.
inline std::string serialize(const Dimaze& d) {
  std::string out = "dimaze v1\n";
  for (const auto& n : d.names()) out += "vertex " + n + "\n";
  for (Vertex e : d.exits()) out += "exit " + d.name(e) + "\n";
  for (auto [t, h] : d.edges()) {
    out += "edge " + d.name(t) + " " + d.name(h) + "\n";
  }
  return out;
}

inline nlohmann::json to_json(const Dimaze& d) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [t, h] : d.edges()) edges.push_back({d.name(t), d.name(h)});
  return {{"vertices", d.names()},
          {"edges", edges},
          {"exits", d.names(d.exits())}};
}

inline Dimaze dimaze_from_json(const nlohmann::json& j) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : j.at("edges")) {
    edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
  }
  return Dimaze(j.at("vertices").get<std::vector<std::string>>(), edges,
                j.at("exits").get<std::vector<std::string>>());
}

inline std::string dot_quote(const std::string& id) {
  std::string out = "\"";
  for (char c : id) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

/// Graphviz rendering; exits are drawn as double circles.
inline std::string to_dot(const Dimaze& d) {
  std::string out = "digraph dimaze {\n";
  for (Vertex v = 0; v < d.size(); ++v) {
    out += "  " + dot_quote(d.name(v));
    if (d.is_exit(v)) out += " [shape=doublecircle]";
    out += ";\n";
  }
  for (auto [t, h] : d.edges()) {
    out += "  " + dot_quote(d.name(t)) + " -> " + dot_quote(d.name(h)) + ";\n";
  }
  return out + "}\n";
}

/// Comma-separated identifiers; `-` is the empty set.
inline VertexSet parse_vertex_set(const Dimaze& d, std::string_view text) {
  VertexSet out;
  if (text == "-" || text.empty()) return out;
  for (const auto& id : detail::Split(text, ',')) {
    if (id.empty()) throw ParameterError("empty identifier in vertex set");
    out.insert(d.at(id));
  }
  return out;
}

inline std::string format_vertex_set(const Dimaze& d, const VertexSet& s) {
  if (s.empty()) return "-";
  return detail::Join(d.names(s), ",");
}

inline std::string format_path(const Dimaze& d, const DirectedPath& p) {
  std::vector<std::string> names;
  for (Vertex v : p.vertices) names.push_back(d.name(v));
  return detail::Join(names, ">");
}

/// Paths joined by `;`, vertices within a path by `>`; `-` is empty.
inline std::string format_linkage(const Dimaze& d, const Linkage& link) {
  if (link.empty()) return "-";
  std::vector<std::string> parts;
  for (const auto& p : link.paths()) parts.push_back(format_path(d, p));
  return detail::Join(parts, ";");
}

inline Linkage parse_linkage(const Dimaze& d, std::string_view text) {
  if (text == "-" || text.empty()) return {};
  std::vector<DirectedPath> paths;
  for (const auto& part : detail::Split(text, ';')) {
    std::vector<Vertex> vs;
    for (const auto& id : detail::Split(part, '>')) vs.push_back(d.at(id));
    paths.emplace_back(std::move(vs));
  }
  return Linkage(std::move(paths));
}

inline nlohmann::json linkage_json(const Dimaze& d, const Linkage& link) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : link.paths()) {
    nlohmann::json path = nlohmann::json::array();
    for (Vertex v : p.vertices) path.push_back(d.name(v));
    out.push_back(std::move(path));
  }
  return out;
}

}  // namespace gammoid

#endif  // GAMMOID_IO_HPP_
