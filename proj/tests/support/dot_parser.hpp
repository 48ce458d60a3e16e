// Copyright 2026 The msr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Minimal DOT reader covering the digraph subset the exporter emits:
// quoted and bare identifiers, graph attributes, node statements with
// attribute lists, and single edges.  Used only as a test oracle; any
// grammar violation throws.

#ifndef MSR_TESTS_SUPPORT_DOT_PARSER_HPP
#define MSR_TESTS_SUPPORT_DOT_PARSER_HPP

#include <cctype>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace test_support {

struct DotNode {
  std::string id;
  std::map<std::string, std::string> attrs;
};

struct DotEdge {
  std::string from;
  std::string to;
  std::map<std::string, std::string> attrs;
};

struct DotGraph {
  std::string name;
  std::vector<DotNode> nodes;
  std::vector<DotEdge> edges;
};

namespace dot_detail {

struct Lexer {
  const std::string& text;
  std::size_t pos = 0;

  explicit Lexer(const std::string& t) : text(t) {}

  void skip_space() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }

  bool done() {
    skip_space();
    return pos >= text.size();
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::runtime_error("dot parse error at byte " +
                             std::to_string(pos) + ": " + what);
  }

  // One token: a quoted string (unescaped), a bare word, or a symbol
  // among { } [ ] = , ; ->
  std::string next() {
    skip_space();
    if (pos >= text.size()) fail("unexpected end of input");
    const char c = text[pos];
    if (c == '"') {
      ++pos;
      std::string out;
      while (pos < text.size() && text[pos] != '"') {
        if (text[pos] == '\\' && pos + 1 < text.size()) {
          ++pos;
          out += text[pos] == 'n' ? '\n' : text[pos];
        } else {
          out += text[pos];
        }
        ++pos;
      }
      if (pos >= text.size()) fail("unterminated string");
      ++pos;
      return "\"" + out;  // marker so callers can tell quoted from bare
    }
    if (c == '-' && pos + 1 < text.size() && text[pos + 1] == '>') {
      pos += 2;
      return "->";
    }
    if (std::string("{}[]=,;").find(c) != std::string::npos) {
      ++pos;
      return std::string(1, c);
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
        c == '.' || c == '#') {
      std::string out;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) ||
              std::string("_.#").find(text[pos]) != std::string::npos)) {
        out += text[pos];
        ++pos;
      }
      return out;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string peek() {
    const std::size_t saved = pos;
    std::string t = next();
    pos = saved;
    return t;
  }

  void expect(const std::string& token) {
    const std::string got = next();
    if (got != token) {
      fail("expected \"" + token + "\", got \"" + got + "\"");
    }
  }
};

inline std::string unquote(const std::string& token) {
  return token.empty() || token[0] != '"' ? token : token.substr(1);
}

inline std::map<std::string, std::string> parse_attr_list(Lexer& lex) {
  std::map<std::string, std::string> attrs;
  lex.expect("[");
  if (lex.peek() == "]") {
    lex.next();
    return attrs;
  }
  while (true) {
    const std::string key = unquote(lex.next());
    lex.expect("=");
    attrs[key] = unquote(lex.next());
    const std::string sep = lex.next();
    if (sep == "]") break;
    if (sep != ",") lex.fail("expected ',' or ']' in attribute list");
  }
  return attrs;
}

}  // namespace dot_detail

inline DotGraph parse_dot(const std::string& text) {
  dot_detail::Lexer lex(text);
  DotGraph graph;
  lex.expect("digraph");
  graph.name = dot_detail::unquote(lex.next());
  lex.expect("{");
  while (true) {
    std::string token = lex.next();
    if (token == "}") break;
    const std::string first = dot_detail::unquote(token);
    std::string after = lex.peek();
    if (after == "=") {
      lex.next();
      lex.next();  // graph attribute value, ignored
      if (lex.peek() == ";") lex.next();
      continue;
    }
    if (after == "->") {
      lex.next();
      DotEdge edge;
      edge.from = first;
      edge.to = dot_detail::unquote(lex.next());
      if (lex.peek() == "[") edge.attrs = dot_detail::parse_attr_list(lex);
      if (lex.peek() == ";") lex.next();
      graph.edges.push_back(std::move(edge));
      continue;
    }
    DotNode node;
    node.id = first;
    if (after == "[") node.attrs = dot_detail::parse_attr_list(lex);
    if (lex.peek() == ";") lex.next();
    graph.nodes.push_back(std::move(node));
  }
  if (!lex.done()) lex.fail("trailing content after closing brace");
  return graph;
}

// The exporter's inverse: junction points turn back into refinement edge
// groups, labeled edges back into their kinds.
struct RecoveredModel {
  std::multiset<std::string> node_ids;
  // kind, source, target, group, mode; group and mode empty for
  // non-refinement kinds.
  std::multiset<std::tuple<std::string, std::string, std::string,
                           std::string, std::string>>
      edges;
};

inline RecoveredModel recover_model(const DotGraph& dot) {
  RecoveredModel out;
  std::map<std::string, std::string> junction_mode;
  for (const DotNode& node : dot.nodes) {
    if (node.id.rfind("grp:", 0) == 0) {
      const auto label = node.attrs.find("label");
      if (label == node.attrs.end() ||
          (label->second != "AND" && label->second != "OR")) {
        throw std::runtime_error("junction " + node.id +
                                 " lacks an AND/OR label");
      }
      junction_mode[node.id] =
          label->second == "AND" ? "and" : "or";
    } else {
      out.node_ids.insert(node.id);
    }
  }

  std::map<std::string, std::string> junction_parent;
  for (const DotEdge& edge : dot.edges) {
    if (junction_mode.count(edge.from) != 0) {
      if (junction_parent.count(edge.from) != 0) {
        throw std::runtime_error("junction " + edge.from +
                                 " has two parents");
      }
      junction_parent[edge.from] = edge.to;
    }
  }
  for (const DotEdge& edge : dot.edges) {
    if (junction_mode.count(edge.to) != 0) {
      const auto parent = junction_parent.find(edge.to);
      if (parent == junction_parent.end()) {
        throw std::runtime_error("junction " + edge.to + " has no parent");
      }
      out.edges.insert({"refinement", edge.from, parent->second,
                        edge.to.substr(4), junction_mode[edge.to]});
      continue;
    }
    if (junction_mode.count(edge.from) != 0) continue;
    static const std::map<std::string, std::string> kKinds = {
        {"obstructs", "obstruction"},   {"resolves", "resolution"},
        {"performs", "responsibility"}, {"concerns", "concern"},
        {"references", "reference"},    {"depends on", "dependency"},
        {"affects", "affects"},
    };
    const auto label = edge.attrs.find("label");
    if (label == edge.attrs.end() || kKinds.count(label->second) == 0) {
      throw std::runtime_error("edge " + edge.from + " -> " + edge.to +
                               " carries no known kind label");
    }
    out.edges.insert(
        {kKinds.at(label->second), edge.from, edge.to, "", ""});
  }
  return out;
}

}  // namespace test_support

#endif  // MSR_TESTS_SUPPORT_DOT_PARSER_HPP
