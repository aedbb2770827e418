/*
 * Copyright 2026 The Shapestone Authors. All rights reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "shapestone/graph.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace shapestone {

bool is_valid_name(std::string_view text) {
  if (text.empty()) return false;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) return false;
    if (kReservedChars.find(ch) != std::string_view::npos) return false;
  }
  return true;
}

GraphFormatError::GraphFormatError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

Graph::Graph(std::set<Triple> triples) : triples_(std::move(triples)) {
  for (const auto& t : triples_) {
    nodes_.insert(t.subject);
    nodes_.insert(t.object);
    properties_.insert(t.property);
  }
}

Graph::Graph(std::initializer_list<Triple> triples) : Graph(std::set<Triple>(triples)) {}

std::set<Name> Graph::outgoing_properties(const Name& node) const {
  std::set<Name> out;
  auto it = triples_.lower_bound(Triple{node, "", ""});
  for (; it != triples_.end() && it->subject == node; ++it) out.insert(it->property);
  return out;
}

Graph Graph::with(const Triple& t) const {
  auto ts = triples_;
  ts.insert(t);
  return Graph(std::move(ts));
}

Graph Graph::without(const Triple& t) const {
  auto ts = triples_;
  ts.erase(t);
  return Graph(std::move(ts));
}

Graph Graph::reversed() const {
  std::set<Triple> ts;
  for (const auto& t : triples_) ts.insert(Triple{t.object, t.property, t.subject});
  return Graph(std::move(ts));
}

Graph Graph::restricted_to(const std::set<Name>& props) const {
  std::set<Triple> ts;
  for (const auto& t : triples_) {
    if (props.contains(t.property)) ts.insert(t);
  }
  return Graph(std::move(ts));
}

Graph parse_graph(std::string_view text) {
  std::set<Triple> triples;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.size() != 3) {
      throw GraphFormatError(lineno, "expected 3 tokens, found " + std::to_string(tokens.size()));
    }
    for (const auto& tok : tokens) {
      if (!is_valid_name(tok)) throw GraphFormatError(lineno, "invalid name '" + tok + "'");
    }
    triples.insert(Triple{tokens[0], tokens[1], tokens[2]});
  }
  return Graph(std::move(triples));
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string format_graph(const Graph& g) {
  std::string out;
  for (const auto& t : g.triples()) {
    out += t.subject;
    out += ' ';
    out += t.property;
    out += ' ';
    out += t.object;
    out += '\n';
  }
  return out;
}

}  // namespace shapestone
