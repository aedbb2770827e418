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

#ifndef SHAPESTONE_GRAPH_HPP_
#define SHAPESTONE_GRAPH_HPP_

#include <compare>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace shapestone {

/// Node, property and shape names share one token syntax; which universe a
/// name belongs to is decided by where it appears.
using Name = std::string;

/// Characters that terminate a name token.  `?` is included because it is
/// the zero-or-one postfix operator in path syntax.
inline constexpr std::string_view kReservedChars = "#(),/|*^<=;@?";

bool is_valid_name(std::string_view text);

struct Triple {
  Name subject;
  Name property;
  Name object;

  friend auto operator<=>(const Triple&, const Triple&) = default;
};

class GraphFormatError : public std::runtime_error {
 public:
  GraphFormatError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A finite set of triples.  Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::set<Triple> triples);
  Graph(std::initializer_list<Triple> triples);

  const std::set<Triple>& triples() const { return triples_; }
  bool empty() const { return triples_.empty(); }
  std::size_t size() const { return triples_.size(); }

  /// Names in subject or object position.
  const std::set<Name>& nodes() const { return nodes_; }
  const std::set<Name>& properties() const { return properties_; }

  /// Property names on edges leaving `node`.
  std::set<Name> outgoing_properties(const Name& node) const;

  Graph with(const Triple& t) const;
  Graph without(const Triple& t) const;
  /// Same graph with every edge direction flipped.
  Graph reversed() const;
  /// Keeps only triples whose property is in `props`.
  Graph restricted_to(const std::set<Name>& props) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.triples_ == b.triples_; }

 private:
  std::set<Triple> triples_;
  std::set<Name> nodes_;
  std::set<Name> properties_;
};

/// Reads the line-oriented triple format: `subject property object`, `#`
/// starts a comment, blank lines are skipped, duplicates collapse.
Graph parse_graph(std::string_view text);
Graph load_graph(const std::string& path);

/// One triple per line in sorted order.
std::string format_graph(const Graph& g);

}  // namespace shapestone

#endif  // SHAPESTONE_GRAPH_HPP_
