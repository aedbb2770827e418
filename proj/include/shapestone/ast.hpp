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

#ifndef SHAPESTONE_AST_HPP_
#define SHAPESTONE_AST_HPP_

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "shapestone/graph.hpp"

namespace shapestone {

enum class PathKind : std::uint8_t { Id, Prop, Inv, Union, Comp, Star };

/// Immutable, shareable path expression tree.
class PathExpr {
 public:
  struct Node;

  PathKind kind() const;
  /// Property of a Prop or Inv node.
  const Name& property() const;
  /// Left operand of Union/Comp, operand of Star.
  const PathExpr& lhs() const;
  const PathExpr& rhs() const;
  const PathExpr& operand() const { return lhs(); }

  /// Number of AST nodes.
  std::size_t size() const;
  std::size_t hash() const;
  bool contains_id() const;

  friend bool operator==(const PathExpr& a, const PathExpr& b);

 private:
  friend PathExpr make_path(Node node);
  explicit PathExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

namespace path {
PathExpr id();
PathExpr prop(const Name& p);
PathExpr inv(const Name& p);
PathExpr alt(const PathExpr& a, const PathExpr& b);
PathExpr seq(const PathExpr& a, const PathExpr& b);
PathExpr star(const PathExpr& a);
/// `E?`, i.e. E | id.
PathExpr optional(const PathExpr& a);
}  // namespace path

enum class ShapeKind : std::uint8_t { Top, Const, And, Or, Not, Ge, Eq, Disj, Closed, Ref };

/// Immutable, shareable shape tree.  And/Or are n-ary with at least one
/// operand.  Eq/Disj with an arbitrary second path are the "full" tests;
/// the core language restricts the second path to a property name.
class ShapeExpr {
 public:
  struct Node;

  ShapeKind kind() const;
  /// Constant of Const, shape name of Ref.
  const Name& name() const;
  /// Operands of And/Or; a single operand for Not and Ge.
  const std::vector<ShapeExpr>& operands() const;
  const ShapeExpr& operand() const { return operands().front(); }
  /// Counting bound of Ge.
  std::uint32_t count() const;
  /// Path of Ge; first path of Eq/Disj.
  const PathExpr& path() const;
  /// Second path of Eq/Disj.
  const PathExpr& second_path() const;
  /// Allowed properties of Closed.
  const std::set<Name>& allowed() const;

  std::size_t size() const;
  std::size_t hash() const;

  friend bool operator==(const ShapeExpr& a, const ShapeExpr& b);

 private:
  friend ShapeExpr make_shape(Node node);
  explicit ShapeExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

namespace shape {
ShapeExpr top();
ShapeExpr constant(const Name& c);
ShapeExpr conjunction(std::vector<ShapeExpr> operands);
ShapeExpr disjunction(std::vector<ShapeExpr> operands);
ShapeExpr negation(const ShapeExpr& operand);
ShapeExpr at_least(std::uint32_t n, const PathExpr& e, const ShapeExpr& operand);
ShapeExpr exists(const PathExpr& e, const ShapeExpr& operand);
/// not(ge(n+1, E, φ))
ShapeExpr at_most(std::uint32_t n, const PathExpr& e, const ShapeExpr& operand);
/// not(exists(E, not φ))
ShapeExpr forall(const PathExpr& e, const ShapeExpr& operand);
ShapeExpr equal(const PathExpr& e1, const PathExpr& e2);
ShapeExpr disjoint(const PathExpr& e1, const PathExpr& e2);
ShapeExpr closed(std::set<Name> allowed);
ShapeExpr ref(const Name& s);
}  // namespace shape

/// Largest accepted counting bound.
inline constexpr std::uint32_t kMaxCount = 2147483647U;

bool contains_closed(const ShapeExpr& s);
bool contains_ref(const ShapeExpr& s);
/// Replaces every p by ^p and every ^p by p, keeping operator structure.
PathExpr invert_atoms(const PathExpr& e);
ShapeExpr invert_atoms(const ShapeExpr& s);

std::string to_string(const PathExpr& e);
std::string to_string(const ShapeExpr& s);
std::ostream& operator<<(std::ostream& os, const PathExpr& e);
std::ostream& operator<<(std::ostream& os, const ShapeExpr& s);

struct PathHash {
  std::size_t operator()(const PathExpr& e) const { return e.hash(); }
};
struct ShapeHash {
  std::size_t operator()(const ShapeExpr& s) const { return s.hash(); }
};

struct Inclusion {
  ShapeExpr lhs;
  ShapeExpr rhs;
  friend bool operator==(const Inclusion&, const Inclusion&) = default;
};

struct Rule {
  Name head;
  ShapeExpr body;
  friend bool operator==(const Rule&, const Rule&) = default;
};

/// A program (possibly empty) together with a list of inclusions.
struct SchemaDoc {
  std::vector<Rule> rules;
  std::vector<Inclusion> inclusions;
  friend bool operator==(const SchemaDoc&, const SchemaDoc&) = default;
};

std::string to_string(const Inclusion& inc);
std::string to_string(const Rule& rule);
/// Schema file text; parse_schema reads it back to an equal document.
std::string to_string(const SchemaDoc& doc);

}  // namespace shapestone

#endif  // SHAPESTONE_AST_HPP_
