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

#include "shapestone/ast.hpp"

#include <functional>
#include <ostream>
#include <stdexcept>

namespace shapestone {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

struct PathExpr::Node {
  PathKind kind;
  Name prop;
  std::vector<PathExpr> kids;
  std::size_t hash = 0;
  std::size_t size = 1;
  bool has_id = false;
};

PathExpr make_path(PathExpr::Node node) {
  std::size_t h = mix(0x51ed27, static_cast<std::size_t>(node.kind));
  h = mix(h, std::hash<std::string>{}(node.prop));
  node.size = 1;
  node.has_id = node.kind == PathKind::Id;
  for (const auto& k : node.kids) {
    h = mix(h, k.hash());
    node.size += k.size();
    node.has_id = node.has_id || k.contains_id();
  }
  node.hash = h;
  return PathExpr(std::make_shared<const PathExpr::Node>(std::move(node)));
}

PathKind PathExpr::kind() const { return node_->kind; }
const Name& PathExpr::property() const { return node_->prop; }
const PathExpr& PathExpr::lhs() const { return node_->kids.at(0); }
const PathExpr& PathExpr::rhs() const { return node_->kids.at(1); }
std::size_t PathExpr::size() const { return node_->size; }
std::size_t PathExpr::hash() const { return node_->hash; }
bool PathExpr::contains_id() const { return node_->has_id; }

bool operator==(const PathExpr& a, const PathExpr& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.hash == y.hash && x.kind == y.kind && x.prop == y.prop && x.kids == y.kids;
}

namespace path {

PathExpr id() {
  static const PathExpr instance = make_path(PathExpr::Node{PathKind::Id, {}, {}});
  return instance;
}
PathExpr prop(const Name& p) { return make_path(PathExpr::Node{PathKind::Prop, p, {}}); }
PathExpr inv(const Name& p) { return make_path(PathExpr::Node{PathKind::Inv, p, {}}); }
PathExpr alt(const PathExpr& a, const PathExpr& b) {
  return make_path(PathExpr::Node{PathKind::Union, {}, {a, b}});
}
PathExpr seq(const PathExpr& a, const PathExpr& b) {
  return make_path(PathExpr::Node{PathKind::Comp, {}, {a, b}});
}
PathExpr star(const PathExpr& a) { return make_path(PathExpr::Node{PathKind::Star, {}, {a}}); }
PathExpr optional(const PathExpr& a) { return alt(a, id()); }

}  // namespace path

struct ShapeExpr::Node {
  ShapeKind kind;
  Name name{};
  std::uint32_t count = 0;
  std::vector<PathExpr> paths{};
  std::vector<ShapeExpr> kids{};
  std::set<Name> allowed{};
  std::size_t hash = 0;
  std::size_t size = 1;
};

ShapeExpr make_shape(ShapeExpr::Node node) {
  std::size_t h = mix(0x5ea9e, static_cast<std::size_t>(node.kind));
  h = mix(h, std::hash<std::string>{}(node.name));
  h = mix(h, node.count);
  node.size = 1;
  for (const auto& p : node.paths) {
    h = mix(h, p.hash());
    node.size += p.size();
  }
  for (const auto& k : node.kids) {
    h = mix(h, k.hash());
    node.size += k.size();
  }
  for (const auto& a : node.allowed) h = mix(h, std::hash<std::string>{}(a));
  node.size += node.allowed.size();
  node.hash = h;
  return ShapeExpr(std::make_shared<const ShapeExpr::Node>(std::move(node)));
}

ShapeKind ShapeExpr::kind() const { return node_->kind; }
const Name& ShapeExpr::name() const { return node_->name; }
const std::vector<ShapeExpr>& ShapeExpr::operands() const { return node_->kids; }
std::uint32_t ShapeExpr::count() const { return node_->count; }
const PathExpr& ShapeExpr::path() const { return node_->paths.at(0); }
const PathExpr& ShapeExpr::second_path() const { return node_->paths.at(1); }
const std::set<Name>& ShapeExpr::allowed() const { return node_->allowed; }
std::size_t ShapeExpr::size() const { return node_->size; }
std::size_t ShapeExpr::hash() const { return node_->hash; }

bool operator==(const ShapeExpr& a, const ShapeExpr& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.hash == y.hash && x.kind == y.kind && x.name == y.name && x.count == y.count &&
         x.paths == y.paths && x.kids == y.kids && x.allowed == y.allowed;
}

namespace shape {

ShapeExpr top() {
  static const ShapeExpr instance = make_shape(ShapeExpr::Node{ShapeKind::Top});
  return instance;
}

ShapeExpr constant(const Name& c) {
  ShapeExpr::Node n{ShapeKind::Const};
  n.name = c;
  return make_shape(std::move(n));
}

ShapeExpr conjunction(std::vector<ShapeExpr> operands) {
  if (operands.empty()) throw std::invalid_argument("and() needs at least one operand");
  ShapeExpr::Node n{ShapeKind::And};
  n.kids = std::move(operands);
  return make_shape(std::move(n));
}

ShapeExpr disjunction(std::vector<ShapeExpr> operands) {
  if (operands.empty()) throw std::invalid_argument("or() needs at least one operand");
  ShapeExpr::Node n{ShapeKind::Or};
  n.kids = std::move(operands);
  return make_shape(std::move(n));
}

ShapeExpr negation(const ShapeExpr& operand) {
  ShapeExpr::Node n{ShapeKind::Not};
  n.kids = {operand};
  return make_shape(std::move(n));
}

ShapeExpr at_least(std::uint32_t count, const PathExpr& e, const ShapeExpr& operand) {
  if (count == 0 || count > kMaxCount) {
    throw std::invalid_argument("counting bound must be in 1.." + std::to_string(kMaxCount));
  }
  ShapeExpr::Node n{ShapeKind::Ge};
  n.count = count;
  n.paths = {e};
  n.kids = {operand};
  return make_shape(std::move(n));
}

ShapeExpr exists(const PathExpr& e, const ShapeExpr& operand) { return at_least(1, e, operand); }

ShapeExpr at_most(std::uint32_t count, const PathExpr& e, const ShapeExpr& operand) {
  if (count >= kMaxCount) throw std::invalid_argument("counting bound too large");
  return negation(at_least(count + 1, e, operand));
}

ShapeExpr forall(const PathExpr& e, const ShapeExpr& operand) {
  return negation(exists(e, negation(operand)));
}

ShapeExpr equal(const PathExpr& e1, const PathExpr& e2) {
  ShapeExpr::Node n{ShapeKind::Eq};
  n.paths = {e1, e2};
  return make_shape(std::move(n));
}

ShapeExpr disjoint(const PathExpr& e1, const PathExpr& e2) {
  ShapeExpr::Node n{ShapeKind::Disj};
  n.paths = {e1, e2};
  return make_shape(std::move(n));
}

ShapeExpr closed(std::set<Name> allowed) {
  ShapeExpr::Node n{ShapeKind::Closed};
  n.allowed = std::move(allowed);
  return make_shape(std::move(n));
}

ShapeExpr ref(const Name& s) {
  ShapeExpr::Node n{ShapeKind::Ref};
  n.name = s;
  return make_shape(std::move(n));
}

}  // namespace shape

bool contains_closed(const ShapeExpr& s) {
  if (s.kind() == ShapeKind::Closed) return true;
  for (const auto& k : s.operands()) {
    if (contains_closed(k)) return true;
  }
  return false;
}

bool contains_ref(const ShapeExpr& s) {
  if (s.kind() == ShapeKind::Ref) return true;
  for (const auto& k : s.operands()) {
    if (contains_ref(k)) return true;
  }
  return false;
}

PathExpr invert_atoms(const PathExpr& e) {
  switch (e.kind()) {
    case PathKind::Id:
      return e;
    case PathKind::Prop:
      return path::inv(e.property());
    case PathKind::Inv:
      return path::prop(e.property());
    case PathKind::Union:
      return path::alt(invert_atoms(e.lhs()), invert_atoms(e.rhs()));
    case PathKind::Comp:
      return path::seq(invert_atoms(e.lhs()), invert_atoms(e.rhs()));
    case PathKind::Star:
      return path::star(invert_atoms(e.operand()));
  }
  return e;
}

ShapeExpr invert_atoms(const ShapeExpr& s) {
  auto map_kids = [&] {
    std::vector<ShapeExpr> out;
    for (const auto& k : s.operands()) out.push_back(invert_atoms(k));
    return out;
  };
  switch (s.kind()) {
    case ShapeKind::Top:
    case ShapeKind::Const:
    case ShapeKind::Closed:
    case ShapeKind::Ref:
      return s;
    case ShapeKind::And:
      return shape::conjunction(map_kids());
    case ShapeKind::Or:
      return shape::disjunction(map_kids());
    case ShapeKind::Not:
      return shape::negation(invert_atoms(s.operand()));
    case ShapeKind::Ge:
      return shape::at_least(s.count(), invert_atoms(s.path()), invert_atoms(s.operand()));
    case ShapeKind::Eq:
      return shape::equal(invert_atoms(s.path()), invert_atoms(s.second_path()));
    case ShapeKind::Disj:
      return shape::disjoint(invert_atoms(s.path()), invert_atoms(s.second_path()));
  }
  return s;
}

namespace {

int precedence(const PathExpr& e) {
  switch (e.kind()) {
    case PathKind::Union:
      return 0;
    case PathKind::Comp:
      return 1;
    default:
      return 2;
  }
}

void print_path(std::string& out, const PathExpr& e, int context) {
  const bool parens = precedence(e) < context;
  if (parens) out += '(';
  switch (e.kind()) {
    case PathKind::Id:
      out += "id";
      break;
    case PathKind::Prop:
      out += e.property();
      break;
    case PathKind::Inv:
      out += '^';
      out += e.property();
      break;
    case PathKind::Union:
      print_path(out, e.lhs(), 0);
      out += '|';
      print_path(out, e.rhs(), 1);
      break;
    case PathKind::Comp:
      print_path(out, e.lhs(), 1);
      out += '/';
      print_path(out, e.rhs(), 2);
      break;
    case PathKind::Star:
      print_path(out, e.operand(), 2);
      out += '*';
      break;
  }
  if (parens) out += ')';
}

void print_shape(std::string& out, const ShapeExpr& s) {
  auto list = [&](const char* head) {
    out += head;
    out += '(';
    bool first = true;
    for (const auto& k : s.operands()) {
      if (!first) out += ',';
      first = false;
      print_shape(out, k);
    }
    out += ')';
  };
  switch (s.kind()) {
    case ShapeKind::Top:
      out += "top";
      break;
    case ShapeKind::Const:
      out += "const(" + s.name() + ")";
      break;
    case ShapeKind::And:
      list("and");
      break;
    case ShapeKind::Or:
      list("or");
      break;
    case ShapeKind::Not:
      out += "not(";
      print_shape(out, s.operand());
      out += ')';
      break;
    case ShapeKind::Ge:
      if (s.count() == 1) {
        out += "exists(";
      } else {
        out += "ge(" + std::to_string(s.count()) + ',';
      }
      print_path(out, s.path(), 0);
      out += ',';
      print_shape(out, s.operand());
      out += ')';
      break;
    case ShapeKind::Eq:
    case ShapeKind::Disj:
      out += s.kind() == ShapeKind::Eq ? "eq(" : "disj(";
      print_path(out, s.path(), 0);
      out += ',';
      print_path(out, s.second_path(), 0);
      out += ')';
      break;
    case ShapeKind::Closed: {
      out += "closed(";
      bool first = true;
      for (const auto& p : s.allowed()) {
        if (!first) out += ',';
        first = false;
        out += p;
      }
      out += ')';
      break;
    }
    case ShapeKind::Ref:
      out += s.name();
      break;
  }
}

}  // namespace

std::string to_string(const PathExpr& e) {
  std::string out;
  print_path(out, e, 0);
  return out;
}

std::string to_string(const ShapeExpr& s) {
  std::string out;
  print_shape(out, s);
  return out;
}

std::ostream& operator<<(std::ostream& os, const PathExpr& e) { return os << to_string(e); }
std::ostream& operator<<(std::ostream& os, const ShapeExpr& s) { return os << to_string(s); }

std::string to_string(const Inclusion& inc) {
  return to_string(inc.lhs) + " <= " + to_string(inc.rhs) + ";";
}

std::string to_string(const Rule& rule) { return rule.head + " <- " + to_string(rule.body) + ";"; }

std::string to_string(const SchemaDoc& doc) {
  std::string out;
  for (const auto& r : doc.rules) out += to_string(r) + "\n";
  for (const auto& i : doc.inclusions) out += to_string(i) + "\n";
  return out;
}

}  // namespace shapestone
