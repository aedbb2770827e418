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
#include "shapestone/schema.hpp"

#include <sstream>
#include <stdexcept>

#include "shapestone/recursion.hpp"
#include "shapestone/shape_eval.hpp"
#include "shapestone/vocabulary.hpp"

namespace shapestone {

namespace {

bool is_top(const ShapeExpr& s) { return s.kind() == ShapeKind::Top; }

bool class_path(const PathExpr& e, const TargetConfig& cfg) {
  return e.kind() == PathKind::Comp && e.lhs().kind() == PathKind::Prop &&
         e.lhs().property() == cfg.type && e.rhs().kind() == PathKind::Star &&
         e.rhs().operand().kind() == PathKind::Prop && e.rhs().operand().property() == cfg.subclass;
}

// First Eq/Disj whose second path is not a property, if any.
std::optional<ShapeExpr> first_full_test(const ShapeExpr& s) {
  if ((s.kind() == ShapeKind::Eq || s.kind() == ShapeKind::Disj) &&
      s.second_path().kind() != PathKind::Prop) {
    return s;
  }
  for (const auto& k : s.operands()) {
    if (auto hit = first_full_test(k)) return hit;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Target> recognize_target(const ShapeExpr& s, const TargetConfig& cfg) {
  using K = Target::Kind;
  if (s.kind() == ShapeKind::Const) return Target{K::Node, s.name()};
  if (s.kind() != ShapeKind::Ge || s.count() != 1) return std::nullopt;
  const PathExpr& e = s.path();
  const ShapeExpr& body = s.operand();
  if (is_top(body) && e.kind() == PathKind::Prop) return Target{K::SubjectsOf, e.property()};
  if (is_top(body) && e.kind() == PathKind::Inv) return Target{K::ObjectsOf, e.property()};
  if (body.kind() == ShapeKind::Const && class_path(e, cfg)) {
    return Target{K::ClassBased, body.name()};
  }
  return std::nullopt;
}

ShapeExpr target_shape(const Target& t, const TargetConfig& cfg) {
  switch (t.kind) {
    case Target::Kind::Node:
      return shape::constant(t.name);
    case Target::Kind::ClassBased:
      return shape::exists(path::seq(path::prop(cfg.type), path::star(path::prop(cfg.subclass))),
                           shape::constant(t.name));
    case Target::Kind::SubjectsOf:
      return shape::exists(path::prop(t.name), shape::top());
    case Target::Kind::ObjectsOf:
      return shape::exists(path::inv(t.name), shape::top());
  }
  return shape::top();
}

std::string to_string(const Target& t) {
  switch (t.kind) {
    case Target::Kind::Node:
      return "node " + t.name;
    case Target::Kind::ClassBased:
      return "class " + t.name;
    case Target::Kind::SubjectsOf:
      return "subjects-of " + t.name;
    case Target::Kind::ObjectsOf:
      return "objects-of " + t.name;
  }
  return {};
}

std::optional<Dialect> parse_dialect(std::string_view text) {
  if (text == "target-based") return Dialect::TargetBased;
  if (text == "generalized") return Dialect::Generalized;
  if (text == "full") return Dialect::Full;
  return std::nullopt;
}

const char* to_string(Dialect d) {
  switch (d) {
    case Dialect::TargetBased:
      return "target-based";
    case Dialect::Generalized:
      return "generalized";
    case Dialect::Full:
      return "full";
  }
  return "";
}

std::vector<DialectIssue> check_dialect(const SchemaDoc& doc, Dialect d, const TargetConfig& cfg) {
  std::vector<DialectIssue> issues;
  if (d == Dialect::Full) return issues;
  using W = DialectIssue::Where;
  auto full_test = [&](const ShapeExpr& s, W where, std::size_t i) {
    if (auto hit = first_full_test(s)) {
      issues.push_back({where, i, "full test " + to_string(*hit) + " needs the full dialect"});
    }
  };
  for (std::size_t i = 0; i < doc.rules.size(); ++i) full_test(doc.rules[i].body, W::Rule, i);
  for (std::size_t i = 0; i < doc.inclusions.size(); ++i) {
    const auto& inc = doc.inclusions[i];
    if (d == Dialect::TargetBased && !recognize_target(inc.lhs, cfg)) {
      issues.push_back({W::Lhs, i, "left-hand side " + to_string(inc.lhs) + " is not a target"});
    }
    full_test(inc.lhs, W::Lhs, i);
    full_test(inc.rhs, W::Rhs, i);
  }
  return issues;
}

std::string to_string(const DialectIssue& issue) {
  std::string where;
  switch (issue.where) {
    case DialectIssue::Where::Rule:
      where = "rule ";
      break;
    case DialectIssue::Where::Lhs:
    case DialectIssue::Where::Rhs:
      where = "inclusion ";
      break;
  }
  return where + std::to_string(issue.index + 1) + ": " + issue.message;
}

ShapeExpr validation_shape(const SchemaDoc& doc) {
  if (doc.inclusions.empty()) return shape::negation(shape::top());
  std::vector<ShapeExpr> parts;
  for (const auto& inc : doc.inclusions) {
    parts.push_back(shape::conjunction({inc.lhs, shape::negation(inc.rhs)}));
  }
  if (parts.size() == 1) return parts.front();
  return shape::disjunction(std::move(parts));
}

ValidationReport check_inclusions(const Interpretation& interp, const Graph& g,
                                  const SchemaDoc& doc) {
  ShapeEvaluator ev(interp, g);
  ValidationReport report;
  for (std::size_t i = 0; i < doc.inclusions.size(); ++i) {
    NodeSet bad = ev.eval(doc.inclusions[i].lhs);
    bad -= ev.eval(doc.inclusions[i].rhs);
    ValidationReport::Entry e{i, interp.member_names(bad), false};
    for (auto f : interp.fresh_elements()) e.fresh_violates = e.fresh_violates || bad.test(f);
    report.conforms = report.conforms && !e.violated();
    report.entries.push_back(std::move(e));
  }
  if (ev.eval(validation_shape(doc)).none() != report.conforms) {
    throw std::logic_error("validation shape disagrees with per-inclusion check");
  }
  return report;
}

ValidationReport conforms(const Graph& g, const SchemaDoc& doc) {
  if (!doc.rules.empty()) return conforms_stratified(g, doc);
  Interpretation interp = reduce_graph(g, vocabulary_of(doc).constants);
  return check_inclusions(interp, g, doc);
}

std::string format_report(const ValidationReport& r) {
  std::ostringstream out;
  for (const auto& e : r.entries) {
    if (!e.violated()) continue;
    out << "inclusion " << e.inclusion + 1 << ':';
    for (const auto& n : e.nodes) out << ' ' << n;
    if (e.fresh_violates) out << ' ' << kFreshToken;
    out << '\n';
  }
  out << "conforms: " << (r.conforms ? "true" : "false") << '\n';
  return out.str();
}

SchemaDoc rewrite_target_based(const SchemaDoc& doc) {
  if (!doc.rules.empty()) throw std::invalid_argument("rewrite needs a schema without rules");
  for (const auto& inc : doc.inclusions) {
    if (contains_closed(inc.lhs) || contains_closed(inc.rhs)) {
      throw std::invalid_argument("rewrite needs a closure-free schema");
    }
  }
  const ShapeExpr phi = validation_shape(doc);
  const Vocabulary voc = vocabulary_of(phi);
  SchemaDoc out;
  if (!is_internal(phi)) {
    const Name c = voc.constants.empty() ? Name("c0") : *voc.constants.begin();
    out.inclusions.push_back({shape::constant(c), shape::negation(shape::top())});
    return out;
  }
  const ShapeExpr not_phi = shape::negation(phi);
  for (const auto& c : voc.constants) out.inclusions.push_back({shape::constant(c), not_phi});
  for (const auto& p : voc.properties) {
    out.inclusions.push_back({shape::exists(path::prop(p), shape::top()), not_phi});
    out.inclusions.push_back({shape::exists(path::inv(p), shape::top()), not_phi});
  }
  return out;
}

SchemaDoc eliminate_class_targets(const SchemaDoc& doc, const TargetConfig& cfg) {
  SchemaDoc out = doc;
  for (auto& inc : out.inclusions) {
    auto t = recognize_target(inc.lhs, cfg);
    if (!t || t->kind != Target::Kind::ClassBased) continue;
    ShapeExpr rhs = shape::disjunction({shape::negation(inc.lhs), inc.rhs});
    inc = Inclusion{target_shape({Target::Kind::SubjectsOf, cfg.type}, cfg), rhs};
  }
  return out;
}

}  // namespace shapestone
