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
#ifndef SHAPESTONE_SCHEMA_HPP_
#define SHAPESTONE_SCHEMA_HPP_

#include <optional>
#include <string>
#include <vector>

#include "shapestone/ast.hpp"
#include "shapestone/interpretation.hpp"

namespace shapestone {

/// The two property names that make up class-based targets.
struct TargetConfig {
  Name type = "type";
  Name subclass = "subclass";
};

struct Target {
  enum class Kind { Node, ClassBased, SubjectsOf, ObjectsOf };
  Kind kind;
  /// Constant for Node and ClassBased, property otherwise.
  Name name;
  friend bool operator==(const Target&, const Target&) = default;
};

std::optional<Target> recognize_target(const ShapeExpr& s, const TargetConfig& cfg = {});
ShapeExpr target_shape(const Target& t, const TargetConfig& cfg = {});
std::string to_string(const Target& t);

enum class Dialect { TargetBased, Generalized, Full };

std::optional<Dialect> parse_dialect(std::string_view text);
const char* to_string(Dialect d);

struct DialectIssue {
  enum class Where { Rule, Lhs, Rhs };
  Where where;
  /// Index into doc.rules or doc.inclusions.
  std::size_t index;
  std::string message;
};

/// Empty when `doc` lies in the dialect.
std::vector<DialectIssue> check_dialect(const SchemaDoc& doc, Dialect d,
                                        const TargetConfig& cfg = {});
std::string to_string(const DialectIssue& issue);

/// Or over and(lhs, not(rhs)); not(top) for no inclusions.
ShapeExpr validation_shape(const SchemaDoc& doc);

struct ValidationReport {
  struct Entry {
    std::size_t inclusion;  // 0-based
    std::vector<Name> nodes;
    bool fresh_violates = false;
    bool violated() const { return fresh_violates || !nodes.empty(); }
  };
  /// One entry per inclusion, in document order.
  std::vector<Entry> entries;
  bool conforms = true;
};

/// Checks every inclusion over an already prepared interpretation, e.g. one
/// expanded by a program.  Also evaluates the validation shape and throws
/// std::logic_error if it disagrees with the per-inclusion verdict.
ValidationReport check_inclusions(const Interpretation& interp, const Graph& g,
                                  const SchemaDoc& doc);

/// Runs the program first when `doc` has rules.
ValidationReport conforms(const Graph& g, const SchemaDoc& doc);

/// Text form: one `inclusion <i>: ...` line (1-based) per violated
/// inclusion, then `conforms: true|false`.
std::string format_report(const ValidationReport& r);

/// Equivalent target-based schema for a closure-free, rule-free schema.
/// Throws std::invalid_argument otherwise.
SchemaDoc rewrite_target_based(const SchemaDoc& doc);

/// Replaces each class-based target lhs by the subjects-of target on
/// `type`, moving the class test into the right-hand side.
SchemaDoc eliminate_class_targets(const SchemaDoc& doc, const TargetConfig& cfg = {});

}  // namespace shapestone

#endif  // SHAPESTONE_SCHEMA_HPP_
