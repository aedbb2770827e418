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

#ifndef SHAPESTONE_PARSER_HPP_
#define SHAPESTONE_PARSER_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

#include "shapestone/ast.hpp"

namespace shapestone {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/*
 * Path syntax, loosest to tightest:
 *   union   := concat ('|' concat)*
 *   concat  := postfix ('/' postfix)*
 *   postfix := atom ('*' | '?')*
 *   atom    := 'id' | NAME | '^' NAME | '(' union ')'
 * `E?` is read as `E|id`.
 */
PathExpr parse_path(std::string_view text);

/*
 * Shape syntax is functional: top, const(c), not(φ), and(φ,...), or(φ,...),
 * ge(n,E,φ), exists(E,φ), le(n,E,φ), forall(E,φ), eq(E1,E2), disj(E1,E2),
 * closed(p,...).  A bare name is a shape-name reference.  exists, le and
 * forall are expanded while parsing.
 */
ShapeExpr parse_shape(std::string_view text);

/// Statements `name <- shape;` (rules) and `shape <= shape;` (inclusions).
/// Every referenced shape name must head some rule.
SchemaDoc parse_schema(std::string_view text);
SchemaDoc load_schema(const std::string& path);

}  // namespace shapestone

#endif  // SHAPESTONE_PARSER_HPP_
