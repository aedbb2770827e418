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
#ifndef SHAPESTONE_VOCABULARY_HPP_
#define SHAPESTONE_VOCABULARY_HPP_

#include <set>

#include "shapestone/ast.hpp"

namespace shapestone {

/// Names mentioned by an expression, split by the universe they live in.
struct Vocabulary {
  std::set<Name> constants;
  std::set<Name> properties;
  std::set<Name> shape_names;

  Vocabulary& operator|=(const Vocabulary& other);
  friend bool operator==(const Vocabulary&, const Vocabulary&) = default;
};

Vocabulary vocabulary_of(const PathExpr& e);
/// Properties inside closed(...) count as mentioned.
Vocabulary vocabulary_of(const ShapeExpr& s);
/// Rule heads are included in shape_names.
Vocabulary vocabulary_of(const SchemaDoc& doc);

}  // namespace shapestone

#endif  // SHAPESTONE_VOCABULARY_HPP_
