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
#include "shapestone/vocabulary.hpp"

namespace shapestone {

namespace {

void collect(const PathExpr& e, Vocabulary& v) {
  switch (e.kind()) {
    case PathKind::Id:
      return;
    case PathKind::Prop:
    case PathKind::Inv:
      v.properties.insert(e.property());
      return;
    case PathKind::Union:
    case PathKind::Comp:
      collect(e.lhs(), v);
      collect(e.rhs(), v);
      return;
    case PathKind::Star:
      collect(e.operand(), v);
      return;
  }
}

void collect(const ShapeExpr& s, Vocabulary& v) {
  switch (s.kind()) {
    case ShapeKind::Const:
      v.constants.insert(s.name());
      break;
    case ShapeKind::Ref:
      v.shape_names.insert(s.name());
      break;
    case ShapeKind::Closed:
      v.properties.insert(s.allowed().begin(), s.allowed().end());
      break;
    case ShapeKind::Ge:
      collect(s.path(), v);
      break;
    case ShapeKind::Eq:
    case ShapeKind::Disj:
      collect(s.path(), v);
      collect(s.second_path(), v);
      break;
    default:
      break;
  }
  for (const auto& k : s.operands()) collect(k, v);
}

}  // namespace

Vocabulary& Vocabulary::operator|=(const Vocabulary& other) {
  constants.insert(other.constants.begin(), other.constants.end());
  properties.insert(other.properties.begin(), other.properties.end());
  shape_names.insert(other.shape_names.begin(), other.shape_names.end());
  return *this;
}

Vocabulary vocabulary_of(const PathExpr& e) {
  Vocabulary v;
  collect(e, v);
  return v;
}

Vocabulary vocabulary_of(const ShapeExpr& s) {
  Vocabulary v;
  collect(s, v);
  return v;
}

Vocabulary vocabulary_of(const SchemaDoc& doc) {
  Vocabulary v;
  for (const auto& r : doc.rules) {
    v.shape_names.insert(r.head);
    collect(r.body, v);
  }
  for (const auto& inc : doc.inclusions) {
    collect(inc.lhs, v);
    collect(inc.rhs, v);
  }
  return v;
}

}  // namespace shapestone
