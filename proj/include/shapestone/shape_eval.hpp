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
#ifndef SHAPESTONE_SHAPE_EVAL_HPP_
#define SHAPESTONE_SHAPE_EVAL_HPP_

#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "shapestone/ast.hpp"
#include "shapestone/interpretation.hpp"
#include "shapestone/path_eval.hpp"

namespace shapestone {

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Outgoing property names of every domain element of `interp` in `g`.
/// Fresh elements and names outside `g` get the empty set.
std::vector<std::set<Name>> outgoing_index(const Interpretation& interp, const Graph& g);

// Building blocks shared with the enumerator.
NodeSet counting_set(const Relation& r, const NodeSet& target, std::uint32_t n);
NodeSet equal_set(const Relation& r1, const Relation& r2);
NodeSet disjoint_set(const Relation& r1, const Relation& r2);
NodeSet closed_set(const std::vector<std::set<Name>>& outgoing, const std::set<Name>& allowed);

/// Evaluates shapes over one interpretation with memoized subterms.  Shape
/// names resolve through the interpretation's shape bindings.
class ShapeEvaluator {
 public:
  ShapeEvaluator(const Interpretation& interp, const Graph& g);

  const NodeSet& eval(const ShapeExpr& s);
  PathEvaluator& paths() { return paths_; }

 private:
  const Interpretation* interp_;
  PathEvaluator paths_;
  std::vector<std::set<Name>> outgoing_;
  std::unordered_map<ShapeExpr, NodeSet, ShapeHash> memo_;
};

NodeSet eval_shape(const ShapeExpr& s, const Interpretation& interp, const Graph& g);
bool conforms_node(const Interpretation& interp, const Graph& g, const Name& a,
                   const ShapeExpr& s);

/// True iff no node outside the graph and the mentioned constants can
/// satisfy `s`.  Throws std::invalid_argument on shape names.
bool is_internal(const ShapeExpr& s);

}  // namespace shapestone

#endif  // SHAPESTONE_SHAPE_EVAL_HPP_
