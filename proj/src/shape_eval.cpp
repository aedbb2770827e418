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
#include "shapestone/shape_eval.hpp"

#include <algorithm>

#include "shapestone/vocabulary.hpp"

namespace shapestone {

std::vector<std::set<Name>> outgoing_index(const Interpretation& interp, const Graph& g) {
  std::vector<std::set<Name>> out(interp.size());
  for (const auto& t : g.triples()) {
    if (auto i = interp.index_of(t.subject)) out[*i].insert(t.property);
  }
  return out;
}

NodeSet counting_set(const Relation& r, const NodeSet& target, std::uint32_t n) {
  NodeSet out(r.dimension());
  for (std::size_t a = 0; a < r.dimension(); ++a) {
    if (r.row_count_masked(a, target) >= n) out.set(a);
  }
  return out;
}

NodeSet equal_set(const Relation& r1, const Relation& r2) {
  NodeSet out(r1.dimension());
  for (std::size_t a = 0; a < r1.dimension(); ++a) {
    if (r1.rows_equal(a, r2, a)) out.set(a);
  }
  return out;
}

NodeSet disjoint_set(const Relation& r1, const Relation& r2) {
  NodeSet out(r1.dimension());
  for (std::size_t a = 0; a < r1.dimension(); ++a) {
    if (!r1.rows_intersect(a, r2, a)) out.set(a);
  }
  return out;
}

NodeSet closed_set(const std::vector<std::set<Name>>& outgoing, const std::set<Name>& allowed) {
  NodeSet out(outgoing.size());
  for (std::size_t a = 0; a < outgoing.size(); ++a) {
    if (std::includes(allowed.begin(), allowed.end(), outgoing[a].begin(), outgoing[a].end())) {
      out.set(a);
    }
  }
  return out;
}

ShapeEvaluator::ShapeEvaluator(const Interpretation& interp, const Graph& g)
    : interp_(&interp), paths_(interp), outgoing_(outgoing_index(interp, g)) {}

const NodeSet& ShapeEvaluator::eval(const ShapeExpr& s) {
  if (auto it = memo_.find(s); it != memo_.end()) return it->second;
  NodeSet r;
  switch (s.kind()) {
    case ShapeKind::Top:
      r = interp_->full_set();
      break;
    case ShapeKind::Const: {
      auto idx = interp_->constant(s.name());
      if (!idx) throw EvalError("constant '" + s.name() + "' is not interpreted");
      r = NodeSet::singleton(interp_->size(), *idx);
      break;
    }
    case ShapeKind::And:
      r = eval(s.operands().front());
      for (std::size_t i = 1; i < s.operands().size(); ++i) r &= eval(s.operands()[i]);
      break;
    case ShapeKind::Or:
      r = eval(s.operands().front());
      for (std::size_t i = 1; i < s.operands().size(); ++i) r |= eval(s.operands()[i]);
      break;
    case ShapeKind::Not:
      r = eval(s.operand()).complement();
      break;
    case ShapeKind::Ge: {
      NodeSet target = eval(s.operand());
      r = counting_set(paths_.eval(s.path()), target, s.count());
      break;
    }
    case ShapeKind::Eq:
    case ShapeKind::Disj: {
      Relation r1 = paths_.eval(s.path());
      const Relation& r2 = paths_.eval(s.second_path());
      r = s.kind() == ShapeKind::Eq ? equal_set(r1, r2) : disjoint_set(r1, r2);
      break;
    }
    case ShapeKind::Closed:
      r = closed_set(outgoing_, s.allowed());
      break;
    case ShapeKind::Ref: {
      const NodeSet* bound = interp_->shape(s.name());
      if (bound == nullptr) throw EvalError("shape name '" + s.name() + "' is not bound");
      r = *bound;
      break;
    }
  }
  return memo_.emplace(s, std::move(r)).first->second;
}

NodeSet eval_shape(const ShapeExpr& s, const Interpretation& interp, const Graph& g) {
  ShapeEvaluator ev(interp, g);
  return ev.eval(s);
}

bool conforms_node(const Interpretation& interp, const Graph& g, const Name& a,
                   const ShapeExpr& s) {
  return lookup_membership(interp, a, eval_shape(s, interp, g));
}

bool is_internal(const ShapeExpr& s) {
  if (contains_ref(s)) throw std::invalid_argument("is_internal needs a shape without shape names");
  const Graph empty;
  Interpretation interp = reduce_graph(empty, vocabulary_of(s).constants);
  return !eval_shape(s, interp, empty).test(interp.fresh());
}

}  // namespace shapestone
