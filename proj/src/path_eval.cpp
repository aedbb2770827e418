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
#include "shapestone/path_eval.hpp"

#include <algorithm>

namespace shapestone {

const Relation& PathEvaluator::eval(const PathExpr& e) {
  if (auto it = memo_.find(e); it != memo_.end()) return it->second;
  Relation r;
  switch (e.kind()) {
    case PathKind::Id:
      r = Relation::identity(interp_->size());
      break;
    case PathKind::Prop:
      r = interp_->property(e.property());
      break;
    case PathKind::Inv:
      r = interp_->property(e.property()).transpose();
      break;
    case PathKind::Union:
      r = eval(e.lhs());
      r |= eval(e.rhs());
      break;
    case PathKind::Comp: {
      Relation left = eval(e.lhs());
      r = left.compose(eval(e.rhs()));
      break;
    }
    case PathKind::Star: {
      std::size_t rounds = 0;
      r = eval(e.operand()).reflexive_transitive_closure(&rounds);
      max_rounds_ = std::max(max_rounds_, rounds);
      break;
    }
  }
  return memo_.emplace(e, std::move(r)).first->second;
}

Relation eval_path(const PathExpr& e, const Interpretation& interp) {
  PathEvaluator ev(interp);
  return ev.eval(e);
}

}  // namespace shapestone
