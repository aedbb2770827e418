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
#ifndef SHAPESTONE_PATH_EVAL_HPP_
#define SHAPESTONE_PATH_EVAL_HPP_

#include <unordered_map>

#include "shapestone/ast.hpp"
#include "shapestone/interpretation.hpp"

namespace shapestone {

/// Evaluates path expressions against one interpretation, caching every
/// subexpression result.  Not thread-safe; use one per thread.
class PathEvaluator {
 public:
  explicit PathEvaluator(const Interpretation& interp) : interp_(&interp) {}

  const Relation& eval(const PathExpr& e);
  const Interpretation& interpretation() const { return *interp_; }
  /// Largest number of squaring rounds any star needed so far.
  std::size_t max_star_rounds() const { return max_rounds_; }

 private:
  const Interpretation* interp_;
  std::unordered_map<PathExpr, Relation, PathHash> memo_;
  std::size_t max_rounds_ = 0;
};

Relation eval_path(const PathExpr& e, const Interpretation& interp);

}  // namespace shapestone

#endif  // SHAPESTONE_PATH_EVAL_HPP_
