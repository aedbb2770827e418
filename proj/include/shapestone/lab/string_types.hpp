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
#ifndef SHAPESTONE_LAB_STRING_TYPES_HPP_
#define SHAPESTONE_LAB_STRING_TYPES_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "shapestone/graph.hpp"
#include "shapestone/interpretation.hpp"
#include "shapestone/lab/witness.hpp"
#include "shapestone/path_normal.hpp"

namespace shapestone::lab {

/// Matches string extensions on a full-eq or full-disj witness pair against
/// the closed-form relation pairs those graphs admit.  Types are numbered
/// from 1: full-eq has 8 (p, q, p⁻, q⁻, C×C, (A∪B)², id, ∅) and full-disj
/// has 10 (p, q, p⁻, q⁻, C×C, (A∪B)², C×(A∪B), (A∪B)×C, id, ∅).
class StringClassifier {
 public:
  StringClassifier(Family family, std::size_t m, Name p = "p", Name q = "q");

  std::size_t type_count() const { return types_.size(); }
  /// Every type index whose closed form matches `s` on both graphs.
  std::vector<int> matching_types(const PathString& s) const;
  /// The unique matching type, or nullopt when none or several match.
  std::optional<int> classify(const PathString& s) const;

  const Interpretation& g() const { return ig_; }
  const Interpretation& gprime() const { return igp_; }

 private:
  Relation block(const std::vector<Name>& from, const std::vector<Name>& to) const;
  Relation pairs(const std::vector<std::pair<Name, Name>>& edges) const;

  Graph graph_g_;
  Graph graph_gp_;
  Interpretation ig_;
  Interpretation igp_;
  std::vector<std::pair<Relation, Relation>> types_;
};

std::optional<int> classify_string(const PathString& s, Family family, std::size_t m);

/// Strings over {p, ^p, q, ^q} of length at most `max_len` that alternate
/// between forward and inverse steps; includes the empty string.
std::vector<PathString> alternating_strings(const Name& p, const Name& q, std::size_t max_len);
/// All strings over {p, ^p, q, ^q} of length at most `max_len`.
std::vector<PathString> all_strings(const Name& p, const Name& q, std::size_t max_len);

}  // namespace shapestone::lab

#endif  // SHAPESTONE_LAB_STRING_TYPES_HPP_
