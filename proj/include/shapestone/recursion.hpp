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
#ifndef SHAPESTONE_RECURSION_HPP_
#define SHAPESTONE_RECURSION_HPP_

#include <map>
#include <stdexcept>
#include <vector>

#include "shapestone/ast.hpp"
#include "shapestone/interpretation.hpp"
#include "shapestone/schema.hpp"

namespace shapestone {

enum class Polarity { Absent, PositiveOnly, NegativeOccurs };

/// How `s` occurs in `phi`: every occurrence under an even number of
/// negations is positive.
Polarity polarity(const ShapeExpr& phi, const Name& s);
const char* to_string(Polarity p);

class NotStratified : public std::runtime_error {
 public:
  explicit NotStratified(std::vector<Name> cycle);
  /// Shape names of a dependency cycle that passes through a negation.
  const std::vector<Name>& cycle() const { return cycle_; }

 private:
  std::vector<Name> cycle_;
};

struct Stratification {
  std::vector<std::vector<Rule>> strata;
  std::map<Name, std::size_t> name_to_stratum;
};

/// Strata by dependency level: a name sits one level above every name it
/// uses negatively and no lower than any name it uses positively.  Throws
/// NotStratified, or std::invalid_argument for a name without rules.
Stratification stratify(const std::vector<Rule>& rules);

struct FixpointTrace {
  struct Stage {
    std::size_t stratum;
    std::size_t stage;  // 1-based within the stratum
    std::map<Name, NodeSet> extensions;
  };
  std::vector<Stage> stages;
  /// Immediate-consequence rounds per stratum, counting the final round
  /// that changes nothing.
  std::vector<std::size_t> stage_counts;
};

/// Least expansion of `interp` that is a model of every rule, computed
/// stratum by stratum with naive iteration.
Interpretation apply_program(const Stratification& strat, const Interpretation& interp,
                             const Graph& g, FixpointTrace* trace = nullptr);

ValidationReport conforms_stratified(const Graph& g, const SchemaDoc& doc);

}  // namespace shapestone

#endif  // SHAPESTONE_RECURSION_HPP_
