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
#ifndef SHAPESTONE_LAB_SEPARATION_HPP_
#define SHAPESTONE_LAB_SEPARATION_HPP_

#include <optional>
#include <string>

#include "shapestone/lab/enumerate.hpp"
#include "shapestone/lab/witness.hpp"

namespace shapestone::lab {

/// Which block structure every enumerated shape must respect on G.
enum class Partition {
  None,
  /// Extension restricted to the witness nodes is empty or all of them.
  AllOrNothing,
  /// Restriction is one of: empty, A∪B, C, all nodes.
  FourBlocks
};

struct SeparationOptions {
  FeatureSet features;
  std::uint32_t max_count = 1;
  std::size_t size_budget = 1;
  Partition partition = Partition::None;
  /// Also evaluate each kept shape φ through the programs `s <- φ` and
  /// `t <- or(φ, exists(r,t))` and require agreement there too.
  bool stratified_wrap = false;
};

/// Defaults per family: the features the proposition excludes, its count
/// bound, a size budget and the matching partition.
SeparationOptions default_options(Family f, std::size_t m);
/// Default m per family.
std::size_t default_m(Family f);

struct SeparationReport {
  enum class Verdict { AllAgree, Distinguished };

  std::size_t enumerated_count = 0;
  std::size_t distinct_signatures = 0;
  std::size_t distinct_paths = 0;
  Verdict verdict = Verdict::AllAgree;
  /// Set for Distinguished.
  std::optional<ShapeExpr> shape;
  std::optional<std::string> node;
  /// True when the difference only showed up through a wrapping program.
  bool via_program = false;

  bool partition_holds = true;
  std::optional<ShapeExpr> partition_counterexample;

  /// Whether each graph satisfies the family's separation schema.
  bool g_conforms = false;
  bool gprime_conforms = false;
};

/// Enumerates shapes over the properties of `g` (plus `constants`) and
/// compares their extensions on both graphs over a shared domain.
SeparationReport check_indistinguishable(const WitnessSpec& g, const WitnessSpec& gprime,
                                         const SeparationOptions& opts,
                                         const std::set<Name>& constants = {});

std::string format_report(const SeparationReport& r);

}  // namespace shapestone::lab

#endif  // SHAPESTONE_LAB_SEPARATION_HPP_
