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
#ifndef SHAPESTONE_LAB_WITNESS_HPP_
#define SHAPESTONE_LAB_WITNESS_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "shapestone/ast.hpp"
#include "shapestone/graph.hpp"

namespace shapestone::lab {

enum class Family { Eq, Disj, Closed, FullEq, FullDisj };
enum class Variant { G, Gprime };

std::optional<Family> parse_family(std::string_view text);
const char* to_string(Family f);
std::optional<Variant> parse_variant(std::string_view text);
const char* to_string(Variant v);

struct WitnessSpec {
  Family family = Family::Disj;
  Variant variant = Variant::G;
  /// For Eq/Disj every listed property carries the same edges.  Closed uses
  /// the first as r; FullEq/FullDisj use the first two as p and q.
  std::vector<Name> sigma_props{"r"};
  std::size_t m = 3;
  /// Flip every edge of the generated graph.
  bool reversed = false;
};

/// Circular index range: names prefix<1 + ((i - 1 + l) mod m)> for
/// 0 <= l <= j - i, in that order.  Throws std::invalid_argument if i > j.
std::vector<Name> segment(char prefix, long i, long j, long m);

/// Throws std::invalid_argument when the spec violates its family's
/// constraints.
Graph generate_witness(const WitnessSpec& spec);

/// Named blocks of the node set: "V" always; "A", "B", "C" for the full
/// families.
struct WitnessBlocks {
  std::vector<Name> all;
  std::vector<Name> a;
  std::vector<Name> b;
  std::vector<Name> c;
};
WitnessBlocks witness_blocks(const WitnessSpec& spec);

/// The single target-based inclusion defining the feature's query class.
/// `props` supplies r (or p and q); `reversed` swaps every atom with its
/// inverse, matching reversed witness graphs.
SchemaDoc separation_schema(Family x, const std::vector<Name>& props = {}, bool reversed = false);

}  // namespace shapestone::lab

#endif  // SHAPESTONE_LAB_WITNESS_HPP_
