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
#ifndef SHAPESTONE_LAB_ENUMERATE_HPP_
#define SHAPESTONE_LAB_ENUMERATE_HPP_

#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "shapestone/ast.hpp"
#include "shapestone/interpretation.hpp"
#include "shapestone/vocabulary.hpp"

namespace shapestone::lab {

/// Optional shape features beyond boolean connectives, constants and
/// counting.  full_eq and full_disj imply their core forms.
struct FeatureSet {
  bool eq = false;
  bool disj = false;
  bool closed = false;
  bool full_eq = false;
  bool full_disj = false;

  bool core_eq() const { return eq || full_eq; }
  bool core_disj() const { return disj || full_disj; }
  friend bool operator==(const FeatureSet&, const FeatureSet&) = default;
};

/// Comma-separated list such as "eq,closed"; empty text is the empty set.
std::optional<FeatureSet> parse_features(std::string_view text);
std::string to_string(const FeatureSet& f);

/// One interpretation (and its source graph) on which signatures are taken.
/// All references must share one domain.
struct EnumRef {
  const Interpretation* interp;
  const Graph* graph;
};

struct EnumeratedShape {
  ShapeExpr shape;
  /// Size in the enumerator's own measure.
  std::size_t size;
  /// Extension on each reference, in reference order.
  std::vector<NodeSet> ext;
};

/// Bottom-up enumeration by size.  Sizes: top, const(c) and atoms count 1;
/// not, and, or, union, composition, star and closed(R) add 1 (closed also
/// adds |R|); ge and eq/disj cost the sum of their parts.  A shape or path
/// whose extensions on every reference repeat an earlier one is dropped.
class ShapeEnumerator {
 public:
  ShapeEnumerator(Vocabulary sigma, FeatureSet features, std::uint32_t max_count,
                  std::size_t size_budget, std::vector<EnumRef> refs);

  /// Calls `visit` on every kept shape in order; stops early when it
  /// returns false.
  void run(const std::function<bool(const EnumeratedShape&)>& visit);

  /// Candidates built so far, including dropped duplicates.
  std::size_t candidates() const { return candidates_; }
  std::size_t distinct_shapes() const { return shapes_.size(); }
  std::size_t distinct_paths() const { return paths_.size(); }

 private:
  struct EnumPath {
    PathExpr expr;
    std::size_t size;
    std::vector<Relation> rel;
  };
  struct WordsHash {
    std::size_t operator()(const std::vector<std::uint64_t>& w) const;
  };

  void build_paths();
  bool offer_path(PathExpr e, std::size_t size, std::vector<Relation> rel);
  bool offer(ShapeExpr s, std::size_t size, std::vector<NodeSet> ext);

  Vocabulary sigma_;
  FeatureSet features_;
  std::uint32_t max_count_;
  std::size_t budget_;
  std::vector<EnumRef> refs_;
  std::vector<std::vector<std::set<Name>>> outgoing_;

  std::vector<EnumPath> paths_;
  std::vector<std::vector<std::size_t>> paths_by_size_;
  std::unordered_set<std::vector<std::uint64_t>, WordsHash> path_seen_;

  std::vector<EnumeratedShape> shapes_;
  std::vector<std::vector<std::size_t>> shapes_by_size_;
  std::unordered_set<std::vector<std::uint64_t>, WordsHash> shape_seen_;
  std::size_t candidates_ = 0;
  const std::function<bool(const EnumeratedShape&)>* visit_ = nullptr;
  bool stopped_ = false;
};

/// Collects the stream of a fresh enumerator.
std::vector<ShapeExpr> enumerate_shapes(const Vocabulary& sigma, const FeatureSet& features,
                                        std::uint32_t max_count, std::size_t size_budget,
                                        const std::vector<EnumRef>& refs);

}  // namespace shapestone::lab

#endif  // SHAPESTONE_LAB_ENUMERATE_HPP_
