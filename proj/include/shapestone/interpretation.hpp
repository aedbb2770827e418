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

#ifndef SHAPESTONE_INTERPRETATION_HPP_
#define SHAPESTONE_INTERPRETATION_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "shapestone/bits.hpp"
#include "shapestone/graph.hpp"

namespace shapestone {

/// Binary relation over an interpretation's dense element indices.
using Relation = BitMatrix;
/// Subset of an interpretation's domain.
using NodeSet = BitSet;

/// Token used wherever the fresh element is printed.
inline constexpr std::string_view kFreshToken = "*fresh*";

/// A domain element: either a node name or an anonymous fresh element that
/// stands for every node name outside the graph and the constants.
struct Element {
  std::optional<Name> name;
  int fresh_id = 0;

  bool is_fresh() const { return !name.has_value(); }
  std::string to_string() const;
  friend bool operator==(const Element&, const Element&) = default;
};

/// Finite interpretation.  Elements are indexed densely: names in
/// lexicographic order, then the fresh elements.
class Interpretation {
 public:
  std::size_t size() const { return elements_.size(); }
  const std::vector<Element>& elements() const { return elements_; }
  const Element& element(std::size_t i) const { return elements_[i]; }
  std::optional<std::size_t> index_of(const Name& name) const;

  /// Index of the distinguished fresh element.
  std::size_t fresh() const { return fresh_.front(); }
  const std::vector<std::size_t>& fresh_elements() const { return fresh_; }

  const std::map<Name, std::size_t>& constants() const { return constants_; }
  std::optional<std::size_t> constant(const Name& c) const;

  /// Absent properties denote the empty relation.
  const Relation& property(const Name& p) const;
  const std::map<Name, Relation>& properties() const { return props_; }

  const std::map<Name, NodeSet>& shapes() const { return shapes_; }
  const NodeSet* shape(const Name& s) const;

  NodeSet empty_set() const { return NodeSet(size()); }
  NodeSet full_set() const { return NodeSet::full(size()); }
  Relation empty_relation() const { return Relation(size()); }

  /// Copy with `s` bound to `members`, replacing any earlier binding.
  Interpretation with_shape(const Name& s, NodeSet members) const;
  Interpretation with_shapes(const std::map<Name, NodeSet>& bindings) const;
  /// Copy with one more isolated fresh element appended.  Existing indices
  /// are unchanged; relations and shape extensions are widened.
  Interpretation with_extra_fresh() const;

  /// Sorted names of the named members of `s`.
  std::vector<Name> member_names(const NodeSet& s) const;
  NodeSet set_of(const std::vector<Name>& names) const;

 private:
  friend Interpretation reduce_graph(const Graph& g, const std::set<Name>& constants);

  std::vector<Element> elements_;
  std::map<Name, std::size_t> index_;
  std::vector<std::size_t> fresh_;
  std::map<Name, std::size_t> constants_;
  std::map<Name, Relation> props_;
  std::map<Name, NodeSet> shapes_;
  Relation empty_;
};

/// Domain N_G ∪ C ∪ {fresh}; every domain name is a constant naming itself;
/// each property denotes its edge set in `g`.
Interpretation reduce_graph(const Graph& g, const std::set<Name>& constants);

/// Membership of an arbitrary node name in a result set: names in the
/// domain are looked up directly, all others are answered by the fresh
/// element.
bool lookup_membership(const Interpretation& i, const Name& x, const NodeSet& s);

}  // namespace shapestone

#endif  // SHAPESTONE_INTERPRETATION_HPP_
