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

#include "shapestone/interpretation.hpp"

#include <stdexcept>

namespace shapestone {

std::string Element::to_string() const {
  if (name) return *name;
  if (fresh_id == 0) return std::string(kFreshToken);
  return "*fresh" + std::to_string(fresh_id) + "*";
}

std::optional<std::size_t> Interpretation::index_of(const Name& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Interpretation::constant(const Name& c) const {
  auto it = constants_.find(c);
  if (it == constants_.end()) return std::nullopt;
  return it->second;
}

const Relation& Interpretation::property(const Name& p) const {
  auto it = props_.find(p);
  return it == props_.end() ? empty_ : it->second;
}

const NodeSet* Interpretation::shape(const Name& s) const {
  auto it = shapes_.find(s);
  return it == shapes_.end() ? nullptr : &it->second;
}

Interpretation Interpretation::with_shape(const Name& s, NodeSet members) const {
  if (members.size() != size()) throw std::invalid_argument("shape extension has wrong width");
  Interpretation copy = *this;
  copy.shapes_[s] = std::move(members);
  return copy;
}

Interpretation Interpretation::with_shapes(const std::map<Name, NodeSet>& bindings) const {
  Interpretation copy = *this;
  for (const auto& [s, members] : bindings) {
    if (members.size() != size()) throw std::invalid_argument("shape extension has wrong width");
    copy.shapes_[s] = members;
  }
  return copy;
}

Interpretation Interpretation::with_extra_fresh() const {
  Interpretation out;
  const std::size_t n = size();
  out.elements_ = elements_;
  out.elements_.push_back(Element{std::nullopt, static_cast<int>(fresh_.size())});
  out.index_ = index_;
  out.fresh_ = fresh_;
  out.fresh_.push_back(n);
  out.constants_ = constants_;
  for (const auto& [p, rel] : props_) {
    Relation wide(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (rel.test(i, j)) wide.set(i, j);
      }
    }
    out.props_.emplace(p, std::move(wide));
  }
  for (const auto& [s, set] : shapes_) {
    NodeSet wide(n + 1);
    for (auto i : set.members()) wide.set(i);
    out.shapes_.emplace(s, std::move(wide));
  }
  out.empty_ = Relation(n + 1);
  return out;
}

std::vector<Name> Interpretation::member_names(const NodeSet& s) const {
  std::vector<Name> out;
  for (auto i : s.members()) {
    if (elements_[i].name) out.push_back(*elements_[i].name);
  }
  return out;
}

NodeSet Interpretation::set_of(const std::vector<Name>& names) const {
  NodeSet s(size());
  for (const auto& n : names) {
    auto idx = index_of(n);
    if (!idx) throw std::invalid_argument("name '" + n + "' is not in the domain");
    s.set(*idx);
  }
  return s;
}

Interpretation reduce_graph(const Graph& g, const std::set<Name>& constants) {
  Interpretation out;
  std::set<Name> names = g.nodes();
  names.insert(constants.begin(), constants.end());
  for (const auto& n : names) {
    out.index_.emplace(n, out.elements_.size());
    out.constants_.emplace(n, out.elements_.size());
    out.elements_.push_back(Element{n, 0});
  }
  out.fresh_.push_back(out.elements_.size());
  out.elements_.push_back(Element{std::nullopt, 0});
  const std::size_t n = out.elements_.size();
  out.empty_ = Relation(n);
  for (const auto& t : g.triples()) {
    auto [it, inserted] = out.props_.try_emplace(t.property, n);
    it->second.set(out.index_.at(t.subject), out.index_.at(t.object));
  }
  return out;
}

bool lookup_membership(const Interpretation& i, const Name& x, const NodeSet& s) {
  if (auto idx = i.index_of(x)) return s.test(*idx);
  return s.test(i.fresh());
}

}  // namespace shapestone
