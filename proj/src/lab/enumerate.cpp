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
#include "shapestone/lab/enumerate.hpp"

#include <sstream>
#include <stdexcept>

#include "shapestone/bits.hpp"
#include "shapestone/shape_eval.hpp"

namespace shapestone::lab {

namespace {

template <typename T>
std::vector<std::uint64_t> key_of(const std::vector<T>& parts) {
  std::vector<std::uint64_t> key;
  for (const auto& p : parts) {
    auto w = p.words();
    key.insert(key.end(), w.begin(), w.end());
  }
  return key;
}

// Nonempty subsets of `items` of exactly `k` elements, in lexicographic order.
void subsets_of_size(const std::vector<Name>& items, std::size_t k, std::size_t from,
                     std::set<Name>& cur, std::vector<std::set<Name>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < items.size(); ++i) {
    cur.insert(items[i]);
    subsets_of_size(items, k, i + 1, cur, out);
    cur.erase(items[i]);
  }
}

}  // namespace

std::optional<FeatureSet> parse_features(std::string_view text) {
  FeatureSet f;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    if (item == "eq") {
      f.eq = true;
    } else if (item == "disj") {
      f.disj = true;
    } else if (item == "closed") {
      f.closed = true;
    } else if (item == "full-eq") {
      f.full_eq = true;
    } else if (item == "full-disj") {
      f.full_disj = true;
    } else {
      return std::nullopt;
    }
  }
  return f;
}

std::string to_string(const FeatureSet& f) {
  std::string out;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += ',';
    out += name;
  };
  add(f.eq, "eq");
  add(f.disj, "disj");
  add(f.closed, "closed");
  add(f.full_eq, "full-eq");
  add(f.full_disj, "full-disj");
  return out.empty() ? "{}" : out;
}

std::size_t ShapeEnumerator::WordsHash::operator()(const std::vector<std::uint64_t>& w) const {
  return hash_words(w);
}

ShapeEnumerator::ShapeEnumerator(Vocabulary sigma, FeatureSet features, std::uint32_t max_count,
                                 std::size_t size_budget, std::vector<EnumRef> refs)
    : sigma_(std::move(sigma)),
      features_(features),
      max_count_(max_count),
      budget_(size_budget),
      refs_(std::move(refs)) {
  if (budget_ == 0) throw std::invalid_argument("size budget must be at least 1");
  if (refs_.empty()) throw std::invalid_argument("enumeration needs a reference interpretation");
  for (const auto& r : refs_) {
    if (r.interp->size() != refs_.front().interp->size()) {
      throw std::invalid_argument("reference interpretations must share one domain");
    }
    outgoing_.push_back(outgoing_index(*r.interp, *r.graph));
  }
}

bool ShapeEnumerator::offer_path(PathExpr e, std::size_t size, std::vector<Relation> rel) {
  if (!path_seen_.insert(key_of(rel)).second) return false;
  paths_by_size_[size].push_back(paths_.size());
  paths_.push_back({std::move(e), size, std::move(rel)});
  return true;
}

void ShapeEnumerator::build_paths() {
  const std::size_t limit = budget_ > 1 ? budget_ - 1 : 0;
  paths_by_size_.assign(limit + 1, {});
  if (limit == 0) return;
  auto each_ref = [&](auto&& f) {
    std::vector<Relation> out;
    for (const auto& r : refs_) out.push_back(f(*r.interp));
    return out;
  };
  for (const auto& p : sigma_.properties) {
    offer_path(path::prop(p), 1, each_ref([&](const Interpretation& i) { return i.property(p); }));
  }
  for (const auto& p : sigma_.properties) {
    offer_path(path::inv(p), 1,
               each_ref([&](const Interpretation& i) { return i.property(p).transpose(); }));
  }
  offer_path(path::id(), 1,
             each_ref([](const Interpretation& i) { return Relation::identity(i.size()); }));
  for (std::size_t s = 2; s <= limit; ++s) {
    for (auto a : std::vector<std::size_t>(paths_by_size_[s - 1])) {
      std::vector<Relation> rel;
      for (const auto& r : paths_[a].rel) rel.push_back(r.reflexive_transitive_closure());
      offer_path(path::star(paths_[a].expr), s, std::move(rel));
    }
    for (std::size_t la = 1; la + 1 < s; ++la) {
      const std::size_t lb = s - 1 - la;
      const auto as = paths_by_size_[la];
      const auto bs = paths_by_size_[lb];
      for (auto a : as) {
        for (auto b : bs) {
          if (a >= b) continue;
          std::vector<Relation> rel;
          for (std::size_t k = 0; k < refs_.size(); ++k) rel.push_back(paths_[a].rel[k] | paths_[b].rel[k]);
          offer_path(path::alt(paths_[a].expr, paths_[b].expr), s, std::move(rel));
        }
      }
    }
    for (std::size_t la = 1; la + 1 < s; ++la) {
      const std::size_t lb = s - 1 - la;
      const auto as = paths_by_size_[la];
      const auto bs = paths_by_size_[lb];
      for (auto a : as) {
        for (auto b : bs) {
          std::vector<Relation> rel;
          for (std::size_t k = 0; k < refs_.size(); ++k) {
            rel.push_back(paths_[a].rel[k].compose(paths_[b].rel[k]));
          }
          offer_path(path::seq(paths_[a].expr, paths_[b].expr), s, std::move(rel));
        }
      }
    }
  }
}

bool ShapeEnumerator::offer(ShapeExpr s, std::size_t size, std::vector<NodeSet> ext) {
  ++candidates_;
  if (!shape_seen_.insert(key_of(ext)).second) return false;
  shapes_by_size_[size].push_back(shapes_.size());
  shapes_.push_back({std::move(s), size, std::move(ext)});
  if (!(*visit_)(shapes_.back())) stopped_ = true;
  return true;
}

void ShapeEnumerator::run(const std::function<bool(const EnumeratedShape&)>& visit) {
  visit_ = &visit;
  build_paths();
  shapes_by_size_.assign(budget_ + 1, {});
  const std::size_t n_refs = refs_.size();
  auto per_ref = [&](auto&& f) {
    std::vector<NodeSet> out;
    for (std::size_t k = 0; k < n_refs; ++k) out.push_back(f(k));
    return out;
  };
  std::vector<Name> props(sigma_.properties.begin(), sigma_.properties.end());

  for (std::size_t s = 1; s <= budget_ && !stopped_; ++s) {
    if (s == 1) {
      offer(shape::top(), 1, per_ref([&](std::size_t k) { return refs_[k].interp->full_set(); }));
      for (const auto& c : sigma_.constants) {
        if (stopped_) return;
        offer(shape::constant(c), 1, per_ref([&](std::size_t k) {
                const auto* in = refs_[k].interp;
                auto idx = in->constant(c);
                if (!idx) throw std::invalid_argument("constant '" + c + "' missing from reference");
                return NodeSet::singleton(in->size(), *idx);
              }));
      }
    }
    if (features_.closed && s - 1 <= props.size()) {
      std::vector<std::set<Name>> subsets;
      std::set<Name> cur;
      subsets_of_size(props, s - 1, 0, cur, subsets);
      for (const auto& r : subsets) {
        if (stopped_) return;
        offer(shape::closed(r), s, per_ref([&](std::size_t k) { return closed_set(outgoing_[k], r); }));
      }
    }
    if (s >= 2) {
      for (auto a : std::vector<std::size_t>(shapes_by_size_[s - 1])) {
        if (stopped_) return;
        offer(shape::negation(shapes_[a].shape), s,
              per_ref([&](std::size_t k) { return shapes_[a].ext[k].complement(); }));
      }
    }
    for (int op = 0; op < 2 && s >= 3; ++op) {
      for (std::size_t la = 1; la + 1 < s; ++la) {
        const auto as = shapes_by_size_[la];
        const auto bs = shapes_by_size_[s - 1 - la];
        for (auto a : as) {
          for (auto b : bs) {
            if (a >= b) continue;
            if (stopped_) return;
            const auto& x = shapes_[a];
            const auto& y = shapes_[b];
            auto ext = per_ref([&](std::size_t k) {
              return op == 0 ? (x.ext[k] & y.ext[k]) : (x.ext[k] | y.ext[k]);
            });
            ShapeExpr sh = op == 0 ? shape::conjunction({x.shape, y.shape})
                                   : shape::disjunction({x.shape, y.shape});
            offer(std::move(sh), s, std::move(ext));
          }
        }
      }
    }
    for (std::size_t lp = 1; lp < s && lp < paths_by_size_.size(); ++lp) {
      const auto ps = paths_by_size_[lp];
      const auto bodies = shapes_by_size_[s - lp];
      for (auto e : ps) {
        for (auto b : bodies) {
          for (std::uint32_t n = 1; n <= max_count_; ++n) {
            if (stopped_) return;
            const auto& path_e = paths_[e];
            const auto& body = shapes_[b];
            auto ext = per_ref([&](std::size_t k) { return counting_set(path_e.rel[k], body.ext[k], n); });
            offer(shape::at_least(n, path_e.expr, body.shape), s, std::move(ext));
          }
        }
      }
    }
    // eq / disj: the second path is a property atom (core) or anything (full).
    for (int op = 0; op < 2; ++op) {
      const bool core = op == 0 ? features_.core_eq() : features_.core_disj();
      const bool full = op == 0 ? features_.full_eq : features_.full_disj;
      if (!core) continue;
      for (std::size_t l1 = 1; l1 < s && l1 < paths_by_size_.size(); ++l1) {
        const std::size_t l2 = s - l1;
        if (l2 >= paths_by_size_.size()) continue;
        for (auto e1 : paths_by_size_[l1]) {
          auto emit = [&](const PathExpr& second, const std::vector<Relation>& rel2) {
            if (stopped_) return;
            const auto& p1 = paths_[e1];
            auto ext = per_ref([&](std::size_t k) {
              return op == 0 ? equal_set(p1.rel[k], rel2[k]) : disjoint_set(p1.rel[k], rel2[k]);
            });
            ShapeExpr sh = op == 0 ? shape::equal(p1.expr, second) : shape::disjoint(p1.expr, second);
            offer(std::move(sh), s, std::move(ext));
          };
          if (full) {
            for (auto e2 : paths_by_size_[l2]) emit(paths_[e2].expr, paths_[e2].rel);
          } else if (l2 == 1) {
            for (const auto& p : props) {
              std::vector<Relation> rel2;
              for (const auto& r : refs_) rel2.push_back(r.interp->property(p));
              emit(path::prop(p), rel2);
            }
          }
        }
      }
    }
  }
}

std::vector<ShapeExpr> enumerate_shapes(const Vocabulary& sigma, const FeatureSet& features,
                                        std::uint32_t max_count, std::size_t size_budget,
                                        const std::vector<EnumRef>& refs) {
  std::vector<ShapeExpr> out;
  ShapeEnumerator en(sigma, features, max_count, size_budget, refs);
  en.run([&](const EnumeratedShape& s) {
    out.push_back(s.shape);
    return true;
  });
  return out;
}

}  // namespace shapestone::lab
