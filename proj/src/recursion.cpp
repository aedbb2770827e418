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
#include "shapestone/recursion.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "shapestone/shape_eval.hpp"
#include "shapestone/vocabulary.hpp"

namespace shapestone {

namespace {

void walk(const ShapeExpr& phi, const Name& s, bool negated, Polarity& acc) {
  if (phi.kind() == ShapeKind::Ref && phi.name() == s) {
    if (negated) {
      acc = Polarity::NegativeOccurs;
    } else if (acc == Polarity::Absent) {
      acc = Polarity::PositiveOnly;
    }
    return;
  }
  const bool flip = phi.kind() == ShapeKind::Not;
  for (const auto& k : phi.operands()) walk(k, s, negated != flip, acc);
}

std::string join(const std::vector<Name>& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : ", ") + n;
  return out;
}

}  // namespace

Polarity polarity(const ShapeExpr& phi, const Name& s) {
  Polarity acc = Polarity::Absent;
  walk(phi, s, false, acc);
  return acc;
}

const char* to_string(Polarity p) {
  switch (p) {
    case Polarity::Absent:
      return "absent";
    case Polarity::PositiveOnly:
      return "positive";
    case Polarity::NegativeOccurs:
      return "negative";
  }
  return "";
}

NotStratified::NotStratified(std::vector<Name> cycle)
    : std::runtime_error("program is not stratified: negation inside the cycle " + join(cycle)),
      cycle_(std::move(cycle)) {}

Stratification stratify(const std::vector<Rule>& rules) {
  // Names in sorted order; edges head -> used name, flagged when negative.
  std::set<Name> heads;
  for (const auto& r : rules) heads.insert(r.head);
  std::vector<Name> names(heads.begin(), heads.end());
  std::map<Name, std::size_t> idx;
  for (std::size_t i = 0; i < names.size(); ++i) idx[names[i]] = i;
  const std::size_t n = names.size();
  std::vector<std::map<std::size_t, bool>> deps(n);
  for (const auto& r : rules) {
    const std::size_t h = idx[r.head];
    for (const auto& used : vocabulary_of(r.body).shape_names) {
      auto it = idx.find(used);
      if (it == idx.end()) throw std::invalid_argument("shape name '" + used + "' has no rule");
      const bool neg = polarity(r.body, used) == Polarity::NegativeOccurs;
      deps[h][it->second] = deps[h][it->second] || neg;
    }
  }

  // Tarjan's algorithm; components come out in reverse topological order,
  // i.e. dependencies first.
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> comps;
  int counter = 0;
  std::function<void(std::size_t)> connect = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (const auto& [w, neg] : deps[v]) {
      if (index[w] < 0) {
        connect(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::size_t> c;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = static_cast<int>(comps.size());
        c.push_back(w);
      } while (w != v);
      comps.push_back(std::move(c));
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (index[v] < 0) connect(v);
  }

  std::vector<std::size_t> level(comps.size(), 0);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (auto v : comps[c]) {
      for (const auto& [w, neg] : deps[v]) {
        if (comp[w] == static_cast<int>(c)) {
          if (neg) {
            std::vector<Name> cycle;
            for (auto u : comps[c]) cycle.push_back(names[u]);
            std::sort(cycle.begin(), cycle.end());
            throw NotStratified(std::move(cycle));
          }
          continue;
        }
        level[c] = std::max(level[c], level[comp[w]] + (neg ? 1 : 0));
      }
    }
  }

  Stratification out;
  std::size_t top = 0;
  for (auto l : level) top = std::max(top, l);
  if (n == 0) return out;
  std::vector<std::size_t> remap(top + 1, 0);
  std::vector<bool> used(top + 1, false);
  for (auto l : level) used[l] = true;
  std::size_t next = 0;
  for (std::size_t l = 0; l <= top; ++l) {
    if (used[l]) remap[l] = next++;
  }
  out.strata.resize(next);
  for (std::size_t v = 0; v < n; ++v) out.name_to_stratum[names[v]] = remap[level[comp[v]]];
  for (const auto& r : rules) out.strata[out.name_to_stratum[r.head]].push_back(r);
  return out;
}

Interpretation apply_program(const Stratification& strat, const Interpretation& interp,
                             const Graph& g, FixpointTrace* trace) {
  Interpretation current = interp;
  for (std::size_t k = 0; k < strat.strata.size(); ++k) {
    const auto& rules = strat.strata[k];
    std::map<Name, NodeSet> ext;
    for (const auto& r : rules) ext.emplace(r.head, current.empty_set());
    current = current.with_shapes(ext);
    std::size_t stage = 0;
    bool changed = true;
    while (changed) {
      ++stage;
      changed = false;
      ShapeEvaluator ev(current, g);
      std::map<Name, NodeSet> next = ext;
      for (const auto& r : rules) next[r.head] |= ev.eval(r.body);
      if (next != ext) {
        changed = true;
        ext = std::move(next);
        current = current.with_shapes(ext);
      }
      if (trace != nullptr) trace->stages.push_back({k, stage, ext});
    }
    if (trace != nullptr) trace->stage_counts.push_back(stage);
  }
  return current;
}

ValidationReport conforms_stratified(const Graph& g, const SchemaDoc& doc) {
  Stratification strat = stratify(doc.rules);
  Interpretation base = reduce_graph(g, vocabulary_of(doc).constants);
  return check_inclusions(apply_program(strat, base, g), g, doc);
}

}  // namespace shapestone
