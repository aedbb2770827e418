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
#include "oracle.hpp"

#include <stdexcept>

namespace oracle {

using shapestone::PathKind;
using shapestone::ShapeKind;

World make_world(const shapestone::Graph& g, const std::set<Name>& constants, int stars) {
  World w;
  w.graph = g;
  std::set<Name> names = g.nodes();
  names.insert(constants.begin(), constants.end());
  w.domain.assign(names.begin(), names.end());
  w.domain.push_back(kStar);
  for (int k = 2; k <= stars; ++k) w.domain.push_back(kStar + std::to_string(k));
  w.stars = stars;
  return w;
}

Nodes image(const Pairs& r, const Name& x) {
  Nodes out;
  for (const auto& [a, b] : r) {
    if (a == x) out.insert(b);
  }
  return out;
}

Pairs eval(const shapestone::PathExpr& e, const World& w) {
  Pairs out;
  switch (e.kind()) {
    case PathKind::Id:
      for (const auto& x : w.domain) out.insert({x, x});
      return out;
    case PathKind::Prop:
      for (const auto& t : w.graph.triples()) {
        if (t.property == e.property()) out.insert({t.subject, t.object});
      }
      return out;
    case PathKind::Inv:
      for (const auto& t : w.graph.triples()) {
        if (t.property == e.property()) out.insert({t.object, t.subject});
      }
      return out;
    case PathKind::Union: {
      out = eval(e.lhs(), w);
      for (const auto& p : eval(e.rhs(), w)) out.insert(p);
      return out;
    }
    case PathKind::Comp: {
      const Pairs l = eval(e.lhs(), w);
      const Pairs r = eval(e.rhs(), w);
      for (const auto& [a, b] : l) {
        for (const auto& [c, d] : r) {
          if (b == c) out.insert({a, d});
        }
      }
      return out;
    }
    case PathKind::Star: {
      const Pairs step = eval(e.operand(), w);
      for (const auto& x : w.domain) out.insert({x, x});
      for (;;) {
        Pairs next = out;
        for (const auto& [a, b] : out) {
          for (const auto& [c, d] : step) {
            if (b == c) next.insert({a, d});
          }
        }
        if (next == out) return out;
        out = std::move(next);
      }
    }
  }
  throw std::logic_error("bad path kind");
}

Nodes eval(const shapestone::ShapeExpr& s, const World& w) {
  Nodes out;
  const Nodes all(w.domain.begin(), w.domain.end());
  switch (s.kind()) {
    case ShapeKind::Top:
      return all;
    case ShapeKind::Const:
      if (!all.contains(s.name())) throw std::invalid_argument("constant outside domain");
      return {s.name()};
    case ShapeKind::And: {
      out = all;
      for (const auto& k : s.operands()) {
        const Nodes sub = eval(k, w);
        Nodes keep;
        for (const auto& x : out) {
          if (sub.contains(x)) keep.insert(x);
        }
        out = std::move(keep);
      }
      return out;
    }
    case ShapeKind::Or:
      for (const auto& k : s.operands()) {
        for (const auto& x : eval(k, w)) out.insert(x);
      }
      return out;
    case ShapeKind::Not: {
      const Nodes sub = eval(s.operand(), w);
      for (const auto& x : all) {
        if (!sub.contains(x)) out.insert(x);
      }
      return out;
    }
    case ShapeKind::Ge: {
      const Pairs r = eval(s.path(), w);
      const Nodes body = eval(s.operand(), w);
      for (const auto& x : all) {
        std::size_t n = 0;
        for (const auto& y : image(r, x)) n += body.contains(y) ? 1 : 0;
        if (n >= s.count()) out.insert(x);
      }
      return out;
    }
    case ShapeKind::Eq:
    case ShapeKind::Disj: {
      const Pairs r1 = eval(s.path(), w);
      const Pairs r2 = eval(s.second_path(), w);
      for (const auto& x : all) {
        const Nodes i1 = image(r1, x);
        const Nodes i2 = image(r2, x);
        bool hit;
        if (s.kind() == ShapeKind::Eq) {
          hit = i1 == i2;
        } else {
          hit = true;
          for (const auto& y : i1) hit = hit && !i2.contains(y);
        }
        if (hit) out.insert(x);
      }
      return out;
    }
    case ShapeKind::Closed:
      for (const auto& x : all) {
        bool ok = true;
        for (const auto& t : w.graph.triples()) {
          if (t.subject == x && !s.allowed().contains(t.property)) ok = false;
        }
        if (ok) out.insert(x);
      }
      return out;
    case ShapeKind::Ref: {
      auto it = w.shapes.find(s.name());
      if (it == w.shapes.end()) throw std::invalid_argument("unbound shape name");
      return it->second;
    }
  }
  throw std::logic_error("bad shape kind");
}

}  // namespace oracle
