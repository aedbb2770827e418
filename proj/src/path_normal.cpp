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
#include "shapestone/path_normal.hpp"

#include <unordered_set>

#include "shapestone/path_eval.hpp"

namespace shapestone {

namespace {

using K = IdNormalForm::Kind;

IdNormalForm just_id() { return {K::JustId, std::nullopt}; }
IdNormalForm id_free(PathExpr e) { return {K::IdFree, std::move(e)}; }
IdNormalForm with_id(PathExpr e) { return {K::IdFreeUnionId, std::move(e)}; }

IdNormalForm normalize_union(const IdNormalForm& a, const IdNormalForm& b) {
  if (a.kind == K::JustId && b.kind == K::JustId) return just_id();
  if (a.kind == K::JustId) return with_id(*b.expr);
  if (b.kind == K::JustId) return with_id(*a.expr);
  PathExpr e = path::alt(*a.expr, *b.expr);
  if (a.kind == K::IdFree && b.kind == K::IdFree) return id_free(e);
  return with_id(e);
}

IdNormalForm normalize_comp(const IdNormalForm& a, const IdNormalForm& b) {
  if (a.kind == K::JustId) return b;
  if (b.kind == K::JustId) return a;
  const PathExpr& x = *a.expr;
  const PathExpr& y = *b.expr;
  PathExpr xy = path::seq(x, y);
  if (a.kind == K::IdFree && b.kind == K::IdFree) return id_free(xy);
  // (x|id)/(y|id) = x/y | x | y ; (x|id)/y = x/y | y ; x/(y|id) = x/y | x
  if (a.kind == K::IdFreeUnionId && b.kind == K::IdFreeUnionId) {
    return with_id(path::alt(path::alt(xy, x), y));
  }
  if (a.kind == K::IdFreeUnionId) return id_free(path::alt(xy, y));
  return id_free(path::alt(xy, x));
}

void decompose(const PathExpr& e, std::size_t n, std::size_t cap, std::set<PathString>& out);

void check_cap(std::size_t size, std::size_t cap) {
  if (size > cap) {
    throw BudgetExceeded("string decomposition exceeds " + std::to_string(cap) + " strings");
  }
}

std::set<PathString> product(const std::set<PathString>& a, const std::set<PathString>& b,
                             std::size_t cap) {
  std::set<PathString> out;
  for (const auto& x : a) {
    for (const auto& y : b) {
      out.insert(x.concat(y));
      check_cap(out.size(), cap);
    }
  }
  return out;
}

void decompose(const PathExpr& e, std::size_t n, std::size_t cap, std::set<PathString>& out) {
  switch (e.kind()) {
    case PathKind::Id:
      out.insert(PathString{});
      break;
    case PathKind::Prop:
    case PathKind::Inv:
      out.insert(PathString{{{e.property(), e.kind() == PathKind::Inv}}});
      break;
    case PathKind::Union:
      decompose(e.lhs(), n, cap, out);
      decompose(e.rhs(), n, cap, out);
      break;
    case PathKind::Comp: {
      std::set<PathString> left;
      std::set<PathString> right;
      decompose(e.lhs(), n, cap, left);
      decompose(e.rhs(), n, cap, right);
      auto prod = product(left, right, cap);
      out.insert(prod.begin(), prod.end());
      break;
    }
    case PathKind::Star: {
      std::set<PathString> base;
      decompose(e.operand(), n, cap, base);
      std::set<PathString> power{PathString{}};
      out.insert(PathString{});
      for (std::size_t k = 1; k < n; ++k) {
        power = product(power, base, cap);
        out.insert(power.begin(), power.end());
        check_cap(out.size(), cap);
      }
      break;
    }
  }
  check_cap(out.size(), cap);
}

}  // namespace

IdNormalForm normalize_id(const PathExpr& e) {
  switch (e.kind()) {
    case PathKind::Id:
      return just_id();
    case PathKind::Prop:
    case PathKind::Inv:
      return id_free(e);
    case PathKind::Union:
      return normalize_union(normalize_id(e.lhs()), normalize_id(e.rhs()));
    case PathKind::Comp:
      return normalize_comp(normalize_id(e.lhs()), normalize_id(e.rhs()));
    case PathKind::Star: {
      IdNormalForm inner = normalize_id(e.operand());
      if (inner.kind == K::JustId) return just_id();
      // (x|id)* = x*, and a star node is itself id-free
      return id_free(path::star(*inner.expr));
    }
  }
  return just_id();
}

PathExpr reassemble(const IdNormalForm& nf) {
  switch (nf.kind) {
    case K::JustId:
      return path::id();
    case K::IdFree:
      return *nf.expr;
    case K::IdFreeUnionId:
      return path::alt(*nf.expr, path::id());
  }
  return path::id();
}

std::string to_string(const IdNormalForm& nf) { return to_string(reassemble(nf)); }

Safety classify_safety(const PathExpr& e) {
  switch (e.kind()) {
    case PathKind::Id:
      throw std::invalid_argument("safety is defined for id-free expressions only");
    case PathKind::Prop:
    case PathKind::Inv:
      return Safety::Safe;
    case PathKind::Union: {
      const bool l = classify_safety(e.lhs()) == Safety::Safe;
      const bool r = classify_safety(e.rhs()) == Safety::Safe;
      return l && r ? Safety::Safe : Safety::Unsafe;
    }
    case PathKind::Comp: {
      const bool l = classify_safety(e.lhs()) == Safety::Safe;
      const bool r = classify_safety(e.rhs()) == Safety::Safe;
      return l || r ? Safety::Safe : Safety::Unsafe;
    }
    case PathKind::Star:
      if (e.contains_id()) throw std::invalid_argument("safety is defined for id-free expressions only");
      return Safety::Unsafe;
  }
  return Safety::Unsafe;
}

Safety classify_safety(const IdNormalForm& nf) {
  if (nf.kind != K::IdFree) return Safety::Unsafe;
  return classify_safety(*nf.expr);
}

const char* to_string(Safety s) { return s == Safety::Safe ? "safe" : "unsafe"; }

PathString PathString::concat(const PathString& other) const {
  PathString out = *this;
  out.steps.insert(out.steps.end(), other.steps.begin(), other.steps.end());
  return out;
}

PathExpr PathString::to_path() const {
  if (steps.empty()) return path::id();
  auto atom = [](const Step& s) {
    return s.inverted ? path::inv(s.property) : path::prop(s.property);
  };
  PathExpr e = atom(steps.front());
  for (std::size_t i = 1; i < steps.size(); ++i) e = path::seq(e, atom(steps[i]));
  return e;
}

std::strong_ordering operator<=>(const PathString& a, const PathString& b) {
  if (auto c = a.steps.size() <=> b.steps.size(); c != 0) return c;
  return a.steps <=> b.steps;
}

std::string to_string(const PathString& s) { return to_string(s.to_path()); }

std::set<PathString> string_decompose(const PathExpr& e, std::size_t n, std::size_t cap) {
  if (n == 0) throw std::invalid_argument("node bound must be at least 1");
  std::set<PathString> out;
  decompose(e, n, cap, out);
  return out;
}

std::vector<PathString> dedup_by_extension(const std::set<PathString>& strings,
                                           const Interpretation& interp) {
  struct RelHash {
    std::size_t operator()(const Relation& r) const { return r.hash(); }
  };
  std::unordered_set<Relation, RelHash> seen;
  std::vector<PathString> out;
  for (const auto& s : strings) {
    if (seen.insert(eval_path(s.to_path(), interp)).second) out.push_back(s);
  }
  return out;
}

}  // namespace shapestone
