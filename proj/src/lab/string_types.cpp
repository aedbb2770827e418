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
#include "shapestone/lab/string_types.hpp"

#include <stdexcept>

#include "shapestone/path_eval.hpp"

namespace shapestone::lab {

namespace {

Name nm(char prefix, long i) { return std::string(1, prefix) + std::to_string(i); }

std::vector<Name> range(char prefix, long m) {
  std::vector<Name> out;
  for (long i = 1; i <= m; ++i) out.push_back(nm(prefix, i));
  return out;
}

std::vector<Name> concat(std::vector<Name> a, const std::vector<Name>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

WitnessSpec spec_of(Family f, Variant v, std::size_t m, const Name& p, const Name& q) {
  WitnessSpec s;
  s.family = f;
  s.variant = v;
  s.m = m;
  s.sigma_props = {p, q};
  return s;
}

std::set<Name> union_nodes(const Graph& a, const Graph& b) {
  std::set<Name> out = a.nodes();
  out.insert(b.nodes().begin(), b.nodes().end());
  return out;
}

}  // namespace

StringClassifier::StringClassifier(Family family, std::size_t m, Name p, Name q)
    : graph_g_(generate_witness(spec_of(family, Variant::G, m, p, q))),
      graph_gp_(generate_witness(spec_of(family, Variant::Gprime, m, p, q))),
      ig_(reduce_graph(graph_g_, union_nodes(graph_g_, graph_gp_))),
      igp_(reduce_graph(graph_gp_, union_nodes(graph_g_, graph_gp_))) {
  if (family != Family::FullEq && family != Family::FullDisj) {
    throw std::invalid_argument("string types exist for the full-eq and full-disj pairs only");
  }
  const long mm = static_cast<long>(m);
  const auto a = range('a', mm);
  const auto b = range('b', mm);
  const auto c = range('c', mm);
  const auto ab = concat(a, b);
  const Relation id = Relation::identity(ig_.size());
  const Relation empty = ig_.empty_relation();
  const Relation cc = block(c, c);
  const Relation abab = block(ab, ab);

  if (family == Family::FullEq) {
    std::vector<std::pair<Name, Name>> q_g, q_gp, qi_g, qi_gp;
    for (long i = 1; i <= mm; ++i) {
      for (long j = 1; j <= mm; ++j) {
        q_g.emplace_back(nm('c', i), nm('a', j));
        qi_g.emplace_back(nm('a', j), nm('c', i));
        if (i == j) continue;
        q_g.emplace_back(nm('c', i), nm('b', j));
        qi_g.emplace_back(nm('b', i), nm('c', j));
        q_gp.emplace_back(nm('c', i), nm('a', j));
        q_gp.emplace_back(nm('c', i), nm('b', j));
        qi_gp.emplace_back(nm('a', i), nm('c', j));
        qi_gp.emplace_back(nm('b', i), nm('c', j));
      }
    }
    const Relation p_rel = block(c, ab);
    const Relation pi_rel = block(ab, c);
    types_ = {{p_rel, p_rel},     {pairs(q_g), pairs(q_gp)}, {pi_rel, pi_rel},
              {pairs(qi_g), pairs(qi_gp)}, {cc, cc},       {abab, abab},
              {id, id},           {empty, empty}};
    return;
  }

  // Full disjointness: per-node circular segments.
  const long h = mm / 2;
  const long e = mm / 8;
  std::vector<std::pair<Name, Name>> p_g, p_gp, q_g, q_gp, pi_g, pi_gp, qi_g, qi_gp;
  auto add = [](std::vector<std::pair<Name, Name>>& out, const Name& x,
                const std::vector<Name>& ys) {
    for (const auto& y : ys) out.emplace_back(x, y);
  };
  for (long i = 1; i <= mm; ++i) {
    const Name ci = nm('c', i), ai = nm('a', i), bi = nm('b', i);
    add(p_g, ci, segment('a', i, i + h - 1, mm));
    add(p_g, ci, segment('b', i - e, i + h - 1, mm));
    add(p_gp, ci, segment('a', i - e, i + h - 1, mm));
    add(p_gp, ci, segment('b', i - e, i + h - 1, mm));
    add(q_g, ci, segment('a', i - h, i - 1, mm));
    add(q_g, ci, segment('b', i - h, i + e - 1, mm));
    add(q_gp, ci, segment('a', i - h, i + e - 1, mm));
    add(q_gp, ci, segment('b', i - h, i + e - 1, mm));
    add(pi_g, ai, segment('c', i - h + 1, i, mm));
    add(pi_g, bi, segment('c', i - h + 1, i + e, mm));
    add(pi_gp, ai, segment('c', i - h + 1, i + e, mm));
    add(pi_gp, bi, segment('c', i - h + 1, i + e, mm));
    add(qi_g, ai, segment('c', i + 1, i + h, mm));
    add(qi_g, bi, segment('c', i - e + 1, i + h, mm));
    add(qi_gp, ai, segment('c', i - e + 1, i + h, mm));
    add(qi_gp, bi, segment('c', i - e + 1, i + h, mm));
  }
  const Relation cab = block(c, ab);
  const Relation abc = block(ab, c);
  types_ = {{pairs(p_g), pairs(p_gp)},   {pairs(q_g), pairs(q_gp)}, {pairs(pi_g), pairs(pi_gp)},
            {pairs(qi_g), pairs(qi_gp)}, {cc, cc},                  {abab, abab},
            {cab, cab},                  {abc, abc},                {id, id},
            {empty, empty}};
}

Relation StringClassifier::block(const std::vector<Name>& from, const std::vector<Name>& to) const {
  Relation r = ig_.empty_relation();
  for (const auto& x : from) {
    for (const auto& y : to) r.set(*ig_.index_of(x), *ig_.index_of(y));
  }
  return r;
}

Relation StringClassifier::pairs(const std::vector<std::pair<Name, Name>>& edges) const {
  Relation r = ig_.empty_relation();
  for (const auto& [x, y] : edges) r.set(*ig_.index_of(x), *ig_.index_of(y));
  return r;
}

std::vector<int> StringClassifier::matching_types(const PathString& s) const {
  const PathExpr e = s.to_path();
  const Relation on_g = eval_path(e, ig_);
  const Relation on_gp = eval_path(e, igp_);
  std::vector<int> out;
  for (std::size_t t = 0; t < types_.size(); ++t) {
    if (types_[t].first == on_g && types_[t].second == on_gp) out.push_back(static_cast<int>(t + 1));
  }
  return out;
}

std::optional<int> StringClassifier::classify(const PathString& s) const {
  auto hits = matching_types(s);
  if (hits.size() != 1) return std::nullopt;
  return hits.front();
}

std::optional<int> classify_string(const PathString& s, Family family, std::size_t m) {
  return StringClassifier(family, m).classify(s);
}

namespace {

void extend(std::vector<PathString>& out, const PathString& cur, const std::vector<Name>& props,
            std::size_t max_len, bool alternate) {
  out.push_back(cur);
  if (cur.steps.size() == max_len) return;
  for (bool inv : {false, true}) {
    if (alternate && !cur.steps.empty() && cur.steps.back().inverted == inv) continue;
    for (const auto& p : props) {
      PathString next = cur;
      next.steps.push_back({p, inv});
      extend(out, next, props, max_len, alternate);
    }
  }
}

}  // namespace

std::vector<PathString> alternating_strings(const Name& p, const Name& q, std::size_t max_len) {
  std::vector<PathString> out;
  extend(out, PathString{}, {p, q}, max_len, true);
  return out;
}

std::vector<PathString> all_strings(const Name& p, const Name& q, std::size_t max_len) {
  std::vector<PathString> out;
  extend(out, PathString{}, {p, q}, max_len, false);
  return out;
}

}  // namespace shapestone::lab
