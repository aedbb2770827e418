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
#include "shapestone/lab/witness.hpp"

#include <algorithm>
#include <stdexcept>

namespace shapestone::lab {

namespace {

Name node(char prefix, long i) { return std::string(1, prefix) + std::to_string(i); }

Name disj_node(std::size_t i, std::size_t j) {
  return "x_" + std::to_string(i) + "_" + std::to_string(j);
}

Name eq_node(std::size_t k) {
  if (k == 0) return "a";
  if (k == 1) return "b";
  return "v" + std::to_string(k - 1);
}

std::size_t disj_size(const WitnessSpec& spec) { return std::max<std::size_t>(spec.m, 3); }
std::size_t eq_size(const WitnessSpec& spec) { return std::max<std::size_t>(3, spec.m + 1); }

Name closed_extra(const WitnessSpec& spec) {
  Name p = "p";
  for (int k = 1; std::find(spec.sigma_props.begin(), spec.sigma_props.end(), p) !=
                  spec.sigma_props.end();
       ++k) {
    p = "p" + std::to_string(k);
  }
  return p;
}

void validate(const WitnessSpec& spec) {
  if (spec.sigma_props.empty()) throw std::invalid_argument("witness needs at least one property");
  if (spec.m == 0) throw std::invalid_argument("m must be positive");
  switch (spec.family) {
    case Family::FullEq:
      if (spec.m < 3) throw std::invalid_argument("full-eq witnesses need m >= 3");
      break;
    case Family::FullDisj:
      if (spec.m % 8 != 0) throw std::invalid_argument("full-disj witnesses need m divisible by 8");
      break;
    default:
      break;
  }
  if ((spec.family == Family::FullEq || spec.family == Family::FullDisj) &&
      (spec.sigma_props.size() < 2 || spec.sigma_props[0] == spec.sigma_props[1])) {
    throw std::invalid_argument("full witnesses need two distinct properties p and q");
  }
}

void add_to_all(std::set<Triple>& out, const std::vector<Name>& props, const Name& s,
                const Name& o) {
  for (const auto& p : props) out.insert({s, p, o});
}

}  // namespace

std::optional<Family> parse_family(std::string_view text) {
  if (text == "eq") return Family::Eq;
  if (text == "disj") return Family::Disj;
  if (text == "closed") return Family::Closed;
  if (text == "full-eq") return Family::FullEq;
  if (text == "full-disj") return Family::FullDisj;
  return std::nullopt;
}

const char* to_string(Family f) {
  switch (f) {
    case Family::Eq:
      return "eq";
    case Family::Disj:
      return "disj";
    case Family::Closed:
      return "closed";
    case Family::FullEq:
      return "full-eq";
    case Family::FullDisj:
      return "full-disj";
  }
  return "";
}

std::optional<Variant> parse_variant(std::string_view text) {
  if (text == "G") return Variant::G;
  if (text == "Gprime") return Variant::Gprime;
  return std::nullopt;
}

const char* to_string(Variant v) { return v == Variant::G ? "G" : "Gprime"; }

std::vector<Name> segment(char prefix, long i, long j, long m) {
  if (i > j) throw std::invalid_argument("segment needs i <= j");
  if (m <= 0) throw std::invalid_argument("segment needs m > 0");
  std::vector<Name> out;
  for (long l = 0; l <= j - i; ++l) {
    long r = (i - 1 + l) % m;
    if (r < 0) r += m;
    out.push_back(node(prefix, 1 + r));
  }
  return out;
}

Graph generate_witness(const WitnessSpec& spec) {
  validate(spec);
  std::set<Triple> t;
  const bool g = spec.variant == Variant::G;
  switch (spec.family) {
    case Family::Disj: {
      const std::size_t big_m = disj_size(spec);
      for (std::size_t i = 1; i <= 4; ++i) {
        for (std::size_t j = 1; j <= big_m; ++j) {
          for (std::size_t k = 1; k <= big_m; ++k) {
            add_to_all(t, spec.sigma_props, disj_node(i, j), disj_node(i % 4 + 1, k));
            if (j != k && (!g || i % 2 == 0)) {
              add_to_all(t, spec.sigma_props, disj_node(i, j), disj_node(i, k));
            }
          }
        }
      }
      break;
    }
    case Family::Eq: {
      const std::size_t big_m = eq_size(spec);
      for (std::size_t i = 0; i < big_m; ++i) {
        for (std::size_t j = 0; j < big_m; ++j) {
          if (g && i == 1 && j == 0) continue;  // drop (b, a)
          add_to_all(t, spec.sigma_props, eq_node(i), eq_node(j));
        }
      }
      break;
    }
    case Family::Closed:
      t.insert({"a", spec.sigma_props.front(), "a"});
      if (g) t.insert({"a", closed_extra(spec), "a"});
      break;
    case Family::FullEq: {
      const Name& p = spec.sigma_props[0];
      const Name& q = spec.sigma_props[1];
      const long m = static_cast<long>(spec.m);
      for (long i = 1; i <= m; ++i) {
        for (long j = 1; j <= m; ++j) {
          t.insert({node('c', i), p, node('a', j)});
          t.insert({node('c', i), p, node('b', j)});
          if (i != j) t.insert({node('c', i), q, node('b', j)});
          if (g || i != j) t.insert({node('c', i), q, node('a', j)});
        }
      }
      break;
    }
    case Family::FullDisj: {
      const Name& p = spec.sigma_props[0];
      const Name& q = spec.sigma_props[1];
      const long m = static_cast<long>(spec.m);
      const long h = m / 2;
      const long e = m / 8;
      for (long i = 1; i <= m; ++i) {
        const Name ci = node('c', i);
        auto link = [&](const Name& prop, const std::vector<Name>& targets) {
          for (const auto& x : targets) t.insert({ci, prop, x});
        };
        if (g) {
          link(p, segment('a', i, i + h - 1, m));
          link(q, segment('a', i - h, i - 1, m));
        } else {
          link(p, segment('a', i - e, i + h - 1, m));
          link(q, segment('a', i - h, i + e - 1, m));
        }
        link(p, segment('b', i - e, i + h - 1, m));
        link(q, segment('b', i - h, i + e - 1, m));
      }
      break;
    }
  }
  Graph out(std::move(t));
  for (const auto& n : out.nodes()) {
    if (std::find(spec.sigma_props.begin(), spec.sigma_props.end(), n) != spec.sigma_props.end()) {
      throw std::invalid_argument("witness node '" + n + "' collides with a property name");
    }
  }
  return spec.reversed ? out.reversed() : out;
}

WitnessBlocks witness_blocks(const WitnessSpec& spec) {
  validate(spec);
  WitnessBlocks out;
  switch (spec.family) {
    case Family::Disj:
      for (std::size_t i = 1; i <= 4; ++i) {
        for (std::size_t j = 1; j <= disj_size(spec); ++j) out.all.push_back(disj_node(i, j));
      }
      break;
    case Family::Eq:
      for (std::size_t k = 0; k < eq_size(spec); ++k) out.all.push_back(eq_node(k));
      break;
    case Family::Closed:
      out.all.push_back("a");
      break;
    case Family::FullEq:
    case Family::FullDisj:
      for (std::size_t i = 1; i <= spec.m; ++i) {
        out.a.push_back(node('a', static_cast<long>(i)));
        out.b.push_back(node('b', static_cast<long>(i)));
        out.c.push_back(node('c', static_cast<long>(i)));
      }
      out.all = out.a;
      out.all.insert(out.all.end(), out.b.begin(), out.b.end());
      out.all.insert(out.all.end(), out.c.begin(), out.c.end());
      break;
  }
  std::sort(out.all.begin(), out.all.end());
  return out;
}

SchemaDoc separation_schema(Family x, const std::vector<Name>& props, bool reversed) {
  const bool full = x == Family::FullEq || x == Family::FullDisj;
  const Name first = !props.empty() ? props[0] : Name(full ? "p" : "r");
  const Name second = props.size() > 1 ? props[1] : Name("q");
  const PathExpr r = path::prop(first);
  const PathExpr r_inv = path::inv(first);
  Inclusion inc{shape::top(), shape::top()};
  switch (x) {
    case Family::Eq:
      inc = {shape::exists(r, shape::top()), shape::equal(r_inv, r)};
      break;
    case Family::Disj:
      inc = {shape::exists(r, shape::top()), shape::negation(shape::disjoint(r_inv, r))};
      break;
    case Family::Closed:
      inc = {shape::exists(r, shape::top()), shape::closed({first})};
      break;
    case Family::FullEq:
      inc = {shape::exists(r_inv, shape::top()),
             shape::negation(shape::equal(r_inv, path::inv(second)))};
      break;
    case Family::FullDisj:
      inc = {shape::exists(r_inv, shape::top()),
             shape::negation(shape::disjoint(r_inv, path::inv(second)))};
      break;
  }
  if (reversed) inc = {invert_atoms(inc.lhs), invert_atoms(inc.rhs)};
  SchemaDoc doc;
  doc.inclusions.push_back(std::move(inc));
  return doc;
}

}  // namespace shapestone::lab
