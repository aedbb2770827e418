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
#include "shapestone/lab/separation.hpp"

#include <sstream>
#include <stdexcept>

#include "shapestone/recursion.hpp"
#include "shapestone/schema.hpp"

namespace shapestone::lab {

namespace {

bool wrapped_agrees(const ShapeExpr& phi, const NodeSet& direct_g, const Name& r,
                    const std::vector<EnumRef>& refs) {
  const std::vector<Rule> plain{{"s", phi}};
  const std::vector<Rule> rec{
      {"t", shape::disjunction({phi, shape::exists(path::prop(r), shape::ref("t"))})}};
  const Stratification sp = stratify(plain);
  const Stratification sr = stratify(rec);
  std::vector<NodeSet> s_ext;
  std::vector<NodeSet> t_ext;
  for (const auto& ref : refs) {
    s_ext.push_back(*apply_program(sp, *ref.interp, *ref.graph).shape("s"));
    t_ext.push_back(*apply_program(sr, *ref.interp, *ref.graph).shape("t"));
  }
  return s_ext[0] == direct_g && s_ext[0] == s_ext[1] && t_ext[0] == t_ext[1];
}

}  // namespace

std::size_t default_m(Family f) {
  switch (f) {
    case Family::Disj:
      return 3;
    case Family::Eq:
      return 2;
    case Family::Closed:
      return 1;
    case Family::FullEq:
      return 3;
    case Family::FullDisj:
      return 8;
  }
  return 1;
}

SeparationOptions default_options(Family f, std::size_t m) {
  SeparationOptions o;
  switch (f) {
    case Family::Disj:
      o.features.eq = o.features.closed = true;
      o.max_count = static_cast<std::uint32_t>(m);
      o.size_budget = 7;
      o.partition = Partition::AllOrNothing;
      break;
    case Family::Eq:
      o.features.disj = o.features.full_disj = o.features.closed = true;
      o.max_count = static_cast<std::uint32_t>(m);
      o.size_budget = 7;
      o.partition = Partition::AllOrNothing;
      break;
    case Family::Closed:
      o.features.eq = o.features.disj = o.features.full_eq = o.features.full_disj = true;
      o.max_count = 2;
      o.size_budget = 7;
      break;
    case Family::FullEq:
      o.features.eq = o.features.full_disj = o.features.closed = true;
      o.max_count = static_cast<std::uint32_t>(m > 1 ? m - 1 : 1);
      o.size_budget = 6;
      o.partition = Partition::FourBlocks;
      break;
    case Family::FullDisj:
      o.features.disj = o.features.full_eq = o.features.closed = true;
      o.max_count = static_cast<std::uint32_t>(m / 2);
      o.size_budget = 6;
      o.partition = Partition::FourBlocks;
      break;
  }
  return o;
}

SeparationReport check_indistinguishable(const WitnessSpec& g, const WitnessSpec& gprime,
                                         const SeparationOptions& opts,
                                         const std::set<Name>& constants) {
  if (g.family != gprime.family || g.m != gprime.m || g.sigma_props != gprime.sigma_props ||
      g.reversed != gprime.reversed) {
    throw std::invalid_argument("witness specs must differ only in variant");
  }
  const Graph graph_g = generate_witness(g);
  const Graph graph_gp = generate_witness(gprime);

  std::set<Name> domain_names = constants;
  domain_names.insert(graph_g.nodes().begin(), graph_g.nodes().end());
  domain_names.insert(graph_gp.nodes().begin(), graph_gp.nodes().end());
  const Interpretation ig = reduce_graph(graph_g, domain_names);
  const Interpretation igp = reduce_graph(graph_gp, domain_names);

  SeparationReport report;
  const SchemaDoc q = separation_schema(g.family, g.sigma_props, g.reversed);
  report.g_conforms = conforms(graph_g, q).conforms;
  report.gprime_conforms = conforms(graph_gp, q).conforms;

  // Partition blocks on the shared domain.
  const WitnessBlocks blocks = witness_blocks(g);
  const NodeSet all = ig.set_of(blocks.all);
  std::vector<NodeSet> allowed{ig.empty_set(), all};
  if (opts.partition == Partition::FourBlocks) {
    std::vector<Name> ab = blocks.a;
    ab.insert(ab.end(), blocks.b.begin(), blocks.b.end());
    allowed.push_back(ig.set_of(ab));
    allowed.push_back(ig.set_of(blocks.c));
  }

  Vocabulary sigma;
  sigma.properties.insert(g.sigma_props.begin(), g.sigma_props.end());
  sigma.constants = constants;
  const std::vector<EnumRef> refs{{&ig, &graph_g}, {&igp, &graph_gp}};
  ShapeEnumerator en(sigma, opts.features, opts.max_count, opts.size_budget, refs);
  en.run([&](const EnumeratedShape& s) {
    if (opts.partition != Partition::None && report.partition_holds) {
      const NodeSet inside = s.ext[0] & all;
      bool ok = false;
      for (const auto& a : allowed) ok = ok || inside == a;
      if (!ok) {
        report.partition_holds = false;
        report.partition_counterexample = s.shape;
      }
    }
    if (s.ext[0] != s.ext[1]) {
      report.verdict = SeparationReport::Verdict::Distinguished;
      report.shape = s.shape;
      const NodeSet diff = (s.ext[0] - s.ext[1]) | (s.ext[1] - s.ext[0]);
      report.node = ig.element(diff.members().front()).to_string();
      return false;
    }
    if (opts.stratified_wrap && !wrapped_agrees(s.shape, s.ext[0], g.sigma_props.front(), refs)) {
      report.verdict = SeparationReport::Verdict::Distinguished;
      report.shape = s.shape;
      report.via_program = true;
      return false;
    }
    return true;
  });
  report.enumerated_count = en.candidates();
  report.distinct_signatures = en.distinct_shapes();
  report.distinct_paths = en.distinct_paths();
  return report;
}

std::string format_report(const SeparationReport& r) {
  std::ostringstream out;
  out << "enumerated: " << r.enumerated_count << '\n';
  out << "distinct signatures: " << r.distinct_signatures << '\n';
  out << "distinct paths: " << r.distinct_paths << '\n';
  out << "schema on G: " << (r.g_conforms ? "conforms" : "violated") << '\n';
  out << "schema on Gprime: " << (r.gprime_conforms ? "conforms" : "violated") << '\n';
  out << "partition: " << (r.partition_holds ? "holds" : "fails");
  if (r.partition_counterexample) out << ' ' << to_string(*r.partition_counterexample);
  out << '\n';
  if (r.verdict == SeparationReport::Verdict::AllAgree) {
    out << "verdict: all-agree\n";
  } else {
    out << "verdict: distinguished " << to_string(*r.shape);
    if (r.node) out << " at " << *r.node;
    if (r.via_program) out << " (through a program)";
    out << '\n';
  }
  return out.str();
}

}  // namespace shapestone::lab
