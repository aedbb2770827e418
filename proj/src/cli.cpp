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


#include "shapestone/cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "shapestone/graph.hpp"
#include "shapestone/lab/separation.hpp"
#include "shapestone/lab/witness.hpp"
#include "shapestone/parser.hpp"
#include "shapestone/path_normal.hpp"
#include "shapestone/recursion.hpp"
#include "shapestone/schema.hpp"
#include "shapestone/shape_eval.hpp"
#include "shapestone/vocabulary.hpp"

namespace shapestone {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::string graph;
  std::string schema;
  std::string shape;
  std::string expr;
  std::string dialect;
  std::size_t n = 1;
  std::size_t cap = kDefaultStringCap;
  bool trace = false;
  std::string family;
  std::string variant = "G";
  std::size_t m = 0;
  std::string props;
  bool reversed = false;
  bool random = false;
  std::size_t nodes = 4;
  std::size_t edges = 6;
  std::uint64_t seed = 1;
  std::size_t budget = 0;
  std::uint32_t max_count = 0;
  std::string features;
  bool features_given = false;
  bool wrap = false;
  bool class_targets = false;
};

std::vector<Name> split_names(const std::string& text) {
  std::vector<Name> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    if (!is_valid_name(item)) throw UsageError("'" + item + "' is not a valid name");
    out.push_back(item);
  }
  return out;
}

bool json_mode(const Options& o) { return o.format == "json-lines"; }

std::string members_line(const Interpretation& interp, const NodeSet& s) {
  std::string line;
  for (const auto& n : interp.member_names(s)) line += (line.empty() ? "" : " ") + n;
  for (auto f : interp.fresh_elements()) {
    if (s.test(f)) line += (line.empty() ? "" : " ") + interp.element(f).to_string();
  }
  return line;
}

int cmd_validate(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph);
  const SchemaDoc doc = load_schema(o.schema);
  if (!o.dialect.empty()) {
    auto d = parse_dialect(o.dialect);
    if (!d) throw UsageError("unknown dialect '" + o.dialect + "'");
    auto issues = check_dialect(doc, *d);
    if (!issues.empty()) {
      std::string msg = std::string("schema is not in the ") + to_string(*d) + " dialect";
      for (const auto& i : issues) msg += "\n  " + to_string(i);
      throw UsageError(msg);
    }
  }
  const ValidationReport r = conforms(g, doc);
  if (json_mode(o)) {
    for (const auto& e : r.entries) {
      if (!e.violated()) continue;
      out << json{{"inclusion", e.inclusion + 1}, {"nodes", e.nodes}, {"fresh", e.fresh_violates}}.dump()
          << '\n';
    }
    out << json{{"conforms", r.conforms}}.dump() << '\n';
  } else {
    out << format_report(r);
  }
  return r.conforms ? kExitOk : kExitViolation;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph);
  const ShapeExpr s = parse_shape(o.shape);
  if (contains_ref(s)) throw UsageError("eval takes a shape without shape names");
  const Interpretation interp = reduce_graph(g, vocabulary_of(s).constants);
  const NodeSet result = eval_shape(s, interp, g);
  const auto names = interp.member_names(result);
  const bool fresh = result.test(interp.fresh());
  if (json_mode(o)) {
    out << json{{"members", names}, {"fresh", fresh}}.dump() << '\n';
  } else {
    for (const auto& n : names) out << n << '\n';
    out << kFreshToken << ' ' << (fresh ? "true" : "false") << '\n';
  }
  return kExitOk;
}

void emit_value(const Options& o, std::ostream& out, const std::string& key, const std::string& v) {
  if (json_mode(o)) {
    out << json{{key, v}}.dump() << '\n';
  } else {
    out << v << '\n';
  }
}

int cmd_normalize(const Options& o, std::ostream& out) {
  const IdNormalForm nf = normalize_id(parse_path(o.expr));
  emit_value(o, out, "normal_form", to_string(nf));
  return kExitOk;
}

int cmd_safety(const Options& o, std::ostream& out) {
  const IdNormalForm nf = normalize_id(parse_path(o.expr));
  emit_value(o, out, "safety", to_string(classify_safety(nf)));
  return kExitOk;
}

int cmd_strings(const Options& o, std::ostream& out) {
  if (o.n == 0) throw UsageError("--n must be at least 1");
  const auto strings = string_decompose(parse_path(o.expr), o.n, o.cap);
  std::vector<std::string> lines;
  for (const auto& s : strings) lines.push_back(to_string(s));
  std::sort(lines.begin(), lines.end());
  for (const auto& l : lines) emit_value(o, out, "string", l);
  return kExitOk;
}

int cmd_fixpoint(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph);
  const SchemaDoc doc = load_schema(o.schema);
  const Stratification strat = stratify(doc.rules);
  const Interpretation base = reduce_graph(g, vocabulary_of(doc).constants);
  FixpointTrace trace;
  const Interpretation result = apply_program(strat, base, g, &trace);
  if (o.trace) {
    for (const auto& st : trace.stages) {
      for (const auto& [name, ext] : st.extensions) {
        if (json_mode(o)) {
          out << json{{"stratum", st.stratum + 1}, {"stage", st.stage}, {"shape", name},
                      {"members", members_line(result, ext)}}
                     .dump()
              << '\n';
        } else {
          out << "stratum " << st.stratum + 1 << " stage " << st.stage << ' ' << name << ": "
              << members_line(result, ext) << '\n';
        }
      }
    }
  }
  for (const auto& [name, ext] : result.shapes()) {
    if (json_mode(o)) {
      out << json{{"shape", name}, {"members", members_line(result, ext)}}.dump() << '\n';
    } else {
      out << name << ": " << members_line(result, ext) << '\n';
    }
  }
  return kExitOk;
}

Graph random_graph(const Options& o) {
  std::vector<Name> props = split_names(o.props.empty() ? "p" : o.props);
  if (o.nodes == 0) throw UsageError("--nodes must be at least 1");
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::size_t> node(0, o.nodes - 1);
  std::uniform_int_distribution<std::size_t> prop(0, props.size() - 1);
  std::set<Triple> t;
  for (std::size_t k = 0; k < o.edges; ++k) {
    t.insert({"n" + std::to_string(node(rng)), props[prop(rng)], "n" + std::to_string(node(rng))});
  }
  return Graph(std::move(t));
}

lab::WitnessSpec witness_spec(const Options& o, lab::Family f) {
  lab::WitnessSpec spec;
  spec.family = f;
  spec.m = o.m == 0 ? lab::default_m(f) : o.m;
  const bool full = f == lab::Family::FullEq || f == lab::Family::FullDisj;
  spec.sigma_props = o.props.empty() ? std::vector<Name>(full ? std::vector<Name>{"p", "q"}
                                                              : std::vector<Name>{"r"})
                                     : split_names(o.props);
  spec.reversed = o.reversed;
  return spec;
}

lab::Family family_of(const Options& o) {
  auto f = lab::parse_family(o.family);
  if (!f) throw UsageError("unknown family '" + o.family + "'");
  return *f;
}

int cmd_gen(const Options& o, std::ostream& out) {
  if (o.random) {
    out << format_graph(random_graph(o));
    return kExitOk;
  }
  if (o.family.empty()) throw UsageError("gen needs --family or --random");
  lab::WitnessSpec spec = witness_spec(o, family_of(o));
  auto v = lab::parse_variant(o.variant);
  if (!v) throw UsageError("variant must be G or Gprime");
  spec.variant = *v;
  out << format_graph(lab::generate_witness(spec));
  return kExitOk;
}

int cmd_separate(const Options& o, std::ostream& out) {
  const lab::Family f = family_of(o);
  lab::WitnessSpec g = witness_spec(o, f);
  lab::WitnessSpec gp = g;
  g.variant = lab::Variant::G;
  gp.variant = lab::Variant::Gprime;
  lab::SeparationOptions opts = lab::default_options(f, g.m);
  if (o.budget != 0) opts.size_budget = o.budget;
  if (o.max_count != 0) opts.max_count = o.max_count;
  if (o.features_given) {
    auto fs = lab::parse_features(o.features);
    if (!fs) throw UsageError("unknown feature in '" + o.features + "'");
    opts.features = *fs;
  }
  opts.stratified_wrap = o.wrap;
  const lab::SeparationReport r = lab::check_indistinguishable(g, gp, opts);
  const bool agree = r.verdict == lab::SeparationReport::Verdict::AllAgree;
  if (json_mode(o)) {
    json j{{"family", lab::to_string(f)},
           {"features", lab::to_string(opts.features)},
           {"max_count", opts.max_count},
           {"size_budget", opts.size_budget},
           {"enumerated", r.enumerated_count},
           {"distinct_signatures", r.distinct_signatures},
           {"distinct_paths", r.distinct_paths},
           {"g_conforms", r.g_conforms},
           {"gprime_conforms", r.gprime_conforms},
           {"partition_holds", r.partition_holds},
           {"verdict", agree ? "all-agree" : "distinguished"}};
    if (r.shape) j["shape"] = to_string(*r.shape);
    if (r.node) j["node"] = *r.node;
    out << j.dump() << '\n';
  } else {
    out << "family: " << lab::to_string(f) << '\n';
    out << "features: " << lab::to_string(opts.features) << '\n';
    out << "max count: " << opts.max_count << '\n';
    out << "size budget: " << opts.size_budget << '\n';
    out << lab::format_report(r);
  }
  return agree ? kExitOk : kExitViolation;
}

int cmd_rewrite(const Options& o, std::ostream& out) {
  SchemaDoc doc = load_schema(o.schema);
  doc = o.class_targets ? eliminate_class_targets(doc) : rewrite_target_based(doc);
  if (json_mode(o)) {
    for (const auto& inc : doc.inclusions) out << json{{"inclusion", to_string(inc)}}.dump() << '\n';
  } else {
    out << to_string(doc);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shape schema evaluation and expressiveness experiments", "shapestone"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json-lines"}));

  auto* validate = app.add_subcommand("validate", "Check a graph against a shape schema");
  validate->add_option("--graph", o.graph, "Graph file")->required();
  validate->add_option("--schema", o.schema, "Schema file")->required();
  validate->add_option("--dialect", o.dialect, "target-based, generalized or full");
  validate->add_option("--report", o.format, "Report format")
      ->check(CLI::IsMember({"text", "json-lines"}));

  auto* eval = app.add_subcommand("eval", "Evaluate a shape on a graph");
  eval->add_option("--graph", o.graph, "Graph file")->required();
  eval->add_option("--shape", o.shape, "Shape text")->required();

  auto* normalize = app.add_subcommand("normalize", "Separate id from a path expression");
  normalize->add_option("expr", o.expr, "Path expression")->required();

  auto* safety = app.add_subcommand("safety", "Classify a path expression as safe or unsafe");
  safety->add_option("expr", o.expr, "Path expression")->required();

  auto* strings = app.add_subcommand("strings", "Decompose a path expression into strings");
  strings->add_option("expr", o.expr, "Path expression")->required();
  strings->add_option("--n", o.n, "Node bound of the target graphs")->required();
  strings->add_option("--cap", o.cap, "Largest string set before giving up");

  auto* fixpoint = app.add_subcommand("fixpoint", "Apply a stratified program to a graph");
  fixpoint->add_option("--graph", o.graph, "Graph file")->required();
  fixpoint->add_option("--schema", o.schema, "Schema file with rules")->required();
  fixpoint->add_flag("--trace", o.trace, "Print every stage");

  auto* gen = app.add_subcommand("gen", "Emit a witness graph or a random graph");
  gen->add_option("--family", o.family, "eq, disj, closed, full-eq or full-disj");
  gen->add_option("--variant", o.variant, "G or Gprime");
  gen->add_option("--m", o.m, "Size parameter");
  gen->add_option("--props", o.props, "Comma-separated property names");
  gen->add_flag("--reversed", o.reversed, "Flip every edge");
  gen->add_flag("--random", o.random, "Random graph instead of a witness");
  gen->add_option("--nodes", o.nodes, "Random graph: node count");
  gen->add_option("--edges", o.edges, "Random graph: edge draws");
  gen->add_option("--seed", o.seed, "Random graph: seed");

  auto* separate = app.add_subcommand("separate", "Compare a witness pair on all small shapes");
  separate->add_option("--family", o.family, "eq, disj, closed, full-eq or full-disj")->required();
  separate->add_option("--m", o.m, "Size parameter");
  separate->add_option("--props", o.props, "Comma-separated property names");
  separate->add_option("--budget", o.budget, "Shape size budget");
  separate->add_option("--max-count", o.max_count, "Largest counting bound");
  separate->add_option("--features", o.features, "Allowed features, comma-separated")
      ->each([&](const std::string&) { o.features_given = true; });
  separate->add_flag("--reversed", o.reversed, "Use the pair with every edge flipped");
  separate->add_flag("--wrap", o.wrap, "Also compare through single-rule programs");

  auto* rewrite = app.add_subcommand("rewrite", "Rewrite a schema into target-based form");
  rewrite->add_option("--schema", o.schema, "Schema file")->required();
  rewrite->add_flag("--class-targets", o.class_targets,
                    "Only replace class-based targets by subjects-of targets");

  const std::map<CLI::App*, std::function<int(const Options&, std::ostream&)>> handlers{
      {validate, cmd_validate}, {eval, cmd_eval},         {normalize, cmd_normalize},
      {safety, cmd_safety},     {strings, cmd_strings},   {fixpoint, cmd_fixpoint},
      {gen, cmd_gen},           {separate, cmd_separate}, {rewrite, cmd_rewrite}};

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  for (const auto& [sub, handler] : handlers) {
    if (!sub->parsed()) continue;
    if (sub->get_help_ptr() != nullptr && sub->get_help_ptr()->count() > 0) {
      out << sub->help();
      return kExitOk;
    }
    try {
      return handler(o, out);
    } catch (const BudgetExceeded& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace shapestone
