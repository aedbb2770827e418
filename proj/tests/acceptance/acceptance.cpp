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
// Acceptance suite.  One line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "random_gen.hpp"
#include "shapestone/lab/separation.hpp"
#include "shapestone/lab/string_types.hpp"
#include "shapestone/lab/witness.hpp"
#include "shapestone/parser.hpp"
#include "shapestone/path_eval.hpp"
#include "shapestone/path_normal.hpp"
#include "shapestone/recursion.hpp"
#include "shapestone/schema.hpp"
#include "shapestone/shape_eval.hpp"
#include "shapestone/vocabulary.hpp"

using namespace shapestone;

namespace {

// Wall-clock limits in seconds.
constexpr double kLimitInstant = 1.0;
constexpr double kLimitShort = 30.0;
constexpr double kLimitMinute = 60.0;
constexpr double kLimitRewrite = 120.0;
constexpr double kLimitSeparation = 300.0;

// Sample sizes.
constexpr int kNormalizeExprs = 1000;
constexpr int kNormalizeGraphs = 20;
constexpr int kSafetyExprs = 1000;
constexpr int kSafetyGraphs = 5;
constexpr int kStringExprs = 500;
constexpr int kRewriteDocs = 200;
constexpr int kRewriteGraphs = 100;
constexpr int kMinimalityPrograms = 200;
constexpr int kTwoStarPairs = 500;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& why) {
    if (!ok && pass) detail << "first failure: " << why << "; ";
    pass = pass && ok;
  }
};

struct Criterion {
  int id;
  const char* title;
  double limit;
  std::function<void(Outcome&)> body;
};

Graph gex() { return Graph{{"a", "email", "m1"}, {"b", "email", "m1"}, {"b", "email", "m2"}}; }

void running_example(Outcome& o) {
  const SchemaDoc doc = parse_schema("exists(^email,top) <= le(1,^email,top);");
  const ValidationReport r = conforms(gex(), doc);
  o.require(!r.conforms, "G_ex conforms");
  o.require(!r.entries.empty() && r.entries[0].nodes == std::vector<Name>{"m1"} &&
                !r.entries[0].fresh_violates,
            "violators are not exactly m1");
  const ValidationReport fixed = conforms(gex().without({"b", "email", "m1"}), doc);
  o.require(fixed.conforms, "graph without (b,email,m1) violates");
  o.detail << "violators {m1}, flipped to conforming";
}

void normalization(Outcome& o) {
  testgen::Rng rng(0x5eed0002);
  std::size_t kinds[3] = {0, 0, 0};
  for (int k = 0; k < kNormalizeExprs; ++k) {
    const PathExpr e = testgen::path(rng, 1 + testgen::pick(rng, 8), {{"p", "q", "r"}, true, true});
    const IdNormalForm nf = normalize_id(e);
    ++kinds[static_cast<int>(nf.kind)];
    o.require(!nf.expr || !nf.expr->contains_id(), "normal form contains id: " + to_string(e));
    const PathExpr back = reassemble(nf);
    for (int j = 0; j < kNormalizeGraphs; ++j) {
      const Graph g = testgen::graph(rng, 6, {"p", "q", "r"}, 14);
      const Interpretation i = reduce_graph(g, {});
      const Relation direct = eval_path(e, i);
      o.require(direct == eval_path(back, i), "mismatch on " + to_string(e));
      if (j == 0) {
        o.require(testgen::to_pairs(i, direct) == oracle::eval(e, oracle::make_world(g)),
                  "oracle mismatch on " + to_string(e));
      }
    }
  }
  o.detail << kNormalizeExprs << " exprs x " << kNormalizeGraphs << " graphs; id " << kinds[0]
           << ", id-free " << kinds[1] << ", id-free|id " << kinds[2];
}

void safety_law(Outcome& o) {
  testgen::Rng rng(0x5eed0003);
  std::size_t safe = 0;
  for (int k = 0; k < kSafetyExprs; ++k) {
    const PathExpr e = testgen::path(rng, 1 + testgen::pick(rng, 8), {{"p", "q", "r"}, false, true});
    const bool is_safe = classify_safety(e) == Safety::Safe;
    safe += is_safe ? 1 : 0;
    for (int j = 0; j < kSafetyGraphs; ++j) {
      const Graph g = testgen::graph(rng, 6, {"p", "q", "r"}, 14);
      const Interpretation i = reduce_graph(g, {});
      const Relation r = eval_path(e, i);
      const std::size_t star = i.fresh();
      Relation expect(i.size());
      for (std::size_t x = 0; x < i.size(); ++x) {
        for (std::size_t y = 0; y < i.size(); ++y) {
          if (x != star && y != star && r.test(x, y)) expect.set(x, y);
        }
      }
      if (!is_safe) expect.set(star, star);
      o.require(r == expect, "law fails for " + to_string(e));
    }
  }
  o.detail << kSafetyExprs << " id-free exprs (" << safe << " safe) x " << kSafetyGraphs << " graphs";
}

void string_decomposition(Outcome& o) {
  testgen::Rng rng(0x5eed0004);
  std::size_t total_strings = 0;
  for (int k = 0; k < kStringExprs; ++k) {
    const PathExpr e = testgen::path(rng, 1 + testgen::pick(rng, 6), {});
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto u = string_decompose(e, n);
      total_strings += u.size();
      o.require(!u.empty(), "empty string set");
      const Graph g = testgen::graph(rng, n, {"p", "q"}, 2 * n + 2);
      const Interpretation i = reduce_graph(g, {});
      Relation parts(i.size());
      for (const auto& s : u) parts |= eval_path(s.to_path(), i);
      o.require(parts == eval_path(e, i), "union differs for " + to_string(e));
    }
  }
  o.detail << kStringExprs << " exprs x n=1..4, " << total_strings << " strings in total";
}

lab::WitnessSpec witness(lab::Family f, lab::Variant v) {
  lab::WitnessSpec s;
  s.family = f;
  s.variant = v;
  s.m = lab::default_m(f);
  const bool full = f == lab::Family::FullEq || f == lab::Family::FullDisj;
  s.sigma_props = full ? std::vector<Name>{"p", "q"} : std::vector<Name>{"r"};
  return s;
}

std::function<void(Outcome&)> separation(lab::Family f) {
  return [f](Outcome& o) {
    const auto g = witness(f, lab::Variant::G);
    const auto gp = witness(f, lab::Variant::Gprime);
    const SchemaDoc q = lab::separation_schema(f, g.sigma_props);
    o.require(conforms(lab::generate_witness(gp), q).conforms, "Gprime violates Q");
    o.require(!conforms(lab::generate_witness(g), q).conforms, "G conforms to Q");
    const lab::SeparationOptions opts = lab::default_options(f, g.m);
    const lab::SeparationReport r = lab::check_indistinguishable(g, gp, opts);
    const bool agree = r.verdict == lab::SeparationReport::Verdict::AllAgree;
    std::string why = "distinguished";
    if (r.shape) why += " by " + to_string(*r.shape) + " at " + r.node.value_or("?");
    o.require(agree, why);
    if (opts.partition != lab::Partition::None) {
      o.require(r.partition_holds,
                "partition fails for " +
                    (r.partition_counterexample ? to_string(*r.partition_counterexample) : "?"));
    }
    o.detail << "m=" << g.m << ", features " << lab::to_string(opts.features) << ", count<="
             << opts.max_count << ", budget " << opts.size_budget << ": " << r.enumerated_count
             << " shapes, " << r.distinct_signatures << " signatures";
  };
}

void string_types(Outcome& o) {
  for (auto [f, m] : {std::pair{lab::Family::FullEq, std::size_t{3}},
                      std::pair{lab::Family::FullDisj, std::size_t{8}}}) {
    const lab::StringClassifier c(f, m);
    std::size_t unclassified = 0;
    std::string first;
    const auto strings = lab::alternating_strings("p", "q", 4);
    for (const auto& s : strings) {
      if (!c.classify(s)) {
        if (unclassified++ == 0) first = to_string(s);
      }
    }
    o.detail << lab::to_string(f) << ": " << strings.size() << " strings, " << c.type_count()
             << " types, " << unclassified << " unclassified; ";
    o.require(unclassified == 0, std::string(lab::to_string(f)) + " leaves " + first + " unclassified");
  }
}

SchemaDoc random_doc(testgen::Rng& rng) {
  testgen::ShapeOptions so;
  so.props = {"p", "q", "r"};
  so.constants = {"c", "n0"};
  so.allow_closed = false;
  SchemaDoc doc;
  const std::size_t n = 1 + testgen::pick(rng, 3);
  while (doc.inclusions.size() < n) {
    ShapeExpr lhs = testgen::shape(rng, 1 + testgen::pick(rng, 4), so);
    ShapeExpr rhs = testgen::shape(rng, 1 + testgen::pick(rng, 4), so);
    if (lhs.size() > 6 || rhs.size() > 6) continue;
    doc.inclusions.push_back({lhs, rhs});
  }
  return doc;
}

void rewrite(Outcome& o) {
  testgen::Rng rng(0x5eed000b);
  std::size_t internal = 0;
  std::size_t violations = 0;
  for (int k = 0; k < kRewriteDocs; ++k) {
    const SchemaDoc doc = random_doc(rng);
    const SchemaDoc t = rewrite_target_based(doc);
    internal += is_internal(validation_shape(doc)) ? 1 : 0;
    o.require(check_dialect(t, Dialect::TargetBased).empty() ||
                  !check_dialect(doc, Dialect::Generalized).empty(),
              "rewrite is not target-based");
    for (const auto& inc : t.inclusions) o.require(recognize_target(inc.lhs).has_value(), "lhs");
    for (int j = 0; j < kRewriteGraphs; ++j) {
      const Graph g = testgen::graph(rng, 5, {"p", "q", "r"}, 10);
      const bool before = conforms(g, doc).conforms;
      violations += before ? 0 : 1;
      o.require(before == conforms(g, t).conforms, "verdict changed for " + to_string(doc));
    }
  }
  const SchemaDoc never = rewrite_target_based(parse_schema("top <= not(top);"));
  o.require(to_string(never) == "const(c0) <= not(top);\n", "non-internal branch did not fire");
  o.detail << kRewriteDocs << " schemas (" << internal << " internal) x " << kRewriteGraphs
           << " graphs, " << violations << " violating pairs; non-internal branch ok";
}

Graph chain(int len, int broken) {
  std::set<Triple> t;
  for (int i = 1; i <= len; ++i) {
    const Name x = "x" + std::to_string(i);
    t.insert({x, "r", i == 1 ? "c" : "x" + std::to_string(i - 1)});
    t.insert({x, "p", "y"});
    if (i != broken) t.insert({x, "q", "y"});
  }
  return Graph(std::move(t));
}

std::map<Name, oracle::Nodes> least_model(const Graph& g, const std::vector<Rule>& rules) {
  std::set<Name> heads;
  for (const auto& r : rules) heads.insert(r.head);
  const std::vector<Name> names(heads.begin(), heads.end());
  oracle::World w = oracle::make_world(g);
  const std::size_t d = w.domain.size();
  std::optional<std::map<Name, oracle::Nodes>> meet;
  for (std::size_t code = 0; code < (std::size_t{1} << (d * names.size())); ++code) {
    for (std::size_t k = 0; k < names.size(); ++k) {
      oracle::Nodes s;
      for (std::size_t x = 0; x < d; ++x) {
        if ((code >> (k * d + x)) & 1U) s.insert(w.domain[x]);
      }
      w.shapes[names[k]] = s;
    }
    bool model = true;
    for (const auto& r : rules) {
      for (const auto& x : oracle::eval(r.body, w)) model = model && w.shapes[r.head].contains(x);
    }
    if (!model) continue;
    if (!meet) {
      meet = w.shapes;
      continue;
    }
    for (auto& [n, s] : *meet) {
      oracle::Nodes keep;
      for (const auto& x : s) {
        if (w.shapes[n].contains(x)) keep.insert(x);
      }
      s = std::move(keep);
    }
  }
  return *meet;
}

void fixpoint(Outcome& o) {
  const SchemaDoc doc = parse_schema("s <- or(const(c), and(eq(p,q), exists(r, s)));");
  const Stratification strat = stratify(doc.rules);
  std::size_t chains = 0;
  for (int len = 0; len <= 4; ++len) {
    for (int broken = 0; broken <= len; ++broken) {
      const Graph g = chain(len, broken);
      const Interpretation base = reduce_graph(g, {"c"});
      FixpointTrace trace;
      const Interpretation j = apply_program(strat, base, g, &trace);
      // chain members reach c through nodes satisfying eq(p,q)
      std::vector<Name> want{"c"};
      const int good = broken == 0 ? len : broken - 1;
      for (int i = 1; i <= good; ++i) want.push_back("x" + std::to_string(i));
      std::vector<Name> got;
      for (const auto& n : j.member_names(*j.shape("s"))) {
        if (n == "c" || n[0] == 'x') got.push_back(n);
      }
      o.require(got == want, "chain " + std::to_string(len) + "/" + std::to_string(broken));
      o.require(trace.stage_counts[0] <= base.size() * 1 + 1, "stage bound");
      ++chains;
    }
  }
  testgen::Rng rng(0x5eed000c);
  testgen::ShapeOptions so;
  so.props = {"p", "q"};
  so.refs = {"s", "t"};
  so.allow_negated_refs = false;
  so.path_size = 2;
  for (int k = 0; k < kMinimalityPrograms; ++k) {
    const Graph g = testgen::graph(rng, 4, so.props, 7);
    std::vector<Rule> rules{{"s", testgen::shape(rng, 4, so)}, {"t", testgen::shape(rng, 4, so)}};
    if (k % 3 == 0) {
      testgen::ShapeOptions self = so;
      self.refs = {"s"};
      rules = {{"s", testgen::shape(rng, 4, self)}};
    }
    const Stratification st = stratify(rules);
    const Interpretation base = reduce_graph(g, {});
    FixpointTrace trace;
    const Interpretation j = apply_program(st, base, g, &trace);
    o.require(trace.stage_counts.size() == st.strata.size(), "one stage count per stratum");
    for (std::size_t z = 0; z < st.strata.size() && z < trace.stage_counts.size(); ++z) {
      std::set<Name> heads;
      for (const auto& r : st.strata[z]) heads.insert(r.head);
      o.require(trace.stage_counts[z] <= base.size() * heads.size() + 1, "stage bound exceeded");
    }
    const auto want = least_model(g, rules);
    for (const auto& [n, ext] : want) {
      o.require(testgen::to_nodes(j, *j.shape(n)) == ext, "not the least model");
    }
  }
  o.detail << chains << " chains, " << kMinimalityPrograms << " programs against brute force";
}

void two_star(Outcome& o) {
  testgen::Rng rng(0x5eed000d);
  testgen::ShapeOptions so;
  so.props = {"p", "q", "r"};
  so.constants = {"n0", "k"};
  for (int k = 0; k < kTwoStarPairs; ++k) {
    const Graph g = testgen::graph(rng, 5, so.props, 10);
    const ShapeExpr s = testgen::shape(rng, 1 + testgen::pick(rng, 7), so);
    const Interpretation one = reduce_graph(g, vocabulary_of(s).constants);
    const Interpretation two = one.with_extra_fresh();
    const NodeSet r1 = eval_shape(s, one, g);
    const NodeSet r2 = eval_shape(s, two, g);
    for (std::size_t x = 0; x < one.size(); ++x) {
      o.require(r1.test(x) == r2.test(x), "result moved for " + to_string(s));
    }
    o.require(r2.test(two.fresh_elements()[0]) == r2.test(two.fresh_elements()[1]),
              "fresh elements disagree on " + to_string(s));
  }
  o.detail << kTwoStarPairs << " graph/shape pairs";
}

}  // namespace

int main() {
  using lab::Family;
  const std::vector<Criterion> criteria{
      {1, "running example", kLimitInstant, running_example},
      {2, "normalization oracle", kLimitShort, normalization},
      {3, "safety law", kLimitShort, safety_law},
      {4, "string decomposition oracle", kLimitMinute, string_decomposition},
      {5, "separation disj", kLimitSeparation, separation(Family::Disj)},
      {6, "separation eq", kLimitSeparation, separation(Family::Eq)},
      {7, "separation closed", kLimitMinute, separation(Family::Closed)},
      {8, "separation full-eq", kLimitSeparation, separation(Family::FullEq)},
      {9, "separation full-disj", kLimitSeparation, separation(Family::FullDisj)},
      {10, "string-type tables", kLimitMinute, string_types},
      {11, "target-based rewrite", kLimitRewrite, rewrite},
      {12, "stratified fixpoint", kLimitMinute, fixpoint},
      {13, "two-star consistency", kLimitShort, two_star},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit) o.require(false, "time limit exceeded");
    failed += o.pass ? 0 : 1;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2fs/%.0fs", secs, c.limit);
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << " (" << buf
              << "): " << o.detail.str() << '\n';
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
