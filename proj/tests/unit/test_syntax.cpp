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
#include "doctest.h"
#include "oracle.hpp"
#include "random_gen.hpp"
#include "shapestone/parser.hpp"
#include "shapestone/shape_eval.hpp"
#include "shapestone/vocabulary.hpp"

using namespace shapestone;
namespace pa = shapestone::path;
namespace sh = shapestone::shape;

TEST_CASE("path precedence") {
  CHECK(parse_path("friend*/CEOof") == pa::seq(pa::star(pa::prop("friend")), pa::prop("CEOof")));
  CHECK(parse_path("p?") == pa::alt(pa::prop("p"), pa::id()));
  CHECK(parse_path("a/b|c*") ==
        pa::alt(pa::seq(pa::prop("a"), pa::prop("b")), pa::star(pa::prop("c"))));
  CHECK(parse_path("^p/q") == pa::seq(pa::inv("p"), pa::prop("q")));
  CHECK(parse_path("(p|q)*?") == pa::optional(pa::star(pa::alt(pa::prop("p"), pa::prop("q")))));
  CHECK(parse_path(" id ") == pa::id());
}

TEST_CASE("path syntax errors") {
  CHECK_THROWS_AS(parse_path("^(p/q)"), ParseError);
  CHECK_THROWS_AS(parse_path("^id"), ParseError);
  CHECK_THROWS_AS(parse_path("p/"), ParseError);
  CHECK_THROWS_AS(parse_path("(p"), ParseError);
  CHECK_THROWS_AS(parse_path("p q"), ParseError);
  CHECK_THROWS_AS(parse_path("p@q"), ParseError);
  CHECK_THROWS_AS(parse_path(""), ParseError);
  try {
    parse_path("p/(q|)");
    FAIL("expected error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 6);
  }
}

TEST_CASE("shape parsing and sugar") {
  CHECK(parse_shape("and(exists(phone,top), not(exists(email,top)))") ==
        sh::conjunction({sh::at_least(1, pa::prop("phone"), sh::top()),
                         sh::negation(sh::at_least(1, pa::prop("email"), sh::top()))}));
  CHECK(parse_shape("le(1, ^email, top)") ==
        sh::negation(sh::at_least(2, pa::inv("email"), sh::top())));
  CHECK(parse_shape("forall(p, top)") ==
        sh::negation(sh::at_least(1, pa::prop("p"), sh::negation(sh::top()))));
  CHECK(parse_shape("le(0,p,top)") == sh::negation(sh::at_least(1, pa::prop("p"), sh::top())));
  CHECK(parse_shape("closed()") == sh::closed({}));
  CHECK(parse_shape("closed(name,address,birthdate)") ==
        sh::closed({"name", "address", "birthdate"}));
  CHECK(parse_shape("eq(p/q, ^r)") == sh::equal(pa::seq(pa::prop("p"), pa::prop("q")), pa::inv("r")));
  CHECK(parse_shape("s") == sh::ref("s"));
  CHECK(parse_shape("or(top, const(c), s)").operands().size() == 3);
}

TEST_CASE("shape syntax errors") {
  CHECK_THROWS_AS(parse_shape("ge(0,p,top)"), ParseError);
  CHECK_THROWS_AS(parse_shape("ge(2147483648,p,top)"), ParseError);
  CHECK_NOTHROW(parse_shape("ge(2147483647,p,top)"));
  CHECK_THROWS_AS(parse_shape("le(2147483647,p,top)"), ParseError);
  CHECK_THROWS_AS(parse_shape("ge(x,p,top)"), ParseError);
  CHECK_THROWS_AS(parse_shape("and()"), ParseError);
  CHECK_THROWS_AS(parse_shape("foo(top)"), ParseError);
  CHECK_THROWS_AS(parse_shape("not(top"), ParseError);
  CHECK_THROWS_AS(parse_shape("top top"), ParseError);
  CHECK_THROWS_AS(parse_shape("const()"), ParseError);
}

TEST_CASE("schema parsing") {
  const SchemaDoc a = parse_schema("exists(^email,top) <= le(1,^email,top);");
  CHECK(a.inclusions.size() == 1);
  CHECK(a.rules.empty());
  const SchemaDoc b = parse_schema("s <- or(const(c), and(eq(p,q), exists(r, s)));");
  CHECK(b.rules.size() == 1);
  CHECK(b.rules[0].head == "s");
  CHECK(b.inclusions.empty());
  const SchemaDoc c = parse_schema("# comment\ns <- top;\n\ns <= top\n");
  CHECK(c.rules.size() == 1);
  CHECK(c.inclusions.size() == 1);
  CHECK_THROWS_AS(parse_schema("t <= u;"), ParseError);
  CHECK_THROWS_AS(parse_schema("top <= top top <= top"), ParseError);
  CHECK_THROWS_AS(parse_schema("top <- top;"), ParseError);
  try {
    parse_schema("top <= top;\n\ntop <= s;\n");
    FAIL("expected error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  try {
    parse_schema("top <= top;\ntop <= (;\n");
    FAIL("expected error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("vocabulary_of") {
  const ShapeExpr ceo = parse_shape("exists(friend*/CEOof, const(Apple))");
  const Vocabulary v = vocabulary_of(ceo);
  CHECK(v.properties == std::set<Name>{"friend", "CEOof"});
  CHECK(v.constants == std::set<Name>{"Apple"});
  CHECK(v.shape_names.empty());
  CHECK(vocabulary_of(parse_shape("top")) == Vocabulary{});
  CHECK(vocabulary_of(parse_shape("closed(name,address,birthdate)")).properties ==
        std::set<Name>{"name", "address", "birthdate"});
  CHECK(vocabulary_of(parse_path("^p/id/q*")).properties == std::set<Name>{"p", "q"});
  const Vocabulary d = vocabulary_of(parse_schema("s <- exists(r,s); s <= disj(p,q);"));
  CHECK(d.shape_names == std::set<Name>{"s"});
  CHECK(d.properties == std::set<Name>{"p", "q", "r"});
}

TEST_CASE("print then parse is the identity") {
  testgen::Rng rng(3);
  testgen::ShapeOptions so;
  so.constants = {"c", "d"};
  so.refs = {"s", "t"};
  for (int k = 0; k < 500; ++k) {
    const PathExpr e = testgen::path(rng, 1 + testgen::pick(rng, 10), {});
    CHECK(parse_path(to_string(e)) == e);
    const ShapeExpr s = testgen::shape(rng, 1 + testgen::pick(rng, 8), so);
    CHECK(parse_shape(to_string(s)) == s);
  }
  SchemaDoc doc = parse_schema("s <- or(const(c),exists(r,s)); t <- not(s); and(s,t) <= closed(p);");
  CHECK(parse_schema(to_string(doc)) == doc);
}

TEST_CASE("sugar agrees with its expansion semantically") {
  testgen::Rng rng(8);
  testgen::PathOptions po;
  for (int k = 0; k < 300; ++k) {
    const Graph g = testgen::graph(rng, 5, {"p", "q"}, 10);
    const auto e = testgen::path(rng, 1 + testgen::pick(rng, 4), po);
    const auto n = static_cast<std::uint32_t>(testgen::pick(rng, 3));
    const auto w = oracle::make_world(g);
    const oracle::Pairs r = oracle::eval(e, w);
    // le(n,E,top) holds at x iff |E(x)| <= n
    const ShapeExpr le = parse_shape("le(" + std::to_string(n) + "," + to_string(e) + ",top)");
    const Interpretation i = reduce_graph(g, {});
    oracle::Nodes expect;
    for (const auto& x : w.domain) {
      if (oracle::image(r, x).size() <= n) expect.insert(x);
    }
    CHECK(testgen::to_nodes(i, eval_shape(le, i, g)) == expect);
    const ShapeExpr opt = parse_shape("ge(1,(" + to_string(e) + ")?,top)");
    const ShapeExpr explicit_id = parse_shape("ge(1," + to_string(e) + "|id,top)");
    CHECK(eval_shape(opt, i, g) == eval_shape(explicit_id, i, g));
    // forall(E,phi) at x iff every E-successor satisfies exists(p,top)
    const ShapeExpr fa = parse_shape("forall(" + to_string(e) + ",exists(p,top))");
    const oracle::Nodes body = oracle::eval(parse_shape("exists(p,top)"), w);
    oracle::Nodes fexp;
    for (const auto& x : w.domain) {
      bool all = true;
      for (const auto& y : oracle::image(r, x)) all = all && body.contains(y);
      if (all) fexp.insert(x);
    }
    CHECK(testgen::to_nodes(i, eval_shape(fa, i, g)) == fexp);
  }
}
