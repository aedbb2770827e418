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
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "shapestone/cli.hpp"
#include "shapestone/graph.hpp"

using namespace shapestone;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kData = SHAPESTONE_TEST_DATA;
const std::string kGex = kData + "/gex.txt";
const std::string kEmail = kData + "/email.schema";

std::string temp_file(const std::string& name, const std::string& text) {
  const auto dir = std::filesystem::temp_directory_path() / "shapestone-cli-test";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("validate") {
  const Result bad = cli({"validate", "--graph", kGex, "--schema", kEmail});
  CHECK(bad.code == 1);
  CHECK(bad.out == "inclusion 1: m1\nconforms: false\n");
  const std::string fixed = temp_file("fixed.txt", "a email m1\nb email m2\n");
  const Result good = cli({"validate", "--graph", fixed, "--schema", kEmail, "--report", "text"});
  CHECK(good.code == 0);
  CHECK(good.out == "conforms: true\n");
  CHECK(cli({"validate", "--graph", kGex, "--schema", kEmail, "--dialect", "target-based"}).code == 1);
  const std::string general = temp_file("general.schema", "not(closed()) <= exists(r,top);\n");
  const Result dialect = cli({"validate", "--graph", kGex, "--schema", general, "--dialect", "target-based"});
  CHECK(dialect.code == 2);
  CHECK(dialect.err.find("inclusion 1:") != std::string::npos);
  CHECK(cli({"validate", "--graph", kGex, "--schema", general, "--dialect", "generalized"}).code == 1);
  CHECK(cli({"validate", "--graph", kGex, "--schema", general, "--dialect", "nope"}).code == 2);
}

TEST_CASE("validate json-lines") {
  const Result r = cli({"--format", "json-lines", "validate", "--graph", kGex, "--schema", kEmail});
  CHECK(r.code == 1);
  std::istringstream lines(r.out);
  std::string first, second;
  std::getline(lines, first);
  std::getline(lines, second);
  const auto j1 = nlohmann::json::parse(first);
  CHECK(j1["inclusion"] == 1);
  CHECK(j1["nodes"] == nlohmann::json::array({"m1"}));
  CHECK(j1["fresh"] == false);
  CHECK(nlohmann::json::parse(second)["conforms"] == false);
}

TEST_CASE("eval") {
  const Result r = cli({"eval", "--graph", kGex, "--shape", "exists(^email,top)"});
  CHECK(r.code == 0);
  CHECK(r.out == "m1\nm2\n*fresh* false\n");
  CHECK(cli({"eval", "--graph", kGex, "--shape", "not(ge(2,^email,top))"}).out ==
        "a\nb\nm2\n*fresh* true\n");
  CHECK(cli({"eval", "--graph", kGex, "--shape", "s"}).code == 2);
  CHECK(cli({"eval", "--graph", kGex, "--shape", "ge(0,p,top)"}).code == 2);
}

TEST_CASE("path subcommands") {
  CHECK(cli({"normalize", "id*"}).out == "id\n");
  CHECK(cli({"normalize", "(p|id)/(q|id)"}).out == "p/q|p|q|id\n");
  CHECK(cli({"normalize", "(p|id)/q"}).out == "p/q|q\n");
  CHECK(cli({"safety", "p/q*"}).out == "safe\n");
  CHECK(cli({"safety", "p*"}).out == "unsafe\n");
  CHECK(cli({"safety", "p|id"}).out == "unsafe\n");
  CHECK(cli({"strings", "p*", "--n", "3"}).out == "id\np\np/p\n");
  CHECK(cli({"strings", "(p|^q)/r", "--n", "2"}).out == "^q/r\np/r\n");
  CHECK(cli({"strings", "((p|q)*)*", "--n", "6", "--cap", "50"}).code == 2);
  CHECK(cli({"strings", "p", "--n", "0"}).code == 2);
  CHECK(cli({"normalize", "^(p)"}).code == 2);
  CHECK(cli({"--format", "json-lines", "safety", "p"}).out == "{\"safety\":\"safe\"}\n");
}

TEST_CASE("gen") {
  const Result r = cli({"gen", "--family", "disj", "--variant", "G", "--m", "3", "--props", "r"});
  CHECK(r.code == 0);
  const Graph g = parse_graph(r.out);
  CHECK(g.nodes().size() == 12);
  CHECK(g.properties() == std::set<Name>{"r"});
  const Result fd = cli({"gen", "--family", "full-disj", "--variant", "Gprime"});
  CHECK(parse_graph(fd.out).nodes().size() == 24);
  const Result a = cli({"gen", "--random", "--nodes", "5", "--edges", "9", "--seed", "42", "--props", "p,q"});
  const Result b = cli({"gen", "--random", "--nodes", "5", "--edges", "9", "--seed", "42", "--props", "p,q"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK_FALSE(a.out.empty());
  CHECK(cli({"gen", "--family", "full-disj", "--m", "12"}).code == 2);
  CHECK(cli({"gen", "--family", "bogus"}).code == 2);
  CHECK(cli({"gen"}).code == 2);
}

TEST_CASE("separate") {
  const Result c = cli({"separate", "--family", "closed"});
  CHECK(c.code == 0);
  CHECK(c.out.find("verdict: all-agree") != std::string::npos);
  const Result d = cli({"separate", "--family", "disj", "--features", "eq,closed,disj"});
  CHECK(d.code == 1);
  CHECK(d.out.find("verdict: distinguished") != std::string::npos);
  const Result j = cli({"--format", "json-lines", "separate", "--family", "eq", "--budget", "5"});
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["verdict"] == "all-agree");
  CHECK(parsed["size_budget"] == 5);
  CHECK(cli({"separate", "--family", "closed", "--features", "wat"}).code == 2);
  CHECK(cli({"separate", "--family", "eq", "--budget", "5"}).out ==
        cli({"separate", "--family", "eq", "--budget", "5"}).out);
}

TEST_CASE("fixpoint and rewrite") {
  const std::string g = temp_file("chain.txt", "x1 r c\nx2 r x1\n");
  const std::string s = temp_file("chain.schema", "s <- or(const(c), and(eq(p,q), exists(r, s)));\n");
  const Result r = cli({"fixpoint", "--graph", g, "--schema", s});
  CHECK(r.code == 0);
  CHECK(r.out == "s: c x1 x2\n");
  const Result t = cli({"fixpoint", "--graph", g, "--schema", s, "--trace"});
  CHECK(t.out.find("stratum 1 stage 1 s: c\n") == 0);
  CHECK(t.out.find("stratum 1 stage 4 s: c x1 x2\n") != std::string::npos);
  const std::string neg = temp_file("neg.schema", "s <- not(s);\n");
  CHECK(cli({"fixpoint", "--graph", g, "--schema", neg}).code == 2);

  const std::string top = temp_file("top.schema", "top <= not(top);\n");
  CHECK(cli({"rewrite", "--schema", top}).out == "const(c0) <= not(top);\n");
  const std::string cls = temp_file("cls.schema", "exists(type/subclass*,const(P)) <= exists(name,top);\n");
  CHECK(cli({"rewrite", "--schema", cls, "--class-targets"}).out ==
        "exists(type,top) <= or(not(exists(type/subclass*,const(P))),exists(name,top));\n");
  const std::string closed = temp_file("closed.schema", "top <= closed(p);\n");
  CHECK(cli({"rewrite", "--schema", closed}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"validate", "--graph", kGex}).code == 2);
  const Result missing = cli({"validate", "--graph", "/nonexistent/g.txt", "--schema", kEmail});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("cannot open") != std::string::npos);
  const std::string broken = temp_file("broken.txt", "a b\n");
  CHECK(cli({"validate", "--graph", broken, "--schema", kEmail}).code == 2);
  const std::string badschema = temp_file("bad.schema", "top <= u;\n");
  CHECK(cli({"validate", "--graph", kGex, "--schema", badschema}).code == 2);
  CHECK(cli({"--format", "xml", "normalize", "p"}).code == 2);
  const Result help = cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("separate") != std::string::npos);
}
