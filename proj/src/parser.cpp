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

#include "shapestone/parser.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace shapestone {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

namespace {

enum class Tok {
  Ident,
  LParen,
  RParen,
  Comma,
  Slash,
  Bar,
  Star,
  Question,
  Caret,
  LeftArrow,
  SubsetEq,
  Semi,
  End
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

const std::set<std::string, std::less<>> kShapeKeywords = {
    "top", "const", "not", "and", "or", "ge", "exists", "le", "forall", "eq", "disj", "closed"};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
      continue;
    }
    if (ch == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    Token tok{Tok::End, std::string(1, ch), line, col};
    switch (ch) {
      case '(':
        tok.kind = Tok::LParen;
        break;
      case ')':
        tok.kind = Tok::RParen;
        break;
      case ',':
        tok.kind = Tok::Comma;
        break;
      case '/':
        tok.kind = Tok::Slash;
        break;
      case '|':
        tok.kind = Tok::Bar;
        break;
      case '*':
        tok.kind = Tok::Star;
        break;
      case '?':
        tok.kind = Tok::Question;
        break;
      case '^':
        tok.kind = Tok::Caret;
        break;
      case ';':
        tok.kind = Tok::Semi;
        break;
      case '<':
        if (i + 1 < text.size() && text[i + 1] == '-') {
          tok.kind = Tok::LeftArrow;
          tok.text = "<-";
        } else if (i + 1 < text.size() && text[i + 1] == '=') {
          tok.kind = Tok::SubsetEq;
          tok.text = "<=";
        } else {
          throw ParseError(line, col, "unexpected '<'");
        }
        break;
      default:
        if (kReservedChars.find(ch) != std::string_view::npos) {
          throw ParseError(line, col, std::string("unexpected character '") + ch + "'");
        }
        break;
    }
    if (tok.kind != Tok::End) {
      advance(tok.text.size());
      out.push_back(std::move(tok));
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) &&
           kReservedChars.find(text[j]) == std::string_view::npos) {
      ++j;
    }
    tok.kind = Tok::Ident;
    tok.text = std::string(text.substr(i, j - i));
    advance(j - i);
    out.push_back(std::move(tok));
  }
  out.push_back(Token{Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  bool at(Tok k) const { return peek().kind == k; }

  const Token& expect(Tok k, const char* what) {
    if (!at(k)) fail(std::string("expected ") + what);
    return toks_[pos_++];
  }

  [[noreturn]] void fail(const std::string& message) const {
    const auto& t = peek();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.line, t.column, message + ", found " + found);
  }

  PathExpr parse_union() {
    PathExpr e = parse_concat();
    while (at(Tok::Bar)) {
      ++pos_;
      e = path::alt(e, parse_concat());
    }
    return e;
  }

  PathExpr parse_concat() {
    PathExpr e = parse_postfix();
    while (at(Tok::Slash)) {
      ++pos_;
      e = path::seq(e, parse_postfix());
    }
    return e;
  }

  PathExpr parse_postfix() {
    PathExpr e = parse_atom();
    while (at(Tok::Star) || at(Tok::Question)) {
      e = at(Tok::Star) ? path::star(e) : path::optional(e);
      ++pos_;
    }
    return e;
  }

  PathExpr parse_atom() {
    if (at(Tok::LParen)) {
      ++pos_;
      PathExpr e = parse_union();
      expect(Tok::RParen, "')'");
      return e;
    }
    if (at(Tok::Caret)) {
      ++pos_;
      if (!at(Tok::Ident) || peek().text == "id") fail("inverse applies only to a property name");
      return path::inv(toks_[pos_++].text);
    }
    const auto& t = expect(Tok::Ident, "path expression");
    if (t.text == "id") return path::id();
    return path::prop(t.text);
  }

  std::uint32_t parse_count(bool allow_zero) {
    const auto& t = peek();
    if (t.kind != Tok::Ident || t.text.empty() ||
        t.text.find_first_not_of("0123456789") != std::string::npos) {
      fail("expected a counting bound");
    }
    if (t.text.size() > 10 || std::stoull(t.text) > kMaxCount) {
      throw ParseError(t.line, t.column, "counting bound exceeds " + std::to_string(kMaxCount));
    }
    auto n = static_cast<std::uint32_t>(std::stoull(t.text));
    if (n == 0 && !allow_zero) throw ParseError(t.line, t.column, "counting bound must be nonzero");
    ++pos_;
    return n;
  }

  Name parse_name(const char* what) {
    const auto& t = expect(Tok::Ident, what);
    return t.text;
  }

  ShapeExpr parse_shape() {
    const Token& t = peek();
    if (t.kind != Tok::Ident) fail("expected shape");
    const std::string word = t.text;
    if (!kShapeKeywords.contains(word)) {
      ++pos_;
      if (at(Tok::LParen)) {
        throw ParseError(t.line, t.column, "unknown shape constructor '" + word + "'");
      }
      return shape::ref(word);
    }
    ++pos_;
    if (word == "top") return shape::top();
    expect(Tok::LParen, "'('");
    ShapeExpr result = shape::top();
    if (word == "const") {
      result = shape::constant(parse_name("constant"));
    } else if (word == "not") {
      result = shape::negation(parse_shape());
    } else if (word == "and" || word == "or") {
      std::vector<ShapeExpr> ops{parse_shape()};
      while (at(Tok::Comma)) {
        ++pos_;
        ops.push_back(parse_shape());
      }
      result = word == "and" ? shape::conjunction(std::move(ops))
                             : shape::disjunction(std::move(ops));
    } else if (word == "ge" || word == "le") {
      const bool le = word == "le";
      std::uint32_t n = parse_count(le);
      if (le && n == kMaxCount) fail("counting bound too large for le");
      expect(Tok::Comma, "','");
      PathExpr e = parse_union();
      expect(Tok::Comma, "','");
      ShapeExpr body = parse_shape();
      result = le ? shape::at_most(n, e, body) : shape::at_least(n, e, body);
    } else if (word == "exists" || word == "forall") {
      PathExpr e = parse_union();
      expect(Tok::Comma, "','");
      ShapeExpr body = parse_shape();
      result = word == "exists" ? shape::exists(e, body) : shape::forall(e, body);
    } else if (word == "eq" || word == "disj") {
      PathExpr e1 = parse_union();
      expect(Tok::Comma, "','");
      PathExpr e2 = parse_union();
      result = word == "eq" ? shape::equal(e1, e2) : shape::disjoint(e1, e2);
    } else {  // closed
      std::set<Name> props;
      if (!at(Tok::RParen)) {
        props.insert(parse_name("property name"));
        while (at(Tok::Comma)) {
          ++pos_;
          props.insert(parse_name("property name"));
        }
      }
      result = shape::closed(std::move(props));
    }
    expect(Tok::RParen, "')'");
    return result;
  }

  void expect_end() {
    if (!at(Tok::End)) fail("unexpected trailing input");
  }

  SchemaDoc parse_schema() {
    SchemaDoc doc;
    std::vector<std::pair<std::set<Name>, std::size_t>> refs;  // names per statement, line
    while (!at(Tok::End)) {
      if (at(Tok::Semi)) {
        ++pos_;
        continue;
      }
      const std::size_t line = peek().line;
      std::set<Name> used;
      if (at(Tok::Ident) && peek(1).kind == Tok::LeftArrow) {
        const Token& head = peek();
        if (kShapeKeywords.contains(head.text)) {
          throw ParseError(head.line, head.column, "'" + head.text + "' cannot name a shape");
        }
        pos_ += 2;
        Rule r{head.text, parse_shape()};
        collect_refs(r.body, used);
        doc.rules.push_back(std::move(r));
      } else {
        ShapeExpr lhs = parse_shape();
        expect(Tok::SubsetEq, "'<='");
        ShapeExpr rhs = parse_shape();
        collect_refs(lhs, used);
        collect_refs(rhs, used);
        doc.inclusions.push_back(Inclusion{lhs, rhs});
      }
      if (!at(Tok::End)) expect(Tok::Semi, "';'");
      refs.emplace_back(std::move(used), line);
    }
    std::set<Name> heads;
    for (const auto& r : doc.rules) heads.insert(r.head);
    for (const auto& [names, line] : refs) {
      for (const auto& n : names) {
        if (!heads.contains(n)) throw ParseError(line, 1, "undefined shape name '" + n + "'");
      }
    }
    return doc;
  }

 private:
  static void collect_refs(const ShapeExpr& s, std::set<Name>& out) {
    if (s.kind() == ShapeKind::Ref) out.insert(s.name());
    for (const auto& k : s.operands()) collect_refs(k, out);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

PathExpr parse_path(std::string_view text) {
  Parser p(lex(text));
  PathExpr e = p.parse_union();
  p.expect_end();
  return e;
}

ShapeExpr parse_shape(std::string_view text) {
  Parser p(lex(text));
  ShapeExpr s = p.parse_shape();
  p.expect_end();
  return s;
}

SchemaDoc parse_schema(std::string_view text) {
  Parser p(lex(text));
  return p.parse_schema();
}

SchemaDoc load_schema(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open schema file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_schema(buf.str());
}

}  // namespace shapestone
