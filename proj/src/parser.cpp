/*
 * Copyright 2026 The teamlogic Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Recursive-descent parser and minimal-parenthesis printer for the concrete
// formula syntax:
//
//   formula  := "forall" VAR "." formula | "exists" VAR "." formula | disj
//   disj     := conj { "|" conj }
//   conj     := unit { "&" unit }
//   unit     := atom | "(" formula ")" | quantified formula (extends right)
//   atom     := ["!"] NAME "(" termlist ")"
//             | term ("=" | "!=") term
//             | tuple ("=" | "!=") tuple        sugar, expanded componentwise
//             | "inc(" termlist ";" termlist ")"
//             | "dep(" [varlist] ";" VAR ")"
//             | "cind(" [varlist] ";" varlist ";" varlist ")"
//             | "ind(" varlist ";" varlist ")"
//   term     := VAR | "#" NAME
//   tuple    := "(" term { "," term } ")"

#include <cctype>
#include <ostream>
#include <optional>
#include <sstream>

#include "teamlogic/error.hpp"
#include "teamlogic/syntax.hpp"

namespace teamlogic {

namespace {

enum class Tok { Ident, Hash, LParen, RParen, Comma, Semi, Dot, Bar, Amp, Bang, Eq, Neq, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) { tokenize(); }

  Formula run() {
    Formula f = formula();
    if (peek().kind != Tok::End) error(peek(), "unexpected trailing input");
    return f;
  }

 private:
  [[noreturn]] void error(const Token& at, const std::string& msg) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at.offset && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::ostringstream os;
    os << line << ":" << col << ": " << msg;
    throw Error(ErrorKind::Parse, os.str());
  }

  void tokenize() {
    std::size_t i = 0;
    while (i < src_.size()) {
      const char c = src_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i;
        while (j < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_' || src_[j] == '\'')) {
          ++j;
        }
        toks_.push_back({Tok::Ident, std::string(src_.substr(i, j - i)), i});
        i = j;
        continue;
      }
      Tok kind;
      std::size_t len = 1;
      switch (c) {
        case '#': kind = Tok::Hash; break;
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        case ',': kind = Tok::Comma; break;
        case ';': kind = Tok::Semi; break;
        case '.': kind = Tok::Dot; break;
        case '|': kind = Tok::Bar; break;
        case '&': kind = Tok::Amp; break;
        case '=': kind = Tok::Eq; break;
        case '!':
          if (i + 1 < src_.size() && src_[i + 1] == '=') {
            kind = Tok::Neq;
            len = 2;
          } else {
            kind = Tok::Bang;
          }
          break;
        default:
          error({Tok::End, {}, i}, std::string("unexpected character '") + c + "'");
      }
      toks_.push_back({kind, std::string(src_.substr(i, len)), i});
      i += len;
    }
    toks_.push_back({Tok::End, {}, src_.size()});
  }

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) error(peek(), std::string("expected ") + what);
    return next();
  }

  static bool is_keyword(const std::string& s) {
    return s == "forall" || s == "exists" || s == "inc" || s == "dep" || s == "cind" || s == "ind";
  }

  Formula formula() {
    const Token& t = peek();
    if (t.kind == Tok::Ident && (t.text == "forall" || t.text == "exists")) {
      next();
      const Token& v = expect(Tok::Ident, "a variable after quantifier");
      if (is_keyword(v.text)) error(v, "keyword '" + v.text + "' cannot be a variable");
      std::string var = v.text;
      expect(Tok::Dot, "'.' after quantified variable");
      Formula body = formula();
      return t.text == "forall" ? Formula::forall(var, body) : Formula::exists(var, body);
    }
    return disj();
  }

  Formula disj() {
    Formula acc = conj();
    while (accept(Tok::Bar)) acc = Formula::disj(acc, conj());
    return acc;
  }

  Formula conj() {
    Formula acc = unit();
    while (accept(Tok::Amp)) acc = Formula::conj(acc, unit());
    return acc;
  }

  // A quantifier in operand position takes the rest of the input as its body.
  Formula unit() {
    if (peek().kind == Tok::Ident && (peek().text == "forall" || peek().text == "exists")) {
      return formula();
    }
    if (peek().kind == Tok::LParen) {
      if (auto tup = try_tuple_comparison()) return *tup;
      next();
      Formula f = formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    return atom();
  }

  // "(t1, ..., tn) = (s1, ..., sn)" or with "!="; backtracks if the
  // parenthesis turns out to open a formula.
  std::optional<Formula> try_tuple_comparison() {
    const std::size_t save = pos_;
    auto tuple = [&]() -> std::optional<Terms> {
      if (!accept(Tok::LParen)) return std::nullopt;
      Terms ts;
      do {
        if (peek().kind == Tok::Hash) {
          next();
          if (peek().kind != Tok::Ident) return std::nullopt;
          ts.push_back(Term::constant(next().text));
        } else if (peek().kind == Tok::Ident && !is_keyword(peek().text) &&
                   peek(1).kind != Tok::LParen) {
          ts.push_back(Term::var(next().text));
        } else {
          return std::nullopt;
        }
      } while (accept(Tok::Comma));
      if (!accept(Tok::RParen)) return std::nullopt;
      return ts;
    };
    auto lhs = tuple();
    if (!lhs || (peek().kind != Tok::Eq && peek().kind != Tok::Neq)) {
      pos_ = save;
      return std::nullopt;
    }
    const Token& op = next();
    auto rhs = tuple();
    if (!rhs) error(peek(), "expected a parenthesized term tuple");
    if (lhs->size() != rhs->size()) error(op, "tuple comparison arity mismatch");
    std::vector<Formula> parts;
    for (std::size_t i = 0; i < lhs->size(); ++i) {
      parts.push_back(op.kind == Tok::Eq ? Formula::eq((*lhs)[i], (*rhs)[i])
                                         : Formula::neq((*lhs)[i], (*rhs)[i]));
    }
    return op.kind == Tok::Eq ? Formula::conj_all(std::move(parts)) : Formula::disj_all(std::move(parts));
  }

  Term term() {
    if (accept(Tok::Hash)) {
      const Token& n = expect(Tok::Ident, "a constant name after '#'");
      return Term::constant(n.text);
    }
    const Token& v = expect(Tok::Ident, "a term");
    if (is_keyword(v.text)) error(v, "keyword '" + v.text + "' cannot be a term");
    return Term::var(v.text);
  }

  Terms term_list(bool allow_empty) {
    Terms ts;
    if (allow_empty && (peek().kind == Tok::Semi || peek().kind == Tok::RParen)) return ts;
    ts.push_back(term());
    while (accept(Tok::Comma)) ts.push_back(term());
    return ts;
  }

  Terms var_list(bool allow_empty) {
    const Token& start = peek();
    Terms ts = term_list(allow_empty);
    for (const auto& t : ts) {
      if (!t.is_var()) error(start, "only variables are allowed here, found #" + t.name);
    }
    return ts;
  }

  template <typename Build>
  Formula guarded(const Token& at, Build build) {
    try {
      return build();
    } catch (const Error& e) {
      error(at, e.what());
    }
  }

  Formula atom() {
    const Token& start = peek();
    if (start.kind == Tok::Bang) {
      next();
      const Token& name = peek();
      if (name.kind != Tok::Ident || is_keyword(name.text) || peek(1).kind != Tok::LParen) {
        error(start, "NNF violation: negation may only prefix a relational atom");
      }
      next();
      next();
      Terms args = term_list(false);
      expect(Tok::RParen, "')'");
      return Formula::neg_rel(name.text, std::move(args));
    }
    if (start.kind == Tok::Ident && peek(1).kind == Tok::LParen) {
      next();
      next();
      if (start.text == "inc") {
        Terms lhs = term_list(false);
        expect(Tok::Semi, "';' in inclusion atom");
        Terms rhs = term_list(false);
        expect(Tok::RParen, "')'");
        if (lhs.size() != rhs.size()) error(start, "inclusion arity mismatch");
        return Formula::inc(std::move(lhs), std::move(rhs));
      }
      if (start.text == "dep") {
        Terms ante = var_list(true);
        expect(Tok::Semi, "';' in dependence atom");
        Terms cons = var_list(false);
        if (cons.size() != 1) error(start, "dependence atom takes exactly one dependent variable");
        expect(Tok::RParen, "')'");
        return Formula::dep(std::move(ante), cons[0]);
      }
      if (start.text == "cind") {
        Terms cond = var_list(true);
        expect(Tok::Semi, "';' in independence atom");
        Terms left = var_list(false);
        expect(Tok::Semi, "';' in independence atom");
        Terms right = var_list(false);
        expect(Tok::RParen, "')'");
        return Formula::cind(std::move(cond), std::move(left), std::move(right));
      }
      if (start.text == "ind") {
        Terms left = var_list(false);
        expect(Tok::Semi, "';' in independence atom");
        Terms right = var_list(false);
        expect(Tok::RParen, "')'");
        return Formula::ind(std::move(left), std::move(right));
      }
      if (is_keyword(start.text)) error(start, "keyword '" + start.text + "' is not a relation");
      Terms args = term_list(false);
      expect(Tok::RParen, "')'");
      return guarded(start, [&] { return Formula::rel(start.text, std::move(args)); });
    }
    if (start.kind == Tok::Ident || start.kind == Tok::Hash) {
      Term lhs = term();
      const Token& op = peek();
      if (op.kind != Tok::Eq && op.kind != Tok::Neq) error(op, "expected '=' or '!='");
      next();
      Term rhs = term();
      return op.kind == Tok::Eq ? Formula::eq(lhs, rhs) : Formula::neq(lhs, rhs);
    }
    error(start, "expected an atom or '('");
  }

  std::string_view src_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::string render_term(const Term& t) { return t.is_var() ? t.name : "#" + t.name; }

std::string render_terms(const Terms& ts) {
  std::string out;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i) out += ", ";
    out += render_term(ts[i]);
  }
  return out;
}

std::string render_groups(const std::vector<Terms>& groups) {
  std::string out;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (i) out += "; ";
    out += render_terms(groups[i]);
  }
  return out;
}

enum class Slot { Top, OrLeft, OrRight, AndLeft, AndRight };

void render_into(const Formula& f, Slot slot, std::string& out) {
  auto wrap = [&](bool parens, auto&& body) {
    if (parens) out += '(';
    body();
    if (parens) out += ')';
  };
  switch (f.kind()) {
    case NodeKind::Rel:
      out += f.symbol() + "(" + render_terms(f.groups()[0]) + ")";
      return;
    case NodeKind::NegRel:
      out += "!" + f.symbol() + "(" + render_terms(f.groups()[0]) + ")";
      return;
    case NodeKind::Eq:
      out += render_term(f.groups()[0][0]) + " = " + render_term(f.groups()[1][0]);
      return;
    case NodeKind::Neq:
      out += render_term(f.groups()[0][0]) + " != " + render_term(f.groups()[1][0]);
      return;
    case NodeKind::Inc:
    case NodeKind::Dep:
    case NodeKind::CInd:
    case NodeKind::Ind:
      out += to_string(f.kind()) + "(" + render_groups(f.groups()) + ")";
      return;
    case NodeKind::And:
      wrap(slot == Slot::AndRight, [&] {
        render_into(f.lhs(), Slot::AndLeft, out);
        out += " & ";
        render_into(f.rhs(), Slot::AndRight, out);
      });
      return;
    case NodeKind::Or:
      wrap(slot == Slot::AndLeft || slot == Slot::AndRight || slot == Slot::OrRight, [&] {
        render_into(f.lhs(), Slot::OrLeft, out);
        out += " | ";
        render_into(f.rhs(), Slot::OrRight, out);
      });
      return;
    case NodeKind::Exists:
    case NodeKind::Forall:
      wrap(slot != Slot::Top, [&] {
        out += f.kind() == NodeKind::Forall ? "forall " : "exists ";
        out += f.symbol() + ". ";
        render_into(f.body(), Slot::Top, out);
      });
      return;
  }
}

}  // namespace

Formula parse(std::string_view text) { return Parser(text).run(); }

std::string render(const Formula& f) {
  std::string out;
  render_into(f, Slot::Top, out);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << render(f); }

}  // namespace teamlogic
