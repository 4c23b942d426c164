// Copyright 2026 The ruledoc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ruledoc/parser.h"

#include <cctype>
#include <set>
#include <string>
#include <utility>

namespace ruledoc {
namespace {

enum class Tok {
  kLAngle,
  kRAngle,
  kLParen,
  kRParen,
  kComma,
  kSemicolon,
  kQuestion,
  kPlus,
  kIdent,
  kIf,
  kAnd,
  kOr,
  kThen,
  kEnd,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::string Describe(Tok kind) {
  switch (kind) {
    case Tok::kLAngle: return "'<'";
    case Tok::kRAngle: return "'>'";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kComma: return "','";
    case Tok::kSemicolon: return "';'";
    case Tok::kQuestion: return "'?'";
    case Tok::kPlus: return "'+'";
    case Tok::kIdent: return "identifier";
    case Tok::kIf: return "'if'";
    case Tok::kAnd: return "'and'";
    case Tok::kOr: return "'or'";
    case Tok::kThen: return "'then'";
    case Tok::kEnd: return "end of input";
  }
  return "?";
}

std::string Describe(const Token &tok) {
  if (tok.kind == Tok::kIdent) return "identifier '" + tok.text + "'";
  return Describe(tok.kind);
}

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0;
}

bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

// Splits the input into tokens. The end-of-input token is positioned on the
// last character of the input so every reported position lies inside it.
class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> Tokenize() {
    std::vector<Token> tokens;
    while (true) {
      SkipBlanks();
      if (pos_ >= text_.size()) break;
      const int line = line_;
      const int column = column_;
      const char c = text_[pos_];
      Tok kind;
      switch (c) {
        case '<': kind = Tok::kLAngle; break;
        case '>': kind = Tok::kRAngle; break;
        case '(': kind = Tok::kLParen; break;
        case ')': kind = Tok::kRParen; break;
        case ',': kind = Tok::kComma; break;
        case ';': kind = Tok::kSemicolon; break;
        case '?': kind = Tok::kQuestion; break;
        case '+': kind = Tok::kPlus; break;
        default:
          if (!IsIdentStart(c)) {
            throw ParseError(line, column, {},
                             Position(line, column) +
                                 ": unexpected character '" +
                                 std::string(1, c) + "'");
          }
          kind = Tok::kIdent;
      }
      if (kind != Tok::kIdent) {
        Advance();
        tokens.push_back({kind, std::string(1, c), line, column});
        continue;
      }
      const size_t start = pos_;
      while (pos_ < text_.size() && IsIdentChar(text_[pos_])) Advance();
      std::string word(text_.substr(start, pos_ - start));
      if (word == "if") {
        kind = Tok::kIf;
      } else if (word == "and") {
        kind = Tok::kAnd;
      } else if (word == "or") {
        kind = Tok::kOr;
      } else if (word == "then") {
        kind = Tok::kThen;
      }
      tokens.push_back({kind, std::move(word), line, column});
    }
    tokens.push_back({Tok::kEnd, "", end_line_, end_column_});
    return tokens;
  }

  static std::string Position(int line, int column) {
    return std::to_string(line) + ":" + std::to_string(column);
  }

 private:
  void Advance() {
    end_line_ = line_;
    end_column_ = column_;
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void SkipBlanks() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        Advance();
      } else if (c == '/' && pos_ + 1 < text_.size() &&
                 text_[pos_ + 1] == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') Advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  int end_line_ = 1;
  int end_column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(Lexer(text).Tokenize()) {}

  RuleSet ParseRules() {
    RuleSet rs;
    std::set<std::string> labels;
    while (Peek().kind != Tok::kEnd) {
      if (Peek().kind != Tok::kLAngle) Fail({Tok::kLAngle, Tok::kEnd});
      const Token &label_tok = tokens_[pos_ + 1];
      Rule rule = ParseRule();
      if (!labels.insert(rule.label).second) {
        throw ParseError(label_tok.line, label_tok.column, {},
                         Lexer::Position(label_tok.line, label_tok.column) +
                             ": duplicate rule label '" + rule.label + "'");
      }
      rs.rules.push_back(std::move(rule));
    }
    return rs;
  }

  std::vector<Atom> ParseFactList() {
    std::vector<Atom> facts;
    int last_line = 0;
    while (Peek().kind != Tok::kEnd) {
      const Token start = Peek();
      if (start.line == last_line) {
        throw ParseError(start.line, start.column, {"newline"},
                         Lexer::Position(start.line, start.column) +
                             ": expected one fact per line");
      }
      Atom atom = ParseAtom();
      if (!atom.IsGround()) {
        throw ParseError(start.line, start.column, {},
                         Lexer::Position(start.line, start.column) +
                             ": fact '" + ToString(atom) +
                             "' contains a variable");
      }
      last_line = tokens_[pos_ - 1].line;
      facts.push_back(std::move(atom));
    }
    return facts;
  }

 private:
  const Token &Peek() const { return tokens_[pos_]; }

  const Token &Expect(Tok kind) {
    if (Peek().kind != kind) Fail({kind});
    return tokens_[pos_++];
  }

  bool Accept(Tok kind) {
    if (Peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void Fail(std::initializer_list<Tok> expected) const {
    const Token &tok = Peek();
    std::vector<std::string> names;
    std::string joined;
    for (Tok t : expected) {
      names.push_back(Describe(t));
      if (!joined.empty()) joined += " or ";
      joined += Describe(t);
    }
    throw ParseError(tok.line, tok.column, names,
                     Lexer::Position(tok.line, tok.column) + ": expected " +
                         joined + " but found " + Describe(tok));
  }

  Rule ParseRule() {
    Rule rule;
    rule.line = Expect(Tok::kLAngle).line;
    rule.origin.push_back(Expect(Tok::kIdent).text);
    while (Accept(Tok::kPlus)) rule.origin.push_back(Expect(Tok::kIdent).text);
    for (size_t i = 0; i < rule.origin.size(); ++i) {
      if (i > 0) rule.label += '+';
      rule.label += rule.origin[i];
    }
    if (Peek().kind != Tok::kRAngle) Fail({Tok::kPlus, Tok::kRAngle});
    ++pos_;
    Expect(Tok::kIf);
    rule.premises.push_back(ParseConjunction());
    while (Accept(Tok::kOr)) rule.premises.push_back(ParseConjunction());
    if (Peek().kind != Tok::kThen) Fail({Tok::kAnd, Tok::kOr, Tok::kThen});
    ++pos_;
    rule.conclusion = ParseAtom();
    Expect(Tok::kSemicolon);
    return rule;
  }

  Conjunction ParseConjunction() {
    Conjunction conj;
    conj.atoms.push_back(ParseAtom());
    while (Accept(Tok::kAnd)) conj.atoms.push_back(ParseAtom());
    return conj;
  }

  Atom ParseAtom() {
    Atom atom;
    atom.predicate = Expect(Tok::kIdent).text;
    if (!Accept(Tok::kLParen)) return atom;
    if (Accept(Tok::kRParen)) return atom;
    atom.args.push_back(ParseTerm());
    while (Accept(Tok::kComma)) atom.args.push_back(ParseTerm());
    if (Peek().kind != Tok::kRParen) Fail({Tok::kComma, Tok::kRParen});
    ++pos_;
    return atom;
  }

  Term ParseTerm() {
    if (Accept(Tok::kQuestion)) {
      return Term::Variable(Expect(Tok::kIdent).text);
    }
    if (Peek().kind != Tok::kIdent) Fail({Tok::kQuestion, Tok::kIdent});
    return Term::Constant(tokens_[pos_++].text);
  }

  std::vector<Token> tokens_;
  size_t pos_ = 0;
};

}  // namespace

RuleSet ParseRuleSet(std::string_view text) {
  return Parser(text).ParseRules();
}

std::vector<Atom> ParseFacts(std::string_view text) {
  return Parser(text).ParseFactList();
}

}  // namespace ruledoc
