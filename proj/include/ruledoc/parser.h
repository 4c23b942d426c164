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

#ifndef RULEDOC_PARSER_H_
#define RULEDOC_PARSER_H_

#include <string>
#include <string_view>
#include <vector>

#include "ruledoc/ast.h"
#include "ruledoc/error.h"

namespace ruledoc {

// Syntax error with a 1-based position and the set of tokens that would have
// been accepted there.
class ParseError : public Error {
 public:
  ParseError(int line, int column, std::vector<std::string> expected,
             const std::string &message)
      : Error("E_PARSE", message),
        line_(line),
        column_(column),
        expected_(std::move(expected)) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::vector<std::string> &expected() const { return expected_; }

 private:
  int line_;
  int column_;
  std::vector<std::string> expected_;
};

// Parses a `.rules` document:
//
//   ruleset := { rule }
//   rule    := "<" label ">" "if" conj { "or" conj } "then" atom ";"
//   label   := IDENT { "+" IDENT }
//   conj    := atom { "and" atom }
//   atom    := IDENT "(" [ term { "," term } ] ")" | IDENT
//   term    := "?" IDENT | IDENT
//
// `//` starts a comment running to the end of the line. The keywords `if`,
// `and`, `or` and `then` are reserved.
RuleSet ParseRuleSet(std::string_view text);

// Parses a facts document: one ground atom per line, `//` comments allowed.
std::vector<Atom> ParseFacts(std::string_view text);

}  // namespace ruledoc

#endif  // RULEDOC_PARSER_H_
