// Copyright 2026 The Authors.
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

// Arithmetic expressions for bound and cap rules, e.g.
// "floor(0.9 * share * k)" or "min(u, n_g)".
//
// Grammar: numbers, variables, + - * /, unary minus, parentheses and the
// functions floor, ceil, round, abs (one argument) and min, max (two).

#ifndef FAIRMAT_HARNESS_EXPRESSION_H_
#define FAIRMAT_HARNESS_EXPRESSION_H_

#include <map>
#include <memory>
#include <stdexcept>
#include <string>

namespace fairmat::harness {

struct ExpressionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Variables = std::map<std::string, double>;

class Expression {
 public:
  // Throws ExpressionError on malformed input.
  static Expression Parse(const std::string& text);

  // Throws ExpressionError on unknown variables or division by zero.
  double Evaluate(const Variables& vars) const;
  const std::string& text() const { return text_; }

  struct Node;

 private:
  std::string text_;
  std::shared_ptr<const Node> root_;
};

}  // namespace fairmat::harness

#endif  // FAIRMAT_HARNESS_EXPRESSION_H_
