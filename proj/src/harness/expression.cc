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

#include "fairmat/harness/expression.h"

#include <cctype>
#include <cmath>
#include <vector>

namespace fairmat::harness {

struct Expression::Node {
  enum class Kind { kNumber, kVariable, kUnary, kBinary, kCall } kind;
  double number = 0.0;
  std::string name;  // variable, function or operator
  std::vector<std::shared_ptr<const Node>> args;
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Kind = Expression::Node::Kind;

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  NodePtr ParseAll() {
    NodePtr node = ParseSum();
    SkipSpace();
    if (pos_ != text_.size()) Fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return node;
  }

 private:
  [[noreturn]] void Fail(const std::string& what) const {
    throw ExpressionError("expression \"" + text_ + "\": " + what + " at offset " +
                          std::to_string(pos_));
  }

  void SkipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool Accept(char c) {
    SkipSpace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static NodePtr Make(Kind kind, std::string name, std::vector<NodePtr> args) {
    auto node = std::make_shared<Expression::Node>();
    node->kind = kind;
    node->name = std::move(name);
    node->args = std::move(args);
    return node;
  }

  NodePtr ParseSum() {
    NodePtr left = ParseProduct();
    while (true) {
      if (Accept('+')) {
        left = Make(Kind::kBinary, "+", {left, ParseProduct()});
      } else if (Accept('-')) {
        left = Make(Kind::kBinary, "-", {left, ParseProduct()});
      } else {
        return left;
      }
    }
  }

  NodePtr ParseProduct() {
    NodePtr left = ParseUnary();
    while (true) {
      if (Accept('*')) {
        left = Make(Kind::kBinary, "*", {left, ParseUnary()});
      } else if (Accept('/')) {
        left = Make(Kind::kBinary, "/", {left, ParseUnary()});
      } else {
        return left;
      }
    }
  }

  NodePtr ParseUnary() {
    if (Accept('-')) return Make(Kind::kUnary, "-", {ParseUnary()});
    if (Accept('+')) return ParseUnary();
    return ParsePrimary();
  }

  NodePtr ParsePrimary() {
    SkipSpace();
    if (pos_ >= text_.size()) Fail("unexpected end");
    if (Accept('(')) {
      NodePtr inner = ParseSum();
      if (!Accept(')')) Fail("missing ')'");
      return inner;
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      size_t used = 0;
      double value = 0.0;
      try {
        value = std::stod(text_.substr(pos_), &used);
      } catch (const std::exception&) {
        Fail("bad number");
      }
      pos_ += used;
      auto node = std::make_shared<Expression::Node>();
      node->kind = Kind::kNumber;
      node->number = value;
      return node;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name = text_.substr(start, pos_ - start);
      if (!Accept('(')) return Make(Kind::kVariable, std::move(name), {});
      std::vector<NodePtr> args;
      if (!Accept(')')) {
        do {
          args.push_back(ParseSum());
        } while (Accept(','));
        if (!Accept(')')) Fail("missing ')'");
      }
      const bool unary = name == "floor" || name == "ceil" || name == "round" ||
                         name == "abs";
      const bool binary = name == "min" || name == "max";
      if (!unary && !binary) Fail("unknown function '" + name + "'");
      if (args.size() != (unary ? 1u : 2u)) Fail("wrong argument count for " + name);
      return Make(Kind::kCall, std::move(name), std::move(args));
    }
    Fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& text_;
  size_t pos_ = 0;
};

double Eval(const Expression::Node& node, const Variables& vars,
            const std::string& text) {
  switch (node.kind) {
    case Kind::kNumber:
      return node.number;
    case Kind::kVariable: {
      auto it = vars.find(node.name);
      if (it == vars.end()) {
        throw ExpressionError("expression \"" + text + "\": unknown variable '" +
                              node.name + "'");
      }
      return it->second;
    }
    case Kind::kUnary:
      return -Eval(*node.args[0], vars, text);
    case Kind::kBinary: {
      const double a = Eval(*node.args[0], vars, text);
      const double b = Eval(*node.args[1], vars, text);
      if (node.name == "+") return a + b;
      if (node.name == "-") return a - b;
      if (node.name == "*") return a * b;
      if (b == 0.0) throw ExpressionError("expression \"" + text + "\": division by zero");
      return a / b;
    }
    case Kind::kCall: {
      const double a = Eval(*node.args[0], vars, text);
      if (node.name == "floor") return std::floor(a + 1e-9);
      if (node.name == "ceil") return std::ceil(a - 1e-9);
      if (node.name == "round") return std::round(a);
      if (node.name == "abs") return std::abs(a);
      const double b = Eval(*node.args[1], vars, text);
      return node.name == "min" ? std::min(a, b) : std::max(a, b);
    }
  }
  return 0.0;
}

}  // namespace

Expression Expression::Parse(const std::string& text) {
  Expression expression;
  expression.text_ = text;
  expression.root_ = Parser(expression.text_).ParseAll();
  return expression;
}

double Expression::Evaluate(const Variables& vars) const {
  return Eval(*root_, vars, text_);
}

}  // namespace fairmat::harness
