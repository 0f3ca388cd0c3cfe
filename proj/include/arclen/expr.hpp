// Copyright 2026 The arclen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ARCLEN_EXPR_HPP
#define ARCLEN_EXPR_HPP

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace arclen {

enum class UnaryOp { neg, sin, cos, tan, atan, exp, log, sqrt, sinh, cosh, abs };
enum class BinaryOp { add, sub, mul, div, pow };
enum class NamedConstant { pi, e };

std::string_view to_string(UnaryOp op);
std::string_view to_string(BinaryOp op);

struct ExprNode;

/// Immutable expression tree for a real function of the single variable x.
///
/// Copies share structure. Subtrees may be shared between several parents
/// (the graph is a DAG), but never cyclic.
class Expr {
 public:
    /// Defaults to the constant 0.
    Expr();

    static Expr constant(double value);
    static Expr named(NamedConstant which);
    static Expr variable();
    static Expr unary(UnaryOp op, Expr child);
    static Expr binary(BinaryOp op, Expr left, Expr right);

    const ExprNode& node() const { return *node_; }

    bool is_constant() const;
    bool is_constant(double value) const;
    bool is_variable() const;
    /// True when the subtree does not mention x.
    bool is_x_free() const;

    /// Structural equality. Constants compare with ==.
    friend bool operator==(const Expr& lhs, const Expr& rhs);

 private:
    explicit Expr(std::shared_ptr<const ExprNode> node) : node_(std::move(node)) {}
    std::shared_ptr<const ExprNode> node_;
};

struct ConstantNode {
    double value;
};
struct NamedConstantNode {
    NamedConstant which;
};
struct VariableNode {};
struct UnaryNode {
    UnaryOp op;
    Expr child;
};
struct BinaryNode {
    BinaryOp op;
    Expr left;
    Expr right;
};

struct ExprNode {
    std::variant<ConstantNode, NamedConstantNode, VariableNode, UnaryNode, BinaryNode> v;
};

// Builders. These construct nodes verbatim; call simplify() to tidy up.
Expr operator+(Expr lhs, Expr rhs);
Expr operator-(Expr lhs, Expr rhs);
Expr operator*(Expr lhs, Expr rhs);
Expr operator/(Expr lhs, Expr rhs);
Expr operator-(Expr operand);
Expr operator+(double lhs, Expr rhs);
Expr operator+(Expr lhs, double rhs);
Expr operator-(double lhs, Expr rhs);
Expr operator-(Expr lhs, double rhs);
Expr operator*(double lhs, Expr rhs);
Expr operator*(Expr lhs, double rhs);
Expr operator/(double lhs, Expr rhs);
Expr operator/(Expr lhs, double rhs);
Expr pow(Expr base, Expr exponent);
Expr pow(Expr base, double exponent);
Expr sqrt(Expr e);
Expr log(Expr e);
Expr exp(Expr e);
Expr sin(Expr e);
Expr cos(Expr e);
Expr tan(Expr e);
Expr atan(Expr e);
Expr sinh(Expr e);
Expr cosh(Expr e);
Expr abs(Expr e);

class ParseError : public std::runtime_error {
 public:
    ParseError(const std::string& what, std::size_t position);
    std::size_t position() const { return position_; }

 private:
    std::size_t position_;
};

/// Base for evaluation failures. Carries the x at which evaluation was
/// requested and the path from the root to the failing node, written as
/// e.g. "root.left.child".
class EvalError : public std::runtime_error {
 public:
    EvalError(std::string detail, double x);
    const char* what() const noexcept override { return message_.c_str(); }

    double x() const { return x_; }
    const std::string& path() const { return path_; }

    void set_x(double x);
    void prepend_step(std::string_view step);

 private:
    void rebuild();

    std::string detail_;
    double x_;
    std::string path_;
    std::string message_;
};

enum class DomainOp { log, sqrt, div, pow };
std::string_view to_string(DomainOp op);

/// log of a value <= 0, sqrt of a negative, division by zero, or a pow
/// without a real result.
class EvalDomainError : public EvalError {
 public:
    EvalDomainError(DomainOp op, double argument, double x = 0.0);
    DomainOp op() const { return op_; }
    double argument() const { return argument_; }

 private:
    DomainOp op_;
    double argument_;
};

/// A node produced a non-finite value from finite inputs.
class EvalOverflowError : public EvalError {
 public:
    EvalOverflowError(std::string_view node_label, double x = 0.0);
};

class DifferentiationError : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

/// Parses the whitespace-insensitive grammar
///   expr   := term (("+"|"-") term)*
///   term   := factor (("*"|"/") factor)*
///   factor := "-" factor | power
///   power  := atom ("^" factor)?
///   atom   := number | "x" | "pi" | "e" | func "(" expr ")" | "(" expr ")"
/// A minus sign written directly in front of a numeric literal that is not
/// raised to a power folds into a negative constant, so "-2" is
/// Constant(-2) while "-(2)" and "-2^2" keep the negation node.
Expr parse(std::string_view text);

/// Evaluates f at x in double precision.
double eval(const Expr& f, double x);

Expr differentiate(const Expr& f);
Expr simplify(const Expr& f);
/// Replaces every occurrence of x in f by `replacement`.
Expr substitute(const Expr& f, const Expr& replacement);

/// Renders f so that parse(format(f)) == f.
std::string format(const Expr& f);

/// Shortest decimal text that reads back to exactly `value`.
std::string format_number(double value);

}  // namespace arclen

#endif  // ARCLEN_EXPR_HPP
