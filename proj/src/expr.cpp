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

#include "arclen/expr.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

#include "expr_internal.hpp"

namespace arclen {

std::string_view to_string(UnaryOp op) {
    switch (op) {
        case UnaryOp::neg: return "neg";
        case UnaryOp::sin: return "sin";
        case UnaryOp::cos: return "cos";
        case UnaryOp::tan: return "tan";
        case UnaryOp::atan: return "atan";
        case UnaryOp::exp: return "exp";
        case UnaryOp::log: return "log";
        case UnaryOp::sqrt: return "sqrt";
        case UnaryOp::sinh: return "sinh";
        case UnaryOp::cosh: return "cosh";
        case UnaryOp::abs: return "abs";
    }
    return "?";
}

std::string_view to_string(BinaryOp op) {
    switch (op) {
        case BinaryOp::add: return "add";
        case BinaryOp::sub: return "sub";
        case BinaryOp::mul: return "mul";
        case BinaryOp::div: return "div";
        case BinaryOp::pow: return "pow";
    }
    return "?";
}

std::string_view to_string(DomainOp op) {
    switch (op) {
        case DomainOp::log: return "log";
        case DomainOp::sqrt: return "sqrt";
        case DomainOp::div: return "div";
        case DomainOp::pow: return "pow";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Construction

Expr::Expr() : Expr(constant(0.0)) {}

Expr Expr::constant(double value) {
    if (!std::isfinite(value)) {
        throw std::invalid_argument("expression constants must be finite");
    }
    // Normalize -0 so structural equality and formatting agree.
    if (value == 0.0) value = 0.0;
    return Expr(std::make_shared<const ExprNode>(ExprNode{ConstantNode{value}}));
}

Expr Expr::named(NamedConstant which) {
    return Expr(std::make_shared<const ExprNode>(ExprNode{NamedConstantNode{which}}));
}

Expr Expr::variable() {
    static const Expr x(std::make_shared<const ExprNode>(ExprNode{VariableNode{}}));
    return x;
}

Expr Expr::unary(UnaryOp op, Expr child) {
    return Expr(std::make_shared<const ExprNode>(ExprNode{UnaryNode{op, std::move(child)}}));
}

Expr Expr::binary(BinaryOp op, Expr left, Expr right) {
    return Expr(std::make_shared<const ExprNode>(
        ExprNode{BinaryNode{op, std::move(left), std::move(right)}}));
}

bool Expr::is_constant() const { return std::holds_alternative<ConstantNode>(node_->v); }

bool Expr::is_constant(double value) const {
    const auto* c = std::get_if<ConstantNode>(&node_->v);
    return c != nullptr && c->value == value;
}

bool Expr::is_variable() const { return std::holds_alternative<VariableNode>(node_->v); }

bool Expr::is_x_free() const {
    return std::visit(
        [](const auto& n) -> bool {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, VariableNode>) {
                return false;
            } else if constexpr (std::is_same_v<T, UnaryNode>) {
                return n.child.is_x_free();
            } else if constexpr (std::is_same_v<T, BinaryNode>) {
                return n.left.is_x_free() && n.right.is_x_free();
            } else {
                return true;
            }
        },
        node_->v);
}

bool operator==(const Expr& lhs, const Expr& rhs) {
    if (lhs.node_ == rhs.node_) return true;
    const auto& a = lhs.node_->v;
    const auto& b = rhs.node_->v;
    if (a.index() != b.index()) return false;
    return std::visit(
        [&b](const auto& n) -> bool {
            using T = std::decay_t<decltype(n)>;
            const auto& m = std::get<T>(b);
            if constexpr (std::is_same_v<T, ConstantNode>) {
                return n.value == m.value;
            } else if constexpr (std::is_same_v<T, NamedConstantNode>) {
                return n.which == m.which;
            } else if constexpr (std::is_same_v<T, VariableNode>) {
                return true;
            } else if constexpr (std::is_same_v<T, UnaryNode>) {
                return n.op == m.op && n.child == m.child;
            } else {
                return n.op == m.op && n.left == m.left && n.right == m.right;
            }
        },
        a);
}

Expr operator+(Expr lhs, Expr rhs) { return Expr::binary(BinaryOp::add, std::move(lhs), std::move(rhs)); }
Expr operator-(Expr lhs, Expr rhs) { return Expr::binary(BinaryOp::sub, std::move(lhs), std::move(rhs)); }
Expr operator*(Expr lhs, Expr rhs) { return Expr::binary(BinaryOp::mul, std::move(lhs), std::move(rhs)); }
Expr operator/(Expr lhs, Expr rhs) { return Expr::binary(BinaryOp::div, std::move(lhs), std::move(rhs)); }
Expr operator-(Expr operand) { return Expr::unary(UnaryOp::neg, std::move(operand)); }
Expr operator+(double lhs, Expr rhs) { return Expr::constant(lhs) + std::move(rhs); }
Expr operator+(Expr lhs, double rhs) { return std::move(lhs) + Expr::constant(rhs); }
Expr operator-(double lhs, Expr rhs) { return Expr::constant(lhs) - std::move(rhs); }
Expr operator-(Expr lhs, double rhs) { return std::move(lhs) - Expr::constant(rhs); }
Expr operator*(double lhs, Expr rhs) { return Expr::constant(lhs) * std::move(rhs); }
Expr operator*(Expr lhs, double rhs) { return std::move(lhs) * Expr::constant(rhs); }
Expr operator/(double lhs, Expr rhs) { return Expr::constant(lhs) / std::move(rhs); }
Expr operator/(Expr lhs, double rhs) { return std::move(lhs) / Expr::constant(rhs); }
Expr pow(Expr base, Expr exponent) {
    return Expr::binary(BinaryOp::pow, std::move(base), std::move(exponent));
}
Expr pow(Expr base, double exponent) { return pow(std::move(base), Expr::constant(exponent)); }
Expr sqrt(Expr e) { return Expr::unary(UnaryOp::sqrt, std::move(e)); }
Expr log(Expr e) { return Expr::unary(UnaryOp::log, std::move(e)); }
Expr exp(Expr e) { return Expr::unary(UnaryOp::exp, std::move(e)); }
Expr sin(Expr e) { return Expr::unary(UnaryOp::sin, std::move(e)); }
Expr cos(Expr e) { return Expr::unary(UnaryOp::cos, std::move(e)); }
Expr tan(Expr e) { return Expr::unary(UnaryOp::tan, std::move(e)); }
Expr atan(Expr e) { return Expr::unary(UnaryOp::atan, std::move(e)); }
Expr sinh(Expr e) { return Expr::unary(UnaryOp::sinh, std::move(e)); }
Expr cosh(Expr e) { return Expr::unary(UnaryOp::cosh, std::move(e)); }
Expr abs(Expr e) { return Expr::unary(UnaryOp::abs, std::move(e)); }

// ---------------------------------------------------------------------------
// Errors

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)),
      position_(position) {}

EvalError::EvalError(std::string detail, double x)
    : std::runtime_error(detail), detail_(std::move(detail)), x_(x), path_("root") {
    rebuild();
}

void EvalError::set_x(double x) {
    x_ = x;
    rebuild();
}

void EvalError::prepend_step(std::string_view step) {
    // path_ always starts with "root"; insert right after it.
    path_.insert(4, "." + std::string(step));
    rebuild();
}

void EvalError::rebuild() {
    message_ = detail_ + " at x=" + format_number(x_) + " (node " + path_ + ")";
}

EvalDomainError::EvalDomainError(DomainOp op, double argument, double x)
    : EvalError(std::string(to_string(op)) + " domain error: argument " +
                    (std::isfinite(argument) ? format_number(argument) : std::string("non-finite")),
                x),
      op_(op),
      argument_(argument) {}

EvalOverflowError::EvalOverflowError(std::string_view node_label, double x)
    : EvalError("non-finite result from " + std::string(node_label), x) {}

// ---------------------------------------------------------------------------
// Evaluation

namespace detail {

namespace {

bool integral_exponent(double r, long long& k) {
    if (std::abs(r) > 64.0 || std::trunc(r) != r) return false;
    k = static_cast<long long>(r);
    return true;
}

double power_by_squaring(double base, unsigned long long k) {
    double result = 1.0;
    while (k != 0) {
        if ((k & 1ULL) != 0) result *= base;
        k >>= 1;
        if (k != 0) base *= base;
    }
    return result;
}

double checked(double value, std::string_view label) {
    if (!std::isfinite(value)) throw EvalOverflowError(label);
    return value;
}

}  // namespace

double apply_unary(UnaryOp op, double v) {
    switch (op) {
        case UnaryOp::neg: return -v;
        case UnaryOp::sin: return checked(std::sin(v), "sin");
        case UnaryOp::cos: return checked(std::cos(v), "cos");
        case UnaryOp::tan: return checked(std::tan(v), "tan");
        case UnaryOp::atan: return std::atan(v);
        case UnaryOp::exp: return checked(std::exp(v), "exp");
        case UnaryOp::log:
            if (!(v > 0.0)) throw EvalDomainError(DomainOp::log, v);
            return std::log(v);
        case UnaryOp::sqrt:
            if (!(v >= 0.0)) throw EvalDomainError(DomainOp::sqrt, v);
            return std::sqrt(v);
        case UnaryOp::sinh: return checked(std::sinh(v), "sinh");
        case UnaryOp::cosh: return checked(std::cosh(v), "cosh");
        case UnaryOp::abs: return std::abs(v);
    }
    return 0.0;
}

double apply_binary(BinaryOp op, double l, double r) {
    switch (op) {
        case BinaryOp::add: return checked(l + r, "add");
        case BinaryOp::sub: return checked(l - r, "sub");
        case BinaryOp::mul: return checked(l * r, "mul");
        case BinaryOp::div:
            if (r == 0.0) throw EvalDomainError(DomainOp::div, r);
            return checked(l / r, "div");
        case BinaryOp::pow: {
            long long k = 0;
            if (integral_exponent(r, k)) {
                if (k >= 0) return checked(power_by_squaring(l, static_cast<unsigned long long>(k)), "pow");
                if (l == 0.0) throw EvalDomainError(DomainOp::pow, l);
                return checked(1.0 / power_by_squaring(l, static_cast<unsigned long long>(-k)), "pow");
            }
            if (std::trunc(r) == r) {
                // Large integral exponent: negative bases are fine.
                if (l == 0.0 && r < 0.0) throw EvalDomainError(DomainOp::pow, l);
                return checked(std::pow(l, r), "pow");
            }
            if (l < 0.0) throw EvalDomainError(DomainOp::pow, l);
            if (l == 0.0) {
                if (r > 0.0) return 0.0;
                throw EvalDomainError(DomainOp::pow, l);
            }
            return checked(std::pow(l, r), "pow");
        }
    }
    return 0.0;
}

double named_value(NamedConstant which) {
    return which == NamedConstant::pi ? std::numbers::pi : std::numbers::e;
}

}  // namespace detail

namespace {

double eval_node(const Expr& f, double x) {
    return std::visit(
        [x](const auto& n) -> double {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, ConstantNode>) {
                return n.value;
            } else if constexpr (std::is_same_v<T, NamedConstantNode>) {
                return detail::named_value(n.which);
            } else if constexpr (std::is_same_v<T, VariableNode>) {
                return x;
            } else if constexpr (std::is_same_v<T, UnaryNode>) {
                double v = 0.0;
                try {
                    v = eval_node(n.child, x);
                } catch (EvalError& e) {
                    e.prepend_step("child");
                    throw;
                }
                return detail::apply_unary(n.op, v);
            } else {
                double l = 0.0;
                double r = 0.0;
                try {
                    l = eval_node(n.left, x);
                } catch (EvalError& e) {
                    e.prepend_step("left");
                    throw;
                }
                try {
                    r = eval_node(n.right, x);
                } catch (EvalError& e) {
                    e.prepend_step("right");
                    throw;
                }
                return detail::apply_binary(n.op, l, r);
            }
        },
        f.node().v);
}

}  // namespace

double eval(const Expr& f, double x) {
    try {
        return eval_node(f, x);
    } catch (EvalError& e) {
        e.set_x(x);
        throw;
    }
}

// ---------------------------------------------------------------------------
// Formatting

std::string format_number(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc()) return "nan";
    return std::string(buf, end);
}

namespace {

// Binding strength as seen by the grammar.
enum Prec { kSum = 1, kProduct = 2, kNegation = 3, kPower = 4, kAtom = 5 };

int precedence(const Expr& e) {
    const auto& v = e.node().v;
        if (const auto* u = std::get_if<UnaryNode>(&v)) return u->op == UnaryOp::neg ? kNegation : kAtom;
    if (const auto* b = std::get_if<BinaryNode>(&v)) {
        switch (b->op) {
            case BinaryOp::add:
            case BinaryOp::sub: return kSum;
            case BinaryOp::mul:
            case BinaryOp::div: return kProduct;
            case BinaryOp::pow: return kPower;
        }
    }
    return kAtom;
}

void format_into(const Expr& e, std::string& out);

void format_wrapped(const Expr& e, bool wrap, std::string& out) {
    if (wrap) out += '(';
    format_into(e, out);
    if (wrap) out += ')';
}

void format_into(const Expr& e, std::string& out) {
    std::visit(
        [&out](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, ConstantNode>) {
                // Negative literals only read back as constants inside parentheses.
                if (n.value < 0.0) {
                    out += '(';
                    out += format_number(n.value);
                    out += ')';
                } else {
                    out += format_number(n.value);
                }
            } else if constexpr (std::is_same_v<T, NamedConstantNode>) {
                out += n.which == NamedConstant::pi ? "pi" : "e";
            } else if constexpr (std::is_same_v<T, VariableNode>) {
                out += 'x';
            } else if constexpr (std::is_same_v<T, UnaryNode>) {
                if (n.op == UnaryOp::neg) {
                    out += '-';
                    // "-2" would fold into a constant, so a negated literal keeps its parens.
                    const auto* c = std::get_if<ConstantNode>(&n.child.node().v);
                    bool literal = c != nullptr && c->value >= 0.0;
                    format_wrapped(n.child, literal || precedence(n.child) < kNegation, out);
                } else {
                    out += to_string(n.op);
                    format_wrapped(n.child, true, out);
                }
            } else {
                int p = precedence(n.left);
                int q = precedence(n.right);
                switch (n.op) {
                    case BinaryOp::add:
                    case BinaryOp::sub:
                        format_wrapped(n.left, p < kSum, out);
                        out += n.op == BinaryOp::add ? '+' : '-';
                        format_wrapped(n.right, q <= kSum, out);
                        break;
                    case BinaryOp::mul:
                    case BinaryOp::div:
                        format_wrapped(n.left, p < kProduct, out);
                        out += n.op == BinaryOp::mul ? '*' : '/';
                        format_wrapped(n.right, q <= kProduct, out);
                        break;
                    case BinaryOp::pow:
                        format_wrapped(n.left, p < kAtom, out);
                        out += '^';
                        format_wrapped(n.right, q < kNegation, out);
                        break;
                }
            }
        },
        e.node().v);
}

}  // namespace

std::string format(const Expr& f) {
    std::string out;
    format_into(f, out);
    return out;
}

}  // namespace arclen
