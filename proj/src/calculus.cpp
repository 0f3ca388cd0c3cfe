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

// Symbolic differentiation, local simplification and substitution.

#include <cmath>
#include <optional>

#include "arclen/expr.hpp"
#include "expr_internal.hpp"

namespace arclen {

namespace {

std::optional<double> constant_value(const Expr& e) {
    if (const auto* c = std::get_if<ConstantNode>(&e.node().v)) return c->value;
    return std::nullopt;
}

const BinaryNode* as_binary(const Expr& e, BinaryOp op) {
    const auto* b = std::get_if<BinaryNode>(&e.node().v);
    return (b != nullptr && b->op == op) ? b : nullptr;
}

const UnaryNode* as_unary(const Expr& e, UnaryOp op) {
    const auto* u = std::get_if<UnaryNode>(&e.node().v);
    return (u != nullptr && u->op == op) ? u : nullptr;
}

bool is_integral(double v) { return std::trunc(v) == v; }

// Folds only when the result is an ordinary finite number.
std::optional<double> try_fold_unary(UnaryOp op, double v) {
    try {
        return detail::apply_unary(op, v);
    } catch (const EvalError&) {
        return std::nullopt;
    }
}

std::optional<double> try_fold_binary(BinaryOp op, double l, double r) {
    try {
        return detail::apply_binary(op, l, r);
    } catch (const EvalError&) {
        return std::nullopt;
    }
}

// The make_* helpers apply the local rewrite rules to a node whose children
// are already simplified.

Expr make_neg(Expr a) {
    if (auto c = constant_value(a)) return Expr::constant(-*c);
    if (const auto* u = as_unary(a, UnaryOp::neg)) return u->child;
    return -std::move(a);
}

Expr make_unary(UnaryOp op, Expr a) {
    if (op == UnaryOp::neg) return make_neg(std::move(a));
    if (auto c = constant_value(a)) {
        if (auto v = try_fold_unary(op, *c)) return Expr::constant(*v);
    }
    return Expr::unary(op, std::move(a));
}

Expr make_mul(Expr a, Expr b);

Expr make_add(Expr a, Expr b) {
    auto ca = constant_value(a);
    auto cb = constant_value(b);
    if (ca && cb) {
        if (auto v = try_fold_binary(BinaryOp::add, *ca, *cb)) return Expr::constant(*v);
    }
    if (ca && *ca == 0.0) return b;
    if (cb && *cb == 0.0) return a;
    if (const auto* u = as_unary(b, UnaryOp::neg)) return std::move(a) - u->child;
    return std::move(a) + std::move(b);
}

Expr make_sub(Expr a, Expr b) {
    auto ca = constant_value(a);
    auto cb = constant_value(b);
    if (ca && cb) {
        if (auto v = try_fold_binary(BinaryOp::sub, *ca, *cb)) return Expr::constant(*v);
    }
    if (cb && *cb == 0.0) return a;
    if (ca && *ca == 0.0) return make_neg(std::move(b));
    if (const auto* u = as_unary(b, UnaryOp::neg)) return std::move(a) + u->child;
    return std::move(a) - std::move(b);
}

Expr make_mul(Expr a, Expr b) {
    auto ca = constant_value(a);
    auto cb = constant_value(b);
    if (ca && cb) {
        if (auto v = try_fold_binary(BinaryOp::mul, *ca, *cb)) return Expr::constant(*v);
    }
    // Keep a lone numeric factor on the left.
    if (cb && !ca) {
        std::swap(a, b);
        std::swap(ca, cb);
    }
    if (ca) {
        if (*ca == 0.0) return Expr::constant(0.0);
        if (*ca == 1.0) return b;
        if (*ca == -1.0) return make_neg(std::move(b));
        if (const auto* inner = as_binary(b, BinaryOp::mul)) {
            if (auto ci = constant_value(inner->left)) {
                if (auto v = try_fold_binary(BinaryOp::mul, *ca, *ci)) {
                    return make_mul(Expr::constant(*v), inner->right);
                }
            }
        }
        if (const auto* u = as_unary(b, UnaryOp::neg)) {
            return make_mul(Expr::constant(-*ca), u->child);
        }
    }
    return std::move(a) * std::move(b);
}

Expr make_div(Expr a, Expr b) {
    auto ca = constant_value(a);
    auto cb = constant_value(b);
    if (ca && cb) {
        if (auto v = try_fold_binary(BinaryOp::div, *ca, *cb)) return Expr::constant(*v);
    }
    if (cb && *cb == 1.0) return a;
    if (cb && *cb == -1.0) return make_neg(std::move(a));
    if (ca && *ca == 0.0 && !(cb && *cb == 0.0)) return Expr::constant(0.0);
    if (cb && *cb != 0.0) {
        if (const auto* inner = as_binary(a, BinaryOp::mul)) {
            if (auto ci = constant_value(inner->left)) {
                if (auto v = try_fold_binary(BinaryOp::div, *ci, *cb)) {
                    return make_mul(Expr::constant(*v), inner->right);
                }
            }
        }
    }
    return std::move(a) / std::move(b);
}

Expr make_pow(Expr a, Expr b) {
    auto ca = constant_value(a);
    auto cb = constant_value(b);
    if (ca && cb) {
        if (auto v = try_fold_binary(BinaryOp::pow, *ca, *cb)) return Expr::constant(*v);
    }
    if (cb && *cb == 1.0) return a;
    if (cb && *cb == 0.0) return Expr::constant(1.0);
    if (ca && *ca == 1.0) return Expr::constant(1.0);
    // (u^c1)^c2 = u^(c1 c2) unless c1 is an integer and c2 is not, e.g. (x^2)^0.5 = |x|.
    if (cb) {
        if (const auto* inner = as_binary(a, BinaryOp::pow)) {
            if (auto c1 = constant_value(inner->right)) {
                if (is_integral(*cb) || !is_integral(*c1)) {
                    return make_pow(inner->left, Expr::constant(*c1 * *cb));
                }
            }
        }
    }
    return pow(std::move(a), std::move(b));
}

Expr make_binary(BinaryOp op, Expr a, Expr b) {
    switch (op) {
        case BinaryOp::add: return make_add(std::move(a), std::move(b));
        case BinaryOp::sub: return make_sub(std::move(a), std::move(b));
        case BinaryOp::mul: return make_mul(std::move(a), std::move(b));
        case BinaryOp::div: return make_div(std::move(a), std::move(b));
        case BinaryOp::pow: return make_pow(std::move(a), std::move(b));
    }
    return Expr::binary(op, std::move(a), std::move(b));
}

Expr derive(const Expr& f);

Expr derive_unary(const UnaryNode& n) {
    const Expr& u = n.child;
    Expr du = derive(u);
    if (du.is_constant(0.0)) return Expr::constant(0.0);
    switch (n.op) {
        case UnaryOp::neg: return make_neg(du);
        case UnaryOp::sin: return make_mul(make_unary(UnaryOp::cos, u), du);
        case UnaryOp::cos: return make_neg(make_mul(make_unary(UnaryOp::sin, u), du));
        case UnaryOp::tan:
            return make_div(du, make_pow(make_unary(UnaryOp::cos, u), Expr::constant(2.0)));
        case UnaryOp::atan:
            return make_div(du, make_add(Expr::constant(1.0), make_pow(u, Expr::constant(2.0))));
        case UnaryOp::exp: return make_mul(make_unary(UnaryOp::exp, u), du);
        case UnaryOp::log: return make_div(du, u);
        case UnaryOp::sqrt:
            return make_div(du, make_mul(Expr::constant(2.0), make_unary(UnaryOp::sqrt, u)));
        case UnaryOp::sinh: return make_mul(make_unary(UnaryOp::cosh, u), du);
        case UnaryOp::cosh: return make_mul(make_unary(UnaryOp::sinh, u), du);
        case UnaryOp::abs: throw DifferentiationError("abs is not differentiable");
    }
    return Expr::constant(0.0);
}

Expr derive_binary(const BinaryNode& n) {
    const Expr& u = n.left;
    const Expr& v = n.right;
    switch (n.op) {
        case BinaryOp::add: return make_add(derive(u), derive(v));
        case BinaryOp::sub: return make_sub(derive(u), derive(v));
        case BinaryOp::mul: {
            if (u.is_x_free()) return make_mul(u, derive(v));
            if (v.is_x_free()) return make_mul(derive(u), v);
            return make_add(make_mul(derive(u), v), make_mul(u, derive(v)));
        }
        case BinaryOp::div: {
            if (v.is_x_free()) return make_div(derive(u), v);
            Expr numerator = make_sub(make_mul(derive(u), v), make_mul(u, derive(v)));
            return make_div(numerator, make_pow(v, Expr::constant(2.0)));
        }
        case BinaryOp::pow: {
            if (v.is_x_free()) {
                // d(u^c) = c * u^(c-1) * u'
                Expr lowered = make_pow(u, make_sub(v, Expr::constant(1.0)));
                return make_mul(make_mul(v, lowered), derive(u));
            }
            Expr self = make_pow(u, v);
            if (u.is_x_free()) {
                return make_mul(make_mul(self, make_unary(UnaryOp::log, u)), derive(v));
            }
            // d(u^v) = u^v * (v' log u + v u'/u)
            Expr inner = make_add(make_mul(derive(v), make_unary(UnaryOp::log, u)),
                                  make_div(make_mul(v, derive(u)), u));
            return make_mul(self, inner);
        }
    }
    return Expr::constant(0.0);
}

Expr derive(const Expr& f) {
    return std::visit(
        [](const auto& n) -> Expr {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, VariableNode>) {
                return Expr::constant(1.0);
            } else if constexpr (std::is_same_v<T, UnaryNode>) {
                return derive_unary(n);
            } else if constexpr (std::is_same_v<T, BinaryNode>) {
                return derive_binary(n);
            } else {
                return Expr::constant(0.0);
            }
        },
        f.node().v);
}

}  // namespace

Expr simplify(const Expr& f) {
    return std::visit(
        [&f](const auto& n) -> Expr {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, UnaryNode>) {
                return make_unary(n.op, simplify(n.child));
            } else if constexpr (std::is_same_v<T, BinaryNode>) {
                return make_binary(n.op, simplify(n.left), simplify(n.right));
            } else {
                return f;
            }
        },
        f.node().v);
}

Expr differentiate(const Expr& f) { return simplify(derive(simplify(f))); }

Expr substitute(const Expr& f, const Expr& replacement) {
    return std::visit(
        [&f, &replacement](const auto& n) -> Expr {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, VariableNode>) {
                return replacement;
            } else if constexpr (std::is_same_v<T, UnaryNode>) {
                if (n.child.is_x_free()) return f;
                return Expr::unary(n.op, substitute(n.child, replacement));
            } else if constexpr (std::is_same_v<T, BinaryNode>) {
                if (f.is_x_free()) return f;
                return Expr::binary(n.op, substitute(n.left, replacement), substitute(n.right, replacement));
            } else {
                return f;
            }
        },
        f.node().v);
}

}  // namespace arclen
