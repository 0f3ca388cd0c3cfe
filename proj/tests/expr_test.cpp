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

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "test_support.hpp"

using namespace arclen;

namespace {

const Expr x = Expr::variable();

}  // namespace

TEST(expr_parse, semicubical_example) {
    // 2*x^(3/2)/3 reads as ((2 * x^(3/2)) / 3) with the exponent kept as 3/2.
    Expr expected = (2.0 * pow(x, Expr::constant(3.0) / Expr::constant(2.0))) / 3.0;
    EXPECT_EQ(parse("2*x^(3/2)/3"), expected);
}

TEST(expr_parse, leaves_and_functions) {
    EXPECT_EQ(parse("x"), x);
    EXPECT_EQ(parse("  x "), x);
    EXPECT_EQ(parse("cosh(x)"), Expr::unary(UnaryOp::cosh, x));
    EXPECT_EQ(parse("pi"), Expr::named(NamedConstant::pi));
    EXPECT_EQ(parse("e"), Expr::named(NamedConstant::e));
    EXPECT_EQ(parse("atan(x)"), atan(x));
    EXPECT_EQ(parse("1.5e-3"), Expr::constant(1.5e-3));
    EXPECT_EQ(parse(".5"), Expr::constant(0.5));
}

TEST(expr_parse, precedence) {
    EXPECT_EQ(parse("-x^2"), -pow(x, 2.0));
    EXPECT_EQ(parse("x^2^3"), pow(x, pow(Expr::constant(2.0), 3.0)));
    EXPECT_EQ(parse("1-x-2"), (1.0 - x) - 2.0);
    EXPECT_EQ(parse("x/2/3"), (x / 2.0) / 3.0);
    EXPECT_EQ(parse("1+x*2"), 1.0 + x * 2.0);
    EXPECT_EQ(parse("x^-1"), pow(x, Expr::constant(-1.0)));
    EXPECT_EQ(parse("-2^2"), -pow(Expr::constant(2.0), 2.0));
    EXPECT_EQ(parse("-2"), Expr::constant(-2.0));
    EXPECT_EQ(parse("-(2)"), -Expr::constant(2.0));
    EXPECT_EQ(parse("2*e"), 2.0 * Expr::named(NamedConstant::e));
}

TEST(expr_parse, errors_carry_position) {
    try {
        parse("2*y");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 2u);
        EXPECT_NE(std::string(e.what()).find("unknown identifier 'y'"), std::string::npos);
    }
    EXPECT_THROW(parse("sin x"), ParseError);
    EXPECT_THROW(parse("(x+1"), ParseError);
    EXPECT_THROW(parse("x+"), ParseError);
    EXPECT_THROW(parse(""), ParseError);
    EXPECT_THROW(parse("x)"), ParseError);
    EXPECT_THROW(parse("1e999"), ParseError);
    EXPECT_THROW(parse("log10(x)"), ParseError);
    EXPECT_THROW(parse("x 2"), ParseError);
}

TEST(expr_eval, values) {
    // 8^{3/2} = 16 sqrt 2, so the value is 32 sqrt 2 / 3.
    EXPECT_NEAR(eval(parse("2*x^(3/2)/3"), 8.0), 32.0 * std::numbers::sqrt2 / 3.0, 1e-13);
    EXPECT_EQ(eval(parse("x"), 3.5), 3.5);
    EXPECT_EQ(eval(parse("x^3"), -2.0), -8.0);
    EXPECT_EQ(eval(parse("x^-2"), 2.0), 0.25);
    EXPECT_EQ(eval(parse("x^(1/2)"), 0.0), 0.0);
    EXPECT_EQ(eval(parse("abs(x)"), -2.5), 2.5);
    EXPECT_DOUBLE_EQ(eval(parse("log(e)"), 0.0), 1.0);
    EXPECT_DOUBLE_EQ(eval(parse("7*atan(x)/4"), 1.0), 7.0 * std::numbers::pi / 16.0);
}

TEST(expr_eval, domain_errors) {
    try {
        eval(parse("log(x)"), 0.0);
        FAIL() << "expected EvalDomainError";
    } catch (const EvalDomainError& e) {
        EXPECT_EQ(e.op(), DomainOp::log);
        EXPECT_EQ(e.argument(), 0.0);
        EXPECT_EQ(e.x(), 0.0);
        EXPECT_EQ(e.path(), "root");
    }
    try {
        eval(parse("1 + sqrt(x - 3)"), 2.0);
        FAIL() << "expected EvalDomainError";
    } catch (const EvalDomainError& e) {
        EXPECT_EQ(e.op(), DomainOp::sqrt);
        EXPECT_EQ(e.argument(), -1.0);
        EXPECT_EQ(e.path(), "root.right");
        EXPECT_NE(std::string(e.what()).find("x=2"), std::string::npos);
    }
    EXPECT_THROW(eval(parse("1/(x-1)"), 1.0), EvalDomainError);
    EXPECT_THROW(eval(parse("x^(1/2)"), -1.0), EvalDomainError);
    EXPECT_THROW(eval(parse("x^-1"), 0.0), EvalDomainError);
    EXPECT_THROW(eval(parse("log(x)"), -1.0), EvalDomainError);
}

TEST(expr_eval, overflow_is_an_error_not_nan) {
    EXPECT_THROW(eval(parse("exp(x)"), 1000.0), EvalOverflowError);
    EXPECT_THROW(eval(parse("x*x"), 1e200), EvalOverflowError);
    EXPECT_THROW(eval(parse("cosh(x)"), 800.0), EvalOverflowError);
}

TEST(expr_eval, deterministic) {
    Expr f = parse("sin(x)*exp(x/3) + log(1+x^2) - x^(2/3)");
    for (double v : {0.1, 0.7, 1.9, 13.25}) {
        double first = eval(f, v);
        for (int i = 0; i < 5; ++i) EXPECT_EQ(eval(f, v), first);
    }
}

TEST(expr_differentiate, worked_examples) {
    EXPECT_EQ(differentiate(parse("2*x^(3/2)/3")), pow(x, 0.5));
    EXPECT_EQ(differentiate(parse("7")), Expr::constant(0.0));
    EXPECT_EQ(differentiate(parse("cosh(x)")), sinh(x));
    EXPECT_EQ(differentiate(parse("x^2/2")), x);
    EXPECT_EQ(differentiate(differentiate(parse("x^2/2"))), Expr::constant(1.0));
}

TEST(expr_differentiate, abs_is_rejected) {
    EXPECT_THROW(differentiate(parse("abs(x)")), DifferentiationError);
    EXPECT_THROW(differentiate(parse("x*abs(x-1)")), DifferentiationError);
}

TEST(expr_differentiate, variable_exponent) {
    Expr f = parse("x^x");
    Expr d = differentiate(f);
    for (double v : {0.5, 1.0, 2.0}) {
        EXPECT_NEAR(eval(d, v), std::pow(v, v) * (std::log(v) + 1.0), 1e-12);
    }
    Expr g = parse("2^x");
    EXPECT_NEAR(eval(differentiate(g), 1.5), std::pow(2.0, 1.5) * std::log(2.0), 1e-12);
}

TEST(expr_differentiate, matches_finite_differences) {
    test_support::SafeExprGenerator gen(20261015);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        Expr f = gen.any(2);
        Expr d = differentiate(f);
        for (int i = 0; i < 100; ++i) {
            double p = gen.point();
            double exact = eval(d, p);
            double approx = test_support::central_difference(f, p);
            ASSERT_LE(std::abs(exact - approx), 1e-5 * (1.0 + std::abs(exact)))
                << "f = " << format(f) << ", f' = " << format(d) << ", x = " << p;
            ++checked;
        }
    }
    EXPECT_EQ(checked, 6000);
}

TEST(expr_simplify, rules) {
    EXPECT_EQ(simplify(1.0 * x + 0.0), x);
    EXPECT_EQ(simplify(parse("(3/2)*(2/3)*x^(1/2)")), pow(x, 0.5));
    EXPECT_EQ(simplify(pow(x, 0.0)), Expr::constant(1.0));
    EXPECT_EQ(simplify(pow(x, 1.0)), x);
    EXPECT_EQ(simplify(x * 0.0), Expr::constant(0.0));
    EXPECT_EQ(simplify(-(-x)), x);
    EXPECT_EQ(simplify(parse("2+3*4")), Expr::constant(14.0));
    // (x^2)^(1/2) is |x|, so it must stay.
    EXPECT_EQ(simplify(parse("(x^2)^(1/2)")), pow(pow(x, 2.0), 0.5));
    EXPECT_EQ(simplify(parse("(x^(1/2))^2")), x);
    // Division by a literal zero is left for eval to report.
    EXPECT_THROW(eval(simplify(parse("x/0")), 1.0), EvalDomainError);
}

TEST(expr_simplify, preserves_values) {
    test_support::SafeExprGenerator gen(7);
    for (int trial = 0; trial < 80; ++trial) {
        Expr f = gen.any(3);
        Expr s = simplify(f);
        for (int i = 0; i < 100; ++i) {
            double p = gen.point();
            double want = eval(f, p);
            ASSERT_LE(std::abs(eval(s, p) - want), 1e-12 * (1.0 + std::abs(want)))
                << format(f) << " vs " << format(s) << " at " << p;
        }
    }
}

TEST(expr_format, examples) {
    EXPECT_EQ(format(parse("x^2/2")), "x^2/2");
    EXPECT_EQ(format(parse("2*x^(3/2)/3")), "2*x^(3/2)/3");
    EXPECT_EQ(format(Expr::constant(38.0 / 3.0)), "12.666666666666666");
    EXPECT_EQ(parse(format(Expr::constant(38.0 / 3.0))), Expr::constant(38.0 / 3.0));
    EXPECT_EQ(format(-Expr::constant(2.0)), "-(2)");
    EXPECT_EQ(format(Expr::constant(-2.0) * x), "(-2)*x");
    EXPECT_EQ(format(-(x + 1.0)), "-(x+1)");
    EXPECT_EQ(format(x - (x - 1.0)), "x-(x-1)");
    EXPECT_EQ(format(pow(pow(x, 2.0), 3.0)), "(x^2)^3");
}

TEST(expr_format, registry_functions_round_trip) {
    const char* text =
        "log(x^2+1)/8 + 7*atan(x)/4 - x^2/4 + 3*x/2 - 5/(2*(x+2)) - 9*log(x+2)/2";
    Expr f = parse(text);
    EXPECT_EQ(parse(format(f)), f);
}

TEST(expr_format, random_round_trip) {
    test_support::AnyExprGenerator gen(99);
    for (int trial = 0; trial < 2000; ++trial) {
        Expr e = gen.make(5);
        std::string text = format(e);
        ASSERT_EQ(parse(text), e) << text;
    }
}

TEST(expr_substitute, replaces_variable) {
    Expr f = parse("x^2 + sin(x)");
    Expr g = substitute(f, parse("2*x+1"));
    EXPECT_DOUBLE_EQ(eval(g, 0.5), 4.0 + std::sin(2.0));
    EXPECT_EQ(substitute(parse("3"), x), Expr::constant(3.0));
}
