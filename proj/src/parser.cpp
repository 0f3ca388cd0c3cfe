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

#include <array>
#include <cctype>
#include <charconv>
#include <utility>

#include "arclen/expr.hpp"

namespace arclen {

namespace {

constexpr std::array<std::pair<std::string_view, UnaryOp>, 10> kFunctions{{
    {"sin", UnaryOp::sin},
    {"cos", UnaryOp::cos},
    {"tan", UnaryOp::tan},
    {"atan", UnaryOp::atan},
    {"exp", UnaryOp::exp},
    {"log", UnaryOp::log},
    {"sqrt", UnaryOp::sqrt},
    {"sinh", UnaryOp::sinh},
    {"cosh", UnaryOp::cosh},
    {"abs", UnaryOp::abs},
}};

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
    explicit Parser(std::string_view text) : text_(text) {}

    Expr parse_all() {
        Expr e = expr();
        skip_ws();
        if (pos_ != text_.size()) {
            throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        }
        return e;
    }

 private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            if (pos_ >= text_.size()) throw ParseError(std::string("expected '") + c + "' but input ended", pos_);
            throw ParseError(std::string("expected '") + c + "' but found '" + text_[pos_] + "'", pos_);
        }
    }

    Expr expr() {
        Expr lhs = term();
        while (true) {
            if (accept('+')) {
                lhs = std::move(lhs) + term();
            } else if (accept('-')) {
                lhs = std::move(lhs) - term();
            } else {
                return lhs;
            }
        }
    }

    Expr term() {
        Expr lhs = factor();
        while (true) {
            if (accept('*')) {
                lhs = std::move(lhs) * factor();
            } else if (accept('/')) {
                lhs = std::move(lhs) / factor();
            } else {
                return lhs;
            }
        }
    }

    Expr factor() {
        if (accept('-')) {
            char next = peek();
            bool literal_follows = is_digit(next) || next == '.';
            Expr operand = factor();
            // A bare literal ("-2", not "-2^2") reads as a negative constant.
            if (literal_follows && operand.is_constant()) {
                const auto& c = std::get<ConstantNode>(operand.node().v);
                return Expr::constant(-c.value);
            }
            return -std::move(operand);
        }
        return power();
    }

    Expr power() {
        Expr base = atom();
        if (accept('^')) return pow(std::move(base), factor());
        return base;
    }

    Expr atom() {
        char c = peek();
        if (c == '\0') throw ParseError("unexpected end of input", pos_);
        if (is_digit(c) || c == '.') return number();
        if (accept('(')) {
            Expr inner = expr();
            expect(')');
            return inner;
        }
        if (is_alpha(c)) return identifier();
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    Expr number() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
        }
        // Exponent part only when digits follow, so "2e" stays 2 followed by e.
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t p = pos_ + 1;
            if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
            if (p < text_.size() && is_digit(text_[p])) {
                pos_ = p;
                while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
            }
        }
        std::string_view lexeme = text_.substr(start, pos_ - start);
        if (lexeme == ".") throw ParseError("malformed number", start);
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(lexeme.data(), lexeme.data() + lexeme.size(), value);
        if (ec != std::errc() || ptr != lexeme.data() + lexeme.size()) {
            throw ParseError("malformed number '" + std::string(lexeme) + "'", start);
        }
        return Expr::constant(value);
    }

    Expr identifier() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && (is_alpha(text_[pos_]) || is_digit(text_[pos_]))) ++pos_;
        std::string_view name = text_.substr(start, pos_ - start);
        if (name == "x") return Expr::variable();
        if (name == "pi") return Expr::named(NamedConstant::pi);
        if (name == "e") return Expr::named(NamedConstant::e);
        for (const auto& [fname, op] : kFunctions) {
            if (name == fname) {
                expect('(');
                Expr arg = expr();
                expect(')');
                return Expr::unary(op, std::move(arg));
            }
        }
        throw ParseError("unknown identifier '" + std::string(name) + "'", start);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace arclen
