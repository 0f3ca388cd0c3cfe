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

#include "arclen/catalog.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace arclen {

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly LaurentPoly::monomial(int exponent, Rational coefficient) {
    LaurentPoly p;
    p.set_coefficient(exponent, std::move(coefficient));
    return p;
}

Rational LaurentPoly::coefficient(int exponent) const {
    auto it = coefficients_.find(exponent);
    return it == coefficients_.end() ? Rational(0) : it->second;
}

void LaurentPoly::set_coefficient(int exponent, Rational value) {
    if (value == 0) {
        coefficients_.erase(exponent);
    } else {
        coefficients_[exponent] = std::move(value);
    }
}

LaurentPoly LaurentPoly::derivative() const {
    LaurentPoly out;
    for (const auto& [j, c] : coefficients_) {
        if (j != 0) out.set_coefficient(j - 1, c * j);
    }
    if (log_coefficient_ != 0) out.set_coefficient(-1, out.coefficient(-1) + log_coefficient_);
    return out;
}

LaurentPoly LaurentPoly::integral() const {
    if (log_coefficient_ != 0) {
        throw std::invalid_argument("cannot integrate a log term termwise");
    }
    LaurentPoly out;
    for (const auto& [j, c] : coefficients_) {
        if (j == -1) {
            out.log_coefficient_ = c;
        } else {
            out.set_coefficient(j + 1, c / (j + 1));
        }
    }
    return out;
}

double LaurentPoly::evaluate(double t) const {
    double sum = 0.0;
    for (const auto& [j, c] : coefficients_) sum += c.convert_to<double>() * std::pow(t, j);
    if (log_coefficient_ != 0) sum += log_coefficient_.convert_to<double>() * std::log(t);
    return sum;
}

Expr LaurentPoly::to_expr(const Expr& t) const {
    std::optional<Expr> sum;
    auto append = [&sum](Expr term) { sum = sum ? *sum + std::move(term) : std::move(term); };
    for (const auto& [j, c] : coefficients_) {
        Expr power = j == 0 ? Expr::constant(1.0) : pow(t, static_cast<double>(j));
        append(c.convert_to<double>() * power);
    }
    if (log_coefficient_ != 0) append(log_coefficient_.convert_to<double>() * log(t));
    return simplify(sum.value_or(Expr::constant(0.0)));
}

std::string LaurentPoly::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [j, c] : coefficients_) {
        if (!first) out << " + ";
        out << "(" << c << ")*t^" << j;
        first = false;
    }
    if (log_coefficient_ != 0) {
        if (!first) out << " + ";
        out << "(" << log_coefficient_ << ")*log(t)";
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    for (const auto& [j, c] : other.coefficients_) set_coefficient(j, coefficient(j) + c);
    log_coefficient_ += other.log_coefficient_;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    if (lhs.log_coefficient_ != 0 || rhs.log_coefficient_ != 0) {
        throw std::invalid_argument("product with a log term is not a Laurent polynomial");
    }
    LaurentPoly out;
    for (const auto& [i, a] : lhs.coefficients_) {
        for (const auto& [j, b] : rhs.coefficients_) {
            out.set_coefficient(i + j, out.coefficient(i + j) + a * b);
        }
    }
    return out;
}

LaurentPoly operator*(LaurentPoly lhs, const Rational& scale) {
    LaurentPoly out;
    for (const auto& [j, c] : lhs.coefficients_) out.set_coefficient(j, c * scale);
    out.log_coefficient_ = lhs.log_coefficient_ * scale;
    return out;
}

bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    return lhs.coefficients_ == rhs.coefficients_ && lhs.log_coefficient_ == rhs.log_coefficient_;
}

// ---------------------------------------------------------------------------
// Neil family

namespace {

void require_neil_order(int n) {
    if (n < 1) throw std::invalid_argument("curve order n must be at least 1");
}

}  // namespace

LaurentPoly neil_integrand(int n) {
    require_neil_order(n);
    const LaurentPoly t_squared_minus_one = LaurentPoly::monomial(2) + LaurentPoly::monomial(0, -1);
    LaurentPoly product = LaurentPoly::monomial(0);
    for (int i = 0; i < n - 1; ++i) product = product * t_squared_minus_one;
    const LaurentPoly quartic =
        LaurentPoly::monomial(4) + LaurentPoly::monomial(2, 2) + LaurentPoly::monomial(0, 1);
    product = product * quartic * LaurentPoly::monomial(-n - 2);
    const Rational scale = Rational(1) / Rational(boost::multiprecision::cpp_int(1) << (n + 1));
    return product * scale;
}

LaurentPoly neil_reduce(int n) { return neil_integrand(n).integral(); }

NeilSubstitution neil_substitution(int n, double b) {
    require_neil_order(n);
    if (!(b > 0.0) || !std::isfinite(b)) throw std::invalid_argument("leading coefficient must be positive");
    NeilSubstitution sub{};
    sub.n = n;
    sub.b = b;
    const double k = 1.0 + 1.0 / n;
    sub.c = b * b * k * k;
    sub.e = n * std::pow(sub.c, -0.5 * n);
    sub.antiderivative_in_t = neil_reduce(n);
    const Expr x = Expr::variable();
    sub.s_of_x = simplify(std::sqrt(sub.c) * pow(x, 1.0 / n));
    sub.t_of_x = sub.s_of_x + sqrt(1.0 + pow(sub.s_of_x, 2.0));
    return sub;
}

ClosedFormCase neil_case(int n, double b) {
    if (n < 1 || n > 3) {
        throw std::invalid_argument("closed forms are flattened only for n = 1, 2, 3; use neil_substitution");
    }
    const NeilSubstitution sub = neil_substitution(n, b);
    const Expr x = Expr::variable();

    ClosedFormCase out;
    out.name = "neil-n" + std::to_string(n);
    out.f = simplify(b * pow(x, 1.0 + 1.0 / n));
    out.integrand = simplify(sqrt(1.0 + sub.c * pow(x, 2.0 / n)));
    out.antiderivative = simplify(sub.e * sub.antiderivative_in_t.to_expr(sub.t_of_x));
    out.valid_domain = ValidDomain{0.0, std::numeric_limits<double>::infinity()};

    // Classical hand-simplified antiderivatives.
    if (n == 1 && b == 0.5) {
        out.textbook_antiderivative = parse("x*sqrt(1+x^2)/2 + log(x+sqrt(1+x^2))/2");
    } else if (n == 2 && b == 2.0 / 3.0) {
        out.textbook_antiderivative = parse("2*(1+x)^(3/2)/3");
    } else if (n == 3 && b == 0.75) {
        out.textbook_antiderivative =
            parse("3*x^(1/3)*(2*x^(2/3)+1)*sqrt(1+x^(2/3))/8 - 3*log(x^(1/3)+sqrt(1+x^(2/3)))/8");
    }
    return out;
}

ClosedFormCase neil_case_from_curve(int n, double a) {
    require_neil_order(n);
    if (!(a > 0.0)) throw std::invalid_argument("curve constant must be positive");
    return neil_case(n, std::pow(a, 1.0 / n));
}

double closed_form_residual(const ClosedFormCase& c, const Interval& range, int samples) {
    if (samples < 1) throw std::invalid_argument("sample count must be positive");
    const Expr derivative = differentiate(c.antiderivative);
    double worst = 0.0;
    for (int j = 0; j < samples; ++j) {
        const double x = range.a() + (j + 0.5) * range.width() / samples;
        if (!c.valid_domain.contains(x)) throw std::invalid_argument("sample outside the valid domain");
        const double g = eval(c.integrand, x);
        worst = std::max(worst, std::abs(eval(derivative, x) - g) / (1.0 + std::abs(g)));
    }
    return worst;
}

// ---------------------------------------------------------------------------
// Pythagorean exercises

ExerciseError::ExerciseError(const std::string& what, double x)
    : std::runtime_error(what + " at x=" + format_number(x)), x_(x) {}

namespace {

constexpr int kScanIntervals = 1000;

void scan_nonzero(const Expr& e, std::string_view label, const Interval& iv, std::vector<double>& values) {
    values.clear();
    double prev_x = iv.a();
    for (int j = 0; j <= kScanIntervals; ++j) {
        const double x = j == kScanIntervals ? iv.b() : iv.a() + j * iv.width() / kScanIntervals;
        const double v = eval(e, x);
        if (v == 0.0) throw ExerciseError(std::string(label) + " vanishes", x);
        if (!values.empty() && (v > 0.0) != (values.back() > 0.0)) {
            throw ExerciseError(std::string(label) + " changes sign between x=" + format_number(prev_x) + " and",
                                x);
        }
        values.push_back(v);
        prev_x = x;
    }
}

}  // namespace

Exercise make_exercise(const Expr& m, const Expr& n, const Interval& iv, std::optional<Expr> f,
                       std::optional<Expr> exact_answer) {
    std::vector<double> m_values;
    std::vector<double> n_values;
    scan_nonzero(m, "m", iv, m_values);
    scan_nonzero(n, "n", iv, n_values);
    if ((m_values.front() > 0.0) != (n_values.front() > 0.0)) {
        throw ExerciseError("m and n have opposite signs, so m/2n + n/2m < 0", iv.a());
    }

    const Expr m_over_2n = m / (2.0 * n);
    const Expr n_over_2m = n / (2.0 * m);
    Exercise ex{m,
                n,
                simplify(m_over_2n - n_over_2m),
                simplify(m_over_2n + n_over_2m),
                std::move(f),
                iv,
                std::move(exact_answer)};

    const double residual = pythagorean_residual(ex);
    if (!(residual <= 1e-10)) {
        throw ExerciseError("Pythagorean identity residual " + format_number(residual) + " exceeds 1e-10", iv.a());
    }
    return ex;
}

double pythagorean_residual(const Exercise& ex, int samples) {
    const Interval& iv = ex.interval;
    double worst = 0.0;
    for (int j = 0; j < samples; ++j) {
        const double x = iv.a() + (j + 0.5) * iv.width() / samples;
        const double slope = eval(ex.f_prime, x);
        const double g = eval(ex.integrand, x);
        worst = std::max(worst, std::abs(1.0 + slope * slope - g * g) / (g * g));
    }
    return worst;
}

namespace {

VerifyReport verify_numeric(const Expr& integrand, const std::optional<Expr>& f, const Interval& iv,
                            const Expr& exact_answer, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    if (!exact_answer.is_x_free()) throw std::invalid_argument("exact answer must not depend on x");
    VerifyReport report{};
    report.exact = eval(exact_answer, 0.0);
    report.integral = euler_cross_check(integrand, iv);
    report.integral_residual = std::abs(report.integral.value - report.exact);
    report.passed = report.integral.consistent && report.integral_residual <= tol;
    if (f) {
        report.polygonal = polygonal_length(*f, iv, kVerifyPolygonalSubdivisions);
        report.polygonal_residual = std::abs(*report.polygonal - report.exact);
        report.passed = report.passed && *report.polygonal_residual <= tol;
    }
    return report;
}

}  // namespace

VerifyReport verify_exercise(const Exercise& ex, double tol) {
    if (!ex.exact_answer) throw std::invalid_argument("exercise has no exact answer to verify");
    return verify_numeric(ex.integrand, ex.f, ex.interval, *ex.exact_answer, tol);
}

IntTriple pythagorean_triple(std::int64_t k, std::int64_t m, std::int64_t n) {
    if (k < 1 || n < 1 || m <= n) throw std::invalid_argument("need k >= 1 and m > n >= 1");
    return {k * (m * m - n * n), k * 2 * m * n, k * (m * m + n * n)};
}

namespace {

void trim(IntPolynomial& p) {
    while (!p.coefficients.empty() && p.coefficients.back() == 0) p.coefficients.pop_back();
}

}  // namespace

Expr IntPolynomial::to_expr() const {
    const Expr x = Expr::variable();
    std::optional<Expr> sum;
    for (std::size_t d = 0; d < coefficients.size(); ++d) {
        if (coefficients[d] == 0) continue;
        Expr power = d == 0 ? Expr::constant(1.0) : (d == 1 ? x : pow(x, static_cast<double>(d)));
        Expr term = simplify(static_cast<double>(coefficients[d]) * power);
        sum = sum ? *sum + term : term;
    }
    return sum.value_or(Expr::constant(0.0));
}

double IntPolynomial::evaluate(double x) const {
    double acc = 0.0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + static_cast<double>(*it);
    return acc;
}

IntPolynomial operator+(const IntPolynomial& lhs, const IntPolynomial& rhs) {
    IntPolynomial out{std::vector<std::int64_t>(std::max(lhs.coefficients.size(), rhs.coefficients.size()), 0)};
    for (std::size_t i = 0; i < lhs.coefficients.size(); ++i) out.coefficients[i] += lhs.coefficients[i];
    for (std::size_t i = 0; i < rhs.coefficients.size(); ++i) out.coefficients[i] += rhs.coefficients[i];
    trim(out);
    return out;
}

IntPolynomial operator-(const IntPolynomial& lhs, const IntPolynomial& rhs) {
    IntPolynomial negated = rhs;
    for (auto& c : negated.coefficients) c = -c;
    return lhs + negated;
}

IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs) {
    if (lhs.coefficients.empty() || rhs.coefficients.empty()) return {};
    IntPolynomial out{std::vector<std::int64_t>(lhs.coefficients.size() + rhs.coefficients.size() - 1, 0)};
    for (std::size_t i = 0; i < lhs.coefficients.size(); ++i) {
        for (std::size_t j = 0; j < rhs.coefficients.size(); ++j) {
            out.coefficients[i + j] += lhs.coefficients[i] * rhs.coefficients[j];
        }
    }
    trim(out);
    return out;
}

bool operator==(const IntPolynomial& lhs, const IntPolynomial& rhs) {
    IntPolynomial a = lhs;
    IntPolynomial b = rhs;
    trim(a);
    trim(b);
    return a.coefficients == b.coefficients;
}

PolynomialTriple polynomial_triple(const IntPolynomial& m, const IntPolynomial& n) {
    const IntPolynomial two{{2}};
    return {m * m - n * n, two * m * n, m * m + n * n};
}

// ---------------------------------------------------------------------------
// Registry

namespace {

Problem closed_form_problem(std::string name, std::string description, ClosedFormCase c, Interval iv,
                            std::string_view exact) {
    Problem p{std::move(name), std::move(description), c.f, c.integrand, iv, parse(exact), std::nullopt, c};
    return p;
}

Problem exercise_problem(std::string name, std::string description, std::string_view m, std::string_view n,
                         Interval iv, std::string_view f, std::string_view exact) {
    Exercise ex = make_exercise(parse(m), parse(n), iv, parse(f), parse(exact));
    Problem p{std::move(name), std::move(description), *ex.f, ex.integrand, iv, *ex.exact_answer, ex, std::nullopt};
    return p;
}

}  // namespace

std::vector<std::string> builtin_problem_names() {
    return {"parabola", "semicubical", "x43", "cosh", "pyth2", "pyth3"};
}

Problem builtin_problem(std::string_view name) {
    if (name == "parabola") {
        return closed_form_problem("parabola", "f = x^2/2 on [0,1]", neil_case(1, 0.5), Interval(0.0, 1.0),
                                   "sqrt(2)/2 + log(1+sqrt(2))/2");
    }
    if (name == "semicubical") {
        return closed_form_problem("semicubical", "f = 2x^(3/2)/3 on [3,8]", neil_case(2, 2.0 / 3.0),
                                   Interval(3.0, 8.0), "38/3");
    }
    if (name == "x43") {
        return closed_form_problem("x43", "f = 3x^(4/3)/4 on [0,1]", neil_case(3, 0.75), Interval(0.0, 1.0),
                                   "9*sqrt(2)/8 - 3*log(1+sqrt(2))/8");
    }
    if (name == "cosh") {
        return exercise_problem("cosh", "m = e^x, n = 1: f = cosh(x) on [0,1]", "exp(x)", "1", Interval(0.0, 1.0),
                                "cosh(x)", "e/2 - 1/(2*e)");
    }
    if (name == "pyth2") {
        return exercise_problem("pyth2", "m = 4x, n = x^2+1 on [1,2]", "4*x", "x^2+1", Interval(1.0, 2.0),
                                "log(2*x^2+2) - x^2/16 - log(x)/8", "3/16 + log(5) - 7*log(2)/8");
    }
    if (name == "pyth3") {
        // The log(x+1)/4 term comes from the partial fraction 1/(4(x+1)) of m/2n.
        return exercise_problem(
            "pyth3", "m = (x+2)^2, n = (x+1)(x^2+1) on [0,1]", "(x+2)^2", "(x+1)*(x^2+1)", Interval(0.0, 1.0),
            "log(x^2+1)/8 + log(x+1)/4 + 7*atan(x)/4 - x^2/4 + 3*x/2 - 5/(2*(x+2)) - 9*log(x+2)/2",
            "7*pi/16 - 5/3 + 9*log(3)/2 - 33*log(2)/8");
    }
    throw std::out_of_range("unknown problem '" + std::string(name) + "'");
}

VerifyReport verify_problem(const Problem& problem, double tol) {
    return verify_numeric(problem.integrand, problem.f, problem.interval, problem.exact_answer, tol);
}

}  // namespace arclen
