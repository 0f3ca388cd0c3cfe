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

#ifndef ARCLEN_CATALOG_HPP
#define ARCLEN_CATALOG_HPP

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "arclen/expr.hpp"
#include "arclen/quadrature.hpp"
#include "arclen/rectify.hpp"

namespace arclen {

using Rational = boost::multiprecision::cpp_rational;

/// sum_j c_j t^j + c_log * log(t) with exact rational coefficients.
class LaurentPoly {
 public:
    LaurentPoly() = default;

    static LaurentPoly monomial(int exponent, Rational coefficient = 1);

    const std::map<int, Rational>& coefficients() const { return coefficients_; }
    const Rational& log_coefficient() const { return log_coefficient_; }

    Rational coefficient(int exponent) const;
    void set_coefficient(int exponent, Rational value);
    void set_log_coefficient(Rational value) { log_coefficient_ = std::move(value); }

    /// Termwise d/dt; the log term becomes c_log * t^-1.
    LaurentPoly derivative() const;
    /// Termwise antiderivative; t^-1 becomes log(t). Requires no log term.
    LaurentPoly integral() const;

    double evaluate(double t) const;
    /// The polynomial with `t` substituted for the variable.
    Expr to_expr(const Expr& t) const;
    std::string to_string() const;

    LaurentPoly& operator+=(const LaurentPoly& other);
    friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
    friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
    friend LaurentPoly operator*(LaurentPoly lhs, const Rational& scale);
    friend bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs);

 private:
    std::map<int, Rational> coefficients_;  // no zero entries
    Rational log_coefficient_ = 0;
};

/// 2^{-n-1} (t^2-1)^{n-1} (t^4+2t^2+1) t^{-n-2}, expanded exactly. This is
/// the integrand of  int s^{n-1} sqrt(1+s^2) ds  after t = s + sqrt(1+s^2).
LaurentPoly neil_integrand(int n);

/// Termwise antiderivative of neil_integrand(n).
LaurentPoly neil_reduce(int n);

/// Open range of x on which a closed form is valid.
struct ValidDomain {
    double lower = -std::numeric_limits<double>::infinity();
    double upper = std::numeric_limits<double>::infinity();
    bool contains(double x) const { return lower < x && x < upper; }
};

struct ClosedFormCase {
    std::string name;
    Expr f;
    Expr integrand;       // sqrt(1 + f'^2)
    Expr antiderivative;  // G with G' = integrand on valid_domain
    ValidDomain valid_domain;
    /// Hand-simplified G for the classical cases, when known.
    std::optional<Expr> textbook_antiderivative;
};

/// Substitution chain for f = b x^{1+1/n}:
///   integrand sqrt(1 + c x^{2/n}),  c = b^2 (1+1/n)^2,
///   s = sqrt(c) x^{1/n},  dx = e s^{n-1} ds  with  e = n c^{-n/2},
///   t = s + sqrt(1+s^2),  G = e * neil_reduce(n)(t).
struct NeilSubstitution {
    int n;
    double b;
    double c;
    double e;
    LaurentPoly antiderivative_in_t;
    Expr s_of_x;
    Expr t_of_x;
};

NeilSubstitution neil_substitution(int n, double b);

/// The case f = b x^{1+1/n} with G flattened into an Expr. Only n in {1,2,3}
/// is flattened; other n throw std::invalid_argument (use neil_substitution).
ClosedFormCase neil_case(int n, double b);

/// Same case written as the curve f^n = a x^{n+1}, i.e. b = a^{1/n}.
ClosedFormCase neil_case_from_curve(int n, double a);

/// Largest |G'(x) - g(x)| / (1 + |g(x)|) over `samples` points spread
/// evenly inside `range`.
double closed_form_residual(const ClosedFormCase& c, const Interval& range, int samples = 100);

struct Exercise {
    Expr m;
    Expr n;
    Expr f_prime;    // m/(2n) - n/(2m)
    Expr integrand;  // m/(2n) + n/(2m)
    std::optional<Expr> f;
    Interval interval;
    std::optional<Expr> exact_answer;
};

/// Rejection of an (m, n) pair, with the x where the problem was found.
class ExerciseError : public std::runtime_error {
 public:
    ExerciseError(const std::string& what, double x);
    double x() const { return x_; }

 private:
    double x_;
};

/// Builds f' and sqrt(1+f'^2) from the Pythagorean triple
/// (m^2 - n^2, 2mn, m^2 + n^2). m and n must be nonzero and of one common
/// sign on the whole interval (checked on 1001 points).
Exercise make_exercise(const Expr& m, const Expr& n, const Interval& iv,
                       std::optional<Expr> f = std::nullopt,
                       std::optional<Expr> exact_answer = std::nullopt);

/// Largest |1 + f'(x)^2 - g(x)^2| / g(x)^2 over `samples` interior points.
double pythagorean_residual(const Exercise& ex, int samples = 100);

struct VerifyReport {
    double exact;
    EulerCrossCheck integral;
    double integral_residual;
    std::optional<double> polygonal;
    std::optional<double> polygonal_residual;
    bool passed;
};

inline constexpr std::int64_t kVerifyPolygonalSubdivisions = 100'000;

/// Compares the exact answer with the n = 10^6 Euler sum of the integrand
/// (cross-checked at 2*10^6) and, when f is known, with L_n for n = 10^5.
VerifyReport verify_exercise(const Exercise& ex, double tol);

/// Integer parametrisation k(m^2-n^2), 2kmn, k(m^2+n^2).
struct IntTriple {
    std::int64_t p;
    std::int64_t q;
    std::int64_t r;
};
IntTriple pythagorean_triple(std::int64_t k, std::int64_t m, std::int64_t n);

/// Integer-coefficient polynomial, coefficients from degree 0 upward.
struct IntPolynomial {
    std::vector<std::int64_t> coefficients;

    Expr to_expr() const;
    double evaluate(double x) const;
    friend IntPolynomial operator+(const IntPolynomial& lhs, const IntPolynomial& rhs);
    friend IntPolynomial operator-(const IntPolynomial& lhs, const IntPolynomial& rhs);
    friend IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs);
    friend bool operator==(const IntPolynomial& lhs, const IntPolynomial& rhs);
};

struct PolynomialTriple {
    IntPolynomial p;  // m^2 - n^2
    IntPolynomial q;  // 2mn
    IntPolynomial r;  // m^2 + n^2
};
PolynomialTriple polynomial_triple(const IntPolynomial& m, const IntPolynomial& n);

/// A named problem with known exact arc length. Exactly one of `exercise`
/// and `closed_form` is set.
struct Problem {
    std::string name;
    std::string description;
    Expr f;
    Expr integrand;
    Interval interval;
    Expr exact_answer;
    std::optional<Exercise> exercise;
    std::optional<ClosedFormCase> closed_form;
};

/// "parabola", "semicubical", "x43", "cosh", "pyth2", "pyth3".
std::vector<std::string> builtin_problem_names();
/// Throws std::out_of_range for unknown names.
Problem builtin_problem(std::string_view name);

VerifyReport verify_problem(const Problem& problem, double tol);

}  // namespace arclen

#endif  // ARCLEN_CATALOG_HPP
