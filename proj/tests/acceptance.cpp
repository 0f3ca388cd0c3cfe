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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "arclen/catalog.hpp"
#include "arclen/cli.hpp"
#include "arclen/quadrature.hpp"
#include "arclen/rectify.hpp"
#include "test_support.hpp"

using namespace arclen;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool passed;
    std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& check) {
    Outcome o;
    try {
        o = check();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.passed) ++failures;
    std::printf("%s  %d  %s  %s\n", o.passed ? "PASS" : "FAIL", id, title.c_str(), o.detail.c_str());
    std::fflush(stdout);
}

int run_quiet(const std::vector<std::string>& args, std::string* out) {
    std::ostringstream o;
    std::ostringstream e;
    int code = run_cli(args, o, e);
    if (out != nullptr) *out = o.str();
    return code;
}

// Pulls the 4-dp column from `table` text output.
std::vector<std::string> table_column(const std::string& text) {
    std::vector<std::string> values;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string n;
        std::string value;
        fields >> n >> value;
        if (n == "n") continue;
        values.push_back(value);
    }
    return values;
}

Outcome table_matches(const std::vector<std::string>& args, const std::vector<std::string>& expected) {
    const auto start = Clock::now();
    std::string out;
    const int code = run_quiet(args, &out);
    const double elapsed = seconds_since(start);
    const std::vector<std::string> got = table_column(out);
    std::string detail;
    bool ok = code == 0 && got.size() == expected.size() && elapsed < 1.0;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        const std::string g = i < got.size() ? got[i] : "?";
        if (g != expected[i]) {
            ok = false;
            detail += "[entry " + std::to_string(i + 1) + ": got " + g + ", want " + expected[i] + "] ";
        }
    }
    char timing[64];
    std::snprintf(timing, sizeof(timing), "(%.3f s)", elapsed);
    return {ok, detail + timing};
}

Outcome criterion_semicubical_table() {
    return table_matches({"table", "--f", "2*x^(3/2)/3", "--a", "3", "--b", "8", "--ns", "1,2,3,4,5,10,20,100"},
                         {"12.6508", "12.6622", "12.6646", "12.6655", "12.6659", "12.6665", "12.6666", "12.6666"});
}

Outcome criterion_parabola_table() {
    return table_matches({"table", "--f", "x^2/2", "--a", "0", "--b", "1", "--ns", "1,2,3,4,5,10,20,100,200"},
                         {"1.1180", "1.1404", "1.1445", "1.1459", "1.1466", "1.1475", "1.1477", "1.1478", "1.1478"});
}

Outcome criterion_cubic() {
    return table_matches({"table", "--f", "x^3/3", "--a", "0", "--b", "1", "--ns", "100"}, {"1.0894"});
}

Outcome criterion_convergence() {
    const Expr f = parse("2*x^(3/2)/3");
    const Interval iv(3, 8);
    const double M = 1.0 / (2.0 * std::sqrt(3.0));
    double worst_ratio = 0.0;
    for (std::int64_t n = 1; n <= 1000; ++n) {
        const double err = std::abs(polygonal_length(f, iv, n) - 38.0 / 3.0);
        worst_ratio = std::max(worst_ratio, err / (M * 25.0 / (2.0 * n)));
    }
    const double parabola = std::numbers::sqrt2 / 2.0 + std::log(1.0 + std::numbers::sqrt2) / 2.0;
    const double err200 = std::abs(polygonal_length(parse("x^2/2"), Interval(0, 1), 200) - parabola);
    const bool ok = worst_ratio <= 1.0 && err200 <= 1.0 / 400.0 + 1e-9;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "max err/bound over n<=1000 = %.3g; parabola L_200 err = %.3g", worst_ratio, err200);
    return {ok, buf};
}

Outcome criterion_closed_forms() {
    const double coefficients[] = {0.5, 2.0 / 3.0, 0.75};
    const Interval ranges[] = {Interval(0, 1), Interval(3, 8), Interval(0, 1)};
    double worst = 0.0;
    for (int n = 1; n <= 3; ++n) {
        const ClosedFormCase c = neil_case(n, coefficients[n - 1]);
        const Interval& iv = ranges[n - 1];
        for (int j = 0; j < 100; ++j) {
            const double x = iv.a() + (j + 0.5) * iv.width() / 100.0;
            // The smallest sample is 5e-3, well clear of the singular point 0.
            const double h = 1e-5 * std::max(1.0, x);
            const double numeric = (eval(c.antiderivative, x + h) - eval(c.antiderivative, x - h)) / (2.0 * h);
            const double g = eval(c.integrand, x);
            worst = std::max(worst, std::abs(numeric - g) / g);
        }
        worst = std::max(worst, closed_form_residual(c, iv, 100));
    }
    const ClosedFormCase semicubical = neil_case(2, 2.0 / 3.0);
    const double diff =
        std::abs(eval(semicubical.antiderivative, 8.0) - eval(semicubical.antiderivative, 3.0) - 38.0 / 3.0);
    char buf[128];
    std::snprintf(buf, sizeof(buf), "worst relative |G'-g| = %.3g; |G(8)-G(3)-38/3| = %.3g", worst, diff);
    return {worst <= 1e-8 && diff <= 1e-12, buf};
}

Outcome criterion_pythagorean_problems() {
    const auto start = Clock::now();
    std::string detail;
    bool ok = true;
    for (const char* name : {"cosh", "pyth2", "pyth3"}) {
        std::string out;
        const int code = run_quiet({"verify", "--problem", name, "--tol", "1e-4"}, &out);
        const VerifyReport r = verify_problem(builtin_problem(name), 1e-4);
        const bool this_ok = code == 0 && out.rfind("PASS", 0) == 0 && r.passed && r.integral.consistent &&
                             r.integral.n == 1'000'000 && r.integral_residual <= 1e-4;
        ok = ok && this_ok;
        char buf[128];
        std::snprintf(buf, sizeof(buf), "%s %s residual=%.2g; ", name, this_ok ? "ok" : "BAD", r.integral_residual);
        detail += buf;
    }
    const double elapsed = seconds_since(start);
    char timing[64];
    std::snprintf(timing, sizeof(timing), "(%.2f s)", elapsed);
    return {ok && elapsed < 10.0, detail + timing};
}

Outcome criterion_neil_identity() {
    for (int n = 1; n <= 12; ++n) {
        if (!(neil_reduce(n).derivative() == neil_integrand(n))) return {false, "mismatch at n=" + std::to_string(n)};
    }
    return {true, "n = 1..12 exact"};
}

Outcome criterion_properties() {
    std::string failed;
    auto need = [&failed](bool cond, const char* what) {
        if (!cond) failed += std::string(what) + " ";
    };
    const double lo = test_support::SafeExprGenerator::kLow;
    const double hi = test_support::SafeExprGenerator::kHigh;
    const Interval iv(lo, hi);

    // Chord lower bound and doubling monotonicity.
    {
        test_support::SafeExprGenerator gen(8101);
        for (int trial = 0; trial < 40; ++trial) {
            const Expr f = gen.any(2);
            const double chord = std::hypot(hi - lo, eval(f, hi) - eval(f, lo));
            for (std::int64_t n : {1, 2, 5, 16, 100, 1000}) {
                const double ln = polygonal_length(f, iv, n);
                need(ln >= chord - 1e-9 * (1 + chord), "chord");
                need(polygonal_length(f, iv, 2 * n) >= ln - 1e-9, "doubling");
            }
        }
    }
    // Linear functions are measured exactly.
    {
        std::mt19937_64 rng(8102);
        std::uniform_real_distribution<double> coef(-5.0, 5.0);
        for (int trial = 0; trial < 20; ++trial) {
            const double m = coef(rng);
            const double c = coef(rng);
            const Expr f = Expr::constant(m) * Expr::variable() + Expr::constant(c);
            const double exact = (hi - lo) * std::sqrt(1.0 + m * m);
            for (std::int64_t n = 1; n <= 200; ++n) {
                need(std::abs(polygonal_length(f, iv, n) - exact) <= 1e-12 * exact, "linear");
            }
        }
    }
    // Translation and reflection.
    {
        test_support::SafeExprGenerator gen(8103);
        for (int trial = 0; trial < 30; ++trial) {
            const Expr f = gen.any(2);
            const std::int64_t n = 64;
            const double base = polygonal_length(f, iv, n);
            const double shifted_up = polygonal_length(f + 3.0, iv, n);
            const double reflected = polygonal_length(-f, iv, n);
            const Expr moved = substitute(f, Expr::variable() - 2.0);
            const double shifted_right = polygonal_length(moved, Interval(lo + 2.0, hi + 2.0), n);
            const double tol = 1e-12 * (1 + base);
            need(std::abs(shifted_up - base) <= tol * 10, "vertical shift");
            need(std::abs(reflected - base) <= tol, "reflection");
            need(std::abs(shifted_right - base) <= tol * 10, "horizontal shift");
        }
    }
    // Derivative against central differences.
    {
        test_support::SafeExprGenerator gen(8104);
        for (int trial = 0; trial < 60; ++trial) {
            const Expr f = gen.any(2);
            const Expr d = differentiate(f);
            for (int i = 0; i < 50; ++i) {
                const double p = gen.point();
                const double exact = eval(d, p);
                const double approx = test_support::central_difference(f, p);
                need(std::abs(exact - approx) <= 1e-5 * (1.0 + std::abs(exact)), "derivative");
            }
        }
    }
    // Euler-sum halving ratio for smooth monotone integrands.
    {
        struct Case {
            const char* g;
            double exact;
        };
        const Case cases[] = {{"exp(x)", std::numbers::e - 1.0},
                              {"sqrt(1+x^2)", std::numbers::sqrt2 / 2.0 + std::asinh(1.0) / 2.0},
                              {"1/(1+x)", std::log(2.0)},
                              {"atan(x)", std::numbers::pi / 4.0 - std::log(2.0) / 2.0}};
        for (const auto& c : cases) {
            const Expr g = parse(c.g);
            for (std::int64_t n : {100, 1000, 10000}) {
                const double ratio = (euler_sum(g, Interval(0, 1), 2 * n) - c.exact) /
                                     (euler_sum(g, Interval(0, 1), n) - c.exact);
                need(ratio >= 0.45 && ratio <= 0.55, "halving ratio");
            }
        }
    }
    // Pythagorean identity for random integer polynomial pairs.
    {
        std::mt19937_64 rng(8105);
        std::uniform_int_distribution<std::int64_t> coeff(0, 9);
        std::uniform_int_distribution<int> degree(0, 3);
        auto random_poly = [&] {
            IntPolynomial p;
            const int d = degree(rng);
            for (int i = 0; i <= d; ++i) p.coefficients.push_back(coeff(rng));
            p.coefficients[0] += 1;
            return p;
        };
        for (int trial = 0; trial < 50; ++trial) {
            const Exercise ex = make_exercise(random_poly().to_expr(), random_poly().to_expr(), Interval(1, 2));
            need(pythagorean_residual(ex, 100) <= 1e-10, "pythagorean");
        }
    }
    return {failed.empty(), failed.empty() ? "all property families hold" : "failed: " + failed};
}

}  // namespace

int main() {
    report(1, "semicubical table", criterion_semicubical_table);
    report(2, "parabola table", criterion_parabola_table);
    report(3, "cubic L_100", criterion_cubic);
    report(4, "exact-value convergence", criterion_convergence);
    report(5, "closed-form catalog", criterion_closed_forms);
    report(6, "pythagorean problems", criterion_pythagorean_problems);
    report(7, "reduction identity", criterion_neil_identity);
    report(8, "property suites", criterion_properties);
    std::printf("%d of 8 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
