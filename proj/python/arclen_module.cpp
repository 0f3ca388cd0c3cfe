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

#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "arclen/catalog.hpp"
#include "arclen/cli.hpp"
#include "arclen/expr.hpp"
#include "arclen/quadrature.hpp"
#include "arclen/rectify.hpp"

namespace py = pybind11;
using namespace arclen;

namespace {

// Functions accept either an Expr or its text form.
Expr as_expr(const py::object& f) {
    if (py::isinstance<py::str>(f)) return parse(f.cast<std::string>());
    return f.cast<Expr>();
}

py::list table_to_py(const std::vector<PolyResult>& rows) {
    py::list out;
    for (const auto& r : rows) {
        py::dict d;
        d["n"] = r.n;
        d["delta_x"] = r.delta_x;
        d["length"] = r.length;
        d["bound"] = r.bound ? py::cast(*r.bound) : py::none();
        out.append(d);
    }
    return out;
}

py::dict cross_check_to_py(const EulerCrossCheck& c) {
    py::dict d;
    d["n"] = c.n;
    d["value"] = c.value;
    d["refined"] = c.refined;
    d["fitted_rate"] = c.fitted_rate;
    d["gap"] = c.gap;
    d["allowed_gap"] = c.allowed_gap;
    d["consistent"] = c.consistent;
    return d;
}

std::string rational_text(const Rational& q) {
    std::ostringstream s;
    s << q;
    return s.str();
}

}  // namespace

PYBIND11_MODULE(_arclen, m) {
    m.doc() = "Arc length by polygonal approximation, Euler sums and exact catalogs";

    static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
    static py::exception<EvalError> eval_error(m, "EvalError", PyExc_ArithmeticError);
    static py::exception<DifferentiationError> diff_error(m, "DifferentiationError", PyExc_ValueError);
    static py::exception<ExerciseError> exercise_error(m, "ExerciseError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            py::set_error(parse_error, e.what());
        } catch (const EvalError& e) {
            py::set_error(eval_error, e.what());
        } catch (const DifferentiationError& e) {
            py::set_error(diff_error, e.what());
        } catch (const ExerciseError& e) {
            py::set_error(exercise_error, e.what());
        }
    });

    py::class_<Expr>(m, "Expr")
        .def(py::init([](const std::string& text) { return parse(text); }), py::arg("text"))
        .def("__call__", [](const Expr& f, double x) { return eval(f, x); }, py::arg("x"))
        .def("__str__", [](const Expr& f) { return format(f); })
        .def("__repr__", [](const Expr& f) { return "Expr('" + format(f) + "')"; })
        .def("__eq__", [](const Expr& a, const Expr& b) { return a == b; })
        .def("diff", [](const Expr& f) { return differentiate(f); })
        .def("simplify", [](const Expr& f) { return simplify(f); });

    m.def("parse", &parse, py::arg("text"));
    m.def("format", &format, py::arg("f"));
    m.def("evaluate", [](const py::object& f, double x) { return eval(as_expr(f), x); }, py::arg("f"), py::arg("x"));
    m.def("differentiate", [](const py::object& f) { return differentiate(as_expr(f)); }, py::arg("f"));
    m.def("simplify", [](const py::object& f) { return simplify(as_expr(f)); }, py::arg("f"));

    m.def(
        "polygonal_length",
        [](const py::object& f, double a, double b, std::int64_t n) {
            return polygonal_length(as_expr(f), Interval(a, b), n);
        },
        py::arg("f"), py::arg("a"), py::arg("b"), py::arg("n"));
    m.def(
        "polygonal_table",
        [](const py::object& f, double a, double b, const std::vector<std::int64_t>& ns, std::optional<double> M) {
            return table_to_py(polygonal_table(as_expr(f), Interval(a, b), ns, M));
        },
        py::arg("f"), py::arg("a"), py::arg("b"), py::arg("ns"), py::arg("M") = py::none());
    m.def(
        "error_bound", [](double M, double a, double b, std::int64_t n) { return error_bound(M, Interval(a, b), n); },
        py::arg("M"), py::arg("a"), py::arg("b"), py::arg("n"));
    m.def(
        "min_subdivisions",
        [](double M, double a, double b, double tol) { return min_subdivisions(M, Interval(a, b), tol); },
        py::arg("M"), py::arg("a"), py::arg("b"), py::arg("tol"));
    m.def(
        "arc_length",
        [](const py::object& f, double a, double b, double tol, std::optional<double> M) {
            ConvergenceReport r = arc_length(as_expr(f), Interval(a, b), tol, M);
            py::dict d;
            d["estimate"] = r.estimate;
            d["n_used"] = r.n_used;
            d["bound_used"] = r.bound_used;
            d["M_used"] = r.M_used;
            d["M_source"] = r.M_source == MSource::user ? "user" : "sampled";
            d["rows"] = table_to_py(r.rows);
            d["warnings"] = r.warnings;
            return d;
        },
        py::arg("f"), py::arg("a"), py::arg("b"), py::arg("tol"), py::arg("M") = py::none());
    m.def("round4", &round4, py::arg("value"));

    m.def(
        "euler_sum",
        [](const py::object& g, double a, double b, std::int64_t n) { return euler_sum(as_expr(g), Interval(a, b), n); },
        py::arg("g"), py::arg("a"), py::arg("b"), py::arg("n"));
    m.def("arc_integrand", [](const py::object& f) { return arc_integrand(as_expr(f)); }, py::arg("f"));
    m.def(
        "euler_cross_check",
        [](const py::object& g, double a, double b, std::int64_t n, std::int64_t coarse_n) {
            return cross_check_to_py(euler_cross_check(as_expr(g), Interval(a, b), n, coarse_n));
        },
        py::arg("g"), py::arg("a"), py::arg("b"), py::arg("n") = kReferenceSubdivisions,
        py::arg("coarse_n") = 10'000);

    m.def(
        "neil_reduce",
        [](int n) {
            LaurentPoly p = neil_reduce(n);
            py::dict coefficients;
            for (const auto& [k, q] : p.coefficients()) coefficients[py::int_(k)] = rational_text(q);
            py::dict d;
            d["coefficients"] = coefficients;
            d["log"] = rational_text(p.log_coefficient());
            d["text"] = p.to_string();
            return d;
        },
        py::arg("n"));
    m.def("problem_names", &builtin_problem_names);
    m.def(
        "verify_problem",
        [](const std::string& name, double tol) {
            VerifyReport r = verify_problem(builtin_problem(name), tol);
            py::dict d;
            d["passed"] = r.passed;
            d["exact"] = r.exact;
            d["integral"] = cross_check_to_py(r.integral);
            d["integral_residual"] = r.integral_residual;
            d["polygonal"] = r.polygonal ? py::cast(*r.polygonal) : py::none();
            d["polygonal_residual"] = r.polygonal_residual ? py::cast(*r.polygonal_residual) : py::none();
            return d;
        },
        py::arg("name"), py::arg("tol") = 1e-4);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out;
            std::ostringstream err;
            int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
