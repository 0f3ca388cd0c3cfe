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

#include "arclen/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "arclen/catalog.hpp"
#include "arclen/expr.hpp"
#include "arclen/quadrature.hpp"
#include "arclen/rectify.hpp"

namespace arclen {

namespace {

using nlohmann::ordered_json;

/// Thrown for bad argument values that CLI11 cannot catch by itself.
class UsageError : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

std::string full(double v) { return format_number(v); }

Expr parse_flag(const std::string& flag, const std::string& text) {
    try {
        return parse(text);
    } catch (const ParseError& e) {
        throw UsageError("--" + flag + ": " + e.what());
    }
}

Interval make_interval(double a, double b) {
    try {
        return Interval(a, b);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

ordered_json interval_json(const Interval& iv) { return ordered_json::array({iv.a(), iv.b()}); }

struct Record {
    ordered_json json = ordered_json::object();
    std::string text;
};

// Options shared by every subcommand.
struct Common {
    bool json = false;
    std::string out_path;
};

void add_common(CLI::App* sub, Common& common) {
    sub->add_flag("--json", common.json, "Print the JSON record instead of text");
    sub->add_option("--out", common.out_path, "Also write the JSON record to this file");
}

Record make_record(const std::string& command) {
    Record r;
    r.json["command"] = command;
    r.json["inputs"] = ordered_json::object();
    r.json["results"] = ordered_json::object();
    r.json["warnings"] = ordered_json::array();
    return r;
}

// ---------------------------------------------------------------------------

struct LengthArgs {
    std::string f;
    double a = 0, b = 0, tol = 0;
    std::optional<double> M;
};

Record cmd_length(const LengthArgs& args) {
    const Expr f = parse_flag("f", args.f);
    const Interval iv = make_interval(args.a, args.b);
    if (!(args.tol > 0.0)) throw UsageError("--tol must be positive");
    if (args.M && !(*args.M >= 0.0)) throw UsageError("--M must be non-negative");
    const ConvergenceReport rep = arc_length(f, iv, args.tol, args.M);

    Record r = make_record("length");
    r.json["inputs"] = {{"f", format(f)}, {"interval", interval_json(iv)}, {"tol", args.tol}};
    if (args.M) r.json["inputs"]["M"] = *args.M;
    ordered_json rows = ordered_json::array();
    for (const auto& row : rep.rows) {
        rows.push_back({{"n", row.n},
                        {"delta_x", row.delta_x},
                        {"length", row.length},
                        {"length_4dp", round4(row.length)},
                        {"bound", row.bound.value_or(0.0)}});
    }
    r.json["results"] = {{"estimate", rep.estimate},
                         {"estimate_4dp", round4(rep.estimate)},
                         {"n_used", rep.n_used},
                         {"bound_used", rep.bound_used},
                         {"M_used", rep.M_used},
                         {"M_source", rep.M_source == MSource::user ? "user" : "sampled"},
                         {"rows", rows}};
    for (const auto& w : rep.warnings) r.json["warnings"].push_back(w);

    std::ostringstream text;
    text << "f        " << format(f) << "\n";
    text << "interval [" << format_number(iv.a()) << ", " << format_number(iv.b()) << "]\n";
    text << "estimate " << full(rep.estimate) << " (" << round4(rep.estimate) << ")\n";
    text << "n_used   " << rep.n_used << "\n";
    text << "bound    " << full(rep.bound_used) << "\n";
    text << "M        " << full(rep.M_used) << " (" << (rep.M_source == MSource::user ? "user" : "sampled") << ")\n";
    r.text = text.str();
    return r;
}

struct TableArgs {
    std::string f;
    double a = 0, b = 0;
    std::vector<std::int64_t> ns;
    std::optional<double> M;
};

Record cmd_table(const TableArgs& args) {
    const Expr f = parse_flag("f", args.f);
    const Interval iv = make_interval(args.a, args.b);
    if (args.ns.empty()) throw UsageError("--ns needs at least one value");
    for (std::size_t i = 0; i < args.ns.size(); ++i) {
        if (args.ns[i] < 1) throw UsageError("--ns values must be positive");
        if (i > 0 && args.ns[i] <= args.ns[i - 1]) throw UsageError("--ns must be strictly increasing");
    }
    if (args.M && !(*args.M >= 0.0)) throw UsageError("--M must be non-negative");
    const auto rows = polygonal_table(f, iv, args.ns, args.M);

    Record r = make_record("table");
    r.json["inputs"] = {{"f", format(f)}, {"interval", interval_json(iv)}, {"ns", args.ns}};
    if (args.M) r.json["inputs"]["M"] = *args.M;
    ordered_json jrows = ordered_json::array();
    std::ostringstream text;
    text << "# f = " << format(f) << " on [" << format_number(iv.a()) << ", " << format_number(iv.b()) << "]\n";
    char line[128];
    std::snprintf(line, sizeof(line), "%10s  %12s", "n", "L_n");
    text << line << (args.M ? "  bound" : "") << "\n";
    for (const auto& row : rows) {
        ordered_json jr = {{"n", row.n}, {"delta_x", row.delta_x}, {"length", row.length},
                           {"length_4dp", round4(row.length)}};
        std::snprintf(line, sizeof(line), "%10lld  %12s", static_cast<long long>(row.n), round4(row.length).c_str());
        text << line;
        if (row.bound) {
            jr["bound"] = *row.bound;
            text << "  " << full(*row.bound);
        }
        text << "\n";
        jrows.push_back(jr);
    }
    r.json["results"] = {{"rows", jrows}};
    r.text = text.str();
    return r;
}

struct BoundArgs {
    double M = 0, a = 0, b = 0;
    std::int64_t n = 0;
};

Record cmd_bound(const BoundArgs& args) {
    const Interval iv = make_interval(args.a, args.b);
    if (!(args.M >= 0.0)) throw UsageError("--M must be non-negative");
    if (args.n < 1) throw UsageError("--n must be positive");
    const double bound = error_bound(args.M, iv, args.n);
    Record r = make_record("bound");
    r.json["inputs"] = {{"M", args.M}, {"interval", interval_json(iv)}, {"n", args.n}};
    r.json["results"] = {{"bound", bound}};
    r.text = "bound " + full(bound) + "\n";
    return r;
}

struct MinNArgs {
    double M = 0, a = 0, b = 0, tol = 0;
};

Record cmd_min_n(const MinNArgs& args) {
    const Interval iv = make_interval(args.a, args.b);
    if (!(args.M >= 0.0)) throw UsageError("--M must be non-negative");
    if (!(args.tol > 0.0)) throw UsageError("--tol must be positive");
    const std::int64_t n = min_subdivisions(args.M, iv, args.tol);
    Record r = make_record("min-n");
    r.json["inputs"] = {{"M", args.M}, {"interval", interval_json(iv)}, {"tol", args.tol}};
    r.json["results"] = {{"n", n}, {"bound", error_bound(args.M, iv, n)}};
    r.text = "n " + std::to_string(n) + "\n";
    return r;
}

struct IntegrateArgs {
    std::string f;
    double a = 0, b = 0;
    std::int64_t n = 0;
};

Record cmd_integrate(const IntegrateArgs& args) {
    const Expr g = parse_flag("f", args.f);
    const Interval iv = make_interval(args.a, args.b);
    if (args.n < 1) throw UsageError("--n must be positive");
    const double value = euler_sum(g, iv, args.n);
    Record r = make_record("integrate");
    r.json["inputs"] = {{"f", format(g)}, {"interval", interval_json(iv)}, {"n", args.n}};
    r.json["results"] = {{"value", value}, {"value_4dp", round4(value)}};
    r.text = "euler_sum " + full(value) + " (" + round4(value) + ")\n";
    return r;
}

struct ExprArgs {
    std::string f;
    int order = 1;
};

Record cmd_integrand(const ExprArgs& args) {
    const Expr f = parse_flag("f", args.f);
    const Expr g = arc_integrand(f);
    Record r = make_record("integrand");
    r.json["inputs"] = {{"f", format(f)}};
    r.json["results"] = {{"integrand", format(g)}};
    r.text = format(g) + "\n";
    return r;
}

Record cmd_diff(const ExprArgs& args) {
    const Expr f = parse_flag("f", args.f);
    if (args.order < 1) throw UsageError("--order must be positive");
    Expr d = f;
    for (int i = 0; i < args.order; ++i) d = differentiate(d);
    Record r = make_record("diff");
    r.json["inputs"] = {{"f", format(f)}, {"order", args.order}};
    r.json["results"] = {{"derivative", format(d)}};
    r.text = format(d) + "\n";
    return r;
}

struct ExerciseArgs {
    std::string m, n, f, exact, problem;
    double a = 0, b = 0, tol = 1e-4;
};

Exercise exercise_from(const ExerciseArgs& args) {
    std::optional<Expr> f;
    std::optional<Expr> exact;
    if (!args.f.empty()) f = parse_flag("f", args.f);
    if (!args.exact.empty()) exact = parse_flag("exact", args.exact);
    return make_exercise(parse_flag("m", args.m), parse_flag("n", args.n), make_interval(args.a, args.b), f, exact);
}

Record cmd_generate(const ExerciseArgs& args) {
    const Exercise ex = exercise_from(args);
    const double residual = pythagorean_residual(ex);
    Record r = make_record("generate");
    r.json["inputs"] = {{"m", format(ex.m)}, {"n", format(ex.n)}, {"interval", interval_json(ex.interval)}};
    r.json["results"] = {{"f_prime", format(ex.f_prime)},
                         {"integrand", format(ex.integrand)},
                         {"pythagorean_residual", residual}};
    std::ostringstream text;
    text << "f'        " << format(ex.f_prime) << "\n";
    text << "integrand " << format(ex.integrand) << "\n";
    text << "residual  " << full(residual) << "\n";
    r.text = text.str();
    return r;
}

struct VerifyOutcome {
    Record record;
    bool passed;
};

VerifyOutcome cmd_verify(const ExerciseArgs& args) {
    if (!(args.tol > 0.0)) throw UsageError("--tol must be positive");
    VerifyReport rep{};
    Record r = make_record("verify");
    if (!args.problem.empty()) {
        Problem p = [&] {
            try {
                return builtin_problem(args.problem);
            } catch (const std::out_of_range& e) {
                throw UsageError(e.what());
            }
        }();
        rep = verify_problem(p, args.tol);
        r.json["inputs"] = {{"problem", p.name}, {"f", format(p.f)}, {"interval", interval_json(p.interval)},
                            {"exact", format(p.exact_answer)}, {"tol", args.tol}};
    } else {
        if (args.m.empty() || args.n.empty() || args.exact.empty()) {
            throw UsageError("verify needs --problem, or --m, --n, --a, --b and --exact");
        }
        const Exercise ex = exercise_from(args);
        rep = verify_exercise(ex, args.tol);
        r.json["inputs"] = {{"m", format(ex.m)}, {"n", format(ex.n)}, {"interval", interval_json(ex.interval)},
                            {"exact", format(*ex.exact_answer)}, {"tol", args.tol}};
        if (ex.f) r.json["inputs"]["f"] = format(*ex.f);
    }
    r.json["results"] = {{"passed", rep.passed},
                         {"exact", rep.exact},
                         {"euler_n", rep.integral.n},
                         {"euler_sum", rep.integral.value},
                         {"euler_sum_2n", rep.integral.refined},
                         {"fitted_rate", rep.integral.fitted_rate},
                         {"cross_check_gap", rep.integral.gap},
                         {"cross_check_allowed", rep.integral.allowed_gap},
                         {"cross_check_consistent", rep.integral.consistent},
                         {"integral_residual", rep.integral_residual}};
    if (rep.polygonal) {
        r.json["results"]["polygonal_n"] = kVerifyPolygonalSubdivisions;
        r.json["results"]["polygonal_length"] = *rep.polygonal;
        r.json["results"]["polygonal_residual"] = *rep.polygonal_residual;
    }
    if (!rep.integral.consistent) r.json["warnings"].push_back("Euler sums at n and 2n disagree beyond the fitted rate");

    std::ostringstream text;
    text << (rep.passed ? "PASS" : "FAIL") << " exact=" << full(rep.exact) << "\n";
    text << "euler_sum      " << full(rep.integral.value) << " (n=" << rep.integral.n
         << ", residual " << full(rep.integral_residual) << ")\n";
    text << "cross_check    " << (rep.integral.consistent ? "ok" : "FAILED") << " gap=" << full(rep.integral.gap)
         << " allowed=" << full(rep.integral.allowed_gap) << "\n";
    if (rep.polygonal) {
        text << "polygonal      " << full(*rep.polygonal) << " (n=" << kVerifyPolygonalSubdivisions
             << ", residual " << full(*rep.polygonal_residual) << ")\n";
    }
    r.text = text.str();
    return {r, rep.passed};
}

void emit(const Record& r, const Common& common, std::ostream& out) {
    const std::string dumped = r.json.dump(2) + "\n";
    if (!common.out_path.empty()) {
        std::ofstream file(common.out_path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot write " + common.out_path);
        file << dumped;
    }
    out << (common.json ? dumped : r.text);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Arc lengths of function graphs from uniform polygonal sums", "arclen"};
    app.require_subcommand(1);
    Common common;

    LengthArgs length;
    auto* length_cmd = app.add_subcommand("length", "Arc length certified by the second-derivative bound");
    length_cmd->add_option("--f", length.f, "Function of x")->required();
    length_cmd->add_option("--a", length.a, "Left endpoint")->required();
    length_cmd->add_option("--b", length.b, "Right endpoint")->required();
    length_cmd->add_option("--tol", length.tol, "Target error")->required();
    length_cmd->add_option("--M", length.M, "Upper bound for |f''| on (a,b); sampled when omitted");
    add_common(length_cmd, common);

    TableArgs table;
    auto* table_cmd = app.add_subcommand("table", "Polygonal lengths L_n for a list of n");
    table_cmd->add_option("--f", table.f, "Function of x")->required();
    table_cmd->add_option("--a", table.a, "Left endpoint")->required();
    table_cmd->add_option("--b", table.b, "Right endpoint")->required();
    table_cmd->add_option("--ns", table.ns, "Comma separated, increasing")->required()->delimiter(',');
    table_cmd->add_option("--M", table.M, "Upper bound for |f''|; adds a bound column");
    add_common(table_cmd, common);

    BoundArgs bound;
    auto* bound_cmd = app.add_subcommand("bound", "Error bound M(b-a)^2/(2n)");
    bound_cmd->add_option("--M", bound.M)->required();
    bound_cmd->add_option("--a", bound.a)->required();
    bound_cmd->add_option("--b", bound.b)->required();
    bound_cmd->add_option("--n", bound.n)->required();
    add_common(bound_cmd, common);

    MinNArgs min_n;
    auto* min_n_cmd = app.add_subcommand("min-n", "Smallest n whose bound is within --tol");
    min_n_cmd->add_option("--M", min_n.M)->required();
    min_n_cmd->add_option("--a", min_n.a)->required();
    min_n_cmd->add_option("--b", min_n.b)->required();
    min_n_cmd->add_option("--tol", min_n.tol)->required();
    add_common(min_n_cmd, common);

    IntegrateArgs integrate;
    auto* integrate_cmd = app.add_subcommand("integrate", "Left-endpoint Euler sum of --f");
    integrate_cmd->add_option("--f", integrate.f, "Integrand")->required();
    integrate_cmd->add_option("--a", integrate.a)->required();
    integrate_cmd->add_option("--b", integrate.b)->required();
    integrate_cmd->add_option("--n", integrate.n)->required();
    add_common(integrate_cmd, common);

    ExprArgs integrand;
    auto* integrand_cmd = app.add_subcommand("integrand", "Print sqrt(1 + f'^2)");
    integrand_cmd->add_option("--f", integrand.f)->required();
    add_common(integrand_cmd, common);

    ExerciseArgs generate;
    auto* generate_cmd = app.add_subcommand("generate", "Exercise from a Pythagorean pair m, n");
    generate_cmd->add_option("--m", generate.m)->required();
    generate_cmd->add_option("--n", generate.n)->required();
    generate_cmd->add_option("--a", generate.a)->required();
    generate_cmd->add_option("--b", generate.b)->required();
    add_common(generate_cmd, common);

    ExerciseArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check an exact arc length numerically");
    auto* problem_opt = verify_cmd->add_option("--problem", verify.problem, "Built-in problem name")
                            ->check(CLI::IsMember(builtin_problem_names()));
    verify_cmd->add_option("--m", verify.m)->excludes(problem_opt);
    verify_cmd->add_option("--n", verify.n)->excludes(problem_opt);
    verify_cmd->add_option("--a", verify.a)->excludes(problem_opt);
    verify_cmd->add_option("--b", verify.b)->excludes(problem_opt);
    verify_cmd->add_option("--f", verify.f, "Optional f for the polygonal check")->excludes(problem_opt);
    verify_cmd->add_option("--exact", verify.exact, "Exact answer expression")->excludes(problem_opt);
    verify_cmd->add_option("--tol", verify.tol, "Tolerance (default 1e-4)");
    add_common(verify_cmd, common);

    ExprArgs diff;
    auto* diff_cmd = app.add_subcommand("diff", "Print the derivative of --f");
    diff_cmd->add_option("--f", diff.f)->required();
    diff_cmd->add_option("--order", diff.order, "Derivative order (default 1)");
    add_common(diff_cmd, common);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        Record record;
        bool ok = true;
        if (*length_cmd) {
            record = cmd_length(length);
        } else if (*table_cmd) {
            record = cmd_table(table);
        } else if (*bound_cmd) {
            record = cmd_bound(bound);
        } else if (*min_n_cmd) {
            record = cmd_min_n(min_n);
        } else if (*integrate_cmd) {
            record = cmd_integrate(integrate);
        } else if (*integrand_cmd) {
            record = cmd_integrand(integrand);
        } else if (*generate_cmd) {
            record = cmd_generate(generate);
        } else if (*verify_cmd) {
            auto outcome = cmd_verify(verify);
            record = std::move(outcome.record);
            ok = outcome.passed;
        } else if (*diff_cmd) {
            record = cmd_diff(diff);
        }
        emit(record, common, out);
        return ok ? 0 : 1;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace arclen
