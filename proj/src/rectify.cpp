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

#include "arclen/rectify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string_view>

#include "arclen/summation.hpp"

namespace arclen {

Interval::Interval(double a, double b) : a_(a), b_(b) {
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw std::invalid_argument("interval endpoints must be finite");
    }
    if (!(a < b)) {
        throw std::invalid_argument("interval needs a < b, got [" + format_number(a) + ", " +
                                    format_number(b) + "]");
    }
}

namespace {

void require_positive(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("number of subdivisions must be positive");
}

}  // namespace

double polygonal_length(const Expr& f, const Interval& iv, std::int64_t n) {
    require_positive(n);
    const double a = iv.a();
    const double dx = iv.width() / static_cast<double>(n);
    CompensatedSum sum;
    double previous = eval(f, a);
    for (std::int64_t k = 1; k <= n; ++k) {
        const double xk = k == n ? iv.b() : a + static_cast<double>(k) * dx;
        const double y = eval(f, xk);
        sum.add(std::hypot(dx, y - previous));
        previous = y;
    }
    return sum.value();
}

std::vector<PolyResult> polygonal_table(const Expr& f, const Interval& iv,
                                        std::span<const std::int64_t> ns,
                                        std::optional<double> M) {
    if (ns.empty()) throw std::invalid_argument("subdivision list is empty");
    for (std::size_t i = 1; i < ns.size(); ++i) {
        if (ns[i] <= ns[i - 1]) {
            throw std::invalid_argument("subdivision list must be strictly increasing");
        }
    }
    std::vector<PolyResult> rows;
    rows.reserve(ns.size());
    for (std::int64_t n : ns) {
        PolyResult row{n, iv.width() / static_cast<double>(n), polygonal_length(f, iv, n), std::nullopt};
        if (M) row.bound = error_bound(*M, iv, n);
        rows.push_back(row);
    }
    return rows;
}

double error_bound(double M, const Interval& iv, std::int64_t n) {
    require_positive(n);
    if (!(M >= 0.0)) throw std::invalid_argument("M must be non-negative");
    return M * iv.width() * iv.width() / (2.0 * static_cast<double>(n));
}

std::int64_t min_subdivisions(double M, const Interval& iv, double tol) {
    if (!(M >= 0.0)) throw std::invalid_argument("M must be non-negative");
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    if (M == 0.0) return 1;
    const double needed = std::ceil(M * iv.width() * iv.width() / (2.0 * tol));
    if (!(needed <= static_cast<double>(kMaxSubdivisions))) {
        throw SubdivisionLimitError("tolerance " + format_number(tol) + " with M=" + format_number(M) +
                                    " needs more than 1e9 subdivisions");
    }
    auto n = std::max<std::int64_t>(1, static_cast<std::int64_t>(needed));
    // Settle rounding in the division against error_bound itself.
    while (n > 1 && error_bound(M, iv, n - 1) <= tol) --n;
    while (error_bound(M, iv, n) > tol) ++n;
    if (n > kMaxSubdivisions) {
        throw SubdivisionLimitError("tolerance needs more than 1e9 subdivisions");
    }
    return n;
}

MEstimate estimate_M(const Expr& f, const Interval& iv, int samples) {
    if (samples < 1) throw std::invalid_argument("sample count must be positive");
    const Expr second = differentiate(differentiate(f));
    const double h = iv.width() / samples;
    double edge = 0.0;
    double interior = 0.0;
    for (int j = 0; j < samples; ++j) {
        const double x = iv.a() + (j + 0.5) * h;
        const double v = std::abs(eval(second, x));
        if (j == 0 || j == samples - 1) {
            edge = std::max(edge, v);
        } else {
            interior = std::max(interior, v);
        }
    }
    // A flat |f''| (e.g. constant) is not a boundary peak.
    const bool at_boundary = edge > interior;
    return {1.25 * std::max(edge, interior), at_boundary};
}

ConvergenceReport arc_length(const Expr& f, const Interval& iv, double tol, std::optional<double> M) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    ConvergenceReport report{};
    if (M) {
        if (!(*M >= 0.0)) throw std::invalid_argument("M must be non-negative");
        report.M_used = *M;
        report.M_source = MSource::user;
    } else {
        MEstimate est = estimate_M(f, iv, kDefaultMSamples);
        report.M_used = est.value;
        report.M_source = MSource::sampled;
        if (est.boundary_warning) {
            report.warnings.emplace_back(
                "largest sampled |f''| lies in a boundary cell; the bound is not certified, supply --M");
        }
    }
    report.n_used = min_subdivisions(report.M_used, iv, tol);
    report.bound_used = error_bound(report.M_used, iv, report.n_used);

    std::vector<std::int64_t> ladder;
    for (std::int64_t d : {4, 2, 1}) {
        std::int64_t n = report.n_used / d;
        if (n >= 1 && (ladder.empty() || n > ladder.back())) ladder.push_back(n);
    }
    report.rows = polygonal_table(f, iv, ladder, report.M_used);
    report.estimate = report.rows.back().length;
    return report;
}

std::string round4(double value) {
    if (!std::isfinite(value)) return value != value ? "nan" : (value > 0 ? "inf" : "-inf");
    // Exact decimal expansion, then round the digit string half away from zero.
    char buf[512];
    std::snprintf(buf, sizeof(buf), "%.40f", std::abs(value));
    std::string digits(buf);
    const std::size_t dot = digits.find('.');
    std::string kept = digits.substr(0, dot) + digits.substr(dot + 1, 4);
    if (digits[dot + 5] >= '5') {
        int i = static_cast<int>(kept.size()) - 1;
        while (i >= 0 && kept[i] == '9') kept[i--] = '0';
        if (i >= 0) {
            ++kept[i];
        } else {
            kept.insert(kept.begin(), '1');
        }
    }
    std::string out = kept.substr(0, kept.size() - 4) + "." + kept.substr(kept.size() - 4);
    if (value < 0.0 && kept.find_first_not_of('0') != std::string::npos) out.insert(out.begin(), '-');
    return out;
}

}  // namespace arclen
