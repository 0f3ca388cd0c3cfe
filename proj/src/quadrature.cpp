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

#include "arclen/quadrature.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "arclen/summation.hpp"

namespace arclen {

double euler_sum(const Expr& g, const Interval& iv, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("number of subdivisions must be positive");
    const double dx = iv.width() / static_cast<double>(n);
    CompensatedSum sum;
    for (std::int64_t k = 0; k < n; ++k) {
        sum.add(eval(g, iv.a() + static_cast<double>(k) * dx));
    }
    return sum.value() * dx;
}

EulerSumResult euler_sum_result(const Expr& g, const Interval& iv, std::int64_t n) {
    return {n, euler_sum(g, iv, n), iv};
}

Expr arc_integrand(const Expr& f) {
    Expr slope = differentiate(f);
    return simplify(sqrt(1.0 + pow(slope, 2.0)));
}

double ftc_residual(const Expr& G, const Expr& g, const Interval& iv, std::int64_t n) {
    const double exact = eval(G, iv.b()) - eval(G, iv.a());
    return std::abs(euler_sum(g, iv, n) - exact);
}

EulerCrossCheck euler_cross_check(const Expr& g, const Interval& iv, std::int64_t n, std::int64_t coarse_n) {
    if (coarse_n < 1 || n < 1) throw std::invalid_argument("number of subdivisions must be positive");
    EulerCrossCheck out{};
    out.n = n;
    const double coarse = euler_sum(g, iv, coarse_n);
    const double coarse_refined = euler_sum(g, iv, 2 * coarse_n);
    // S(n0) - S(2 n0) = C/(2 n0)
    out.fitted_rate = 2.0 * static_cast<double>(coarse_n) * (coarse - coarse_refined);
    out.value = euler_sum(g, iv, n);
    out.refined = euler_sum(g, iv, 2 * n);
    out.gap = std::abs(out.value - out.refined);
    const double slack = 64.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(out.value));
    out.allowed_gap = 2.0 * std::abs(out.fitted_rate) / (2.0 * static_cast<double>(n)) + slack;
    out.consistent = out.gap <= out.allowed_gap;
    return out;
}

}  // namespace arclen
