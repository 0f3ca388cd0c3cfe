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

#ifndef ARCLEN_QUADRATURE_HPP
#define ARCLEN_QUADRATURE_HPP

#include <cstdint>

#include "arclen/expr.hpp"
#include "arclen/rectify.hpp"

namespace arclen {

struct EulerSumResult {
    std::int64_t n;
    double value;
    Interval interval;
};

/// Uniform left-endpoint sum  sum_{k<n} g(a + k dx) dx,  dx = (b-a)/n.
double euler_sum(const Expr& g, const Interval& iv, std::int64_t n);
EulerSumResult euler_sum_result(const Expr& g, const Interval& iv, std::int64_t n);

/// simplify(sqrt(1 + f'^2)).
Expr arc_integrand(const Expr& f);

/// |euler_sum(g, iv, n) - (G(b) - G(a))|.
double ftc_residual(const Expr& G, const Expr& g, const Interval& iv, std::int64_t n);

/// An Euler sum at n checked against one at 2n.
///
/// Left sums behave like I + C/n, so the constant C is fitted from a pair of
/// coarse sums at n0 and 2 n0, and the fine pair must agree to within twice
/// the predicted gap C/(2n).
struct EulerCrossCheck {
    std::int64_t n;
    double value;         // S(n)
    double refined;       // S(2n)
    double fitted_rate;   // C
    double gap;           // |S(n) - S(2n)|
    double allowed_gap;   // 2 |C| / (2n) plus rounding slack
    bool consistent;
};

inline constexpr std::int64_t kReferenceSubdivisions = 1'000'000;

EulerCrossCheck euler_cross_check(const Expr& g, const Interval& iv,
                                  std::int64_t n = kReferenceSubdivisions,
                                  std::int64_t coarse_n = 10'000);

}  // namespace arclen

#endif  // ARCLEN_QUADRATURE_HPP
