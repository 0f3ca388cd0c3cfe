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

#ifndef ARCLEN_RECTIFY_HPP
#define ARCLEN_RECTIFY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "arclen/expr.hpp"

namespace arclen {

/// Closed interval [a, b] with finite a < b.
class Interval {
 public:
    Interval(double a, double b);

    double a() const { return a_; }
    double b() const { return b_; }
    double width() const { return b_ - a_; }

    friend bool operator==(const Interval&, const Interval&) = default;

 private:
    double a_;
    double b_;
};

/// One row of a convergence table.
struct PolyResult {
    std::int64_t n;
    double delta_x;
    double length;
    /// M(b-a)^2/(2n), present only when an M was supplied.
    std::optional<double> bound;
};

enum class MSource { user, sampled };

struct MEstimate {
    double value;
    /// The first or last grid cell beat every interior sample, so the
    /// supremum may be approached at (or blow up towards) an endpoint.
    bool boundary_warning;
};

struct ConvergenceReport {
    std::vector<PolyResult> rows;
    double estimate;
    std::int64_t n_used;
    double bound_used;
    double M_used;
    MSource M_source;
    std::vector<std::string> warnings;
};

/// Raised when a requested accuracy needs more than kMaxSubdivisions.
class SubdivisionLimitError : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::int64_t kMaxSubdivisions = 1'000'000'000;
inline constexpr int kDefaultMSamples = 10001;

/// Sum of the chord lengths sqrt(dx^2 + (f(x_{k+1}) - f(x_k))^2) over the
/// uniform n-part subdivision of `iv`, accumulated left to right with Kahan
/// compensation. x_n is taken to be b exactly.
double polygonal_length(const Expr& f, const Interval& iv, std::int64_t n);

/// `ns` must be nonempty and strictly increasing.
std::vector<PolyResult> polygonal_table(const Expr& f, const Interval& iv,
                                        std::span<const std::int64_t> ns,
                                        std::optional<double> M = std::nullopt);

/// M(b-a)^2/(2n), the a-priori bound on |L - L_n| when |f''| <= M on (a,b).
double error_bound(double M, const Interval& iv, std::int64_t n);

/// Least n >= 1 with error_bound(M, iv, n) <= tol.
std::int64_t min_subdivisions(double M, const Interval& iv, double tol);

/// 1.25 times the largest |f''| over the cell midpoints
/// a + (j + 1/2)(b - a)/samples. Endpoints are never sampled.
MEstimate estimate_M(const Expr& f, const Interval& iv, int samples);

/// Picks n from the bound so that |L - L_n| <= tol whenever M really
/// dominates sup |f''|, and reports L_n. Without an M the bound is sampled.
ConvergenceReport arc_length(const Expr& f, const Interval& iv, double tol,
                             std::optional<double> M = std::nullopt);

/// Rounds half away from zero to 4 decimals, e.g. 12.65075 -> "12.6508".
std::string round4(double value);

}  // namespace arclen

#endif  // ARCLEN_RECTIFY_HPP
