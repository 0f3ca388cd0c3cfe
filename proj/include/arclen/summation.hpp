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

#ifndef ARCLEN_SUMMATION_HPP
#define ARCLEN_SUMMATION_HPP

namespace arclen {

/// Kahan-compensated running sum. Terms must be added in a fixed order for
/// results to be reproducible.
class CompensatedSum {
 public:
    void add(double term) {
        double y = term - compensation_;
        double t = sum_ + y;
        compensation_ = (t - sum_) - y;
        sum_ = t;
    }

    double value() const { return sum_; }

 private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

}  // namespace arclen

#endif  // ARCLEN_SUMMATION_HPP
