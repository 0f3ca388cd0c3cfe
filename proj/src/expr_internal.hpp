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

#ifndef ARCLEN_SRC_EXPR_INTERNAL_HPP
#define ARCLEN_SRC_EXPR_INTERNAL_HPP

#include "arclen/expr.hpp"

namespace arclen::detail {

// Scalar kernels shared by eval and constant folding. They throw
// EvalDomainError / EvalOverflowError without location info.
double apply_unary(UnaryOp op, double v);
double apply_binary(BinaryOp op, double l, double r);
double named_value(NamedConstant which);

}  // namespace arclen::detail

#endif  // ARCLEN_SRC_EXPR_INTERNAL_HPP
