#pragma once

#include <memory>
#include <vector>

#include "asd/interval_basis.hpp"
#include "asd/matrix.hpp"
#include "asd/product.hpp"
#include "asd/real_function.hpp"

namespace asd {

using RealMatrix = Matrix<IntervalCode, IntervalCode>;
using PlaneMatrix = Matrix<ProductCode, IntervalCode>;

// Shared instances so that composed matrices agree on basis identity.
std::shared_ptr<const AbstractBasis<IntervalCode>> shared_real_line();
std::shared_ptr<const AbstractBasis<ProductCode>> shared_real_plane();

// const c, identity, negate, add_const c, scale c: ℝ → ℝ.
RealMatrix builtin_real_matrix(Builtin kind, const std::vector<Rational>& params = {});
// add, mul, min, max: ℝ×ℝ → ℝ.
PlaneMatrix builtin_plane_matrix(Builtin kind);

// ρ(n, m) = true. Breaks ρ(n, 0) ⟺ n ≪ 0.
RealMatrix constant_true_matrix();
// ρ(n, m) = n ≪ 1. Breaks the bottom rule.
RealMatrix top_only_matrix();
// ρ(n, m) = n ≪ 0 ∨ (n ≪ 1 ∧ (a ∈ U^m ∨ b ∈ U^m)): a nondeterministic choice of a
// or b. Keeps top, bottom and join, breaks meet.
RealMatrix choice_matrix(const Rational& a, const Rational& b);

}  // namespace asd
