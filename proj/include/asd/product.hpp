#pragma once

#include <memory>
#include <string>

#include "asd/abstract_basis.hpp"
#include "asd/interval_basis.hpp"
#include "asd/interval_code.hpp"
#include "asd/matrix.hpp"

namespace asd {

// Rectangle x × y of single-interval codes (or 1); any 0 side makes the 0 rectangle.
struct Rect {
  IntervalCode x;
  IntervalCode y;

  bool is_zero() const { return x.is_zero() || y.is_zero(); }
  friend bool operator==(const Rect& a, const Rect& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Rect& a, const Rect& b) { return !(a == b); }
  friend bool operator<(const Rect& a, const Rect& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

// Finite unions of rectangles.
using ProductCode = FinSet<Rect>;

// ∧-basis of rectangles: ⋆ and ≪ componentwise, no +.
AbstractBasis<Rect> rect_basis(const AbstractBasis<IntervalCode>& b1, const AbstractBasis<IntervalCode>& b2);
// ∨-closure of the rectangle basis, with the spatial hooks of the plane.
AbstractBasis<ProductCode> product_basis(const AbstractBasis<IntervalCode>& b1,
                                         const AbstractBasis<IntervalCode>& b2);

ProductCode make_rect(const IntervalCode& x, const IntervalCode& y);
// "(<a±d>, <b±e>) + ...", "0" for the empty union.
ProductCode parse_product_code(std::string_view text);

// pair(ρ, σ)(n, (p, q)) = ρ(n, p) ∧ σ(n, q), decided on unions by the paired function.
Matrix<IntervalCode, ProductCode> pair_matrix(const Matrix<IntervalCode, IntervalCode>& rho,
                                              const Matrix<IntervalCode, IntervalCode>& sigma,
                                              std::shared_ptr<const AbstractBasis<ProductCode>> product);

}  // namespace asd
