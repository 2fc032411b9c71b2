#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "asd/rational.hpp"
#include "asd/spans.hpp"
#include "asd/verdict.hpp"

namespace asd {

using Point = std::vector<Rational>;

// A continuous map ℝ^in → ℝ^out given by an interval extension and exact values.
struct RealFunction {
  std::string name;
  std::size_t in_dim = 1;
  std::size_t out_dim = 1;
  // Closed bounded box in, closed bounded box containing the image out.
  std::function<Box(const Box&)> hull;
  std::function<Point(const Point&)> at;
  // hull(B) is exactly the image of B.
  bool exact_hull = false;
  bool identity = false;
};

using RealFunctionPtr = std::shared_ptr<const RealFunction>;

RealFunctionPtr identity_function(std::size_t dim);
// g ∘ f
RealFunctionPtr compose_functions(const RealFunctionPtr& g, const RealFunctionPtr& f);
// x ↦ (f(x), g(x))
RealFunctionPtr pair_functions(const RealFunctionPtr& f, const RealFunctionPtr& g);

enum class Builtin { constant, identity, negate, add_const, scale, add, mul, min, max };

// Unary kinds take one rational parameter where needed (const, add_const, scale).
RealFunctionPtr builtin_function(Builtin kind, const std::vector<Rational>& params = {});
Builtin parse_builtin(const std::string& name);
std::string builtin_name(Builtin kind);
bool builtin_binary(Builtin kind);

struct ImageBudget {
  std::size_t max_boxes = 4096;
};

// Decides f(⋃ pieces) ⊆ ⋃ targets. Pieces are closed bounded boxes.
// yes: every bisected piece has its hull inside; no: an exact value escapes
// (or an exact hull escapes); unknown: budget exhausted.
Verdict image_within(const RealFunction& f, const std::vector<Box>& pieces,
                     const std::vector<Box>& targets, const ImageBudget& budget = {});

// Closed box of the hull of f over each piece, widened by r on every side (open).
std::vector<Box> widened_image(const RealFunction& f, const std::vector<Box>& pieces, const Rational& r);

}  // namespace asd
