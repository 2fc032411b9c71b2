#include "asd/builtins.hpp"

namespace asd {

std::shared_ptr<const AbstractBasis<IntervalCode>> shared_real_line() {
  static const auto b = std::make_shared<const AbstractBasis<IntervalCode>>(real_line_basis());
  return b;
}

std::shared_ptr<const AbstractBasis<ProductCode>> shared_real_plane() {
  static const auto b = std::make_shared<const AbstractBasis<ProductCode>>(
      product_basis(real_line_basis(), real_line_basis()));
  return b;
}

RealMatrix builtin_real_matrix(Builtin kind, const std::vector<Rational>& params) {
  if (builtin_binary(kind)) throw std::invalid_argument(builtin_name(kind) + " is binary; use the plane");
  if (kind == Builtin::identity) return identity(*shared_real_line());
  auto f = builtin_function(kind, params);
  return function_matrix<IntervalCode, IntervalCode>(f->name, shared_real_line(), shared_real_line(), f);
}

PlaneMatrix builtin_plane_matrix(Builtin kind) {
  if (!builtin_binary(kind)) throw std::invalid_argument(builtin_name(kind) + " is unary");
  auto f = builtin_function(kind);
  return function_matrix<ProductCode, IntervalCode>(f->name, shared_real_plane(), shared_real_line(), f);
}

namespace {

RealMatrix relation_matrix(std::string name, std::function<Verdict(const IntervalCode&, const IntervalCode&)> rel) {
  RealMatrix r;
  r.name = std::move(name);
  r.source = shared_real_line();
  r.target = shared_real_line();
  r.rel = std::move(rel);
  auto b = r.source;
  r.forward = [b](const IntervalCode& n, int level) {
    return b->enlargements ? b->enlargements(n, level) : std::vector<IntervalCode>{};
  };
  return r;
}

}  // namespace

RealMatrix constant_true_matrix() {
  return relation_matrix("true", [](const IntervalCode&, const IntervalCode&) { return Verdict::yes; });
}

RealMatrix top_only_matrix() {
  auto b = shared_real_line();
  return relation_matrix("n<<1", [b](const IntervalCode& n, const IntervalCode&) {
    return from_bool(b->waybelow(n, b->one()));
  });
}

RealMatrix choice_matrix(const Rational& a, const Rational& c) {
  auto b = shared_real_line();
  return relation_matrix("choice(" + to_string(a) + "," + to_string(c) + ")",
                         [b, a, c](const IntervalCode& n, const IntervalCode& m) {
                           if (b->waybelow(n, b->zero())) return Verdict::yes;
                           if (!b->waybelow(n, b->one())) return Verdict::no;
                           auto opens = b->open_boxes(m);
                           return from_bool(boxes_contain(opens, {a}) || boxes_contain(opens, {c}));
                         });
}

}  // namespace asd
