#pragma once

#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

#include "asd/builtins.hpp"
#include "asd/rational.hpp"

namespace asd {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { lit, var, neg, add, sub, mul, min, max };
  Kind kind = Kind::lit;
  Rational value;  // lit only
  ExprPtr lhs;     // neg uses lhs
  ExprPtr rhs;

  static ExprPtr literal(const Rational& q);
  static ExprPtr var();
  static ExprPtr unary(Kind k, ExprPtr a);
  static ExprPtr binary(Kind k, ExprPtr a, ExprPtr b);
};

// expr := term (('+'|'-') term)*; term := unary ('*' unary)*;
// unary := '-' unary | primary; primary := int ['/' int] | x | (expr) | min(e,e) | max(e,e)
ExprPtr parse_expr(std::string_view text);
std::string print_expr(const Expr& e);
bool same_tree(const Expr& a, const Expr& b);

Rational eval_rational(const Expr& e, const Rational& x);

// Matrix ℝ → ℝ built from builtin matrices by composition and pairing.
RealMatrix compile(const Expr& e);

struct RationalInterval {
  Rational lower;
  Rational upper;
};

struct Evaluation {
  RationalInterval interval;
  int depth = 0;  // δ = 2^-depth at which the answer was verified
};

class EvaluationExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// [y-ε, y+ε] with ρ(⟨x±δ⟩, ⟨y±ε⟩) verified; throws EvaluationExhausted past max_depth.
Evaluation evaluate(const Expr& e, const Rational& x, const Rational& eps, int max_depth = 64);

// Random expression of bounded depth with small rational literals.
ExprPtr random_expr(std::mt19937_64& rng, int depth);

}  // namespace asd
