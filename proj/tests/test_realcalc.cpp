#include "asd/realcalc.hpp"
#include "doctest.h"

using namespace asd;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }
using K = Expr::Kind;

}  // namespace

TEST_CASE("parse") {
  auto e = parse_expr("x+1");
  CHECK(same_tree(*e, *Expr::binary(K::add, Expr::var(), Expr::literal(1))));
  auto f = parse_expr("x*(x+1)");
  CHECK(same_tree(*f, *Expr::binary(K::mul, Expr::var(), Expr::binary(K::add, Expr::var(), Expr::literal(1)))));
  auto g = parse_expr("1 - 2 - x");
  CHECK(same_tree(*g, *Expr::binary(K::sub, Expr::binary(K::sub, Expr::literal(1), Expr::literal(2)), Expr::var())));
  auto h = parse_expr("-x*3/4");
  CHECK(same_tree(*h, *Expr::binary(K::mul, Expr::unary(K::neg, Expr::var()), Expr::literal(q(3, 4)))));
  auto m = parse_expr("min(x, 0-x)");
  CHECK(m->kind == K::min);
}

TEST_CASE("parse errors") {
  try {
    parse_expr("x+");
    FAIL("expected a parse error");
  } catch (const ParseError& err) {
    CHECK(err.position() == 2);
  }
  CHECK_THROWS_AS(parse_expr("0.5*x"), ParseError);
  CHECK_THROWS_AS(parse_expr("1/0"), ParseError);
  CHECK_THROWS_AS(parse_expr("y"), ParseError);
  CHECK_THROWS_AS(parse_expr("(x"), ParseError);
  CHECK_THROWS_AS(parse_expr("x)"), ParseError);
  CHECK_THROWS_AS(parse_expr("min(x)"), ParseError);
}

TEST_CASE("printer round-trips") {
  for (const char* s : {"x + 1", "x * (x + 1)", "1 - (2 - x)", "-(x + 1)", "min(x, -x) * 3/4", "x - -x",
                        "max(1, x * x) + -x"}) {
    CAPTURE(s);
    auto e = parse_expr(s);
    CHECK(print_expr(*e) == s);
    CHECK(same_tree(*parse_expr(print_expr(*e)), *e));
  }
}

TEST_CASE("exact rational evaluation") {
  CHECK(eval_rational(*parse_expr("x*x+1"), q(1, 3)) == q(10, 9));
  CHECK(eval_rational(*parse_expr("min(x, 0-x)"), q(-2)) == q(-2));
  CHECK(eval_rational(*parse_expr("max(x, 0-x)"), q(-2)) == q(2));
}

TEST_CASE("evaluate") {
  auto r = evaluate(*parse_expr("x+1"), 0, q(1, 2));
  CHECK(r.interval.lower <= 1);
  CHECK(r.interval.upper >= 1);
  CHECK(r.interval.upper - r.interval.lower == 1);

  const Rational eps = q(1, 1000000);
  auto s = evaluate(*parse_expr("x*x+1"), q(1, 3), eps);
  CHECK(s.interval.lower < q(10, 9));
  CHECK(s.interval.upper > q(10, 9));
  CHECK(s.interval.upper - s.interval.lower == 2 * eps);
  CHECK(to_string(s.interval.lower) == "111111/100000");
  CHECK(to_string(s.interval.upper) == "138889/125000");

  auto t = evaluate(*parse_expr("min(x,0-x)"), 0, q(1, 4));
  CHECK(t.interval.lower < 0);
  CHECK(t.interval.upper > 0);

  CHECK_THROWS_AS(evaluate(*parse_expr("x"), 0, 0), std::invalid_argument);
}

TEST_CASE("evaluate gives up past the depth bound") {
  CHECK_THROWS_AS(evaluate(*parse_expr("x*x*x*x*x*x*x*x"), 1000, q(1, 1000000), 2), EvaluationExhausted);
}

TEST_CASE("compile") {
  auto rho = compile(*parse_expr("x+1"));
  auto add1 = builtin_real_matrix(Builtin::add_const, {Rational(1)});
  std::mt19937_64 rng(4);
  auto line = shared_real_line();
  for (int i = 0; i < 200; ++i) {
    IntervalCode n = line->sample(rng);
    IntervalCode m = line->perturb(add1.forward(n, 0).empty() ? n : add1.forward(n, 0).back(), rng);
    Verdict a = rho(n, m), b = add1(n, m);
    if (a != Verdict::unknown && b != Verdict::unknown) CHECK(a == b);
  }
  CHECK(rho(parse_interval_code("<0±1/4>"), parse_interval_code("<1±1/2>")) == Verdict::yes);
  CHECK(validate_matrix(compile(*parse_expr("x*x - 1")), Universe::random(300, 5)).passed());
}
