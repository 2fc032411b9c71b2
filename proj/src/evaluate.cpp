#include <algorithm>

#include "asd/realcalc.hpp"

namespace asd {

namespace {

mpz_class floor_div(const Rational& q) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

mpz_class ceil_div(const Rational& q) {
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

}  // namespace

Evaluation evaluate(const Expr& e, const Rational& x, const Rational& eps, int max_depth) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  const RealMatrix rho = compile(e);
  const Rational pitch = eps / 2;
  for (int d = 0; d <= max_depth; ++d) {
    const Rational delta = pow2(-d);
    const IntervalCode n = IntervalCode::ball(x, delta);
    const Box image = rho.function->hull(Box{Span::closed(x - delta, x + delta)});
    const Rational& l = *image[0].lo;
    const Rational& u = *image[0].hi;
    // grid points k·ε/2 strictly inside (u - ε, l + ε)
    mpz_class lo_k = floor_div((u - eps) / pitch) + 1;
    mpz_class hi_k = ceil_div((l + eps) / pitch) - 1;
    if (lo_k > hi_k) continue;
    std::vector<Rational> ys;
    for (mpz_class k = lo_k; k <= hi_k; ++k) ys.push_back(Rational(k) * pitch);
    std::sort(ys.begin(), ys.end(), [](const Rational& a, const Rational& b) {
      if (abs(a) != abs(b)) return abs(a) < abs(b);
      return a < b;
    });
    for (const auto& y : ys)
      if (rho(n, IntervalCode::ball(y, eps)) == Verdict::yes) return {{y - eps, y + eps}, d};
  }
  throw EvaluationExhausted("no verified ε-interval up to depth " + std::to_string(max_depth));
}

}  // namespace asd
