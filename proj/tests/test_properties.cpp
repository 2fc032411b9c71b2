#include <random>

#include "asd/interval_basis.hpp"
#include "asd/presets.hpp"
#include "asd/realcalc.hpp"
#include "asd/rounded_ideal.hpp"
#include "doctest.h"

using namespace asd;

namespace {

using S = FinSet<int>;
using D = FormalDNF<int>;

D random_dnf(std::mt19937_64& rng, int atoms) {
  std::uniform_int_distribution<int> terms(0, 3), bits(0, (1 << atoms) - 1);
  std::vector<S> out;
  for (int t = terms(rng); t > 0; --t) {
    int mask = bits(rng);
    std::vector<int> v;
    for (int i = 0; i < atoms; ++i)
      if (mask & (1 << i)) v.push_back(i);
    out.push_back(S(v));
  }
  return D(out);
}

Rational random_rational(std::mt19937_64& rng, int span, int max_den) {
  long den = std::uniform_int_distribution<long>(1, max_den)(rng);
  long num = std::uniform_int_distribution<long>(-span * den, span * den)(rng);
  return make_rational(num, den);
}

}  // namespace

TEST_CASE("upper_order is a preorder and dnf_congruent an equivalence") {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 2000; ++i) {
    D a = random_dnf(rng, 3), b = random_dnf(rng, 3), c = random_dnf(rng, 3);
    CHECK(upper_order(a, a));
    if (upper_order(a, b) && upper_order(b, c)) CHECK(upper_order(a, c));
    CHECK(dnf_congruent(a, b) == dnf_congruent(b, a));
    if (dnf_congruent(a, b) && dnf_congruent(b, c)) CHECK(dnf_congruent(a, c));
  }
}

TEST_CASE("dnf_meet and dnf_plus are monotone") {
  std::mt19937_64 rng(102);
  for (int i = 0; i < 2000; ++i) {
    D a = random_dnf(rng, 3), a2 = random_dnf(rng, 3), s = random_dnf(rng, 3);
    if (!upper_order(a, a2)) continue;
    CHECK(upper_order(dnf_meet(a, s), dnf_meet(a2, s)));
    CHECK(upper_order(dnf_meet(s, a), dnf_meet(s, a2)));
    CHECK(upper_order(dnf_plus(a, s), dnf_plus(a2, s)));
    CHECK(upper_order(dnf_plus(s, a), dnf_plus(s, a2)));
  }
}

TEST_CASE("ev respects meets and is a homomorphism up to congruence") {
  for (const char* name : {"two-point", "chain-4", "diamond", "free-dl-2"}) {
    CAPTURE(name);
    FiniteBasis fb = preset_basis(name);
    const auto& alg = fb.algebra;
    ImposedOrder o = ImposedOrder::saturate(alg);
    std::mt19937_64 rng(103);
    const int n = alg.size();
    const int atoms = std::min(n, 5);
    auto relabel = [&](const D& l) {
      std::vector<S> out;
      for (const auto& t : l) {
        std::vector<int> v;
        for (int x : t) v.push_back(x % n);
        out.push_back(S(v));
      }
      return D(out);
    };
    for (int i = 0; i < 500; ++i) {
      D r = relabel(random_dnf(rng, atoms)), s = relabel(random_dnf(rng, atoms));
      CHECK(o.leq(alg.ev(dnf_meet(r, s)), alg.ev(r)));
      CHECK(o.congruent(alg.ev(dnf_plus(r, s)), alg.plus(alg.ev(r), alg.ev(s))));
      CHECK(o.congruent(alg.ev(dnf_meet(r, s)), alg.star(alg.ev(r), alg.ev(s))));
    }
  }
}

TEST_CASE("way-below is transitive on sampled interval codes") {
  for (auto b : {real_line_basis(), unit_interval_basis()}) {
    CAPTURE(b.name);
    std::mt19937_64 rng(104);
    int chains = 0;
    for (int i = 0; i < 5000; ++i) {
      IntervalCode n = b.sample(rng);
      IntervalCode m = b.perturb(n, rng);
      IntervalCode p = b.perturb(m, rng);
      if (b.waybelow(n, m) && b.waybelow(m, p)) {
        ++chains;
        CHECK(b.waybelow(n, p));
      }
      if (b.waybelow(n, p)) {
        CHECK(b.waybelow(b.plus(n, n), p));
        CHECK(b.waybelow(n, b.star(p, p)));
      }
    }
    CHECK(chains > 0);
  }
}

TEST_CASE("point ideals are lattice homomorphisms") {
  std::mt19937_64 rng(105);
  auto b = real_line_basis();
  for (int i = 0; i < 100; ++i) {
    Rational x = random_rational(rng, 4, 8);
    auto xi = point_ideal(b, x);
    for (int j = 0; j < 20; ++j) {
      IntervalCode n = b.sample(rng), m = b.sample(rng);
      bool a = xi.member(n) == Verdict::yes, c = xi.member(m) == Verdict::yes;
      CHECK((xi.member(b.star(n, m)) == Verdict::yes) == (a && c));
      CHECK((xi.member(b.plus(n, m)) == Verdict::yes) == (a || c));
    }
    CHECK(xi.member(b.zero()) == Verdict::no);
    CHECK(xi.member(b.one()) == Verdict::yes);
  }
}

TEST_CASE("printer round-trips random expressions") {
  std::mt19937_64 rng(106);
  for (int i = 0; i < 1000; ++i) {
    ExprPtr e = random_expr(rng, 4);
    CAPTURE(print_expr(*e));
    CHECK(same_tree(*parse_expr(print_expr(*e)), *e));
  }
}

TEST_CASE("evaluate is sound on random expressions") {
  std::mt19937_64 rng(107);
  const Rational eps = make_rational(1, 1000);
  for (int i = 0; i < 100; ++i) {
    ExprPtr e = random_expr(rng, 3);
    Rational x = random_rational(rng, 2, 6);
    CAPTURE(print_expr(*e));
    CAPTURE(to_string(x));
    auto r = evaluate(*e, x, eps);
    Rational exact = eval_rational(*e, x);
    CHECK(r.interval.lower < exact);
    CHECK(exact < r.interval.upper);
    CHECK(r.interval.upper - r.interval.lower == 2 * eps);
  }
}

TEST_CASE("con_check agrees with a grid search") {
  std::mt19937_64 rng(108);
  for (int i = 0; i < 1000; ++i) {
    std::vector<IntervalCode> v;
    for (int k = std::uniform_int_distribution<int>(0, 3)(rng); k > 0; --k) {
      Rational c = make_rational(std::uniform_int_distribution<long>(-8, 8)(rng), 4);
      Rational r = make_rational(std::uniform_int_distribution<long>(1, 8)(rng), 4);
      v.push_back(IntervalCode::ball(c, r));
    }
    FinSet<IntervalCode> l(v);
    // endpoints lie on the 1/4 grid, so a common point exists iff one exists on the 1/8 grid
    bool found = l.empty();
    for (long k = -8 * 5; k <= 8 * 5 && !found; ++k) {
      Rational x = make_rational(k, 8);
      bool all = true;
      for (const auto& c : l) {
        const auto& comp = c.components().front();
        if (!(comp.lo < x && x < comp.hi)) all = false;
      }
      found = all;
    }
    CHECK(con_check(l) == found);
  }
}
