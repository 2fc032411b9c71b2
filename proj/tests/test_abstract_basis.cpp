#include "asd/abstract_basis.hpp"
#include "asd/interval_basis.hpp"
#include "asd/presets.hpp"
#include "doctest.h"

using namespace asd;

namespace {

IntervalCode iv(const char* s) { return parse_interval_code(s); }
Rational q(long n, long d = 1) { return make_rational(n, d); }

}  // namespace

TEST_CASE("interpolant on the real line") {
  auto b = real_line_basis();
  auto r = interpolant(b, iv("<0±1>"), iv("<0±2>"));
  REQUIRE(r.found());
  CHECK(*r.witness == IntervalCode::ball(0, q(3, 2)));

  auto none = interpolant(b, IntervalCode::whole(), IntervalCode::whole());
  CHECK(none.status == SearchStatus::precondition_failed);
}

TEST_CASE("interpolant on the unit interval at the top code") {
  auto b = unit_interval_basis();
  auto r = interpolant(b, IntervalCode::whole(), IntervalCode::whole());
  REQUIRE(r.found());
  CHECK(r.witness->is_whole());
}

TEST_CASE("wilker witness") {
  auto b = real_line_basis();
  auto r = wilker_witness(b, iv("<0±1>"), iv("<-1/2±3/4>"), iv("<1/2±3/4>"));
  REQUIRE(r.found());
  CHECK(r.witness->first == IntervalCode::ball(q(-1, 2), q(5, 8)));
  CHECK(r.witness->second == IntervalCode::ball(q(1, 2), q(5, 8)));

  auto z = wilker_witness(b, IntervalCode::zero(), iv("<0±1>"), iv("<5±1>"));
  REQUIRE(z.found());
  CHECK(z.witness->first.is_zero());
  CHECK(z.witness->second.is_zero());

  auto bad = wilker_witness(b, iv("<0±3>"), iv("<-1/2±3/4>"), iv("<1/2±3/4>"));
  CHECK(bad.status == SearchStatus::precondition_failed);
}

TEST_CASE("star-slip witness") {
  auto b = real_line_basis();
  auto r = star_slip_witness(b, iv("<0±1/4>"), iv("<0±1>"), iv("<1/2±1>"));
  REQUIRE(r.found());
  CHECK(b.waybelow(iv("<0±1/4>"), *r.witness));
  CHECK(b.waybelow(*r.witness, iv("<0±1>")));
  CHECK(b.waybelow(*r.witness, iv("<1/2±1>")));
}

TEST_CASE("check_axioms on the free distributive lattice on one generator") {
  auto b = to_abstract(std::make_shared<const FiniteBasis>(free_dl_basis(1)));
  auto rep = check_axioms(b, Universe::all());
  CHECK(rep.passed());
}

TEST_CASE("check_axioms on the real line, sampled") {
  auto rep = check_axioms(real_line_basis(), Universe::random(2000, 7));
  CHECK(rep.passed());
  CHECK(rep.tally("interpolation").checked > 0);
  CHECK(rep.tally("wilker").checked > 0);
}

TEST_CASE("mutated interval bases") {
  // closed containment is reflexive, so every existential has a trivial witness
  auto rep = check_axioms(closed_containment_basis(), Universe::random(2000, 7));
  CHECK(rep.passed());

  auto margin = check_axioms(margin_interval_basis(q(1, 4)), Universe::random(2000, 7));
  CHECK_FALSE(margin.rule_passed("interpolation"));
  CHECK(margin.tally("interpolation").unwitnessed > 0);
}

TEST_CASE("strict chain fails the zero rule") {
  auto b = to_abstract(std::make_shared<const FiniteBasis>(preset_basis("strict-chain-2")));
  auto rep = check_axioms(b, Universe::all());
  CHECK_FALSE(rep.rule_passed("zero"));
  CHECK(rep.has_refutation());
}

TEST_CASE("classify") {
  auto unit = classify(unit_interval_basis(), Universe::random(2000, 3));
  CHECK(unit.compact);
  CHECK(unit.filter);
  auto line = classify(real_line_basis(), Universe::random(2000, 3));
  CHECK_FALSE(line.compact);
  CHECK_FALSE(line.filter);
  auto sigma = classify(sigma_basis(2), Universe::all());
  CHECK(sigma.compact);
  CHECK(sigma.filter);
}

TEST_CASE("or_closure") {
  auto base = real_line_basis();
  auto b = or_closure(base);
  using Set = FinSet<IntervalCode>;
  CHECK(b.waybelow(Set{iv("<0±1>")}, Set{iv("<-1/2±3/4>"), iv("<1/2±3/4>")}));
  CHECK_FALSE(b.waybelow(Set{iv("<0±1>")}, Set{iv("<-1/2±1/2>"), iv("<1/2±1/2>")}));
  CHECK(b.waybelow(Set{}, Set{}));
  CHECK(b.waybelow(Set{}, Set{iv("<3±1>")}));
  for (const char* n : {"<0±1>", "<1/2±1/3>"})
    for (const char* m : {"<0±2>", "<0±1>", "<1/2±1/2>"})
      CHECK(b.waybelow(Set{iv(n)}, Set{iv(m)}) == base.waybelow(iv(n), iv(m)));
}

TEST_CASE("or_closure preserves the axioms") {
  auto rep = check_axioms(or_closure(real_line_basis()), Universe::random(1000, 11));
  CHECK(rep.passed());
}

TEST_CASE("dual wilker star") {
  auto unit = unit_interval_basis();
  auto rel = dual_wilker_star(unit, Universe::random(500, 1));
  CHECK(rel(iv("<1/2±1/4>"), iv("<1/2±1/4>"), IntervalCode::whole()) == Verdict::yes);
  CHECK(rel(iv("<1/4±1/8>"), iv("<3/4±1/8>"), IntervalCode::zero()) == Verdict::yes);
  CHECK(rel(iv("<1/2±1/4>"), iv("<1/2±1/4>"), iv("<1/2±1/8>")) == Verdict::no);
  CHECK_THROWS_AS(dual_wilker_star(real_line_basis(), Universe::random(10, 1)), std::invalid_argument);
}

TEST_CASE("overtness: nothing inhabited is way below 0") {
  auto b = real_line_basis();
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    IntervalCode n = b.sample(rng);
    CHECK_FALSE((b.waybelow(n, b.zero()) && b.inhabited(n)));
  }
  auto u = unit_interval_basis();
  CHECK(u.waybelow(u.one(), u.zero()) != u.inhabited(u.one()));
}
