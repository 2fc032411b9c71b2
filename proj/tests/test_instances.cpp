#include <string>

#include "asd/interval_basis.hpp"
#include "asd/presets.hpp"
#include "asd/rounded_ideal.hpp"
#include "doctest.h"

using namespace asd;

namespace {

IntervalCode iv(const char* s) { return parse_interval_code(s); }
Rational q(long n, long d = 1) { return make_rational(n, d); }

const char* kTwoPoint = R"({
  "name": "two",
  "carrier": ["0", "1"], "zero": "0", "one": "1",
  "plus": [["0","0","0"],["0","1","1"],["1","0","1"],["1","1","1"]],
  "star": [["0","0","0"],["0","1","0"],["1","0","0"],["1","1","1"]],
  "waybelow": [["0","0"],["0","1"],["1","1"]]
})";

}  // namespace

TEST_CASE("interval codes parse and print") {
  CHECK(iv("<0±1>") == IntervalCode::ball(0, 1));
  CHECK(iv("<1/2+-1/4>") == IntervalCode::span(q(1, 4), q(3, 4)));
  CHECK(iv("0").is_zero());
  CHECK(iv("1").is_whole());
  CHECK(iv("<0±1> + <3±1>").components().size() == 2);
  CHECK(iv("<0±1> + <1±1>").single());
  CHECK(iv("<-1/2±3/4>").str() == "<-1/2±3/4>");
  CHECK_THROWS(iv("<0±0>"));
  CHECK_THROWS(iv("<0±1"));
}

TEST_CASE("touching components are kept apart") {
  IntervalCode c = iv("<0±1> + <2±1>");
  CHECK(c.components().size() == 2);
  auto b = real_line_basis();
  CHECK_FALSE(b.waybelow(iv("<1±1/2>"), c));
  CHECK(b.waybelow(iv("<1/2±1/4>"), c));
}

TEST_CASE("real line way-below") {
  auto b = real_line_basis();
  CHECK(b.waybelow(iv("<0±1>"), iv("<0±2>")));
  CHECK_FALSE(b.waybelow(iv("<0±2>"), iv("<0±1>")));
  CHECK_FALSE(b.waybelow(iv("<0±1>"), iv("<0±1>")));
  CHECK_FALSE(b.waybelow(b.one(), b.one()));
  CHECK(b.waybelow(b.zero(), b.zero()));
  CHECK(b.waybelow(iv("<0±1>"), b.one()));
}

TEST_CASE("unit interval way-below") {
  auto b = unit_interval_basis();
  CHECK(b.waybelow(b.one(), b.one()));
  CHECK(b.waybelow(iv("<0±1/4>"), iv("<0±1/2>")));
  CHECK(b.waybelow(b.one(), iv("<1/2±3/4>")));
  CHECK_FALSE(b.waybelow(b.one(), iv("<1/2±1/2>")));
}

TEST_CASE("interval operations") {
  auto b = real_line_basis();
  CHECK(b.plus(iv("<0±1>"), iv("<1±1>")) == IntervalCode::span(-1, 2));
  CHECK(b.star(iv("<0±1>"), iv("<1±1>")) == IntervalCode::span(0, 1));
  CHECK(b.star(iv("<0±1>"), iv("<3±1>")).is_zero());
  CHECK(b.star(b.one(), iv("<3±1>")) == iv("<3±1>"));
}

TEST_CASE("discrete and sigma bases") {
  auto d = discrete_basis(3);
  CHECK(d.waybelow(FinSet<int>{0}, FinSet<int>{0, 1}));
  CHECK_FALSE(d.waybelow(FinSet<int>{2}, FinSet<int>{0, 1}));
  auto s = sigma_basis(2);
  using D = FormalDNF<int>;
  CHECK(s.waybelow(D{FinSet<int>{0}}, D{FinSet<int>{0}, FinSet<int>{0, 1}}));
  for (const auto& l : *s.carrier) {
    CHECK(s.waybelow(D{}, l));
    CHECK(s.waybelow(l, l));
  }
}

TEST_CASE("finite bases pass the axioms exhaustively") {
  for (int k = 1; k <= 3; ++k) {
    CAPTURE(k);
    CHECK(check_axioms(discrete_basis(k), Universe::all()).passed());
    CHECK(check_axioms(sigma_basis(k), Universe::all()).passed());
  }
  for (const char* name : {"two-point", "chain-3", "diamond", "free-dl-1", "free-dl-2"}) {
    CAPTURE(name);
    CHECK(check_axioms(preset_basis(name)).passed());
  }
}

TEST_CASE("load_finite_basis") {
  FiniteBasis b = load_finite_basis(kTwoPoint);
  CHECK(b.size() == 2);
  CHECK(b.name == "two");
  CHECK(b.waybelow(0, 1));
  CHECK_FALSE(b.waybelow(1, 0));
  CHECK(check_axioms(b).passed());

  std::string partial = kTwoPoint;
  partial.replace(partial.find(R"(,["1","0","1"])"), 14, "");
  CHECK_THROWS_AS(load_finite_basis(partial), std::invalid_argument);

  std::string interval = kTwoPoint;
  interval.replace(interval.find(R"([["0","0"],["0","1"],["1","1"]])"), 31, R"("interval")");
  CHECK_NOTHROW(load_finite_basis(interval));
  std::string symbolic = R"({
    "carrier": ["bot", "top"], "zero": "bot", "one": "top",
    "plus": [["bot","bot","bot"],["bot","top","top"],["top","bot","top"],["top","top","top"]],
    "star": [["bot","bot","bot"],["bot","top","bot"],["top","bot","bot"],["top","top","top"]],
    "waybelow": "interval"
  })";
  CHECK_THROWS_AS(load_finite_basis(symbolic), std::invalid_argument);

  std::string unknown = kTwoPoint;
  unknown.replace(unknown.find(R"([["0","0"],["0","1"],["1","1"]])"), 31, R"("nearby")");
  CHECK_THROWS_AS(load_finite_basis(unknown), std::invalid_argument);

  CHECK_THROWS_AS(load_finite_basis("{ not json"), ParseError);
}

TEST_CASE("point ideal") {
  auto b = real_line_basis();
  auto xi = point_ideal(b, Rational(0));
  CHECK(xi.member(iv("<0±1>")) == Verdict::yes);
  CHECK(xi.member(iv("<2±1>")) == Verdict::no);
  CHECK(b.waybelow(iv("<0±1/2>"), iv("<0±1>")));
  CHECK(xi.member(iv("<0±1/2>")) == Verdict::yes);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    IntervalCode n = b.sample(rng), m = b.sample(rng);
    bool both = xi.member(n) == Verdict::yes && xi.member(m) == Verdict::yes;
    CHECK((xi.member(b.star(n, m)) == Verdict::yes) == both);
  }
  auto rep = is_rounded_ideal(b, xi, Universe::random(300, 4));
  CHECK(rep.passed());
}

TEST_CASE("rounded ideal checks") {
  auto fb = std::make_shared<const FiniteBasis>(free_dl_basis(1));
  auto b = to_abstract(fb);
  for (int n = 0; n < fb->size(); ++n) {
    CAPTURE(n);
    CHECK(is_rounded_ideal(b, principal_ideal(b, n), Universe::all()).passed());
  }

  RoundedIdeal<int> empty;
  empty.name = "false";
  empty.member = [](int) { return Verdict::no; };
  empty.certificates = [](int) { return std::vector<int>{}; };
  auto rep = is_rounded_ideal(b, empty, Universe::all());
  CHECK_FALSE(rep.rule_passed("inhabited"));

  auto line = real_line_basis();
  auto xi = principal_ideal(line, iv("<0±1>"));
  CHECK(xi.member(iv("<0±1/2>")) == Verdict::yes);

  // neighbourhoods of [-1, 1]: up-closed, but nothing ≪ ⟨0±1⟩ contains it
  RoundedIdeal<IntervalCode> upset;
  upset.name = "up";
  upset.form = IdealForm::point;
  upset.member = [&](const IntervalCode& n) { return from_bool(line.leq(iv("<0±1>"), n)); };
  upset.certificates = [](int) { return std::vector<IntervalCode>{parse_interval_code("<0±1>")}; };
  auto r2 = is_rounded_ideal(line, upset, Universe::random(200, 2));
  CHECK_FALSE(r2.rule_passed("rounded"));
}

TEST_CASE("con_check") {
  CHECK(con_check(FinSet<IntervalCode>{iv("<0±1>"), iv("<1±1/2>")}));
  CHECK_FALSE(con_check(FinSet<IntervalCode>{iv("<0±1/4>"), iv("<1±1/4>")}));
  CHECK(con_check(FinSet<IntervalCode>{}));
  CHECK_FALSE(con_check(FinSet<IntervalCode>{iv("<0±1>"), iv("<2±1>")}));
  CHECK_THROWS_AS(con_check(FinSet<IntervalCode>{iv("<0±1> + <5±1>")}), std::invalid_argument);
}

TEST_CASE("margin basis leaves interpolation unwitnessed") {
  auto b = margin_interval_basis(q(1, 4));
  CHECK(b.waybelow(iv("<0±1>"), iv("<0±3/2>")));
  auto r = interpolant(b, iv("<0±1>"), iv("<0±3/2>"));
  CHECK(r.status == SearchStatus::exhausted);
}
