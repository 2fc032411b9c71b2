#include "asd/nucleus.hpp"
#include "asd/presets.hpp"
#include "doctest.h"

using namespace asd;

namespace {

// Up-closed families over a carrier of n codes.
std::vector<SecondOrderPred> monotone_preds(int n) {
  std::vector<SecondOrderPred> out;
  const std::size_t points = std::size_t{1} << n;
  for (std::size_t fam = 0; fam < (std::size_t{1} << points); ++fam) {
    auto p = SecondOrderPred::from(n, [&](SigmaNPoint xi) { return (fam >> xi) & 1U; });
    if (p.monotone()) out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_CASE("apply_E examples on the two-point carrier") {
  FiniteBasis b = preset_basis("two-point");
  const int one = b.one();
  auto phi = SecondOrderPred::from(2, [&](SigmaNPoint xi) { return (xi >> one) & 1U; });
  CHECK(apply_E(b, phi, 1U << one));
  CHECK_FALSE(apply_E(b, phi, 0));
  auto top = SecondOrderPred::from(2, [](SigmaNPoint) { return true; });
  CHECK(apply_E(b, top, 1U << b.zero()));
  CHECK_FALSE(apply_E(b, top, 0));
}

TEST_CASE("nucleus laws hold on lattice bases") {
  for (const char* name : {"two-point", "chain-3", "free-dl-1", "diamond"}) {
    CAPTURE(name);
    auto rep = check_nucleus_laws(preset_basis(name));
    CHECK(rep.passed());
    CHECK(rep.tally("meet").checked > 0);
  }
}

TEST_CASE("nucleus laws on the strict chain") {
  auto rep = check_nucleus_laws(preset_basis("strict-chain-2"), {PhiUniverse::all});
  CHECK_FALSE(rep.passed());
  CHECK_FALSE(rep.counterexamples().empty());
}

TEST_CASE("non-monotone predicates break the nucleus laws") {
  auto rep = check_nucleus_laws(preset_basis("chain-3"), {PhiUniverse::all});
  CHECK_FALSE(rep.passed());
}

TEST_CASE("admissible points of the free lattice on one generator") {
  FiniteBasis b = free_dl_basis(1);
  REQUIRE(b.size() == 3);
  const int g = b.algebra.index_of("g");
  const SigmaNPoint g1 = (1U << g) | (1U << b.one());
  CHECK(is_admissible(b, g1));
  CHECK_FALSE(is_admissible(b, 0b111));
  CHECK_FALSE(is_admissible(b, 0));
  CHECK(is_admissible(b, 1U << b.one()));
  CHECK(is_rounded_lattice_hom(b, g1));
  CHECK_FALSE(is_rounded_lattice_hom(b, 0b111));
}

TEST_CASE("points theorem") {
  for (const char* name : {"two-point", "free-dl-1", "free-dl-2", "diamond", "chain-3"}) {
    CAPTURE(name);
    auto rep = points_theorem_check(preset_basis(name));
    CHECK(rep.passed());
  }
  CHECK_THROWS_AS(points_theorem_check(preset_basis("strict-chain-2")), std::invalid_argument);
}

TEST_CASE("recovered way-below") {
  FiniteBasis b = free_dl_basis(1);
  for (int n = 0; n < b.size(); ++n)
    for (int m = 0; m < b.size(); ++m) CHECK(recovered_waybelow(b, n, m) == b.leq(n, m));
  for (int m = 0; m < b.size(); ++m) CHECK(recovered_waybelow(b, b.zero(), m));
  CHECK_FALSE(recovered_waybelow(b, b.one(), b.zero()));
}

TEST_CASE("literal and reduced engines agree") {
  for (const char* name : {"two-point", "chain-3", "chain-4", "free-dl-1", "diamond", "discrete-2"}) {
    CAPTURE(name);
    FiniteBasis b = preset_basis(name);
    NucleusEngine lit(b);
    NucleusEngine red(b, 0);
    REQUIRE(lit.literal());
    REQUIRE_FALSE(red.literal());
    const SigmaNPoint points = 1U << b.size();
    for (SigmaNPoint xi = 0; xi < points; ++xi) CHECK(lit.is_admissible(xi) == red.is_admissible(xi));
    for (int n = 0; n < b.size(); ++n)
      for (int m = 0; m < b.size(); ++m) CHECK(lit.recovered_waybelow(n, m) == red.recovered_waybelow(n, m));
    for (const auto& phi : monotone_preds(b.size()))
      for (SigmaNPoint xi = 0; xi < points; ++xi) CHECK(lit.apply_E(phi, xi) == red.apply_E(phi, xi));
    CHECK(red.check_laws({}).passed());
  }
}

TEST_CASE("E is monotone and idempotent") {
  FiniteBasis b = preset_basis("diamond");
  NucleusEngine e(b);
  auto preds = monotone_preds(b.size());
  const SigmaNPoint points = 1U << b.size();
  for (const auto& phi : preds) {
    auto ephi = e.E(phi);
    CHECK(e.E(ephi) == ephi);
    for (SigmaNPoint xi = 0; xi < points; ++xi)
      for (SigmaNPoint eta = 0; eta < points; ++eta)
        if ((xi & eta) == xi && e.apply_E(phi, xi)) CHECK(e.apply_E(phi, eta));
  }
  for (std::size_t i = 0; i < preds.size(); i += 7)
    for (std::size_t j = 0; j < preds.size(); j += 5) {
      bool below = true;
      for (SigmaNPoint xi = 0; xi < points; ++xi)
        if (preds[i](xi) && !preds[j](xi)) below = false;
      if (!below) continue;
      for (SigmaNPoint xi = 0; xi < points; ++xi)
        if (e.apply_E(preds[i], xi)) CHECK(e.apply_E(preds[j], xi));
    }
}

TEST_CASE("E on principal ideals is stable") {
  FiniteBasis b = free_dl_basis(1);
  NucleusEngine e(b);
  for (const auto& phi : monotone_preds(b.size())) {
    auto ephi = e.E(phi);
    for (int n = 0; n < b.size(); ++n) {
      SigmaNPoint down = 0;
      for (int k = 0; k < b.size(); ++k)
        if (b.waybelow(k, n)) down |= 1U << k;
      CHECK(e.apply_E(phi, down) == e.apply_E(ephi, down));
    }
  }
}

TEST_CASE("sigma-2 through the reduced engine") {
  FiniteBasis b = preset_basis("sigma-2");
  REQUIRE(b.size() == 16);
  NucleusEngine e(b);
  CHECK_FALSE(e.literal());
  CHECK(e.check_laws({}).passed());
  for (int n = 0; n < b.size(); ++n)
    for (int m = 0; m < b.size(); ++m) CHECK(e.recovered_waybelow(n, m) == b.waybelow(n, m));
}

TEST_CASE("carrier cap") {
  CHECK_THROWS_AS(NucleusEngine(preset_basis("discrete-5")), std::invalid_argument);
}
