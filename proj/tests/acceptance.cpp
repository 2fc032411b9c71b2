// Acceptance run: one PASS/FAIL line per criterion 1-9. Exit code is the number of failures.
#include <chrono>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "asd/builtins.hpp"
#include "asd/interval_basis.hpp"
#include "asd/nucleus.hpp"
#include "asd/presets.hpp"
#include "asd/realcalc.hpp"
#include "asd/rounded_ideal.hpp"

using namespace asd;

namespace {

constexpr double kNucleusBudgetSeconds = 60.0;
constexpr double kEvalBudgetSeconds = 5.0;
constexpr std::size_t kAxiomSamples = 10000;
constexpr std::size_t kMatrixSamples = 10000;
constexpr std::size_t kUnitPairs = 1000;
constexpr std::size_t kEvalCases = 1000;
constexpr std::size_t kConCases = 1000;
constexpr std::size_t kIdealPoints = 100;

const std::vector<std::string> kCarriers = {"two-point", "free-dl-1", "diamond", "sigma-2"};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << detail << ")\n";
  if (!ok) ++failures;
}

std::string first_example(const AxiomReport& rep) {
  if (rep.counterexamples().empty()) return "none";
  const auto& c = rep.counterexamples().front();
  std::string out = c.rule + " " + c.kind + ":";
  for (const auto& s : c.codes) out += " " + s;
  return out;
}

Rational random_rational(std::mt19937_64& rng, long span, long max_den) {
  long den = std::uniform_int_distribution<long>(1, max_den)(rng);
  long num = std::uniform_int_distribution<long>(-span * den, span * den)(rng);
  return make_rational(num, den);
}

void criterion_nucleus() {
  auto t0 = Clock::now();
  bool ok = true;
  std::ostringstream d;
  for (const auto& name : kCarriers) {
    FiniteBasis b = preset_basis(name);
    NucleusEngine e(b);
    AxiomReport rep = e.check_laws({});
    std::size_t checked = 0;
    for (const auto& t : rep.tallies()) checked += t.checked;
    d << name << ":" << (rep.passed() ? "ok" : "fail") << "/" << checked << " ";
    if (!rep.passed()) {
      ok = false;
      d << "[" << first_example(rep) << "] ";
    }
  }
  double s = seconds_since(t0);
  d << "time " << s << "s, budget " << kNucleusBudgetSeconds << "s";
  report(1, "nucleus laws", ok && s < kNucleusBudgetSeconds, d.str());
}

void criterion_points() {
  bool ok = true;
  std::ostringstream d;
  for (const auto& name : kCarriers) {
    FiniteBasis b = preset_basis(name);
    AxiomReport rep = points_theorem_check(b);
    const std::size_t both = rep.tally("admissible-implies-hom").checked + rep.tally("hom-implies-admissible").checked;
    d << name << ":" << (rep.passed() ? "ok" : "fail") << "/" << (std::size_t{1} << b.size()) << " points, "
      << both << " implications; ";
    if (!rep.passed()) {
      ok = false;
      d << "[" << first_example(rep) << "] ";
    }
  }
  report(2, "points theorem", ok, d.str());
}

void criterion_recovery() {
  bool ok = true;
  std::ostringstream d;
  for (const auto& name : kCarriers) {
    FiniteBasis b = preset_basis(name);
    NucleusEngine e(b);
    std::size_t bad = 0;
    for (int n = 0; n < b.size(); ++n)
      for (int m = 0; m < b.size(); ++m)
        if (e.recovered_waybelow(n, m) != b.waybelow(n, m)) ++bad;
    d << name << ":" << bad << " mismatches/" << b.size() * b.size() << " ";
    if (bad) ok = false;
  }
  report(3, "recovered way-below", ok, d.str());
}

void criterion_interval_axioms() {
  bool ok = true;
  std::ostringstream d;
  for (const auto& b : {real_line_basis(), unit_interval_basis()}) {
    AxiomReport rep = check_axioms(b, Universe::random(kAxiomSamples, 20240601));
    std::size_t refuted = 0, unwitnessed = 0;
    for (const auto& t : rep.tallies()) {
      refuted += t.refuted;
      unwitnessed += t.unwitnessed;
    }
    d << b.name << ": " << refuted << " refuted, " << unwitnessed << " unwitnessed; ";
    if (!rep.passed()) {
      ok = false;
      d << "[" << first_example(rep) << "] ";
    }
  }
  d << kAxiomSamples << " samples each, search bound 3 levels";
  report(4, "interval basis axioms", ok, d.str());
}

void criterion_classify() {
  Classification unit = classify(unit_interval_basis(), Universe::random(kAxiomSamples, 7));
  Classification line = classify(real_line_basis(), Universe::random(kAxiomSamples, 7));
  std::ostringstream d;
  d << "unit-interval compact=" << unit.compact << " filter=" << unit.filter << "; real-line compact=" << line.compact;
  report(5, "classification", unit.compact && unit.filter && !line.compact, d.str());
}

template <class S>
bool validated(const Matrix<S, IntervalCode>& rho, std::uint64_t seed, std::ostringstream& d) {
  AxiomReport rep = validate_matrix(rho, Universe::random(kMatrixSamples, seed));
  d << rho.name << ":" << (rep.passed() ? "ok" : "fail") << " ";
  if (!rep.passed()) d << "[" << first_example(rep) << "] ";
  return rep.passed();
}

void criterion_matrices() {
  bool ok = true;
  std::ostringstream d;
  std::uint64_t seed = 100;
  ok &= validated(identity(*shared_real_line()), seed++, d);
  ok &= validated(builtin_real_matrix(Builtin::constant, {make_rational(3, 2)}), seed++, d);
  ok &= validated(builtin_real_matrix(Builtin::negate), seed++, d);
  ok &= validated(builtin_real_matrix(Builtin::add_const, {Rational(1)}), seed++, d);
  ok &= validated(builtin_real_matrix(Builtin::scale, {make_rational(-2, 3)}), seed++, d);
  for (Builtin b : {Builtin::add, Builtin::mul, Builtin::min, Builtin::max})
    ok &= validated(builtin_plane_matrix(b), seed++, d);

  auto id = identity(*shared_real_line());
  std::size_t mismatches = 0;
  for (const RealMatrix& f : {builtin_real_matrix(Builtin::add_const, {Rational(1)}),
                              builtin_real_matrix(Builtin::scale, {Rational(3)})}) {
    mismatches += relation_mismatches(compose(id, f, ComposeMode::relational), f, Universe::random(kUnitPairs, 1)).size();
    mismatches += relation_mismatches(compose(f, id, ComposeMode::relational), f, Universe::random(kUnitPairs, 2)).size();
  }
  d << "unit law mismatches " << mismatches << "; ";
  ok &= mismatches == 0;

  AxiomReport t = validate_matrix(constant_true_matrix(), Universe::random(1000, 3));
  AxiomReport c = preserves(choice_matrix(0, 1), Connective::meet, Universe::random(kMatrixSamples, 4));
  std::cout << "  constant-true counterexample: " << first_example(t) << "\n";
  std::cout << "  choice(0,1) counterexample: " << first_example(c) << "\n";
  d << "constant-true refuted=" << t.has_refutation() << ", choice refuted=" << c.has_refutation();
  ok &= t.has_refutation() && c.has_refutation() && !t.rule_passed("bottom") && !c.rule_passed("meet");
  report(6, "matrix laws", ok, d.str());
}

void criterion_evaluation() {
  const Rational eps = make_rational(1, 1000000);
  std::mt19937_64 rng(77);
  std::size_t bad = 0;
  double worst = 0;
  std::string first_bad;
  auto check = [&](const Expr& e, const Rational& x) {
    auto t0 = Clock::now();
    bool good = false;
    try {
      Evaluation r = evaluate(e, x, eps);
      Rational exact = eval_rational(e, x);
      good = r.interval.lower <= exact && exact <= r.interval.upper && r.interval.upper - r.interval.lower == 2 * eps;
    } catch (const EvaluationExhausted&) {
    }
    double s = seconds_since(t0);
    worst = std::max(worst, s);
    if (!good || s >= kEvalBudgetSeconds) {
      if (bad++ == 0) first_bad = print_expr(e) + " at " + to_string(x);
    }
  };
  check(*parse_expr("x*x+1"), make_rational(1, 3));
  for (std::size_t i = 1; i < kEvalCases; ++i) check(*random_expr(rng, 3), random_rational(rng, 4, 8));
  std::ostringstream d;
  d << kEvalCases << " cases incl. x*x+1 at 1/3, eps 1/1000000, " << bad << " bad, slowest " << worst << "s, budget "
    << kEvalBudgetSeconds << "s";
  if (bad) d << ", first: " << first_bad;
  report(7, "exact evaluation", bad == 0, d.str());
}

// Endpoints are multiples of 1/L, so the common part, when nonempty, contains a multiple of 1/(2L).
bool con_oracle(const FinSet<IntervalCode>& l) {
  if (l.empty()) return true;
  mpz_class lcm = 1;
  Rational lo, hi;
  bool first = true;
  for (const auto& c : l) {
    const auto& k = c.components().front();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), k.lo.get_den_mpz_t());
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), k.hi.get_den_mpz_t());
    if (first || k.lo < lo) lo = k.lo;
    if (first || k.hi > hi) hi = k.hi;
    first = false;
  }
  const Rational step(mpz_class(1), 2 * lcm);
  for (Rational x = lo; x <= hi; x += step) {
    bool all = true;
    for (const auto& c : l) {
      const auto& k = c.components().front();
      if (!(k.lo < x && x < k.hi)) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

void criterion_consistency() {
  auto iv = [](const char* s) { return parse_interval_code(s); };
  bool pinned = con_check(FinSet<IntervalCode>{iv("<0±1>"), iv("<1±1/2>")}) &&
                !con_check(FinSet<IntervalCode>{iv("<0±1/4>"), iv("<1±1/4>")}) && con_check(FinSet<IntervalCode>{});
  std::mt19937_64 rng(88);
  std::size_t disagree = 0, consistent = 0;
  for (std::size_t i = 0; i < kConCases; ++i) {
    std::vector<IntervalCode> v;
    for (int k = std::uniform_int_distribution<int>(0, 4)(rng); k > 0; --k) {
      Rational c = random_rational(rng, 2, 6);
      Rational r = make_rational(std::uniform_int_distribution<long>(1, 12)(rng), std::uniform_int_distribution<long>(1, 6)(rng));
      v.push_back(IntervalCode::ball(c, r));
    }
    FinSet<IntervalCode> l(v);
    bool got = con_check(l);
    consistent += got;
    if (got != con_oracle(l)) ++disagree;
  }
  std::ostringstream d;
  d << "pinned " << (pinned ? "ok" : "fail") << ", " << disagree << " disagreements in " << kConCases << " ("
    << consistent << " consistent)";
  report(8, "consistency predicate", pinned && disagree == 0, d.str());
}

void criterion_ideals() {
  bool ok = true;
  std::ostringstream d;
  std::mt19937_64 rng(99);
  for (const auto& b : {real_line_basis(), unit_interval_basis()}) {
    std::size_t bad = 0;
    for (std::size_t i = 0; i < kIdealPoints; ++i) {
      Rational x = b.name == "unit-interval" ? make_rational(std::uniform_int_distribution<long>(1, 63)(rng), 64)
                                             : random_rational(rng, 5, 12);
      AxiomReport rep = is_rounded_ideal(b, point_ideal(b, x), Universe::random(50, i));
      if (!rep.passed()) {
        if (bad++ == 0) d << "[" << to_string(x) << ": " << first_example(rep) << "] ";
      }
    }
    d << b.name << ": " << bad << " failing points; ";
    ok &= bad == 0;
  }
  std::size_t principal = 0, principal_bad = 0;
  for (const char* name : {"two-point", "chain-3", "free-dl-1", "free-dl-2", "diamond", "discrete-3", "sigma-2"}) {
    auto fb = std::make_shared<const FiniteBasis>(preset_basis(name));
    auto b = to_abstract(fb);
    for (int n = 0; n < fb->size(); ++n) {
      ++principal;
      if (!is_rounded_ideal(b, principal_ideal(b, n), Universe::all()).passed()) ++principal_bad;
    }
  }
  d << "principal ideals " << principal - principal_bad << "/" << principal;
  ok &= principal_bad == 0;
  report(9, "rounded ideals", ok, d.str());
}

}  // namespace

int main() {
  std::cout.setf(std::ios::fixed);
  std::cout.precision(3);
  criterion_nucleus();
  criterion_points();
  criterion_recovery();
  criterion_interval_axioms();
  criterion_classify();
  criterion_matrices();
  criterion_evaluation();
  criterion_consistency();
  criterion_ideals();
  std::cout << (failures ? std::to_string(failures) + " criteria failed" : std::string("all criteria passed")) << "\n";
  return failures;
}
