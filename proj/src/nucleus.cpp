#include "asd/nucleus.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

namespace asd {

namespace {

std::vector<int> elements(SigmaNPoint xi, int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (xi & (1U << i)) out.push_back(i);
  return out;
}

bool family_up_closed(std::uint32_t family, int points) {
  for (int s = 0; s < points; ++s) {
    if (!(family & (1U << s))) continue;
    for (int t = 0; t < points; ++t)
      if ((s & t) == s && !(family & (1U << t))) return false;
  }
  return true;
}

}  // namespace

SecondOrderPred::SecondOrderPred(int carrier_size)
    : n_(carrier_size), bits_(std::size_t{1} << carrier_size, 0) {
  if (carrier_size > NucleusEngine::kReducedMax)
    throw std::invalid_argument("carrier too large for predicates on subsets");
}

SecondOrderPred SecondOrderPred::from(int carrier_size, const std::function<bool(SigmaNPoint)>& f) {
  SecondOrderPred p(carrier_size);
  for (std::size_t xi = 0; xi < p.bits_.size(); ++xi) p.bits_[xi] = f(static_cast<SigmaNPoint>(xi));
  return p;
}

bool SecondOrderPred::monotone() const {
  for (std::size_t s = 0; s < bits_.size(); ++s) {
    if (!bits_[s]) continue;
    for (int i = 0; i < n_; ++i)
      if (!bits_[s | (std::size_t{1} << i)]) return false;
  }
  return true;
}

NucleusEngine::NucleusEngine(const FiniteBasis& b, int literal_cap) : b_(&b), n_(b.size()) {
  if (n_ > kReducedMax)
    throw std::invalid_argument(b.name + ": carrier too large (" + std::to_string(n_) + " codes, cap " +
                                std::to_string(kReducedMax) + ")");
  literal_ = n_ <= std::min(literal_cap, kLiteralMax);
  down_.assign(n_, 0);
  for (int c = 0; c < n_; ++c)
    for (int k = 0; k < n_; ++k)
      if (b.waybelow(k, c)) down_[c] |= 1U << k;
  const std::size_t points = std::size_t{1} << n_;

  if (literal_) {
    std::vector<SigmaNPoint> order(points);
    for (std::size_t i = 0; i < points; ++i) order[i] = static_cast<SigmaNPoint>(i);
    std::sort(order.begin(), order.end(), [&](SigmaNPoint a, SigmaNPoint c) {
      return elements(a, n_) < elements(c, n_);
    });
    std::vector<int> product(points);
    for (std::size_t l = 0; l < points; ++l) {
      int p = b.one();
      bool first = true;
      for (int c : elements(static_cast<SigmaNPoint>(l), n_)) {
        p = first ? c : b.star(p, c);
        first = false;
      }
      product[l] = p;
    }
    const std::size_t families = std::size_t{1} << points;
    reach_.assign(families, 0);
    for (std::size_t fam = 0; fam < families; ++fam) {
      int sum = b.zero();
      bool first = true;
      for (SigmaNPoint l : order) {
        if (!(fam & (std::size_t{1} << l))) continue;
        sum = first ? product[l] : b.plus(sum, product[l]);
        first = false;
      }
      reach_[fam] = down_[sum];
    }
    for (std::size_t bit = 0; bit < points; ++bit)
      for (std::size_t fam = 0; fam < families; ++fam)
        if (fam & (std::size_t{1} << bit)) reach_[fam] |= reach_[fam ^ (std::size_t{1} << bit)];
    return;
  }

  // Reduced engine: work with ≅-classes; needs a distributive lattice quotient
  // and ≪ monotone for ⊑.
  cls_.assign(n_, -1);
  for (int a = 0; a < n_; ++a) {
    if (cls_[a] >= 0) continue;
    for (int c = a; c < n_; ++c)
      if (b.leq(a, c) && b.leq(c, a)) cls_[c] = a;
  }
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument(b.name + ": reduced nucleus engine needs " + why);
  };
  for (int a = 0; a < n_; ++a)
    for (int c = 0; c < n_; ++c) {
      if (cls_[a] != cls_[c]) continue;
      for (int d = 0; d < n_; ++d)
        if (cls_[b.plus(a, d)] != cls_[b.plus(c, d)] || cls_[b.star(a, d)] != cls_[b.star(c, d)] ||
            cls_[b.plus(d, a)] != cls_[b.plus(d, c)] || cls_[b.star(d, a)] != cls_[b.star(d, c)])
          fail("+ and ⋆ to respect ≅");
    }
  for (int a = 0; a < n_; ++a)
    for (int c = 0; c < n_; ++c) {
      if (b.leq(a, c) != (cls_[b.plus(a, c)] == cls_[c])) fail("⊑ to be the lattice order of +");
      if (b.leq(a, c) != (cls_[b.star(a, c)] == cls_[a])) fail("⊑ to be the lattice order of ⋆");
      for (int d = 0; d < n_; ++d)
        if (cls_[b.star(a, b.plus(c, d))] != cls_[b.plus(b.star(a, c), b.star(a, d))])
          fail("a distributive quotient");
    }
  for (int a = 0; a < n_; ++a)
    for (int c = 0; c < n_; ++c)
      if (b.leq(a, c))
        for (int k = 0; k < n_; ++k) {
          if (b.waybelow(k, a) && !b.waybelow(k, c)) fail("≪ monotone in ⊑");
          if (b.waybelow(c, k) && !b.waybelow(a, k)) fail("≪ monotone in ⊑");
        }

  meet_cls_.assign(points, 0);
  for (std::size_t l = 0; l < points; ++l) {
    int p = cls_[b.one()];
    for (int c : elements(static_cast<SigmaNPoint>(l), n_)) p = meet_cls(p, c);
    meet_cls_[l] = p;
  }
  up_join_ = meet_cls_;
  for (int bit = 0; bit < n_; ++bit)
    for (std::size_t xi = 0; xi < points; ++xi)
      if (!(xi & (std::size_t{1} << bit))) up_join_[xi] = join_cls(up_join_[xi], up_join_[xi | (std::size_t{1} << bit)]);
  w_.assign(n_, cls_[b.zero()]);
  for (int c = 0; c < n_; ++c) w_[c] = up_join_[std::size_t{1} << c];
}

std::uint32_t NucleusEngine::reach(const SecondOrderPred& phi) const {
  if (phi.carrier_size() != n_) throw std::invalid_argument("predicate over a different carrier");
  const std::size_t points = std::size_t{1} << n_;
  if (literal_) {
    std::uint32_t fam = 0;
    for (std::size_t l = 0; l < points; ++l)
      if (phi(static_cast<SigmaNPoint>(l))) fam |= 1U << l;
    return reach_[fam];
  }
  int c = cls_[b_->zero()];
  for (std::size_t l = 0; l < points; ++l)
    if (phi(static_cast<SigmaNPoint>(l))) c = join_cls(c, meet_cls_[l]);
  return down_[c];
}

bool NucleusEngine::apply_E(const SecondOrderPred& phi, SigmaNPoint xi) const {
  return (reach(phi) & xi) != 0;
}

SecondOrderPred NucleusEngine::E(const SecondOrderPred& phi) const {
  std::uint32_t r = reach(phi);
  return SecondOrderPred::from(n_, [r](SigmaNPoint xi) { return (r & xi) != 0; });
}

bool NucleusEngine::recovered_waybelow(int n, int m) const {
  if (literal_) {
    auto phi = SecondOrderPred::from(n_, [m](SigmaNPoint xi) { return (xi >> m) & 1U; });
    return apply_E(phi, 1U << n);
  }
  return (down_[w_[m]] >> n) & 1U;
}

bool NucleusEngine::is_admissible(SigmaNPoint xi, PhiUniverse u) const {
  const std::size_t points = std::size_t{1} << n_;
  if (literal_) {
    const std::size_t families = std::size_t{1} << points;
    for (std::size_t fam = 0; fam < families; ++fam) {
      if (u == PhiUniverse::monotone && !family_up_closed(static_cast<std::uint32_t>(fam), static_cast<int>(points)))
        continue;
      bool lhs = (reach_[fam] & xi) != 0;
      bool rhs = (fam >> xi) & 1U;
      if (lhs != rhs) return false;
    }
    return true;
  }
  if (u == PhiUniverse::all) throw std::invalid_argument("all-predicate universe needs the literal engine");
  bool e_up = (down_[up_join_[xi]] & xi) != 0;
  int co = cls_[b_->zero()];
  for (int c = 0; c < n_; ++c)
    if (!(xi & (1U << c))) co = join_cls(co, w_[c]);
  bool e_co = (down_[co] & xi) != 0;
  return e_up && !e_co;
}

std::string NucleusEngine::show_point(SigmaNPoint xi) const {
  std::string out = "{";
  bool first = true;
  for (int c : elements(xi, n_)) {
    out += (first ? "" : ",") + b_->code_name(c);
    first = false;
  }
  return out + "}";
}

std::string NucleusEngine::show_family(std::uint32_t family) const {
  std::string out = "{";
  bool first = true;
  for (int l = 0; l < (1 << n_); ++l)
    if (family & (1U << l)) {
      out += (first ? "" : ",") + show_point(static_cast<SigmaNPoint>(l));
      first = false;
    }
  return out + "}";
}

AxiomReport NucleusEngine::literal_laws(const NucleusOptions& opt) const {
  AxiomReport rep(b_->name);
  for (const char* r : {"meet", "join", "idempotent"}) rep.declare(r);
  const int points = 1 << n_;
  const std::size_t families = std::size_t{1} << points;
  std::vector<std::uint32_t> universe;
  for (std::size_t fam = 0; fam < families; ++fam)
    if (opt.universe == PhiUniverse::all || family_up_closed(static_cast<std::uint32_t>(fam), points))
      universe.push_back(static_cast<std::uint32_t>(fam));
  auto lift = [&](std::uint32_t r) {
    std::uint32_t fam = 0;
    for (int l = 0; l < points; ++l)
      if (r & static_cast<std::uint32_t>(l)) fam |= 1U << l;
    return fam;
  };
  auto witness = [&](std::uint32_t r1, std::uint32_t r2) {
    return show_point(1U << std::countr_zero(r1 ^ r2));
  };
  auto check = [&](std::uint32_t s1, std::uint32_t s2) {
    std::uint32_t e1 = lift(reach_[s1]), e2 = lift(reach_[s2]);
    std::uint32_t a = reach_[s1 & s2], a2 = reach_[e1 & e2];
    if (a == a2)
      rep.pass("meet");
    else
      rep.refute("meet", {"Φ=" + show_family(s1), "Ψ=" + show_family(s2), "ξ=" + witness(a, a2)});
    std::uint32_t o = reach_[s1 | s2], o2 = reach_[e1 | e2];
    if (o == o2)
      rep.pass("join");
    else
      rep.refute("join", {"Φ=" + show_family(s1), "Ψ=" + show_family(s2), "ξ=" + witness(o, o2)});
  };
  for (std::uint32_t s : universe) {
    std::uint32_t r = reach_[s], r2 = reach_[lift(r)];
    if (r == r2)
      rep.pass("idempotent");
    else
      rep.refute("idempotent", {"Φ=" + show_family(s), "ξ=" + witness(r, r2)});
  }
  if (opt.sampled) {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<std::size_t> pick(0, universe.size() - 1);
    for (std::size_t i = 0; i < *opt.sampled; ++i) check(universe[pick(rng)], universe[pick(rng)]);
  } else {
    if (universe.size() > 4096)
      throw std::invalid_argument(b_->name + ": too many predicates for exhaustive pairs; use sampling");
    for (std::uint32_t s1 : universe)
      for (std::uint32_t s2 : universe) check(s1, s2);
  }
  return rep;
}

AxiomReport NucleusEngine::reduced_laws() const {
  AxiomReport rep(b_->name);
  for (const char* r : {"meet", "join", "idempotent"}) rep.declare(r);
  const std::size_t points = std::size_t{1} << n_;
  std::vector<int> realised{cls_[b_->zero()]};
  auto add = [&](int c) {
    if (std::find(realised.begin(), realised.end(), c) == realised.end()) realised.push_back(c);
  };
  for (std::size_t l = 0; l < points; ++l) add(meet_cls_[l]);
  for (std::size_t i = 0; i < realised.size(); ++i)
    for (std::size_t j = 0; j < realised.size(); ++j) add(join_cls(realised[i], realised[j]));
  std::sort(realised.begin(), realised.end());

  auto ev_touching = [&](std::uint32_t u) {
    int c = cls_[b_->zero()];
    for (int n = 0; n < n_; ++n)
      if (u & (1U << n)) c = join_cls(c, w_[n]);
    return c;
  };
  auto name = [&](int c) { return "Φ≅ev " + b_->code_name(c); };
  auto witness = [&](std::uint32_t r1, std::uint32_t r2) {
    return "ξ=" + show_point(1U << std::countr_zero(r1 ^ r2));
  };
  for (int c : realised) {
    std::uint32_t r = down_[c], r2 = down_[ev_touching(r)];
    if (r == r2)
      rep.pass("idempotent");
    else
      rep.refute("idempotent", {name(c), witness(r, r2)});
  }
  for (int c1 : realised)
    for (int c2 : realised) {
      std::uint32_t u1 = down_[c1], u2 = down_[c2];
      int both = cls_[b_->zero()];
      for (std::size_t l = 0; l < points; ++l)
        if ((l & u1) && (l & u2)) both = join_cls(both, meet_cls_[l]);
      std::uint32_t a = down_[meet_cls(c1, c2)], a2 = down_[both];
      if (a == a2)
        rep.pass("meet");
      else
        rep.refute("meet", {name(c1), "Ψ≅ev " + b_->code_name(c2), witness(a, a2)});
      std::uint32_t o = down_[join_cls(c1, c2)], o2 = down_[ev_touching(u1 | u2)];
      if (o == o2)
        rep.pass("join");
      else
        rep.refute("join", {name(c1), "Ψ≅ev " + b_->code_name(c2), witness(o, o2)});
    }
  return rep;
}

AxiomReport NucleusEngine::check_laws(const NucleusOptions& opt) const {
  if (literal_) return literal_laws(opt);
  if (opt.universe == PhiUniverse::all)
    throw std::invalid_argument(b_->name + ": all-predicate universe needs a carrier of at most " +
                                std::to_string(kLiteralMax) + " codes");
  return reduced_laws();
}

bool apply_E(const FiniteBasis& b, const SecondOrderPred& phi, SigmaNPoint xi) {
  return NucleusEngine(b).apply_E(phi, xi);
}

AxiomReport check_nucleus_laws(const FiniteBasis& b, const NucleusOptions& opt) {
  return NucleusEngine(b, opt.literal_cap).check_laws(opt);
}

bool is_admissible(const FiniteBasis& b, SigmaNPoint xi, PhiUniverse u) {
  return NucleusEngine(b).is_admissible(xi, u);
}

bool recovered_waybelow(const FiniteBasis& b, int n, int m) {
  return NucleusEngine(b).recovered_waybelow(n, m);
}

bool is_rounded_lattice_hom(const FiniteBasis& b, SigmaNPoint xi) {
  auto in = [&](int c) { return ((xi >> c) & 1U) != 0; };
  if (in(b.zero()) || !in(b.one())) return false;
  const int n = b.size();
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      if (in(b.plus(a, c)) != (in(a) || in(c))) return false;
      if (in(b.star(a, c)) != (in(a) && in(c))) return false;
    }
  for (int a = 0; a < n; ++a) {
    bool rounded = false;
    for (int m = 0; m < n && !rounded; ++m) rounded = in(m) && b.waybelow(m, a);
    if (rounded != in(a)) return false;
  }
  return true;
}

AxiomReport points_theorem_check(const FiniteBasis& b, int literal_cap) {
  AxiomReport axioms = check_axioms(b);
  if (!axioms.passed())
    throw std::invalid_argument(b.name + ": basis fails check_axioms; points theorem not applicable");
  NucleusEngine e(b, literal_cap);
  AxiomReport rep(b.name);
  rep.declare("admissible-implies-hom");
  rep.declare("hom-implies-admissible");
  const std::size_t points = std::size_t{1} << b.size();
  for (std::size_t x = 0; x < points; ++x) {
    SigmaNPoint xi = static_cast<SigmaNPoint>(x);
    bool adm = e.is_admissible(xi);
    bool hom = is_rounded_lattice_hom(b, xi);
    if (adm)
      rep.record("admissible-implies-hom", hom, {"ξ=" + e.show_point(xi)});
    if (hom)
      rep.record("hom-implies-admissible", adm, {"ξ=" + e.show_point(xi)});
  }
  return rep;
}

}  // namespace asd
