#pragma once

#include <functional>
#include <memory>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "asd/code_algebra.hpp"
#include "asd/finite_basis.hpp"
#include "asd/report.hpp"
#include "asd/spans.hpp"
#include "asd/verdict.hpp"

namespace asd {

template <class Code>
struct AbstractBasis {
  std::string name;
  CodeAlgebra<Code> algebra;
  std::function<bool(const Code&, const Code&)> waybelow;
  // Present for finite carriers; witness searches over it are complete.
  std::optional<std::vector<Code>> carrier;

  // Candidate generators by refinement level. Candidates are checked, never trusted.
  std::function<std::vector<Code>(const Code& n, const Code& m, int level)> interpolants;
  std::function<std::vector<std::pair<Code, Code>>(const Code& n, const Code& p, const Code& q,
                                                   int level)>
      wilker_pairs;
  std::function<std::vector<Code>(const Code& n, int level)> enlargements;
  std::function<std::vector<Code>(const Code& m, int level)> shrinkings;

  // "The compact of n is covered by the opens of ℓ".
  std::function<bool(const Code&, const FinSet<Code>&)> cover_test;
  std::function<bool(const Code&)> inhabited;
  std::function<std::string(const Code&)> show;

  // Random codes for sampled universes; `perturb` draws a code near its argument.
  std::function<Code(std::mt19937_64&)> sample;
  std::function<Code(const Code&, std::mt19937_64&)> perturb;

  // Geometry of spatial bases: compact pieces (nullopt if not compact), open boxes.
  std::function<std::optional<std::vector<Box>>(const Code&)> compact_boxes;
  std::function<std::vector<Box>(const Code&)> open_boxes;
  std::function<Code(const std::vector<Box>&)> from_open_boxes;
  std::size_t dim = 0;

  // n ≪ m implies n ⊑ m.
  bool waybelow_within_order = false;

  bool finite() const { return carrier.has_value(); }
  bool spatial() const { return static_cast<bool>(compact_boxes); }
  std::string str(const Code& c) const { return show ? show(c) : std::string("?"); }
  bool leq(const Code& a, const Code& b) const { return imposed_leq(algebra, a, b); }
  const Code& zero() const { return algebra.zero; }
  const Code& one() const { return algebra.one; }
  Code plus(const Code& a, const Code& b) const {
    if (!algebra.plus) throw std::logic_error(name + ": no + on this basis");
    return algebra.plus(a, b);
  }
  Code star(const Code& a, const Code& b) const { return algebra.star(a, b); }
};

struct Universe {
  bool exhaustive = true;
  std::size_t count = 0;
  std::uint64_t seed = 0;

  static Universe all() { return {true, 0, 0}; }
  static Universe random(std::size_t count, std::uint64_t seed) { return {false, count, seed}; }
};

namespace detail {

// Walks candidate lists level by level until `accept` holds or the bound runs out.
template <class W, class Gen, class Accept>
SearchResult<W> search_levels(const SearchBound& bound, Gen gen, Accept accept) {
  std::size_t tried = 0;
  for (int level = 0; level < bound.levels; ++level) {
    for (const auto& w : gen(level)) {
      if (tried++ >= bound.max_candidates) return SearchResult<W>::exhausted();
      if (accept(w)) return SearchResult<W>::hit(w);
    }
  }
  return SearchResult<W>::exhausted();
}

template <class Code>
std::vector<Code> carrier_or(const AbstractBasis<Code>& b, int level,
                             const std::function<std::vector<Code>()>& hints) {
  std::vector<Code> out = hints ? hints() : std::vector<Code>{};
  if (level == 0 && b.carrier) out.insert(out.end(), b.carrier->begin(), b.carrier->end());
  return out;
}

}  // namespace detail

template <class Code>
SearchResult<Code> interpolant(const AbstractBasis<Code>& b, const Code& n, const Code& m,
                               const SearchBound& bound = {}) {
  if (!b.waybelow(n, m)) return SearchResult<Code>::failed();
  SearchBound eff = bound;
  if (b.carrier) eff.max_candidates = std::max(eff.max_candidates, b.carrier->size() + 64);
  return detail::search_levels<Code>(
      eff,
      [&](int level) {
        std::vector<Code> out;
        if (b.interpolants) out = b.interpolants(n, m, level);
        if (level == 0) {
          out.push_back(n);
          out.push_back(m);
          if (b.carrier) out.insert(out.end(), b.carrier->begin(), b.carrier->end());
        }
        return out;
      },
      [&](const Code& k) { return b.waybelow(n, k) && b.waybelow(k, m); });
}

// ∃m. n ≪ m ∧ m ≪ p ∧ m ≪ q
template <class Code>
SearchResult<Code> star_slip_witness(const AbstractBasis<Code>& b, const Code& n, const Code& p,
                                     const Code& q, const SearchBound& bound = {}) {
  const Code pq = b.star(p, q);
  if (!b.waybelow(n, pq)) return SearchResult<Code>::failed();
  SearchBound eff = bound;
  if (b.carrier) eff.max_candidates = std::max(eff.max_candidates, b.carrier->size() + 64);
  return detail::search_levels<Code>(
      eff,
      [&](int level) {
        std::vector<Code> out;
        if (b.interpolants) out = b.interpolants(n, pq, level);
        if (level == 0) {
          out.push_back(n);
          if (b.carrier) out.insert(out.end(), b.carrier->begin(), b.carrier->end());
        }
        return out;
      },
      [&](const Code& k) { return b.waybelow(n, k) && b.waybelow(k, p) && b.waybelow(k, q); });
}

template <class Code>
SearchResult<std::pair<Code, Code>> wilker_witness(const AbstractBasis<Code>& b, const Code& n,
                                                   const Code& p, const Code& q,
                                                   const SearchBound& bound = {}) {
  using Pair = std::pair<Code, Code>;
  if (!b.algebra.has_plus() || !b.waybelow(n, b.plus(p, q))) return SearchResult<Pair>::failed();
  auto accept = [&](const Pair& w) {
    return b.waybelow(n, b.plus(w.first, w.second)) && b.waybelow(w.first, p) &&
           b.waybelow(w.second, q);
  };
  if (n == b.zero() && accept({b.zero(), b.zero()})) return SearchResult<Pair>::hit({b.zero(), b.zero()});
  if (b.carrier) {
    for (const auto& p2 : *b.carrier) {
      if (!b.waybelow(p2, p)) continue;
      for (const auto& q2 : *b.carrier)
        if (accept({p2, q2})) return SearchResult<Pair>::hit({p2, q2});
    }
    return SearchResult<Pair>::exhausted();
  }
  return detail::search_levels<Pair>(
      bound,
      [&](int level) {
        auto out = b.wilker_pairs ? b.wilker_pairs(n, p, q, level) : std::vector<Pair>{};
        if (level == 0) out.emplace_back(p, q);
        return out;
      },
      accept);
}

// Tables of a basis with a finite carrier closed under + and ⋆.
template <class Code>
FiniteBasis tabulate(const AbstractBasis<Code>& b) {
  if (!b.carrier) throw std::invalid_argument(b.name + ": tabulate needs a finite carrier");
  const auto& c = *b.carrier;
  FiniteBasis out;
  out.name = b.name;
  out.algebra = FiniteAlgebra::tabulate(c, b.algebra, [&](const Code& x) { return b.str(x); });
  const std::size_t n = c.size();
  out.wb.assign(n * n, 0);
  out.order.assign(n * n, 0);
  const bool semantic = static_cast<bool>(b.algebra.leq);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out.wb[i * n + j] = b.waybelow(c[i], c[j]);
      if (semantic) out.order[i * n + j] = b.algebra.leq(c[i], c[j]);
    }
  if (!semantic) out.order = ImposedOrder::saturate(out.algebra).table();
  return out;
}

// Presents table data as an abstract basis over indices.
inline AbstractBasis<int> to_abstract(std::shared_ptr<const FiniteBasis> fb) {
  AbstractBasis<int> b;
  b.name = fb->name;
  b.algebra.zero = fb->zero();
  b.algebra.one = fb->one();
  b.algebra.plus = [fb](int x, int y) { return fb->plus(x, y); };
  b.algebra.star = [fb](int x, int y) { return fb->star(x, y); };
  b.algebra.leq = [fb](int x, int y) { return fb->leq(x, y); };
  b.waybelow = [fb](int x, int y) { return fb->waybelow(x, y); };
  std::vector<int> all(fb->size());
  for (int i = 0; i < fb->size(); ++i) all[i] = i;
  b.carrier = all;
  b.show = [fb](int x) { return fb->code_name(x); };
  b.sample = [fb](std::mt19937_64& rng) {
    return static_cast<int>(std::uniform_int_distribution<int>(0, fb->size() - 1)(rng));
  };
  b.perturb = [fb](int, std::mt19937_64& rng) {
    return static_cast<int>(std::uniform_int_distribution<int>(0, fb->size() - 1)(rng));
  };
  bool within = true;
  for (int i = 0; i < fb->size() && within; ++i)
    for (int j = 0; j < fb->size() && within; ++j)
      if (fb->waybelow(i, j) && !fb->leq(i, j)) within = false;
  b.waybelow_within_order = within;
  return b;
}

namespace detail {

template <class Code>
AxiomReport check_axioms_sampled(const AbstractBasis<Code>& b, const Universe& u,
                                 const SearchBound& bound) {
  if (!b.sample) throw std::invalid_argument(b.name + ": no code generator for sampling");
  AxiomReport rep(b.name);
  const bool has_plus = b.algebra.has_plus();
  rep.declare("zero");
  if (has_plus) rep.declare("plus");
  rep.declare("monotone");
  rep.declare("interpolation");
  rep.declare("star-slip");
  if (has_plus) rep.declare("wilker");

  std::mt19937_64 rng(u.seed);
  auto s = [&](const Code& c) { return b.str(c); };
  auto coin = [&]() { return std::bernoulli_distribution(0.5)(rng); };
  auto near = [&](const Code& c) { return b.perturb ? b.perturb(c, rng) : b.sample(rng); };

  rep.record("zero", b.waybelow(b.zero(), b.zero()), {s(b.zero())});
  for (std::size_t i = 0; i < u.count; ++i) {
    const Code n = b.sample(rng);
    const Code p = coin() ? near(n) : b.sample(rng);
    const Code q = coin() ? near(n) : (coin() ? near(p) : b.sample(rng));
    const Code m = coin() ? near(n) : b.sample(rng);

    if (has_plus) {
      bool lhs = b.waybelow(n, p) && b.waybelow(m, p);
      bool rhs = b.waybelow(b.plus(n, m), p);
      rep.record("plus", lhs == rhs, {s(n), s(m), s(p)});
    }

    if (b.algebra.leq) {
      if (b.leq(m, n) && b.waybelow(n, p)) rep.record("monotone", b.waybelow(m, p), {s(m), s(n), s(p)});
      if (b.waybelow(n, p) && b.leq(p, q)) rep.record("monotone", b.waybelow(n, q), {s(n), s(p), s(q)});
    }

    if (b.waybelow(n, p)) {
      auto w = interpolant(b, n, p, bound);
      if (!w.found()) {
        if (b.finite())
          rep.refute("interpolation", {s(n), s(p)});
        else
          rep.unwitnessed("interpolation", {s(n), s(p)});
      } else {
        rep.pass("interpolation");
      }
      if (b.waybelow(p, q)) rep.record("interpolation", b.waybelow(n, q), {s(n), s(p), s(q)});
    }

    const Code pq = b.star(p, q);
    if (b.waybelow(n, pq)) {
      auto w = star_slip_witness(b, n, p, q, bound);
      if (w.found())
        rep.pass("star-slip");
      else if (b.finite())
        rep.refute("star-slip", {s(n), s(p), s(q)});
      else
        rep.unwitnessed("star-slip", {s(n), s(p), s(q)});
    }
    if (b.waybelow(n, m) && b.waybelow(m, p) && b.waybelow(m, q))
      rep.record("star-slip", b.waybelow(n, pq), {s(n), s(m), s(p), s(q)});

    if (has_plus && b.waybelow(n, b.plus(p, q))) {
      auto w = wilker_witness(b, n, p, q, bound);
      if (w.found())
        rep.pass("wilker");
      else if (b.finite())
        rep.refute("wilker", {s(n), s(p), s(q)});
      else
        rep.unwitnessed("wilker", {s(n), s(p), s(q)});
    }
  }
  return rep;
}

}  // namespace detail

template <class Code>
AxiomReport check_axioms(const AbstractBasis<Code>& b, const Universe& u,
                         const SearchBound& bound = {}) {
  if (u.exhaustive) {
    if (!b.finite()) throw std::invalid_argument(b.name + ": exhaustive check needs a finite carrier");
    if (b.algebra.has_plus()) return check_axioms(tabulate(b));
  }
  return detail::check_axioms_sampled(b, u.exhaustive ? Universe::random(0, 0) : u, bound);
}

struct Classification {
  bool compact = false;
  bool filter = false;
};

// compact := 1 ≪ 1; filter additionally needs m ≪ p⋆q ⟺ m ≪ p ∧ m ≪ q on the universe.
template <class Code>
Classification classify(const AbstractBasis<Code>& b, const Universe& u) {
  Classification c;
  c.compact = b.waybelow(b.one(), b.one());
  if (!c.compact) return c;
  bool ok = true;
  auto check = [&](const Code& m, const Code& p, const Code& q) {
    if (b.waybelow(m, b.star(p, q)) != (b.waybelow(m, p) && b.waybelow(m, q))) ok = false;
  };
  if (u.exhaustive) {
    if (!b.carrier) throw std::invalid_argument(b.name + ": exhaustive classify needs a finite carrier");
    for (const auto& m : *b.carrier)
      for (const auto& p : *b.carrier)
        for (const auto& q : *b.carrier) check(m, p, q);
  } else {
    std::mt19937_64 rng(u.seed);
    auto near = [&](const Code& x) { return b.perturb ? b.perturb(x, rng) : b.sample(rng); };
    for (std::size_t i = 0; i < u.count && ok; ++i) {
      Code m = b.sample(rng);
      Code p = near(m);
      Code q = std::bernoulli_distribution(0.5)(rng) ? near(m) : b.sample(rng);
      check(m, p, q);
    }
  }
  c.filter = ok;
  return c;
}

// Codes are finite sets of base codes read as unions.
template <class Code>
AbstractBasis<FinSet<Code>> or_closure(const AbstractBasis<Code>& base_in) {
  using Set = FinSet<Code>;
  if (!base_in.cover_test && !base_in.algebra.has_plus())
    throw std::invalid_argument(base_in.name + ": or_closure needs a cover test or +");
  auto base = std::make_shared<const AbstractBasis<Code>>(base_in);
  auto fold = [base](const Set& l) {
    Code acc = base->zero();
    bool first = true;
    for (const auto& c : l) {
      acc = first ? c : base->plus(acc, c);
      first = false;
    }
    return acc;
  };
  auto cover = [base, fold](const Code& n, const Set& l) {
    if (base->cover_test) return base->cover_test(n, l);
    return base->waybelow(n, fold(l));
  };
  auto star = [base](const Set& a, const Set& b) {
    std::vector<Code> out;
    for (const auto& x : a)
      for (const auto& y : b) {
        Code z = base->star(x, y);
        if (!(z == base->zero())) out.push_back(z);
      }
    return Set(std::move(out));
  };

  AbstractBasis<Set> b;
  b.name = "or(" + base->name + ")";
  b.algebra.zero = Set{};
  b.algebra.one = Set{base->one()};
  b.algebra.plus = [](const Set& x, const Set& y) { return x.unite(y); };
  b.algebra.star = star;
  b.waybelow = [cover](const Set& l, const Set& r) {
    for (const auto& n : l)
      if (!cover(n, r)) return false;
    return true;
  };
  b.cover_test = [b_wb = b.waybelow](const Set& l, const FinSet<Set>& ls) {
    std::vector<Code> all;
    for (const auto& x : ls) all.insert(all.end(), x.begin(), x.end());
    return b_wb(l, Set(std::move(all)));
  };
  if (base->algebra.leq && base->algebra.has_plus()) {
    b.algebra.leq = [base, fold](const Set& x, const Set& y) { return base->leq(fold(x), fold(y)); };
  }
  b.show = [base](const Set& l) {
    std::string out = "{";
    bool first = true;
    for (const auto& c : l) {
      if (!first) out += ", ";
      out += base->str(c);
      first = false;
    }
    return out + "}";
  };
  if (base->inhabited)
    b.inhabited = [base](const Set& l) {
      for (const auto& c : l)
        if (base->inhabited(c)) return true;
      return false;
    };
  if (base->algebra.has_plus()) {
    b.interpolants = [base, fold](const Set& l, const Set& r, int level) {
      std::vector<Set> out;
      const Code target = fold(r);
      std::vector<Code> ks;
      for (const auto& n : l) {
        if (!base->interpolants) return out;
        auto cands = base->interpolants(n, target, level);
        for (const auto& k : cands)
          if (base->waybelow(n, k) && base->waybelow(k, target)) {
            ks.push_back(k);
            break;
          }
      }
      if (ks.size() == l.size()) out.push_back(Set(ks));
      return out;
    };
    b.wilker_pairs = [base, fold](const Set& l, const Set& p, const Set& q, int level) {
      std::vector<std::pair<Set, Set>> out;
      if (!base->wilker_pairs) return out;
      const Code sp = fold(p), sq = fold(q);
      std::vector<Code> ps, qs;
      for (const auto& n : l) {
        bool got = false;
        for (const auto& w : base->wilker_pairs(n, sp, sq, level)) {
          if (base->waybelow(n, base->plus(w.first, w.second)) && base->waybelow(w.first, sp) &&
              base->waybelow(w.second, sq)) {
            if (!(w.first == base->zero())) ps.push_back(w.first);
            if (!(w.second == base->zero())) qs.push_back(w.second);
            got = true;
            break;
          }
        }
        if (!got) return out;
      }
      out.emplace_back(Set(ps), Set(qs));
      return out;
    };
  }
  if (base->enlargements)
    b.enlargements = [base](const Set& l, int level) {
      std::vector<Set> out;
      std::vector<std::vector<Code>> per;
      std::size_t width = SIZE_MAX;
      for (const auto& c : l) {
        per.push_back(base->enlargements(c, level));
        width = std::min(width, per.back().size());
      }
      if (l.empty()) return std::vector<Set>{Set{}};
      for (std::size_t i = 0; i < width; ++i) {
        std::vector<Code> v;
        for (const auto& cs : per) v.push_back(cs[i]);
        out.push_back(Set(v));
      }
      return out;
    };
  if (base->sample)
    b.sample = [base](std::mt19937_64& rng) {
      int k = std::uniform_int_distribution<int>(0, 2)(rng);
      std::vector<Code> v;
      for (int i = 0; i < k; ++i) v.push_back(base->sample(rng));
      return Set(v);
    };
  if (base->perturb)
    b.perturb = [base](const Set& l, std::mt19937_64& rng) {
      std::vector<Code> v;
      for (const auto& c : l) v.push_back(base->perturb(c, rng));
      return Set(v);
    };
  b.waybelow_within_order = base->waybelow_within_order;
  return b;
}

// ((p, q), n) ↦ ∃p', q'. p'⋆q' ≪ n ∧ p ≪ p' ∧ q ≪ q'
template <class Code>
std::function<Verdict(const Code&, const Code&, const Code&)> dual_wilker_star(
    const AbstractBasis<Code>& b_in, const Universe& u, const SearchBound& bound = {}) {
  if (!classify(b_in, u).filter)
    throw std::invalid_argument(b_in.name + ": dual Wilker transform needs a filter basis");
  auto b = std::make_shared<const AbstractBasis<Code>>(b_in);
  return [b, bound](const Code& p, const Code& q, const Code& n) -> Verdict {
    auto accept = [&](const Code& p2, const Code& q2) {
      return b->waybelow(b->star(p2, q2), n) && b->waybelow(p, p2) && b->waybelow(q, q2);
    };
    if (b->carrier) {
      for (const auto& p2 : *b->carrier)
        for (const auto& q2 : *b->carrier)
          if (accept(p2, q2)) return Verdict::yes;
      return Verdict::no;
    }
    if (b->waybelow_within_order && !b->waybelow(b->star(p, q), n)) return Verdict::no;
    std::size_t tried = 0;
    for (int level = 0; level < bound.levels; ++level) {
      auto ps = b->enlargements ? b->enlargements(p, level) : std::vector<Code>{};
      auto qs = b->enlargements ? b->enlargements(q, level) : std::vector<Code>{};
      for (std::size_t i = 0; i < std::min(ps.size(), qs.size()); ++i) {
        if (tried++ >= bound.max_candidates) return Verdict::unknown;
        if (accept(ps[i], qs[i])) return Verdict::yes;
      }
    }
    return Verdict::unknown;
  };
}

}  // namespace asd
