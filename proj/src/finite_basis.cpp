#include "asd/finite_basis.hpp"

#include <bit>

namespace asd {

bool Bits::subset_of(const Bits& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

bool Bits::intersects(const Bits& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & o.words_[i]) return true;
  return false;
}

bool Bits::intersects3(const Bits& a, const Bits& b) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & a.words_[i] & b.words_[i]) return true;
  return false;
}

int Bits::first_not_in(const Bits& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (std::uint64_t w = words_[i] & ~o.words_[i]) return static_cast<int>(i * 64 + std::countr_zero(w));
  return -1;
}

int Bits::first_common(const Bits& a, const Bits& b) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (std::uint64_t w = words_[i] & a.words_[i] & b.words_[i])
      return static_cast<int>(i * 64 + std::countr_zero(w));
  return -1;
}

FiniteBasis FiniteBasis::with_imposed_order(std::string name, FiniteAlgebra alg,
                                            std::vector<char> wb) {
  FiniteBasis b;
  b.name = std::move(name);
  b.order = ImposedOrder::saturate(alg).table();
  b.algebra = std::move(alg);
  b.wb = std::move(wb);
  return b;
}

FiniteBasis FiniteBasis::order_as_waybelow(std::string name, FiniteAlgebra alg) {
  FiniteBasis b;
  b.name = std::move(name);
  b.order = ImposedOrder::saturate(alg).table();
  b.wb = b.order;
  b.algebra = std::move(alg);
  return b;
}

FiniteRelations::FiniteRelations(const FiniteBasis& b) {
  const int n = b.size();
  down.assign(n, Bits(n));
  up.assign(n, Bits(n));
  order_down.assign(n, Bits(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (b.waybelow(i, j)) {
        down[j].set(i);
        up[i].set(j);
      }
      if (b.leq(i, j)) order_down[j].set(i);
    }
}

AxiomReport check_axioms(const FiniteBasis& b) {
  AxiomReport rep(b.name);
  const int n = b.size();
  const FiniteRelations r(b);
  auto nm = [&](int i) { return b.code_name(i); };
  for (const char* rule : {"zero", "plus", "monotone", "interpolation", "star-slip", "wilker"})
    rep.declare(rule);

  rep.record("zero", b.waybelow(b.zero(), b.zero()), {nm(b.zero())});

  for (int p = 0; p < n; ++p)
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c) {
        bool lhs = b.waybelow(a, p) && b.waybelow(c, p);
        bool rhs = b.waybelow(b.plus(a, c), p);
        rep.record("plus", lhs == rhs, {nm(a), nm(c), nm(p)});
      }

  for (int m = 0; m < n; ++m)
    for (int k = 0; k < n; ++k) {
      if (b.waybelow(m, k)) {
        int bad = r.order_down[m].first_not_in(r.down[k]);
        rep.record("monotone", bad < 0, {bad < 0 ? "" : nm(bad), nm(m), nm(k)});
      }
      if (b.leq(m, k)) {
        int bad = r.down[m].first_not_in(r.down[k]);
        rep.record("monotone", bad < 0, {bad < 0 ? "" : nm(bad), nm(m), nm(k)});
      }
    }

  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      if (!b.waybelow(a, c)) continue;
      rep.record("interpolation", r.up[a].intersects(r.down[c]), {nm(a), nm(c)});
      int bad = r.up[c].first_not_in(r.up[a]);
      rep.record("interpolation", bad < 0, {nm(a), nm(c), bad < 0 ? "" : nm(bad)});
    }

  for (int a = 0; a < n; ++a)
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        bool lhs = b.waybelow(a, b.star(p, q));
        bool rhs = r.up[a].intersects3(r.down[p], r.down[q]);
        rep.record("star-slip", lhs == rhs, {nm(a), nm(p), nm(q)});
      }

  for (int a = 0; a < n; ++a)
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        if (!b.waybelow(a, b.plus(p, q))) continue;
        bool found = b.waybelow(p, p) && b.waybelow(q, q);
        for (int p2 = 0; p2 < n && !found; ++p2) {
          if (!b.waybelow(p2, p)) continue;
          for (int q2 = 0; q2 < n && !found; ++q2)
            found = b.waybelow(q2, q) && b.waybelow(a, b.plus(p2, q2));
        }
        rep.record("wilker", found, {nm(a), nm(p), nm(q)});
      }
  return rep;
}

}  // namespace asd
