#include "asd/interval_basis.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace asd {

namespace {

Rational random_rational(std::mt19937_64& rng, const std::vector<long>& dens, long lo_units,
                         long hi_units) {
  long den = dens[std::uniform_int_distribution<std::size_t>(0, dens.size() - 1)(rng)];
  long num = std::uniform_int_distribution<long>(lo_units * den, hi_units * den)(rng);
  return make_rational(num, den);
}

}  // namespace

IntervalCode IntervalGeometry::canonical(const IntervalCode& c) const {
  if (!clip() || c.is_whole()) return c;
  std::vector<Component> keep;
  for (const auto& k : c.components())
    if (k.hi >= 0 && k.lo <= 1) keep.push_back(k);
  return IntervalCode::from_components(std::move(keep));
}

std::vector<Span> IntervalGeometry::open_spans(const IntervalCode& c) const {
  if (c.is_whole()) return {clip() ? Span::closed(0, 1) : Span::line()};
  std::vector<Span> out;
  for (const auto& k : c.components()) {
    if (!clip()) {
      out.push_back(Span::open(k.lo, k.hi));
      continue;
    }
    Span s;
    if (k.lo < 0) {
      s.lo = Rational(0);
      s.lo_closed = true;
    } else {
      s.lo = k.lo;
    }
    if (k.hi > 1) {
      s.hi = Rational(1);
      s.hi_closed = true;
    } else {
      s.hi = k.hi;
    }
    if (!s.empty()) out.push_back(s);
  }
  return out;
}

std::optional<std::vector<Span>> IntervalGeometry::compact_spans(const IntervalCode& c) const {
  if (c.is_whole()) {
    if (!clip()) return std::nullopt;
    return std::vector<Span>{Span::closed(0, 1)};
  }
  std::vector<Span> out;
  for (const auto& k : c.components()) {
    Span s = Span::closed(k.lo, k.hi);
    if (clip()) s = s.intersect(Span::closed(0, 1));
    if (!s.empty()) out.push_back(s);
  }
  return out;
}

std::vector<Span> IntervalGeometry::closed_spans(const IntervalCode& c) const {
  auto k = compact_spans(c);
  return k ? *k : std::vector<Span>{Span::line()};
}

bool IntervalGeometry::waybelow(const IntervalCode& n, const IntervalCode& m) const {
  auto k = compact_spans(n);
  if (!k) return false;
  return spans_subset(*k, open_spans(m));
}

bool IntervalGeometry::leq(const IntervalCode& n, const IntervalCode& m) const {
  return spans_subset(open_spans(n), open_spans(m)) && spans_subset(closed_spans(n), closed_spans(m));
}

bool IntervalGeometry::cover(const IntervalCode& n, const std::vector<IntervalCode>& opens) const {
  auto k = compact_spans(n);
  if (!k) return false;
  std::vector<Span> u;
  for (const auto& o : opens) {
    auto s = open_spans(o);
    u.insert(u.end(), s.begin(), s.end());
  }
  return spans_subset(*k, u);
}

bool IntervalGeometry::inhabited(const IntervalCode& n) const { return !open_spans(n).empty(); }

IntervalCode IntervalGeometry::plus(const IntervalCode& a, const IntervalCode& b) const {
  if (a.is_whole() || b.is_whole()) return IntervalCode::whole();
  std::vector<Component> all = a.components();
  all.insert(all.end(), b.components().begin(), b.components().end());
  return IntervalCode::from_components(std::move(all));
}

IntervalCode IntervalGeometry::star(const IntervalCode& a, const IntervalCode& b) const {
  if (a.is_whole()) return b;
  if (b.is_whole()) return a;
  std::vector<Component> out;
  for (const auto& x : a.components())
    for (const auto& y : b.components()) {
      Rational lo = std::max(x.lo, y.lo);
      Rational hi = std::min(x.hi, y.hi);
      if (lo < hi) out.push_back(Component{lo, hi});
    }
  return canonical(IntervalCode::from_components(std::move(out)));
}

IntervalCode IntervalGeometry::widen(const IntervalCode& n, const Rational& t) const {
  if (n.is_whole() || n.is_zero()) return n;
  std::vector<Component> out;
  for (const auto& k : n.components()) out.push_back(Component{k.lo - t, k.hi + t});
  return canonical(IntervalCode::from_components(std::move(out)));
}

IntervalCode IntervalGeometry::shrink(const IntervalCode& n, const Rational& t) const {
  if (n.is_whole() || n.is_zero()) return n;
  std::vector<Component> out;
  for (const auto& k : n.components()) out.push_back(Component{k.lo + t, k.hi - t});
  return canonical(IntervalCode::from_components(std::move(out)));
}

std::vector<IntervalCode> IntervalGeometry::interpolants(const IntervalCode& n, const IntervalCode& m,
                                                         int level) const {
  if (n.is_zero()) return {n};
  if (m.is_whole()) {
    if (clip()) return {IntervalCode::whole()};
    if (n.is_whole()) return {};
    return {widen(n, 1)};
  }
  if (n.is_whole()) {
    if (clip()) return {m};
    return {};
  }
  auto pieces = *compact_spans(n);
  const auto& mc = m.components();
  std::vector<std::pair<const Span*, const Component*>> matched;
  for (const auto& piece : pieces) {
    const Component* host = nullptr;
    for (const auto& c : mc)
      if (open_spans(IntervalCode::span(c.lo, c.hi)).size() == 1 &&
          open_spans(IntervalCode::span(c.lo, c.hi))[0].contains(piece)) {
        host = &c;
        break;
      }
    if (!host) return {};
    matched.emplace_back(&piece, host);
  }
  std::vector<IntervalCode> out;
  const long denom = 1L << (level + 1);
  for (long k = 1; k < denom; k += 2) {
    Rational t = make_rational(k, denom);
    std::vector<Component> comps;
    for (const auto& [piece, host] : matched) {
      const Rational& c = *piece->lo;
      const Rational& d = *piece->hi;
      comps.push_back(Component{host->lo + t * (c - host->lo), host->hi - t * (host->hi - d)});
    }
    out.push_back(canonical(IntervalCode::from_components(std::move(comps))));
  }
  return out;
}

Rational IntervalGeometry::cover_margin(const IntervalCode& n,
                                        const std::vector<Component>& opens) const {
  auto pieces = compact_spans(n);
  if (!pieces) return 0;
  auto h = [&](const Rational& y) {
    Rational best = 0;
    bool any = false;
    for (const auto& o : opens) {
      Rational v = std::min(y - o.lo, o.hi - y);
      if (!any || v > best) best = v;
      any = true;
    }
    return any ? best : Rational(0);
  };
  bool any = false;
  Rational margin = 0;
  for (const auto& piece : *pieces) {
    const Rational& c = *piece.lo;
    const Rational& d = *piece.hi;
    std::vector<Rational> probes{c, d};
    for (const auto& o : opens) {
      probes.push_back(o.lo);
      probes.push_back(o.hi);
      for (const auto& o2 : opens) probes.push_back((o.hi + o2.lo) / 2);
    }
    for (const auto& y : probes) {
      if (y < c || y > d) continue;
      Rational v = h(y);
      if (!any || v < margin) margin = v;
      any = true;
    }
  }
  if (!any) return 1;
  return margin > 0 ? margin : Rational(0);
}

std::vector<std::pair<IntervalCode, IntervalCode>> IntervalGeometry::wilker_pairs(
    const IntervalCode& n, const IntervalCode& p, const IntervalCode& q, int level) const {
  using Pair = std::pair<IntervalCode, IntervalCode>;
  const IntervalCode zero;
  if (n.is_zero()) return {Pair{zero, zero}};
  if (p.is_whole() || q.is_whole()) {
    IntervalCode inner = clip() ? IntervalCode::whole() : widen(n, 1);
    if (!clip() && n.is_whole()) return {};
    if (p.is_whole()) return {Pair{inner, zero}};
    return {Pair{zero, inner}};
  }
  std::vector<Component> opens = p.components();
  opens.insert(opens.end(), q.components().begin(), q.components().end());
  Rational margin = cover_margin(n, opens);
  if (margin <= 0) return {};
  std::vector<Pair> out;
  for (int j = 8 * level; j < 8 * level + 8; ++j) {
    Rational t = margin * pow2(-(j + 1));
    out.emplace_back(shrink(p, t), shrink(q, t));
  }
  return out;
}

std::vector<IntervalCode> IntervalGeometry::enlargements(const IntervalCode& n, int level) const {
  if (n.is_zero()) return {n};
  if (n.is_whole()) return clip() ? std::vector<IntervalCode>{n} : std::vector<IntervalCode>{};
  std::vector<IntervalCode> out;
  for (int j = 8 * level; j < 8 * level + 8; ++j) out.push_back(widen(n, pow2(-j)));
  return out;
}

std::vector<IntervalCode> IntervalGeometry::shrinkings(const IntervalCode& m, int level) const {
  if (m.is_zero()) return {m};
  std::vector<IntervalCode> out;
  if (m.is_whole()) {
    if (clip()) return {m};
    for (int j = 8 * level; j < 8 * level + 8; ++j) out.push_back(IntervalCode::ball(0, pow2(j)));
    return out;
  }
  Rational r = m.components().front().radius();
  for (const auto& c : m.components()) r = std::min(r, c.radius());
  for (int j = 8 * level + 1; j < 8 * level + 9; ++j) out.push_back(shrink(m, r * pow2(-j)));
  return out;
}

IntervalCode IntervalGeometry::sample(std::mt19937_64& rng) const {
  int kind = std::uniform_int_distribution<int>(0, 19)(rng);
  if (kind == 0) return IntervalCode::zero();
  if (kind == 1) return IntervalCode::whole();
  int count = kind < 15 ? 1 : 2;
  std::vector<Component> comps;
  for (int i = 0; i < count; ++i) {
    Rational center, radius;
    if (clip()) {
      center = random_rational(rng, {4, 8, 3, 6}, 0, 1);
      radius = random_rational(rng, {8, 16, 6}, 0, 1) / 2;
    } else {
      center = random_rational(rng, {1, 2, 3, 4, 8}, -4, 4);
      radius = random_rational(rng, {1, 2, 4, 3, 8}, 0, 2);
    }
    if (radius <= 0) radius = make_rational(1, 8);
    comps.push_back(Component{center - radius, center + radius});
  }
  return canonical(IntervalCode::from_components(std::move(comps)));
}

IntervalCode IntervalGeometry::perturb(const IntervalCode& c, std::mt19937_64& rng) const {
  if (c.is_zero() || c.is_whole()) return sample(rng);
  static const long factors[][2] = {{1, 2}, {3, 4}, {1, 1}, {5, 4}, {3, 2}, {2, 1}, {3, 1}};
  std::vector<Component> comps;
  for (const auto& k : c.components()) {
    const auto& f = factors[std::uniform_int_distribution<int>(0, 6)(rng)];
    Rational r = k.radius() * make_rational(f[0], f[1]);
    Rational shift = k.radius() * make_rational(std::uniform_int_distribution<long>(-8, 8)(rng), 8);
    Rational center = k.center() + shift;
    comps.push_back(Component{center - r, center + r});
  }
  return canonical(IntervalCode::from_components(std::move(comps)));
}

IntervalCode IntervalGeometry::from_open_boxes(const std::vector<Box>& boxes) const {
  std::vector<Component> comps;
  for (const auto& b : boxes) {
    if (b.size() != 1) throw std::invalid_argument("interval code from a non-1D box");
    if (!b[0].lo || !b[0].hi) return IntervalCode::whole();
    comps.push_back(Component{*b[0].lo, *b[0].hi});
  }
  return canonical(IntervalCode::from_components(std::move(comps)));
}

AbstractBasis<IntervalCode> interval_basis(Domain d) {
  auto g = std::make_shared<const IntervalGeometry>(d);
  AbstractBasis<IntervalCode> b;
  b.name = d == Domain::real_line ? "real-line" : "unit-interval";
  b.algebra.zero = IntervalCode::zero();
  b.algebra.one = IntervalCode::whole();
  b.algebra.plus = [g](const IntervalCode& x, const IntervalCode& y) { return g->plus(x, y); };
  b.algebra.star = [g](const IntervalCode& x, const IntervalCode& y) { return g->star(x, y); };
  b.algebra.leq = [g](const IntervalCode& x, const IntervalCode& y) { return g->leq(x, y); };
  b.waybelow = [g](const IntervalCode& x, const IntervalCode& y) { return g->waybelow(x, y); };
  b.interpolants = [g](const IntervalCode& n, const IntervalCode& m, int l) { return g->interpolants(n, m, l); };
  b.wilker_pairs = [g](const IntervalCode& n, const IntervalCode& p, const IntervalCode& q, int l) {
    return g->wilker_pairs(n, p, q, l);
  };
  b.enlargements = [g](const IntervalCode& n, int l) { return g->enlargements(n, l); };
  b.shrinkings = [g](const IntervalCode& m, int l) { return g->shrinkings(m, l); };
  b.cover_test = [g](const IntervalCode& n, const FinSet<IntervalCode>& l) {
    return g->cover(n, l.items());
  };
  b.inhabited = [g](const IntervalCode& n) { return g->inhabited(n); };
  b.show = [](const IntervalCode& c) { return c.str(); };
  b.sample = [g](std::mt19937_64& rng) { return g->sample(rng); };
  b.perturb = [g](const IntervalCode& c, std::mt19937_64& rng) { return g->perturb(c, rng); };
  b.compact_boxes = [g](const IntervalCode& c) -> std::optional<std::vector<Box>> {
    auto k = g->compact_spans(c);
    if (!k) return std::nullopt;
    std::vector<Box> out;
    for (const auto& s : *k) out.push_back(Box{s});
    return out;
  };
  b.open_boxes = [g](const IntervalCode& c) {
    std::vector<Box> out;
    for (const auto& s : g->open_spans(c)) out.push_back(Box{s});
    return out;
  };
  b.from_open_boxes = [g](const std::vector<Box>& boxes) { return g->from_open_boxes(boxes); };
  b.waybelow_within_order = true;
  b.dim = 1;
  return b;
}

AbstractBasis<IntervalCode> real_line_basis() { return interval_basis(Domain::real_line); }
AbstractBasis<IntervalCode> unit_interval_basis() { return interval_basis(Domain::unit_interval); }

AbstractBasis<IntervalCode> margin_interval_basis(const Rational& gap) {
  auto b = real_line_basis();
  auto g = std::make_shared<const IntervalGeometry>(Domain::real_line);
  b.name = "margin-interval";
  b.waybelow = [g, gap](const IntervalCode& n, const IntervalCode& m) {
    if (n.is_zero()) return true;
    if (n.is_whole()) return false;
    return g->waybelow(g->widen(n, gap), m);
  };
  return b;
}

AbstractBasis<IntervalCode> closed_containment_basis() {
  auto b = real_line_basis();
  auto g = std::make_shared<const IntervalGeometry>(Domain::real_line);
  b.name = "closed-containment";
  b.waybelow = [g](const IntervalCode& n, const IntervalCode& m) {
    auto k = g->compact_spans(n);
    if (!k) return false;
    return spans_subset(*k, g->closed_spans(m));
  };
  return b;
}

bool con_check(const FinSet<IntervalCode>& l) {
  if (l.empty()) return true;
  bool first = true;
  Rational lo, hi;
  for (const auto& c : l) {
    if (!c.single()) throw std::invalid_argument("con_check: single-interval codes only");
    const auto& k = c.components().front();
    if (first || k.lo > lo) lo = k.lo;
    if (first || k.hi < hi) hi = k.hi;
    first = false;
  }
  return lo < hi;
}

}  // namespace asd
