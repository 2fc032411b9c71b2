#pragma once

#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "asd/abstract_basis.hpp"
#include "asd/interval_code.hpp"

namespace asd {

// `ideal`: ξn ⟺ ∃k. n ≪ k ∧ ξk, directed upward (principal ideals ↓n).
// `point`: ξn ⟺ ∃m. m ≪ n ∧ ξm, directed downward (neighbourhoods of a point).
enum class IdealForm { ideal, point };

template <class Code>
struct RoundedIdeal {
  std::string name;
  IdealForm form = IdealForm::ideal;
  std::function<Verdict(const Code&)> member;
  // Restartable stream of known members, by level.
  std::function<std::vector<Code>(int level)> certificates;
  // Exact location when the ideal is the neighbourhood filter of a point.
  std::optional<std::vector<Rational>> point;
};

template <class Code>
RoundedIdeal<Code> principal_ideal(const AbstractBasis<Code>& b_in, const Code& n) {
  auto b = std::make_shared<const AbstractBasis<Code>>(b_in);
  RoundedIdeal<Code> xi;
  xi.name = "down(" + b->str(n) + ")";
  xi.form = IdealForm::ideal;
  xi.member = [b, n](const Code& k) { return from_bool(b->waybelow(k, n)); };
  xi.certificates = [b, n](int level) {
    std::vector<Code> out;
    if (b->carrier) {
      if (level == 0)
        for (const auto& k : *b->carrier)
          if (b->waybelow(k, n)) out.push_back(k);
      return out;
    }
    if (b->shrinkings)
      for (const auto& k : b->shrinkings(n, level))
        if (b->waybelow(k, n)) out.push_back(k);
    return out;
  };
  return xi;
}

inline std::string show_point(const std::vector<Rational>& x) {
  if (x.size() == 1) return to_string(x[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) out += (i ? ", " : "") + to_string(x[i]);
  return out + ")";
}

// ξn ⟺ x lies in the open part of n; certificates are boxes of radius 2^-i around x.
template <class Code>
RoundedIdeal<Code> point_ideal(const AbstractBasis<Code>& b_in, const std::vector<Rational>& x) {
  if (!b_in.spatial() || !b_in.from_open_boxes)
    throw std::invalid_argument(b_in.name + ": point ideals need a spatial basis");
  auto b = std::make_shared<const AbstractBasis<Code>>(b_in);
  RoundedIdeal<Code> xi;
  xi.name = "pt(" + show_point(x) + ")";
  xi.form = IdealForm::point;
  xi.point = x;
  xi.member = [b, x](const Code& n) { return from_bool(boxes_contain(b->open_boxes(n), x)); };
  xi.certificates = [b, x](int level) {
    std::vector<Code> out;
    for (int i = 8 * level; i < 8 * level + 8; ++i) {
      Rational r = pow2(-i);
      Box box;
      for (const auto& xi : x) box.push_back(Span::open(xi - r, xi + r));
      out.push_back(b->from_open_boxes({box}));
    }
    return out;
  };
  return xi;
}

inline RoundedIdeal<IntervalCode> point_ideal(const AbstractBasis<IntervalCode>& b, const Rational& x) {
  return point_ideal(b, std::vector<Rational>{x});
}

template <class Code>
AxiomReport is_rounded_ideal(const AbstractBasis<Code>& b, const RoundedIdeal<Code>& xi,
                             const Universe& u, const SearchBound& bound = {}) {
  AxiomReport rep(b.name + " " + xi.name);
  rep.declare("inhabited");
  rep.declare("rounded");
  rep.declare("directed");
  auto s = [&](const Code& c) { return b.str(c); };
  auto yes = [&](const Code& c) { return xi.member(c) == Verdict::yes; };
  const bool up = xi.form == IdealForm::ideal;
  // a ◁ c in the orientation of the ideal
  auto below = [&](const Code& a, const Code& c) { return up ? b.waybelow(a, c) : b.waybelow(c, a); };

  std::vector<Code> certs;
  for (int level = 0; level < bound.levels; ++level) {
    auto c = xi.certificates(level);
    certs.insert(certs.end(), c.begin(), c.end());
  }

  auto search = [&](auto gen, auto accept) {
    return detail::search_levels<Code>(bound, gen, accept).found();
  };
  auto fail_existential = [&](const char* rule, std::vector<std::string> codes) {
    if (b.finite())
      rep.refute(rule, std::move(codes));
    else
      rep.unwitnessed(rule, std::move(codes));
  };

  bool inhabited = false;
  for (const auto& c : certs)
    if (yes(c)) {
      inhabited = true;
      break;
    }
  if (!inhabited && b.carrier)
    for (const auto& c : *b.carrier)
      if (yes(c)) {
        inhabited = true;
        break;
      }
  if (inhabited)
    rep.pass("inhabited");
  else
    fail_existential("inhabited", {xi.name});

  std::vector<Code> codes;
  std::vector<std::pair<Code, Code>> pairs;
  if (u.exhaustive) {
    if (!b.carrier) throw std::invalid_argument(b.name + ": exhaustive check needs a finite carrier");
    codes = *b.carrier;
    for (const auto& x : codes)
      for (const auto& y : codes) pairs.emplace_back(x, y);
  } else {
    std::mt19937_64 rng(u.seed);
    auto near = [&](const Code& c) { return b.perturb ? b.perturb(c, rng) : b.sample(rng); };
    auto cert = [&]() {
      return certs.empty() ? b.sample(rng)
                           : certs[std::uniform_int_distribution<std::size_t>(0, std::min<std::size_t>(certs.size(), 12) - 1)(rng)];
    };
    for (std::size_t i = 0; i < u.count; ++i) {
      int kind = std::uniform_int_distribution<int>(0, 2)(rng);
      Code n = kind == 0 ? b.sample(rng) : kind == 1 ? near(cert()) : cert();
      codes.push_back(n);
      int k2 = std::uniform_int_distribution<int>(0, 2)(rng);
      Code m = k2 == 0 ? near(n) : k2 == 1 ? near(cert()) : cert();
      pairs.emplace_back(n, m);
    }
  }

  for (const auto& n : codes) {
    if (!yes(n)) continue;
    bool found = search(
        [&](int level) {
          std::vector<Code> out = xi.certificates(level);
          auto more = up ? (b.enlargements ? b.enlargements(n, level) : std::vector<Code>{})
                         : (b.shrinkings ? b.shrinkings(n, level) : std::vector<Code>{});
          out.insert(out.end(), more.begin(), more.end());
          if (level == 0 && b.carrier) out.insert(out.end(), b.carrier->begin(), b.carrier->end());
          return out;
        },
        [&](const Code& k) { return below(n, k) && yes(k); });
    if (found)
      rep.pass("rounded");
    else
      fail_existential("rounded", {s(n)});
  }
  for (const auto& [n, k] : pairs)
    if (below(n, k) && yes(k)) rep.record("rounded", yes(n), {s(n), s(k)});

  for (const auto& [r, t] : pairs) {
    if (!yes(r) || !yes(t)) continue;
    bool found = search(
        [&](int level) {
          std::vector<Code> out = xi.certificates(level);
          if (up && b.enlargements && b.algebra.has_plus()) {
            auto more = b.enlargements(b.plus(r, t), level);
            out.insert(out.end(), more.begin(), more.end());
          }
          if (!up && b.shrinkings) {
            auto more = b.shrinkings(b.star(r, t), level);
            out.insert(out.end(), more.begin(), more.end());
          }
          if (level == 0 && b.carrier) out.insert(out.end(), b.carrier->begin(), b.carrier->end());
          return out;
        },
        [&](const Code& k) { return below(r, k) && below(t, k) && yes(k); });
    if (found)
      rep.pass("directed");
    else
      fail_existential("directed", {s(r), s(t)});
  }
  return rep;
}

}  // namespace asd
