#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "asd/abstract_basis.hpp"
#include "asd/finite_basis.hpp"
#include "asd/nucleus.hpp"
#include "asd/real_function.hpp"
#include "asd/report.hpp"
#include "asd/rounded_ideal.hpp"
#include "asd/verdict.hpp"

namespace asd {

// ρ(n, m): "the compact of n maps into the open of m".
template <class S, class T>
struct Matrix {
  std::string name;
  std::shared_ptr<const AbstractBasis<S>> source;
  std::shared_ptr<const AbstractBasis<T>> target;
  std::function<Verdict(const S&, const T&)> rel;
  // Target codes m likely to satisfy ρ(n, m), by level. Used as witnesses only.
  std::function<std::vector<T>(const S&, int level)> forward;
  // Present when ρ is the matrix of a known real function.
  RealFunctionPtr function;
  SearchBound bound;

  Verdict operator()(const S& n, const T& m) const { return rel(n, m); }
};

template <class S, class T>
Matrix<S, T> function_matrix(std::string name, std::shared_ptr<const AbstractBasis<S>> src,
                             std::shared_ptr<const AbstractBasis<T>> tgt, RealFunctionPtr f,
                             ImageBudget budget = {}) {
  if (!src->spatial() || !tgt->spatial() || !tgt->from_open_boxes)
    throw std::invalid_argument(name + ": function matrices need spatial bases");
  if (src->dim != f->in_dim || tgt->dim != f->out_dim)
    throw std::invalid_argument(name + ": dimension mismatch between function and bases");
  Matrix<S, T> r;
  r.name = std::move(name);
  r.source = src;
  r.target = tgt;
  r.function = f;
  r.rel = [src, tgt, f, budget](const S& n, const T& m) {
    auto pieces = src->compact_boxes(n);
    if (!pieces) return Verdict::no;
    return image_within(*f, *pieces, tgt->open_boxes(m), budget);
  };
  r.forward = [src, tgt, f](const S& n, int level) {
    std::vector<T> out;
    auto pieces = src->compact_boxes(n);
    if (!pieces) return out;
    for (int j = 8 * level; j < 8 * level + 8; ++j) out.push_back(tgt->from_open_boxes(widened_image(*f, *pieces, pow2(-j))));
    return out;
  };
  return r;
}

// rel = ≪, carrying the identity function on spatial bases.
template <class C>
Matrix<C, C> identity(const AbstractBasis<C>& b_in) {
  auto b = std::make_shared<const AbstractBasis<C>>(b_in);
  Matrix<C, C> r;
  r.name = "id(" + b->name + ")";
  r.source = b;
  r.target = b;
  r.rel = [b](const C& n, const C& m) { return from_bool(b->waybelow(n, m)); };
  r.forward = [b](const C& n, int level) {
    return b->enlargements ? b->enlargements(n, level) : std::vector<C>{};
  };
  if (b->spatial() && b->dim > 0) r.function = identity_function(b->dim);
  return r;
}

enum class ComposeMode {
  // Composes known functions exactly; otherwise searches for the middle code.
  automatic,
  // Always searches ∃m. ρ(n,m) ∧ σ(m,k).
  relational,
};

// compose(σ, ρ)(n, k) = ∃m. ρ(n, m) ∧ σ(m, k)
template <class A, class B, class C>
Matrix<A, C> compose(const Matrix<B, C>& sigma, const Matrix<A, B>& rho,
                     ComposeMode mode = ComposeMode::automatic) {
  if (rho.target->name != sigma.source->name)
    throw std::invalid_argument("compose: target " + rho.target->name + " of " + rho.name +
                                " is not the source " + sigma.source->name + " of " + sigma.name);
  RealFunctionPtr composite;
  if (rho.function && sigma.function) composite = compose_functions(sigma.function, rho.function);
  if (mode == ComposeMode::automatic && composite) {
    auto out = function_matrix<A, C>(sigma.name + "∘" + rho.name, rho.source, sigma.target, composite);
    out.bound = rho.bound;
    return out;
  }
  Matrix<A, C> r;
  r.name = sigma.name + "∘" + rho.name;
  r.source = rho.source;
  r.target = sigma.target;
  r.function = composite;
  r.bound = rho.bound;
  auto src = rho.source;
  auto tgt = sigma.target;
  r.rel = [sigma, rho, composite, src, tgt](const A& n, const C& k) {
    bool undecided = false;
    std::size_t tried = 0;
    auto attempt = [&](const B& m) {
      Verdict a = rho(n, m);
      if (a == Verdict::no) return false;
      Verdict b = sigma(m, k);
      if (a == Verdict::yes && b == Verdict::yes) return true;
      if (a == Verdict::unknown || b == Verdict::unknown) undecided = true;
      return false;
    };
    if (rho.target->carrier) {
      for (const auto& m : *rho.target->carrier)
        if (attempt(m)) return Verdict::yes;
      if (!undecided) return Verdict::no;
    } else {
      for (int level = 0; level < rho.bound.levels; ++level)
        for (const auto& m : rho.forward(n, level)) {
          if (tried++ >= rho.bound.max_candidates) break;
          if (attempt(m)) return Verdict::yes;
        }
    }
    if (composite) {
      auto pieces = src->compact_boxes(n);
      if (!pieces) return Verdict::no;
      if (image_within(*composite, *pieces, tgt->open_boxes(k)) == Verdict::no) return Verdict::no;
    }
    return Verdict::unknown;
  };
  r.forward = [sigma, rho](const A& n, int level) {
    std::vector<C> out;
    for (const auto& m : rho.forward(n, level)) {
      if (rho(n, m) != Verdict::yes) continue;
      for (const auto& k : sigma.forward(m, level)) out.push_back(k);
      if (out.size() >= 64) break;
    }
    return out;
  };
  return r;
}

// υ(m) = ∃n. ξ(n) ∧ ρ(n, m), for neighbourhood-form ideals.
template <class S, class T>
RoundedIdeal<T> apply_ideal(const Matrix<S, T>& rho, const RoundedIdeal<S>& xi) {
  if (xi.form != IdealForm::point)
    throw std::invalid_argument("apply_ideal: expects a point (neighbourhood) ideal");
  RoundedIdeal<T> out;
  out.name = rho.name + "[" + xi.name + "]";
  out.form = IdealForm::point;
  std::optional<Point> y;
  if (xi.point && rho.function) y = rho.function->at(*xi.point);
  out.point = y;
  auto tgt = rho.target;
  out.member = [rho, xi, y, tgt](const T& m) {
    std::size_t tried = 0;
    for (int level = 0; level < rho.bound.levels; ++level)
      for (const auto& n : xi.certificates(level)) {
        if (tried++ >= rho.bound.max_candidates) break;
        if (xi.member(n) == Verdict::yes && rho(n, m) == Verdict::yes) return Verdict::yes;
      }
    if (rho.source->carrier) {
      bool undecided = false;
      for (const auto& n : *rho.source->carrier) {
        Verdict v = xi.member(n) && rho(n, m);
        if (v == Verdict::yes) return Verdict::yes;
        if (v == Verdict::unknown) undecided = true;
      }
      if (!undecided) return Verdict::no;
    }
    if (y && !boxes_contain(tgt->open_boxes(m), *y)) return Verdict::no;
    return Verdict::unknown;
  };
  out.certificates = [rho, xi](int level) {
    std::vector<T> certs;
    std::size_t used = 0;
    for (const auto& n : xi.certificates(level)) {
      if (++used > 4) break;
      for (const auto& m : rho.forward(n, level))
        if (rho(n, m) == Verdict::yes) certs.push_back(m);
    }
    return certs;
  };
  return out;
}

namespace detail {

template <class S, class T>
struct MatrixSample {
  S n, p, n_low, n_high;
  T m, m_low, m_high, s, t;
};

template <class C>
C pick(const std::vector<C>& v, std::mt19937_64& rng) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

template <class C>
C nearby(const AbstractBasis<C>& b, const C& c, std::mt19937_64& rng) {
  return b.perturb ? b.perturb(c, rng) : b.sample(rng);
}

// Splits the compact of n into closed pieces, bisecting only the pieces that
// fit neither s nor t, and sorts each into s or t.
template <class S, class T>
std::vector<std::pair<S, S>> join_splits(const Matrix<S, T>& rho, const S& n, const T& s, const T& t) {
  constexpr int kMaxDepth = 48;
  constexpr std::size_t kMaxPieces = std::size_t{1} << 16;
  std::vector<std::pair<S, S>> out;
  const auto& src = *rho.source;
  if (!src.spatial() || !src.from_open_boxes) return out;
  auto compact = src.compact_boxes(n);
  if (!compact) return out;
  std::vector<std::pair<Box, int>> work;
  for (const auto& piece : *compact) work.emplace_back(piece, 0);
  std::vector<Box> left, right;
  std::size_t seen = work.size();
  while (!work.empty()) {
    auto [piece, depth] = std::move(work.back());
    work.pop_back();
    Rational width = 0;
    std::size_t axis = 0;
    for (std::size_t i = 0; i < piece.size(); ++i)
      if (*piece[i].hi - *piece[i].lo > width) {
        width = *piece[i].hi - *piece[i].lo;
        axis = i;
      }
    Rational w = width > 0 ? Rational(width / 16) : pow2(-depth - 6);
    Box open;
    for (const auto& sp : piece) open.push_back(Span::open(*sp.lo - w, *sp.hi + w));
    S code = src.from_open_boxes({open});
    if (rho(code, s) == Verdict::yes) {
      left.push_back(open);
      continue;
    }
    if (rho(code, t) == Verdict::yes) {
      right.push_back(open);
      continue;
    }
    if (depth >= kMaxDepth || seen + 2 > kMaxPieces || width == 0) return out;
    Rational mid = (*piece[axis].lo + *piece[axis].hi) / 2;
    Box a = piece, b = piece;
    a[axis] = Span::closed(*piece[axis].lo, mid);
    b[axis] = Span::closed(mid, *piece[axis].hi);
    work.emplace_back(std::move(a), depth + 1);
    work.emplace_back(std::move(b), depth + 1);
    seen += 2;
  }
  out.emplace_back(src.from_open_boxes(left), src.from_open_boxes(right));
  return out;
}

}  // namespace detail

enum class Connective { top, bot, meet, join };

inline const char* connective_name(Connective c) {
  switch (c) {
    case Connective::top: return "top";
    case Connective::bot: return "bottom";
    case Connective::meet: return "meet";
    case Connective::join: return "join";
  }
  return "?";
}

// Structural rules (directedness, monotonicity, roundedness) plus the chosen lattice rules.
template <class S, class T>
AxiomReport check_matrix_rules(const Matrix<S, T>& rho, const Universe& u, bool structural,
                               const std::vector<Connective>& lattice) {
  const auto& src = *rho.source;
  const auto& tgt = *rho.target;
  const SearchBound& bound = rho.bound;
  AxiomReport rep(rho.name);
  if (structural) {
    for (const char* r : {"zero-source", "plus-source", "monotone", "round-source", "round-target"}) rep.declare(r);
  }
  for (auto c : lattice) rep.declare(connective_name(c));

  auto ss = [&](const S& c) { return "n=" + src.str(c); };
  auto ts = [&](const T& c) { return "m=" + tgt.str(c); };
  const bool complete_src = src.finite();
  // tri-state bookkeeping: unknown rel values are not counted as passes
  auto record3 = [&](const char* rule, Verdict lhs, Verdict rhs, std::vector<std::string> codes) {
    if (lhs == Verdict::unknown || rhs == Verdict::unknown)
      rep.unwitnessed(rule, std::move(codes));
    else
      rep.record(rule, lhs == rhs, std::move(codes));
  };
  auto implies = [&](const char* rule, bool premise, Verdict concl, std::vector<std::string> codes) {
    if (!premise) return;
    if (concl == Verdict::unknown)
      rep.unwitnessed(rule, std::move(codes));
    else
      rep.record(rule, concl == Verdict::yes, std::move(codes));
  };
  auto missing = [&](const char* rule, bool complete, std::vector<std::string> codes) {
    if (complete)
      rep.refute(rule, std::move(codes));
    else
      rep.unwitnessed(rule, std::move(codes));
  };
  auto yes = [&](const S& n, const T& m) { return rho(n, m) == Verdict::yes; };

  auto source_up = [&](const S& n, int level) {
    std::vector<S> out = src.enlargements ? src.enlargements(n, level) : std::vector<S>{};
    if (level == 0 && src.carrier) out.insert(out.end(), src.carrier->begin(), src.carrier->end());
    return out;
  };
  auto target_down = [&](const S& n, const T& m, int level) {
    std::vector<T> out = rho.forward ? rho.forward(n, level) : std::vector<T>{};
    if (tgt.shrinkings) {
      auto more = tgt.shrinkings(m, level);
      out.insert(out.end(), more.begin(), more.end());
    }
    if (level == 0 && tgt.carrier) out.insert(out.end(), tgt.carrier->begin(), tgt.carrier->end());
    return out;
  };
  auto meet_pairs = [&](const S& n, int level) {
    std::vector<std::pair<S, S>> out;
    if (level == 0 && src.carrier) {
      for (const auto& a : *src.carrier)
        for (const auto& b : *src.carrier) out.emplace_back(a, b);
      return out;
    }
    for (const auto& e : source_up(n, level)) out.emplace_back(e, e);
    return out;
  };

  auto check_instance = [&](const detail::MatrixSample<S, T>& x, bool do_structural, bool do_lattice) {
    const S& n = x.n;
    const T& m = x.m;
    if (do_structural) {
      record3("zero-source", rho(src.zero(), m), Verdict::yes, {ts(m)});
      if (src.algebra.has_plus()) {
        Verdict lhs = rho(n, m) && rho(x.p, m);
        record3("plus-source", lhs, rho(src.plus(n, x.p), m), {ss(n), "p=" + src.str(x.p), ts(m)});
      }
      if (src.algebra.leq && src.leq(x.n_low, n))
        implies("monotone", yes(n, m), rho(x.n_low, m), {ss(n), "n'=" + src.str(x.n_low), ts(m)});
      if (tgt.algebra.leq && tgt.leq(m, x.m_high))
        implies("monotone", yes(n, m), rho(n, x.m_high), {ss(n), ts(m), "m'=" + tgt.str(x.m_high)});

      if (yes(n, m)) {
        auto w = detail::search_levels<S>(bound, [&](int l) { return source_up(n, l); },
                                          [&](const S& k) { return src.waybelow(n, k) && yes(k, m); });
        if (w.found())
          rep.pass("round-source");
        else
          missing("round-source", complete_src, {ss(n), ts(m)});
        auto v = detail::search_levels<T>(bound, [&](int l) { return target_down(n, m, l); },
                                          [&](const T& k) { return tgt.waybelow(k, m) && yes(n, k); });
        if (v.found())
          rep.pass("round-target");
        else
          missing("round-target", tgt.finite(), {ss(n), ts(m)});
      }
      implies("round-source", src.waybelow(n, x.n_high) && yes(x.n_high, m), rho(n, m),
              {ss(n), "n'=" + src.str(x.n_high), ts(m)});
      implies("round-target", tgt.waybelow(x.m_low, m) && yes(n, x.m_low), rho(n, m),
              {ss(n), "m'=" + tgt.str(x.m_low), ts(m)});
    }
    if (!do_lattice) return;
    for (auto c : lattice) {
      switch (c) {
        case Connective::bot:
          record3("bottom", rho(n, tgt.zero()), from_bool(src.waybelow(n, src.zero())), {ss(n)});
          break;
        case Connective::top:
          record3("top", rho(n, tgt.one()), from_bool(src.waybelow(n, src.one())), {ss(n)});
          break;
        case Connective::meet: {
          const T st = tgt.star(x.s, x.t);
          Verdict lhs = rho(n, st);
          auto w = detail::search_levels<std::pair<S, S>>(
              SearchBound{bound.levels, std::max<std::size_t>(bound.max_candidates, src.carrier ? src.carrier->size() * src.carrier->size() + 8 : 0)},
              [&](int l) { return meet_pairs(n, l); },
              [&](const std::pair<S, S>& ab) {
                return src.waybelow(n, src.star(ab.first, ab.second)) && yes(ab.first, x.s) && yes(ab.second, x.t);
              });
          std::vector<std::string> codes{ss(n), "s=" + tgt.str(x.s), "t=" + tgt.str(x.t)};
          if (w.found()) {
            codes.push_back("witness " + src.str(w.witness->first) + ", " + src.str(w.witness->second));
            codes.push_back("rho(n,s*t)=" + std::string(to_string(lhs)));
          }
          if (lhs == Verdict::unknown)
            rep.unwitnessed("meet", codes);
          else if (lhs == Verdict::yes)
            w.found() ? rep.pass("meet") : missing("meet", complete_src, codes);
          else
            rep.record("meet", !w.found(), codes);
          break;
        }
        case Connective::join: {
          if (!src.algebra.has_plus() || !tgt.algebra.has_plus()) break;
          const T st = tgt.plus(x.s, x.t);
          Verdict lhs = rho(n, st);
          std::optional<std::pair<S, S>> found;
          auto accept = [&](const std::pair<S, S>& ab) {
            return src.waybelow(n, src.plus(ab.first, ab.second)) && yes(ab.first, x.s) && yes(ab.second, x.t);
          };
          if (src.carrier) {
            for (const auto& a : *src.carrier)
              for (const auto& b : *src.carrier)
                if (!found && accept({a, b})) found = std::make_pair(a, b);
          } else if (lhs == Verdict::yes) {
            for (const auto& ab : detail::join_splits(rho, n, x.s, x.t))
              if (!found && accept(ab)) found = ab;
          }
          std::vector<std::string> codes{ss(n), "s=" + tgt.str(x.s), "t=" + tgt.str(x.t)};
          if (lhs == Verdict::unknown)
            rep.unwitnessed("join", codes);
          else if (lhs == Verdict::yes)
            found ? rep.pass("join") : missing("join", complete_src, codes);
          else
            rep.record("join", !found, codes);
          // converse on a sampled split
          if (lhs == Verdict::no && yes(x.p, x.s) && yes(x.n_low, x.t))
            implies("join", src.waybelow(n, src.plus(x.p, x.n_low)), lhs,
                    {ss(n), "s=" + tgt.str(x.s), "t=" + tgt.str(x.t), "p=" + src.str(x.p), "q=" + src.str(x.n_low)});
          break;
        }
      }
    }
  };

  if (u.exhaustive) {
    if (!src.carrier || !tgt.carrier)
      throw std::invalid_argument(rho.name + ": exhaustive matrix check needs finite carriers");
    const auto& sc = *src.carrier;
    const auto& tc = *tgt.carrier;
    for (const auto& n : sc)
      for (const auto& m : tc) {
        if (structural) {
          for (const auto& p : sc) check_instance({n, p, p, p, m, m, m, m, m}, true, false);
          for (const auto& m2 : tc) check_instance({n, n, n, n, m, m2, m2, m, m}, true, false);
        }
        if (!lattice.empty())
          for (const auto& t : tc) check_instance({n, src.zero(), src.zero(), n, m, m, m, m, t}, false, true);
      }
    return rep;
  }

  if (!src.sample || !tgt.sample) throw std::invalid_argument(rho.name + ": sampling needs code generators");
  std::mt19937_64 rng(u.seed);
  auto coin = [&](double p) { return std::bernoulli_distribution(p)(rng); };
  for (std::size_t i = 0; i < u.count; ++i) {
    detail::MatrixSample<S, T> x;
    x.n = src.sample(rng);
    if (coin(0.3)) x.n = detail::nearby(src, x.n, rng);
    std::vector<T> fw = rho.forward ? rho.forward(x.n, 0) : std::vector<T>{};
    auto target_near = [&]() {
      int k = std::uniform_int_distribution<int>(0, 2)(rng);
      if (fw.empty() || k == 0) return tgt.sample(rng);
      T c = detail::pick(fw, rng);
      return k == 1 ? c : detail::nearby(tgt, c, rng);
    };
    x.m = target_near();
    x.s = target_near();
    x.t = coin(0.5) ? target_near() : detail::nearby(tgt, x.s, rng);
    x.p = coin(0.5) ? detail::nearby(src, x.n, rng) : src.sample(rng);
    auto shr = src.shrinkings ? src.shrinkings(x.n, 0) : std::vector<S>{};
    x.n_low = shr.empty() ? x.p : detail::pick(shr, rng);
    auto enl = src.enlargements ? src.enlargements(x.n, 0) : std::vector<S>{};
    x.n_high = enl.empty() ? x.p : detail::pick(enl, rng);
    auto tshr = tgt.shrinkings ? tgt.shrinkings(x.m, 0) : std::vector<T>{};
    x.m_low = tshr.empty() ? target_near() : detail::pick(tshr, rng);
    auto tenl = tgt.enlargements ? tgt.enlargements(x.m, 0) : std::vector<T>{};
    x.m_high = tenl.empty() ? target_near() : detail::pick(tenl, rng);
    check_instance(x, structural, true);
  }
  return rep;
}

template <class S, class T>
AxiomReport validate_matrix(const Matrix<S, T>& rho, const Universe& u) {
  return check_matrix_rules(rho, u, true,
                            {Connective::bot, Connective::top, Connective::meet, Connective::join});
}

template <class S, class T>
AxiomReport preserves(const Matrix<S, T>& rho, Connective c, const Universe& u) {
  return check_matrix_rules(rho, u, false, {c});
}

// Counts sampled (n, m) on which two relations give different verdicts.
template <class S, class T>
std::vector<std::string> relation_mismatches(const Matrix<S, T>& a, const Matrix<S, T>& b, const Universe& u,
                                             std::size_t max_report = 5) {
  std::vector<std::string> out;
  std::size_t bad = 0;
  auto check = [&](const S& n, const T& m) {
    Verdict x = a(n, m), y = b(n, m);
    if (x != y && bad++ < max_report)
      out.push_back("(" + a.source->str(n) + ", " + a.target->str(m) + "): " + std::string(to_string(x)) +
                    " vs " + std::string(to_string(y)));
  };
  if (u.exhaustive) {
    for (const auto& n : *a.source->carrier)
      for (const auto& m : *a.target->carrier) check(n, m);
  } else {
    std::mt19937_64 rng(u.seed);
    for (std::size_t i = 0; i < u.count; ++i) {
      S n = a.source->sample(rng);
      auto fw = a.forward ? a.forward(n, 0) : std::vector<T>{};
      int k = std::uniform_int_distribution<int>(0, 2)(rng);
      T m = (fw.empty() || k == 0) ? a.target->sample(rng)
            : k == 1            ? detail::pick(fw, rng)
                                : detail::nearby(*a.target, detail::pick(fw, rng), rng);
      check(n, m);
    }
  }
  if (bad > max_report) out.push_back("... " + std::to_string(bad - max_report) + " more");
  return out;
}

// Finite-model extraction. H maps subsets of the target carrier to subsets of
// the source carrier; H[ξ] for every ξ ⊆ target.
using HomTable = std::vector<SigmaNPoint>;

Matrix<int, int> matrix_of_hom(std::shared_ptr<const FiniteBasis> src, std::shared_ptr<const FiniteBasis> tgt,
                               const HomTable& h);
// H′(S) = {k : ∃m ∈ S, n. ρ(n, m) ∧ k ≪ n}
HomTable hom_of_matrix(const Matrix<int, int>& rho, const FiniteBasis& src, const FiniteBasis& tgt);
// Matrix from an explicit list of (n, m) pairs.
Matrix<int, int> pair_list_matrix(std::string name, std::shared_ptr<const FiniteBasis> src,
                                  std::shared_ptr<const FiniteBasis> tgt, std::vector<std::pair<int, int>> pairs);

}  // namespace asd
