#include "asd/real_function.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace asd {

namespace {

const Rational& lo(const Span& s) { return *s.lo; }
const Rational& hi(const Span& s) { return *s.hi; }

void require_bounded(const Box& b) {
  for (const auto& s : b)
    if (!s.bounded()) throw std::invalid_argument("interval extension of an unbounded box");
}

Point corner(const Box& b, unsigned mask) {
  Point p;
  for (std::size_t i = 0; i < b.size(); ++i) p.push_back((mask >> i) & 1U ? hi(b[i]) : lo(b[i]));
  return p;
}

Point center(const Box& b) {
  Point p;
  for (const auto& s : b) p.push_back((lo(s) + hi(s)) / 2);
  return p;
}

RealFunctionPtr unary(std::string name, std::function<Span(const Span&)> h,
                      std::function<Rational(const Rational&)> f) {
  auto out = std::make_shared<RealFunction>();
  out->name = std::move(name);
  out->exact_hull = true;
  out->hull = [h](const Box& b) {
    require_bounded(b);
    return Box{h(b[0])};
  };
  out->at = [f](const Point& x) { return Point{f(x[0])}; };
  return out;
}

RealFunctionPtr binary(std::string name, std::function<Span(const Span&, const Span&)> h,
                       std::function<Rational(const Rational&, const Rational&)> f) {
  auto out = std::make_shared<RealFunction>();
  out->name = std::move(name);
  out->in_dim = 2;
  out->exact_hull = true;
  out->hull = [h](const Box& b) {
    require_bounded(b);
    return Box{h(b[0], b[1])};
  };
  out->at = [f](const Point& x) { return Point{f(x[0], x[1])}; };
  return out;
}

}  // namespace

RealFunctionPtr identity_function(std::size_t dim) {
  auto out = std::make_shared<RealFunction>();
  out->name = "id";
  out->in_dim = out->out_dim = dim;
  out->exact_hull = true;
  out->identity = true;
  out->hull = [](const Box& b) {
    require_bounded(b);
    Box c;
    for (const auto& s : b) c.push_back(Span::closed(lo(s), hi(s)));
    return c;
  };
  out->at = [](const Point& x) { return x; };
  return out;
}

RealFunctionPtr compose_functions(const RealFunctionPtr& g, const RealFunctionPtr& f) {
  if (g->in_dim != f->out_dim) throw std::invalid_argument("compose: dimension mismatch");
  auto out = std::make_shared<RealFunction>();
  out->name = g->name + "∘" + f->name;
  out->in_dim = f->in_dim;
  out->out_dim = g->out_dim;
  out->exact_hull = (g->identity && f->exact_hull) || (f->identity && g->exact_hull);
  out->hull = [g, f](const Box& b) { return g->hull(f->hull(b)); };
  out->at = [g, f](const Point& x) { return g->at(f->at(x)); };
  return out;
}

RealFunctionPtr pair_functions(const RealFunctionPtr& f, const RealFunctionPtr& g) {
  if (f->in_dim != g->in_dim || f->out_dim != 1 || g->out_dim != 1)
    throw std::invalid_argument("pair: dimension mismatch");
  auto out = std::make_shared<RealFunction>();
  out->name = "<" + f->name + "," + g->name + ">";
  out->in_dim = f->in_dim;
  out->out_dim = 2;
  out->hull = [f, g](const Box& b) { return Box{f->hull(b)[0], g->hull(b)[0]}; };
  out->at = [f, g](const Point& x) { return Point{f->at(x)[0], g->at(x)[0]}; };
  return out;
}

Builtin parse_builtin(const std::string& name) {
  static const std::pair<const char*, Builtin> table[] = {
      {"const", Builtin::constant}, {"identity", Builtin::identity}, {"negate", Builtin::negate},
      {"add_const", Builtin::add_const}, {"scale", Builtin::scale}, {"add", Builtin::add},
      {"mul", Builtin::mul}, {"min", Builtin::min}, {"max", Builtin::max}};
  for (const auto& [n, k] : table)
    if (name == n) return k;
  throw std::invalid_argument("unknown builtin kind: " + name);
}

std::string builtin_name(Builtin kind) {
  switch (kind) {
    case Builtin::constant: return "const";
    case Builtin::identity: return "identity";
    case Builtin::negate: return "negate";
    case Builtin::add_const: return "add_const";
    case Builtin::scale: return "scale";
    case Builtin::add: return "add";
    case Builtin::mul: return "mul";
    case Builtin::min: return "min";
    case Builtin::max: return "max";
  }
  return "?";
}

bool builtin_binary(Builtin kind) {
  return kind == Builtin::add || kind == Builtin::mul || kind == Builtin::min || kind == Builtin::max;
}

RealFunctionPtr builtin_function(Builtin kind, const std::vector<Rational>& params) {
  const bool wants_param = kind == Builtin::constant || kind == Builtin::add_const || kind == Builtin::scale;
  if (params.size() != (wants_param ? 1U : 0U))
    throw std::invalid_argument(builtin_name(kind) + ": expected " + (wants_param ? "1" : "0") + " parameter(s)");
  switch (kind) {
    case Builtin::constant: {
      Rational c = params[0];
      return unary("const " + to_string(c), [c](const Span&) { return Span::closed(c, c); },
                   [c](const Rational&) { return c; });
    }
    case Builtin::identity: return identity_function(1);
    case Builtin::negate:
      return unary("negate", [](const Span& s) { return Span::closed(-hi(s), -lo(s)); },
                   [](const Rational& x) { return Rational(-x); });
    case Builtin::add_const: {
      Rational c = params[0];
      return unary("add_const " + to_string(c),
                   [c](const Span& s) { return Span::closed(lo(s) + c, hi(s) + c); },
                   [c](const Rational& x) { return Rational(x + c); });
    }
    case Builtin::scale: {
      Rational c = params[0];
      return unary("scale " + to_string(c),
                   [c](const Span& s) {
                     Rational a = lo(s) * c, b = hi(s) * c;
                     return Span::closed(std::min(a, b), std::max(a, b));
                   },
                   [c](const Rational& x) { return Rational(x * c); });
    }
    case Builtin::add:
      return binary("add", [](const Span& a, const Span& b) { return Span::closed(lo(a) + lo(b), hi(a) + hi(b)); },
                    [](const Rational& x, const Rational& y) { return Rational(x + y); });
    case Builtin::mul:
      return binary("mul",
                    [](const Span& a, const Span& b) {
                      Rational p[4] = {lo(a) * lo(b), lo(a) * hi(b), hi(a) * lo(b), hi(a) * hi(b)};
                      return Span::closed(*std::min_element(p, p + 4), *std::max_element(p, p + 4));
                    },
                    [](const Rational& x, const Rational& y) { return Rational(x * y); });
    case Builtin::min:
      return binary("min",
                    [](const Span& a, const Span& b) {
                      return Span::closed(std::min(lo(a), lo(b)), std::min(hi(a), hi(b)));
                    },
                    [](const Rational& x, const Rational& y) { return std::min(x, y); });
    case Builtin::max:
      return binary("max",
                    [](const Span& a, const Span& b) {
                      return Span::closed(std::max(lo(a), lo(b)), std::max(hi(a), hi(b)));
                    },
                    [](const Rational& x, const Rational& y) { return std::max(x, y); });
  }
  throw std::invalid_argument("unknown builtin kind");
}

Verdict image_within(const RealFunction& f, const std::vector<Box>& pieces, const std::vector<Box>& targets,
                     const ImageBudget& budget) {
  std::deque<Box> queue;
  for (const auto& p : pieces)
    if (!box_empty(p)) {
      require_bounded(p);
      Box c;
      for (const auto& s : p) c.push_back(Span::closed(lo(s), hi(s)));
      queue.push_back(std::move(c));
    }
  std::size_t processed = 0;
  while (!queue.empty()) {
    Box b = std::move(queue.front());
    queue.pop_front();
    if (boxes_subset({f.hull(b)}, targets)) continue;
    if (f.exact_hull) return Verdict::no;
    Point y = f.at(center(b));
    if (!boxes_contain(targets, y)) return Verdict::no;
    Rational ylo = y[0], yhi = y[0];
    for (unsigned mask = 0; mask < (1U << b.size()); ++mask) {
      Point v = f.at(corner(b, mask));
      if (!boxes_contain(targets, v)) return Verdict::no;
      ylo = std::min(ylo, v[0]);
      yhi = std::max(yhi, v[0]);
    }
    // b is connected, so f attains every value between two of its samples
    if (f.out_dim == 1 && !boxes_subset({Box{Span::closed(ylo, yhi)}}, targets)) return Verdict::no;
    if (++processed >= budget.max_boxes) return Verdict::unknown;
    std::size_t axis = 0;
    Rational width = -1;
    for (std::size_t i = 0; i < b.size(); ++i) {
      Rational w = hi(b[i]) - lo(b[i]);
      if (w > width) {
        width = w;
        axis = i;
      }
    }
    if (width == 0) return Verdict::unknown;
    Rational mid = (lo(b[axis]) + hi(b[axis])) / 2;
    Box left = b, right = b;
    left[axis] = Span::closed(lo(b[axis]), mid);
    right[axis] = Span::closed(mid, hi(b[axis]));
    queue.push_back(std::move(left));
    queue.push_back(std::move(right));
  }
  return Verdict::yes;
}

std::vector<Box> widened_image(const RealFunction& f, const std::vector<Box>& pieces, const Rational& r) {
  std::vector<Box> out;
  for (const auto& p : pieces) {
    if (box_empty(p)) continue;
    Box h = f.hull(p);
    Box w;
    for (const auto& s : h) w.push_back(Span::open(lo(s) - r, hi(s) + r));
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace asd
