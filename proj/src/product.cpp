#include "asd/product.hpp"

#include <algorithm>
#include <stdexcept>

namespace asd {

namespace {

using BasisPtr = std::shared_ptr<const AbstractBasis<IntervalCode>>;

Rect normalized(Rect r) {
  if (r.is_zero()) return Rect{IntervalCode::zero(), IntervalCode::zero()};
  return r;
}

IntervalCode first_piece(const IntervalCode& c) {
  if (c.is_zero() || c.is_whole() || c.single()) return c;
  return IntervalCode::from_components({c.components().front()});
}

std::vector<IntervalCode> pieces_of(const IntervalCode& c) {
  if (c.is_zero()) return {};
  if (c.is_whole() || c.single()) return {c};
  std::vector<IntervalCode> out;
  for (const auto& k : c.components()) out.push_back(IntervalCode::from_components({k}));
  return out;
}

std::optional<Box> rect_compact(const BasisPtr& b1, const BasisPtr& b2, const Rect& r) {
  auto kx = b1->compact_boxes(r.x);
  auto ky = b2->compact_boxes(r.y);
  if (!kx || !ky) return std::nullopt;
  if (kx->empty() || ky->empty()) return Box{};
  return Box{kx->front()[0], ky->front()[0]};
}

std::vector<Box> rect_open(const BasisPtr& b1, const BasisPtr& b2, const Rect& r) {
  auto ox = b1->open_boxes(r.x);
  auto oy = b2->open_boxes(r.y);
  std::vector<Box> out;
  for (const auto& a : ox)
    for (const auto& c : oy) out.push_back(Box{a[0], c[0]});
  return out;
}

Box rect_closed(const BasisPtr& b1, const BasisPtr& b2, const Rect& r) {
  auto kx = b1->compact_boxes(r.x);
  auto ky = b2->compact_boxes(r.y);
  Span sx = kx ? (kx->empty() ? Span::open(0, 0) : kx->front()[0]) : Span::line();
  Span sy = ky ? (ky->empty() ? Span::open(0, 0) : ky->front()[0]) : Span::line();
  return Box{sx, sy};
}

template <class F1, class F2>
std::vector<Rect> zip_rect(const Rect& r, F1 gen1, F2 gen2) {
  if (r.is_zero()) return {r};
  auto xs = gen1(r.x);
  auto ys = gen2(r.y);
  if (xs.empty() && ys.empty()) return {};
  std::size_t n = std::max(xs.size(), ys.size());
  std::vector<Rect> out;
  for (std::size_t i = 0; i < n; ++i) {
    const IntervalCode& x = xs.empty() ? r.x : xs[std::min(i, xs.size() - 1)];
    const IntervalCode& y = ys.empty() ? r.y : ys[std::min(i, ys.size() - 1)];
    out.push_back(normalized(Rect{x, y}));
  }
  return out;
}

std::vector<ProductCode> zip_sets(const ProductCode& l, const std::function<std::vector<Rect>(const Rect&)>& gen) {
  if (l.empty()) return {l};
  std::vector<std::vector<Rect>> per;
  std::size_t width = SIZE_MAX;
  for (const auto& r : l) {
    per.push_back(gen(r));
    width = std::min(width, per.back().size());
  }
  std::vector<ProductCode> out;
  for (std::size_t i = 0; i < width; ++i) {
    std::vector<Rect> v;
    for (const auto& rs : per)
      if (!rs[i].is_zero()) v.push_back(rs[i]);
    out.push_back(ProductCode(std::move(v)));
  }
  return out;
}

std::string show_rect(const Rect& r) { return "(" + r.x.str() + ", " + r.y.str() + ")"; }

}  // namespace

ProductCode make_rect(const IntervalCode& x, const IntervalCode& y) {
  std::vector<Rect> out;
  for (const auto& a : pieces_of(x))
    for (const auto& c : pieces_of(y)) out.push_back(Rect{a, c});
  return ProductCode(std::move(out));
}

AbstractBasis<Rect> rect_basis(const AbstractBasis<IntervalCode>& b1_in, const AbstractBasis<IntervalCode>& b2_in) {
  auto b1 = std::make_shared<const AbstractBasis<IntervalCode>>(b1_in);
  auto b2 = std::make_shared<const AbstractBasis<IntervalCode>>(b2_in);
  if (!b1->spatial() || !b2->spatial() || b1->dim != 1 || b2->dim != 1)
    throw std::invalid_argument("product basis needs two interval bases");
  AbstractBasis<Rect> b;
  b.name = "rect(" + b1->name + "," + b2->name + ")";
  b.algebra.zero = Rect{IntervalCode::zero(), IntervalCode::zero()};
  b.algebra.one = Rect{IntervalCode::whole(), IntervalCode::whole()};
  b.algebra.star = [b1, b2](const Rect& p, const Rect& q) {
    return normalized(Rect{b1->star(p.x, q.x), b2->star(p.y, q.y)});
  };
  b.waybelow = [b1, b2](const Rect& p, const Rect& q) {
    if (p.is_zero()) return true;
    if (q.is_zero()) return false;
    return b1->waybelow(p.x, q.x) && b2->waybelow(p.y, q.y);
  };
  b.cover_test = [b1, b2](const Rect& r, const FinSet<Rect>& l) {
    if (r.is_zero()) return true;
    auto k = rect_compact(b1, b2, r);
    if (!k) return false;
    std::vector<Box> opens;
    for (const auto& o : l) {
      auto bs = rect_open(b1, b2, o);
      opens.insert(opens.end(), bs.begin(), bs.end());
    }
    return boxes_subset({*k}, opens);
  };
  b.inhabited = [b1, b2](const Rect& r) { return b1->inhabited(r.x) && b2->inhabited(r.y); };
  b.show = show_rect;
  b.enlargements = [b1, b2](const Rect& r, int level) {
    return zip_rect(r, [&](const IntervalCode& c) { return b1->enlargements(c, level); },
                    [&](const IntervalCode& c) { return b2->enlargements(c, level); });
  };
  b.shrinkings = [b1, b2](const Rect& r, int level) {
    return zip_rect(r, [&](const IntervalCode& c) { return b1->shrinkings(c, level); },
                    [&](const IntervalCode& c) { return b2->shrinkings(c, level); });
  };
  b.sample = [b1, b2](std::mt19937_64& rng) {
    return normalized(Rect{first_piece(b1->sample(rng)), first_piece(b2->sample(rng))});
  };
  b.perturb = [b1, b2](const Rect& r, std::mt19937_64& rng) {
    return normalized(Rect{first_piece(b1->perturb(r.x, rng)), first_piece(b2->perturb(r.y, rng))});
  };
  b.waybelow_within_order = true;
  return b;
}

AbstractBasis<ProductCode> product_basis(const AbstractBasis<IntervalCode>& b1_in,
                                         const AbstractBasis<IntervalCode>& b2_in) {
  auto b1 = std::make_shared<const AbstractBasis<IntervalCode>>(b1_in);
  auto b2 = std::make_shared<const AbstractBasis<IntervalCode>>(b2_in);
  auto rects = std::make_shared<const AbstractBasis<Rect>>(rect_basis(b1_in, b2_in));
  AbstractBasis<ProductCode> b = or_closure(*rects);
  b.name = "product(" + b1->name + "," + b2->name + ")";
  b.dim = 2;
  b.show = [](const ProductCode& l) {
    if (l.empty()) return std::string("0");
    std::string out;
    for (const auto& r : l) out += (out.empty() ? "" : " + ") + show_rect(r);
    return out;
  };
  b.compact_boxes = [b1, b2](const ProductCode& l) -> std::optional<std::vector<Box>> {
    std::vector<Box> out;
    for (const auto& r : l) {
      auto k = rect_compact(b1, b2, r);
      if (!k) return std::nullopt;
      if (!k->empty()) out.push_back(*k);
    }
    return out;
  };
  b.open_boxes = [b1, b2](const ProductCode& l) {
    std::vector<Box> out;
    for (const auto& r : l) {
      auto bs = rect_open(b1, b2, r);
      out.insert(out.end(), bs.begin(), bs.end());
    }
    return out;
  };
  b.from_open_boxes = [b1, b2](const std::vector<Box>& boxes) {
    std::vector<Rect> out;
    for (const auto& box : boxes) {
      if (box.size() != 2) throw std::invalid_argument("product code from a non-2D box");
      auto x = b1->from_open_boxes({Box{box[0]}});
      auto y = b2->from_open_boxes({Box{box[1]}});
      for (const auto& r : make_rect(x, y)) out.push_back(r);
    }
    return ProductCode(std::move(out));
  };
  b.algebra.leq = [b1, b2](const ProductCode& p, const ProductCode& q) {
    std::vector<Box> op, oq, cp, cq;
    for (const auto& r : p) {
      auto bs = rect_open(b1, b2, r);
      op.insert(op.end(), bs.begin(), bs.end());
      cp.push_back(rect_closed(b1, b2, r));
    }
    for (const auto& r : q) {
      auto bs = rect_open(b1, b2, r);
      oq.insert(oq.end(), bs.begin(), bs.end());
      cq.push_back(rect_closed(b1, b2, r));
    }
    return boxes_subset(op, oq) && boxes_subset(cp, cq);
  };
  auto enl = [rects](const ProductCode& l, int level) {
    return zip_sets(l, [&](const Rect& r) { return rects->enlargements(r, level); });
  };
  auto shr = [rects](const ProductCode& l, int level) {
    return zip_sets(l, [&](const Rect& r) { return rects->shrinkings(r, level); });
  };
  b.enlargements = enl;
  b.shrinkings = shr;
  b.interpolants = [enl](const ProductCode& l, const ProductCode&, int level) { return enl(l, level); };
  b.wilker_pairs = [shr](const ProductCode&, const ProductCode& p, const ProductCode& q, int level) {
    auto ps = shr(p, level);
    auto qs = shr(q, level);
    std::vector<std::pair<ProductCode, ProductCode>> out;
    for (std::size_t i = 0; i < std::min(ps.size(), qs.size()); ++i) out.emplace_back(ps[i], qs[i]);
    return out;
  };
  return b;
}

ProductCode parse_product_code(std::string_view text) {
  auto skip = [&](std::size_t& i) {
    while (i < text.size() && text[i] == ' ') ++i;
  };
  std::size_t i = 0;
  skip(i);
  if (text.substr(i) == "0") return ProductCode{};
  std::vector<Rect> out;
  while (true) {
    skip(i);
    if (i >= text.size() || text[i] != '(') throw ParseError("expected '(' in product code", i);
    std::size_t comma = text.find(',', i);
    std::size_t close = text.find(')', i);
    if (comma == std::string_view::npos || close == std::string_view::npos || close < comma)
      throw ParseError("malformed rectangle", i);
    auto x = parse_interval_code(text.substr(i + 1, comma - i - 1));
    auto y = parse_interval_code(text.substr(comma + 1, close - comma - 1));
    for (const auto& r : make_rect(x, y)) out.push_back(r);
    i = close + 1;
    skip(i);
    if (i >= text.size()) break;
    if (text[i] != '+') throw ParseError("expected '+' between rectangles", i);
    ++i;
  }
  return ProductCode(std::move(out));
}

Matrix<IntervalCode, ProductCode> pair_matrix(const Matrix<IntervalCode, IntervalCode>& rho,
                                              const Matrix<IntervalCode, IntervalCode>& sigma,
                                              std::shared_ptr<const AbstractBasis<ProductCode>> product) {
  if (rho.source->name != sigma.source->name) throw std::invalid_argument("pair: sources differ");
  const std::string name = "<" + rho.name + "," + sigma.name + ">";
  if (rho.function && sigma.function) {
    auto out = function_matrix<IntervalCode, ProductCode>(name, rho.source, product,
                                                          pair_functions(rho.function, sigma.function));
    out.bound = rho.bound;
    return out;
  }
  Matrix<IntervalCode, ProductCode> r;
  r.name = name;
  r.source = rho.source;
  r.target = product;
  r.bound = rho.bound;
  r.rel = [rho, sigma](const IntervalCode& n, const ProductCode& l) {
    if (l.empty()) return from_bool(rho.source->waybelow(n, rho.source->zero()));
    Verdict acc = Verdict::no;
    for (const auto& rect : l) acc = acc || (rho(n, rect.x) && sigma(n, rect.y));
    if (acc == Verdict::no && l.size() > 1) return Verdict::unknown;
    return acc;
  };
  r.forward = [rho, sigma](const IntervalCode& n, int level) {
    auto xs = rho.forward(n, level);
    auto ys = sigma.forward(n, level);
    std::vector<ProductCode> out;
    for (std::size_t i = 0; i < std::min(xs.size(), ys.size()); ++i) out.push_back(make_rect(xs[i], ys[i]));
    return out;
  };
  return r;
}

}  // namespace asd
