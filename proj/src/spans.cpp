#include "asd/spans.hpp"

#include <algorithm>
#include <stdexcept>

namespace asd {

namespace {

// Lower bound of a is at or below the lower bound of b (as a constraint).
bool lower_le(const Span& a, const Span& b) {
  if (!a.lo) return true;
  if (!b.lo) return false;
  if (*a.lo != *b.lo) return *a.lo < *b.lo;
  return a.lo_closed || !b.lo_closed;
}

bool upper_ge(const Span& a, const Span& b) {
  if (!a.hi) return true;
  if (!b.hi) return false;
  if (*a.hi != *b.hi) return *a.hi > *b.hi;
  return a.hi_closed || !b.hi_closed;
}

// a sorted before b by lower bound, b starts at or before a's end (no gap).
bool joinable(const Span& a, const Span& b) {
  if (!a.hi || !b.lo) return true;
  if (*b.lo < *a.hi) return true;
  if (*b.lo == *a.hi) return a.hi_closed || b.lo_closed;
  return false;
}

}  // namespace

bool Span::empty() const {
  if (!lo || !hi) return false;
  if (*lo < *hi) return false;
  if (*lo == *hi) return !(lo_closed && hi_closed);
  return true;
}

bool Span::contains(const Rational& x) const {
  if (lo && (x < *lo || (x == *lo && !lo_closed))) return false;
  if (hi && (x > *hi || (x == *hi && !hi_closed))) return false;
  return true;
}

bool Span::contains(const Span& s) const {
  if (s.empty()) return true;
  return lower_le(*this, s) && upper_ge(*this, s);
}

Span Span::intersect(const Span& s) const {
  Span r;
  if (lower_le(*this, s)) {
    r.lo = s.lo;
    r.lo_closed = s.lo_closed;
  } else {
    r.lo = lo;
    r.lo_closed = lo_closed;
  }
  if (upper_ge(*this, s)) {
    r.hi = s.hi;
    r.hi_closed = s.hi_closed;
  } else {
    r.hi = hi;
    r.hi_closed = hi_closed;
  }
  return r;
}

std::string Span::str() const {
  std::string out = lo_closed ? "[" : "(";
  out += lo ? to_string(*lo) : "-inf";
  out += ", ";
  out += hi ? to_string(*hi) : "inf";
  out += hi_closed ? "]" : ")";
  return out;
}

std::vector<Span> normalize_spans(std::vector<Span> spans) {
  spans.erase(std::remove_if(spans.begin(), spans.end(), [](const Span& s) { return s.empty(); }),
              spans.end());
  std::sort(spans.begin(), spans.end(), [](const Span& a, const Span& b) {
    return lower_le(a, b) && !lower_le(b, a);
  });
  std::vector<Span> out;
  for (const auto& s : spans) {
    if (!out.empty() && joinable(out.back(), s)) {
      Span& t = out.back();
      if (!upper_ge(t, s)) {
        t.hi = s.hi;
        t.hi_closed = s.hi_closed;
      }
    } else {
      out.push_back(s);
    }
  }
  return out;
}

bool spans_subset(const std::vector<Span>& a, const std::vector<Span>& b) {
  std::vector<Span> nb = normalize_spans(b);
  for (const auto& s : a) {
    if (s.empty()) continue;
    bool inside = std::any_of(nb.begin(), nb.end(), [&](const Span& t) { return t.contains(s); });
    if (!inside) return false;
  }
  return true;
}

bool spans_contain(const std::vector<Span>& a, const Rational& x) {
  return std::any_of(a.begin(), a.end(), [&](const Span& s) { return s.contains(x); });
}

bool box_empty(const Box& b) {
  return std::any_of(b.begin(), b.end(), [](const Span& s) { return s.empty(); });
}

bool box_contains(const Box& b, const std::vector<Rational>& x) {
  if (b.size() != x.size()) throw std::invalid_argument("box_contains: dimension mismatch");
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!b[i].contains(x[i])) return false;
  return true;
}

bool boxes_contain(const std::vector<Box>& bs, const std::vector<Rational>& x) {
  return std::any_of(bs.begin(), bs.end(), [&](const Box& b) { return box_contains(b, x); });
}

bool boxes_subset(const std::vector<Box>& a, const std::vector<Box>& b) {
  std::vector<Box> na;
  for (const auto& box : a)
    if (!box_empty(box)) na.push_back(box);
  if (na.empty()) return true;
  const std::size_t dim = na.front().size();
  if (dim == 1) {
    std::vector<Span> sa, sb;
    for (const auto& box : na) sa.push_back(box[0]);
    for (const auto& box : b)
      if (!box_empty(box)) sb.push_back(box[0]);
    return spans_subset(sa, sb);
  }
  if (dim != 2) throw std::invalid_argument("boxes_subset: unsupported dimension");

  // Membership along x is constant on each cell between critical values.
  std::vector<Rational> cuts;
  auto add_cuts = [&](const std::vector<Box>& boxes) {
    for (const auto& box : boxes) {
      if (box[0].lo) cuts.push_back(*box[0].lo);
      if (box[0].hi) cuts.push_back(*box[0].hi);
    }
  };
  add_cuts(na);
  add_cuts(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<Rational> probes;
  if (cuts.empty()) {
    probes.push_back(0);
  } else {
    probes.push_back(cuts.front() - 1);
    for (std::size_t i = 0; i < cuts.size(); ++i) {
      probes.push_back(cuts[i]);
      if (i + 1 < cuts.size()) probes.push_back((cuts[i] + cuts[i + 1]) / 2);
    }
    probes.push_back(cuts.back() + 1);
  }
  for (const auto& x : probes) {
    std::vector<Span> sa, sb;
    for (const auto& box : na)
      if (box[0].contains(x)) sa.push_back(box[1]);
    if (sa.empty()) continue;
    for (const auto& box : b)
      if (!box_empty(box) && box[0].contains(x)) sb.push_back(box[1]);
    if (!spans_subset(sa, sb)) return false;
  }
  return true;
}

}  // namespace asd
