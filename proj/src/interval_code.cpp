#include "asd/interval_code.hpp"

#include <algorithm>
#include <stdexcept>

namespace asd {

IntervalCode IntervalCode::whole() {
  IntervalCode c;
  c.whole_ = true;
  return c;
}

IntervalCode IntervalCode::ball(const Rational& center, const Rational& radius) {
  if (radius <= 0) throw std::invalid_argument("interval radius must be positive");
  return from_components({Component{center - radius, center + radius}});
}

IntervalCode IntervalCode::span(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) return zero();
  return from_components({Component{lo, hi}});
}

IntervalCode IntervalCode::from_components(std::vector<Component> comps) {
  comps.erase(std::remove_if(comps.begin(), comps.end(), [](const Component& c) { return !(c.lo < c.hi); }),
              comps.end());
  std::sort(comps.begin(), comps.end());
  IntervalCode out;
  for (const auto& c : comps) {
    if (!out.comps_.empty() && c.lo < out.comps_.back().hi) {
      if (c.hi > out.comps_.back().hi) out.comps_.back().hi = c.hi;
    } else {
      out.comps_.push_back(c);
    }
  }
  return out;
}

std::string IntervalCode::str() const {
  if (whole_) return "1";
  if (comps_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (i) out += " + ";
    out += "<" + to_string(comps_[i].center()) + "±" + to_string(comps_[i].radius()) + ">";
  }
  return out;
}

IntervalCode parse_interval_code(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  std::string_view t = trim(text);
  if (t == "0") return IntervalCode::zero();
  if (t == "1") return IntervalCode::whole();
  std::vector<Component> comps;
  std::size_t pos = 0;
  const std::size_t base = static_cast<std::size_t>(t.data() - text.data());
  while (pos < t.size()) {
    if (t[pos] == ' ') {
      ++pos;
      continue;
    }
    if (!comps.empty()) {
      if (t[pos] != '+') throw ParseError("expected '+' between components", base + pos);
      ++pos;
      while (pos < t.size() && t[pos] == ' ') ++pos;
    }
    if (pos >= t.size() || t[pos] != '<') throw ParseError("expected '<'", base + pos);
    std::size_t close = t.find('>', pos);
    if (close == std::string_view::npos) throw ParseError("missing '>'", base + t.size());
    std::string_view body = t.substr(pos + 1, close - pos - 1);
    std::size_t sep = body.find("±");
    std::size_t sep_len = 2;
    if (sep == std::string_view::npos) {
      sep = body.find("+-");
      sep_len = 2;
    }
    if (sep == std::string_view::npos) throw ParseError("expected '±' in interval", base + pos + 1);
    Rational q = parse_rational(trim(body.substr(0, sep)));
    Rational d = parse_rational(trim(body.substr(sep + sep_len)));
    if (d <= 0) throw ParseError("radius must be positive", base + pos);
    comps.push_back(Component{q - d, q + d});
    pos = close + 1;
  }
  if (comps.empty()) throw ParseError("empty interval code", base);
  return IntervalCode::from_components(std::move(comps));
}

}  // namespace asd
