#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "asd/rational.hpp"

namespace asd {

// Open rational interval (lo, hi), paired with its closure [lo, hi].
struct Component {
  Rational lo;
  Rational hi;

  Rational center() const { return (lo + hi) / 2; }
  Rational radius() const { return (hi - lo) / 2; }
  friend bool operator==(const Component& a, const Component& b) { return a.lo == b.lo && a.hi == b.hi; }
  friend bool operator<(const Component& a, const Component& b) {
    return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
  }
};

// 0, 1, or a finite union of components. Components whose open parts overlap
// are merged; touching components stay separate.
class IntervalCode {
 public:
  IntervalCode() = default;
  static IntervalCode zero() { return {}; }
  static IntervalCode whole();
  static IntervalCode ball(const Rational& center, const Rational& radius);
  static IntervalCode span(const Rational& lo, const Rational& hi);
  static IntervalCode from_components(std::vector<Component> comps);

  bool is_zero() const { return !whole_ && comps_.empty(); }
  bool is_whole() const { return whole_; }
  bool single() const { return !whole_ && comps_.size() == 1; }
  const std::vector<Component>& components() const { return comps_; }

  std::string str() const;

  friend bool operator==(const IntervalCode& a, const IntervalCode& b) {
    return a.whole_ == b.whole_ && a.comps_ == b.comps_;
  }
  friend bool operator!=(const IntervalCode& a, const IntervalCode& b) { return !(a == b); }
  friend bool operator<(const IntervalCode& a, const IntervalCode& b) {
    if (a.whole_ != b.whole_) return !a.whole_;
    return a.comps_ < b.comps_;
  }

 private:
  bool whole_ = false;
  std::vector<Component> comps_;
};

// "0", "1", "<q±d>" (or "<q+-d>"), and unions joined with " + ".
IntervalCode parse_interval_code(std::string_view text);

}  // namespace asd
