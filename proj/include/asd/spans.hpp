#pragma once

#include <optional>
#include <string>
#include <vector>

#include "asd/rational.hpp"

namespace asd {

// A connected subset of the line; missing bounds are infinite.
struct Span {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  bool lo_closed = false;
  bool hi_closed = false;

  static Span open(const Rational& a, const Rational& b) { return {a, b, false, false}; }
  static Span closed(const Rational& a, const Rational& b) { return {a, b, true, true}; }
  static Span point(const Rational& a) { return {a, a, true, true}; }
  static Span line() { return {std::nullopt, std::nullopt, false, false}; }

  bool empty() const;
  bool bounded() const { return lo && hi; }
  bool contains(const Rational& x) const;
  bool contains(const Span& s) const;
  Span intersect(const Span& s) const;
  std::string str() const;
};

// Finite union of spans, normalized to sorted disjoint non-touching pieces.
std::vector<Span> normalize_spans(std::vector<Span> spans);
bool spans_subset(const std::vector<Span>& a, const std::vector<Span>& b);
bool spans_contain(const std::vector<Span>& a, const Rational& x);

// Axis-aligned product of spans, one per dimension.
using Box = std::vector<Span>;

bool box_empty(const Box& b);
bool box_contains(const Box& b, const std::vector<Rational>& x);
bool boxes_contain(const std::vector<Box>& bs, const std::vector<Rational>& x);
// Union of a ⊆ union of b; all boxes share one dimension (1 or 2).
bool boxes_subset(const std::vector<Box>& a, const std::vector<Box>& b);

}  // namespace asd
