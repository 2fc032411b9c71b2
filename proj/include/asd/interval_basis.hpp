#pragma once

#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "asd/abstract_basis.hpp"
#include "asd/interval_code.hpp"
#include "asd/spans.hpp"

namespace asd {

enum class Domain { real_line, unit_interval };

// Denotations of interval codes on ℝ or on [0,1] (clipped).
class IntervalGeometry {
 public:
  explicit IntervalGeometry(Domain d) : domain_(d) {}

  Domain domain() const { return domain_; }
  IntervalCode canonical(const IntervalCode& c) const;

  std::vector<Span> open_spans(const IntervalCode& c) const;
  // nullopt when the compact part is not compact (1 on ℝ).
  std::optional<std::vector<Span>> compact_spans(const IntervalCode& c) const;
  // Closure used by the semantic order: like compact_spans, with ℝ for 1.
  std::vector<Span> closed_spans(const IntervalCode& c) const;

  bool waybelow(const IntervalCode& n, const IntervalCode& m) const;
  bool leq(const IntervalCode& n, const IntervalCode& m) const;
  bool cover(const IntervalCode& n, const std::vector<IntervalCode>& opens) const;
  bool inhabited(const IntervalCode& n) const;
  IntervalCode plus(const IntervalCode& a, const IntervalCode& b) const;
  IntervalCode star(const IntervalCode& a, const IntervalCode& b) const;

  IntervalCode widen(const IntervalCode& n, const Rational& t) const;
  IntervalCode shrink(const IntervalCode& n, const Rational& t) const;

  std::vector<IntervalCode> interpolants(const IntervalCode& n, const IntervalCode& m, int level) const;
  std::vector<std::pair<IntervalCode, IntervalCode>> wilker_pairs(const IntervalCode& n,
                                                                  const IntervalCode& p,
                                                                  const IntervalCode& q,
                                                                  int level) const;
  std::vector<IntervalCode> enlargements(const IntervalCode& n, int level) const;
  std::vector<IntervalCode> shrinkings(const IntervalCode& m, int level) const;

  IntervalCode sample(std::mt19937_64& rng) const;
  IntervalCode perturb(const IntervalCode& c, std::mt19937_64& rng) const;
  IntervalCode from_open_boxes(const std::vector<Box>& boxes) const;

  // Largest t such that shrinking every open by less than t keeps K^n covered; 0 if not covered.
  Rational cover_margin(const IntervalCode& n, const std::vector<Component>& opens) const;

 private:
  bool clip() const { return domain_ == Domain::unit_interval; }
  Domain domain_;
};

AbstractBasis<IntervalCode> interval_basis(Domain d);
AbstractBasis<IntervalCode> real_line_basis();
AbstractBasis<IntervalCode> unit_interval_basis();

// Interval basis whose ≪ demands a fixed gap: [c-g, d+g] ⊆ (a, b). Not interpolative.
AbstractBasis<IntervalCode> margin_interval_basis(const Rational& gap);
// Interval basis with closed containment [c, d] ⊆ [a, b] in place of ≪.
AbstractBasis<IntervalCode> closed_containment_basis();

// max of lower endpoints < min of upper endpoints; single-interval codes only.
bool con_check(const FinSet<IntervalCode>& l);

}  // namespace asd
