#include "asd/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace asd {

RuleTally& AxiomReport::slot(std::string_view rule) {
  for (auto& r : rules_)
    if (r.rule == rule) return r;
  rules_.push_back(RuleTally{std::string(rule)});
  return rules_.back();
}

void AxiomReport::declare(std::string_view rule) { slot(rule); }

void AxiomReport::pass(std::string_view rule) { ++slot(rule).checked; }

void AxiomReport::add_example(std::string_view rule, std::string kind,
                              std::vector<std::string> codes) {
  std::size_t seen = std::count_if(examples_.begin(), examples_.end(),
                                   [&](const Counterexample& c) { return c.rule == rule; });
  if (seen < kMaxExamplesPerRule)
    examples_.push_back(Counterexample{std::string(rule), std::move(kind), std::move(codes)});
}

void AxiomReport::refute(std::string_view rule, std::vector<std::string> codes) {
  auto& r = slot(rule);
  ++r.checked;
  ++r.refuted;
  add_example(rule, "refuted", std::move(codes));
}

void AxiomReport::unwitnessed(std::string_view rule, std::vector<std::string> codes) {
  auto& r = slot(rule);
  ++r.checked;
  ++r.unwitnessed;
  add_example(rule, "unwitnessed", std::move(codes));
}

void AxiomReport::record(std::string_view rule, bool holds, std::vector<std::string> codes) {
  if (holds)
    pass(rule);
  else
    refute(rule, std::move(codes));
}

void AxiomReport::merge(const AxiomReport& other) {
  for (const auto& r : other.rules_) {
    auto& mine = slot(r.rule);
    mine.checked += r.checked;
    mine.refuted += r.refuted;
    mine.unwitnessed += r.unwitnessed;
  }
  for (const auto& c : other.examples_) add_example(c.rule, c.kind, c.codes);
}

const RuleTally& AxiomReport::tally(std::string_view rule) const {
  for (const auto& r : rules_)
    if (r.rule == rule) return r;
  throw std::out_of_range("no such rule in report: " + std::string(rule));
}

bool AxiomReport::passed() const {
  return std::all_of(rules_.begin(), rules_.end(), [](const RuleTally& r) { return r.passed(); });
}

bool AxiomReport::has_refutation() const {
  return std::any_of(rules_.begin(), rules_.end(), [](const RuleTally& r) { return r.refuted > 0; });
}

std::string AxiomReport::summary() const {
  std::ostringstream out;
  if (!subject_.empty()) out << subject_ << "\n";
  for (const auto& r : rules_) {
    out << "  " << r.rule << ": " << (r.passed() ? "pass" : "FAIL") << " (checked " << r.checked;
    if (r.refuted) out << ", refuted " << r.refuted;
    if (r.unwitnessed) out << ", unwitnessed " << r.unwitnessed;
    out << ")\n";
  }
  for (const auto& c : examples_) {
    out << "  counterexample [" << c.rule << ", " << c.kind << "]:";
    for (const auto& s : c.codes) out << " " << s;
    out << "\n";
  }
  return out.str();
}

}  // namespace asd
