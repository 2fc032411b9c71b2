#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace asd {

struct RuleTally {
  std::string rule;
  std::size_t checked = 0;
  std::size_t refuted = 0;
  std::size_t unwitnessed = 0;

  bool passed() const { return refuted == 0 && unwitnessed == 0; }
};

struct Counterexample {
  std::string rule;
  std::string kind;  // "refuted" or "unwitnessed"
  std::vector<std::string> codes;
};

// Per-rule tallies plus a capped list of counterexamples.
class AxiomReport {
 public:
  static constexpr std::size_t kMaxExamplesPerRule = 5;

  explicit AxiomReport(std::string subject = {}) : subject_(std::move(subject)) {}

  void declare(std::string_view rule);
  void pass(std::string_view rule);
  void refute(std::string_view rule, std::vector<std::string> codes);
  void unwitnessed(std::string_view rule, std::vector<std::string> codes);
  // Records one instance: holds → pass; otherwise refuted or unwitnessed.
  void record(std::string_view rule, bool holds, std::vector<std::string> codes);
  void merge(const AxiomReport& other);

  const RuleTally& tally(std::string_view rule) const;
  const std::vector<RuleTally>& tallies() const { return rules_; }
  const std::vector<Counterexample>& counterexamples() const { return examples_; }
  const std::string& subject() const { return subject_; }

  bool passed() const;
  bool has_refutation() const;
  bool rule_passed(std::string_view rule) const { return tally(rule).passed(); }
  std::string summary() const;

 private:
  RuleTally& slot(std::string_view rule);
  void add_example(std::string_view rule, std::string kind, std::vector<std::string> codes);

  std::string subject_;
  std::vector<RuleTally> rules_;
  std::vector<Counterexample> examples_;
};

}  // namespace asd
