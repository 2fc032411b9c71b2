#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "asd/finset.hpp"

namespace asd {

template <class Code>
struct CodeAlgebra {
  Code zero;
  Code one;
  std::function<Code(const Code&, const Code&)> plus;
  std::function<Code(const Code&, const Code&)> star;
  // Semantic order test; empty for algebras decided by rule closure.
  std::function<bool(const Code&, const Code&)> leq;

  bool has_plus() const { return static_cast<bool>(plus); }
};

// +-fold of ⋆-folds in canonical order; ev ∅ = 0, ev {∅} = 1.
template <class Code>
Code ev(const CodeAlgebra<Code>& alg, const FormalDNF<Code>& l) {
  bool first_term = true;
  Code sum = alg.zero;
  for (const auto& product : l) {
    Code p = alg.one;
    bool first = true;
    for (const auto& c : product) {
      p = first ? c : alg.star(p, c);
      first = false;
    }
    sum = first_term ? p : alg.plus(sum, p);
    first_term = false;
  }
  return sum;
}

template <class Code>
bool imposed_leq(const CodeAlgebra<Code>& alg, const Code& n, const Code& m) {
  if (!alg.leq) throw std::invalid_argument("imposed_leq: no order test for this carrier");
  return alg.leq(n, m);
}

// Finitely presented algebra: codes are indices into `names`.
struct FiniteAlgebra {
  std::vector<std::string> names;
  int zero = 0;
  int one = 0;
  std::vector<int> plus_table;
  std::vector<int> star_table;

  int size() const { return static_cast<int>(names.size()); }
  int plus(int a, int b) const { return plus_table[a * size() + b]; }
  int star(int a, int b) const { return star_table[a * size() + b]; }
  int index_of(std::string_view name) const;
  CodeAlgebra<int> as_code_algebra() const;
  int ev(const FormalDNF<int>& l) const;

  // Builds a table algebra from total operations on an explicit carrier.
  template <class Code, class Show>
  static FiniteAlgebra tabulate(const std::vector<Code>& carrier, const CodeAlgebra<Code>& alg,
                                Show show);
};

// Least relation closed under the order rules, by fixpoint saturation.
class ImposedOrder {
 public:
  static ImposedOrder saturate(const FiniteAlgebra& alg);

  bool leq(int n, int m) const { return rel_[static_cast<std::size_t>(n) * size_ + m] != 0; }
  bool congruent(int n, int m) const { return leq(n, m) && leq(m, n); }
  int size() const { return static_cast<int>(size_); }
  const std::vector<char>& table() const { return rel_; }

 private:
  std::size_t size_ = 0;
  std::vector<char> rel_;
};

bool imposed_leq(const FiniteAlgebra& alg, int n, int m);

template <class Code, class Show>
FiniteAlgebra FiniteAlgebra::tabulate(const std::vector<Code>& carrier,
                                      const CodeAlgebra<Code>& alg, Show show) {
  FiniteAlgebra out;
  std::map<Code, int> positions;
  for (std::size_t i = 0; i < carrier.size(); ++i) positions.emplace(carrier[i], static_cast<int>(i));
  auto index = [&](const Code& c) {
    auto it = positions.find(c);
    if (it == positions.end())
      throw std::invalid_argument("tabulate: carrier not closed under the operations");
    return it->second;
  };
  const int n = static_cast<int>(carrier.size());
  for (const auto& c : carrier) out.names.push_back(show(c));
  out.zero = index(alg.zero);
  out.one = index(alg.one);
  out.plus_table.resize(static_cast<std::size_t>(n) * n);
  out.star_table.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      out.plus_table[a * n + b] = index(alg.plus(carrier[a], carrier[b]));
      out.star_table[a * n + b] = index(alg.star(carrier[a], carrier[b]));
    }
  return out;
}

}  // namespace asd
