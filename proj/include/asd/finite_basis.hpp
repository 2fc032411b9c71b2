#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "asd/code_algebra.hpp"
#include "asd/report.hpp"

namespace asd {

// A basis on a finite carrier given by tables: operations, ≪ and ⊑.
struct FiniteBasis {
  std::string name;
  FiniteAlgebra algebra;
  std::vector<char> wb;     // wb[n * size + m] ⟺ n ≪ m
  std::vector<char> order;  // order[n * size + m] ⟺ n ⊑ m

  int size() const { return algebra.size(); }
  bool waybelow(int n, int m) const { return wb[static_cast<std::size_t>(n) * size() + m] != 0; }
  bool leq(int n, int m) const { return order[static_cast<std::size_t>(n) * size() + m] != 0; }
  const std::string& code_name(int n) const { return algebra.names[n]; }
  int zero() const { return algebra.zero; }
  int one() const { return algebra.one; }
  int plus(int a, int b) const { return algebra.plus(a, b); }
  int star(int a, int b) const { return algebra.star(a, b); }

  // Uses the rule-closure order as ⊑.
  static FiniteBasis with_imposed_order(std::string name, FiniteAlgebra alg, std::vector<char> wb);
  // ≪ := ⊑ (rule closure).
  static FiniteBasis order_as_waybelow(std::string name, FiniteAlgebra alg);
};

// Fixed-size-at-runtime bitset over carrier indices.
class Bits {
 public:
  explicit Bits(std::size_t n = 0) : n_(n), words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  bool subset_of(const Bits& o) const;
  bool intersects(const Bits& o) const;
  bool intersects3(const Bits& a, const Bits& b) const;
  int first_not_in(const Bits& o) const;
  int first_common(const Bits& a, const Bits& b) const;
  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  std::vector<std::uint64_t> words_;
};

struct FiniteRelations {
  std::vector<Bits> down;        // down[m] = {k : k ≪ m}
  std::vector<Bits> up;          // up[n] = {k : n ≪ k}
  std::vector<Bits> order_down;  // order_down[m] = {k : k ⊑ m}
  explicit FiniteRelations(const FiniteBasis& b);
};

// Exhaustive check of the basis rules; existential failures are refutations here.
AxiomReport check_axioms(const FiniteBasis& b);

}  // namespace asd
