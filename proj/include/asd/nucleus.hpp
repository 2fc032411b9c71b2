#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "asd/finite_basis.hpp"
#include "asd/report.hpp"

namespace asd {

// ξ ⊆ carrier as a bit mask (carriers of at most 16 codes).
using SigmaNPoint = std::uint32_t;

// Φ: a set of SigmaNPoints, stored as a bitset over all 2^|N| subsets.
class SecondOrderPred {
 public:
  SecondOrderPred() = default;
  explicit SecondOrderPred(int carrier_size);
  static SecondOrderPred from(int carrier_size, const std::function<bool(SigmaNPoint)>& f);

  bool operator()(SigmaNPoint xi) const { return bits_[xi] != 0; }
  void set(SigmaNPoint xi, bool v = true) { bits_[xi] = v; }
  int carrier_size() const { return n_; }
  std::size_t points() const { return bits_.size(); }
  bool monotone() const;
  friend bool operator==(const SecondOrderPred& a, const SecondOrderPred& b) { return a.bits_ == b.bits_; }

 private:
  int n_ = 0;
  std::vector<char> bits_;
};

// monotone: Φ ranges over up-closed families. all: every family.
enum class PhiUniverse { monotone, all };

struct NucleusOptions {
  PhiUniverse universe = PhiUniverse::monotone;
  // Carriers up to this size are evaluated by literal enumeration of L and Φ.
  int literal_cap = 4;
  // Random (Φ, Ψ) pairs instead of all pairs (literal engine only).
  std::optional<std::size_t> sampled;
  std::uint64_t seed = 0;
};

class NucleusEngine {
 public:
  static constexpr int kLiteralMax = 4;
  static constexpr int kReducedMax = 16;

  explicit NucleusEngine(const FiniteBasis& b, int literal_cap = kLiteralMax);

  bool literal() const { return literal_; }
  int size() const { return n_; }
  bool apply_E(const SecondOrderPred& phi, SigmaNPoint xi) const;
  SecondOrderPred E(const SecondOrderPred& phi) const;
  bool is_admissible(SigmaNPoint xi, PhiUniverse u = PhiUniverse::monotone) const;
  bool recovered_waybelow(int n, int m) const;
  AxiomReport check_laws(const NucleusOptions& opt) const;
  std::string show_point(SigmaNPoint xi) const;

 private:
  // Codes n with n ≪ c, as a mask.
  std::uint32_t down(int c) const { return down_[c]; }
  std::uint32_t reach(const SecondOrderPred& phi) const;
  AxiomReport literal_laws(const NucleusOptions& opt) const;
  AxiomReport reduced_laws() const;
  std::string show_family(std::uint32_t family) const;

  const FiniteBasis* b_;
  int n_;
  bool literal_;
  std::vector<std::uint32_t> down_;
  // literal engine
  std::vector<std::uint32_t> reach_;  // reach_[S] = ∪_{L ⊆ S} down(ev L)
  // reduced engine
  std::vector<int> cls_;              // code -> class representative
  std::vector<int> meet_cls_;         // point -> class of its ⋆-fold
  std::vector<int> up_join_;          // ξ -> class of ev(↑ξ)
  std::vector<int> w_;                // code n -> class of ev({ℓ : n ∈ ℓ})
  int join_cls(int a, int b) const { return cls_[b_->plus(a, b)]; }
  int meet_cls(int a, int b) const { return cls_[b_->star(a, b)]; }
};

bool apply_E(const FiniteBasis& b, const SecondOrderPred& phi, SigmaNPoint xi);
AxiomReport check_nucleus_laws(const FiniteBasis& b, const NucleusOptions& opt = {});
bool is_admissible(const FiniteBasis& b, SigmaNPoint xi, PhiUniverse u = PhiUniverse::monotone);
bool recovered_waybelow(const FiniteBasis& b, int n, int m);

// ξ0=⊥, ξ1=⊤, ξ(n+m)=ξn∨ξm, ξ(n⋆m)=ξn∧ξm, ξn ⟺ ∃m. ξm ∧ m≪n.
bool is_rounded_lattice_hom(const FiniteBasis& b, SigmaNPoint xi);
// Rejects bases failing check_axioms (std::invalid_argument).
AxiomReport points_theorem_check(const FiniteBasis& b, int literal_cap = NucleusEngine::kLiteralMax);

}  // namespace asd
