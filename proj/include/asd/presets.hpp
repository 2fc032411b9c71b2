#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "asd/abstract_basis.hpp"
#include "asd/finite_basis.hpp"

namespace asd {

// Codes: subsets of {0..k-1}; ≪ = ⊆, + = ∪, ⋆ = ∩.
AbstractBasis<FinSet<int>> discrete_basis(int k);
// Codes: formal DNFs over {0..k-1}; L ≪ R ⟺ upper_order(R, L). Carrier has 2^(2^k) codes, k ≤ 3.
AbstractBasis<FormalDNF<int>> sigma_basis(int k);

std::string show_set(const FinSet<int>& s);
std::string show_dnf(const FormalDNF<int>& l);
FinSet<int> parse_int_set(std::string_view text);
FormalDNF<int> parse_dnf(std::string_view text);

// Named finite bases: two-point, chain-K, diamond, free-dl-K, strict-chain-2,
// discrete-K, sigma-K.
FiniteBasis preset_basis(std::string_view name);
std::vector<std::string> preset_names();

// Free distributive lattice (with 0, 1) on k generators, ≪ := ⊑.
FiniteBasis free_dl_basis(int k);
FiniteBasis chain_basis(int k);
FiniteBasis diamond_basis();

// Basis file: carrier, zero, one, plus/star tables, waybelow pairs or rule name.
FiniteBasis load_finite_basis(std::string_view json_text);
FiniteBasis load_finite_basis_file(const std::string& path);

}  // namespace asd
