#pragma once

#include <span>
#include <vector>

#include "cellcrystal/cartan.hpp"
#include "cellcrystal/cellular.hpp"

namespace cellcrystal {

/// The n vectors h_1, ..., h_n spanning the shift lattice ℋ_i of a reduced
/// longest word.
struct HBasis {
  Word word;
  std::vector<CellElem> vectors;

  int rank() const { return static_cast<int>(vectors.size()); }
  /// h_i for 1-based i.
  const CellElem& h(int i) const { return vectors.at(static_cast<std::size_t>(i - 1)); }
  /// Σ c_i h_i.
  CellElem combine(std::span<const std::int64_t> c) const;
};

/// (⟨h_{i_k}, s_{i_{k+1}} ··· s_{i_N} λ⟩)_{k=1..N}. For dominant λ these are
/// the exponents of the f̃-string producing h_λ from 0.
CellElem h_exponents(const Word& word, const Weight& lambda);

/// Throws DomainError unless the crystal's word is a reduced word for w_0.
HBasis h_basis(const CellCrystal& crystal);

/// h_λ = Σ_i ⟨h_i, λ⟩ h_i.
CellElem h_of_weight(const HBasis& basis, const Weight& lambda);
CellElem h_of_weight(const CellCrystal& crystal, const Weight& lambda);

/// x ∈ ℋ_i: every β_k with a successor vanishes.
bool in_h(const CellCrystal& crystal, const CellElem& x);

}  // namespace cellcrystal
