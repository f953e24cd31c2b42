#pragma once

#include <cstddef>
#include <vector>

#include "subshift/matrix.hpp"
#include "subshift/words.hpp"

namespace subshift {

/// M_sigma: entry (a, b) is the number of occurrences of b in sigma(a).
IntMatrix incidence_matrix(const Substitution& sigma);

/// The chain A_1 < A_2 < ... < A_n of sigma-closed sub-alphabets whose
/// diagonal blocks are primitive. Levels are 1-based in the accessors.
struct ComponentChain {
  Alphabet alphabet;                 // the full alphabet A
  std::vector<Alphabet> levels;      // levels[i-1] = A_i
  std::vector<Alphabet> new_letters; // new_letters[i-1] = A_i \ A_{i-1}
  std::vector<int> level_index;      // by letter index in A: its level
  std::vector<IntMatrix> blocks;     // blocks[i-1] = Q_i
  unsigned witness_k = 1;

  std::size_t size() const noexcept { return levels.size(); }
  const Alphabet& level(std::size_t i) const { return levels.at(i - 1); }
  const Alphabet& fresh(std::size_t i) const { return new_letters.at(i - 1); }
  const IntMatrix& block(std::size_t i) const { return blocks.at(i - 1); }
  int level_of(char c) const { return level_index[alphabet.index(c)]; }

  /// The chain of sigma_i (the first i levels).
  ComponentChain truncated(std::size_t i) const;
};

/// Throws NotSomePrimitiveComponents with a diagnostic when no chain exists.
ComponentChain component_chain(const Substitution& sigma);

/// sigma_i: the restriction of sigma to A_i.
Substitution sub_substitution(const Substitution& sigma,
                              const ComponentChain& chain, std::size_t i);

/// The block R_{i,j} of M_sigma: rows A_i \ A_{i-1}, columns A_j \ A_{j-1}.
IntMatrix off_diagonal_block(const Substitution& sigma,
                             const ComponentChain& chain, std::size_t i,
                             std::size_t j);

/// X_{sigma_1} is empty: A_1 = {s} and sigma(s) = s.
bool is_empty_bottom(const Substitution& sigma, const ComponentChain& chain);

/// Boolean support of a square matrix raised to the k-th power.
std::vector<std::vector<bool>> support_power(const IntMatrix& m, unsigned k);

}  // namespace subshift
