#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "subshift/spectral.hpp"
#include "subshift/structure.hpp"
#include "subshift/words.hpp"

namespace subshift {

enum class Orientation { forward, reverse };

/// a in A_{i-1}, b in A_i \ A_{i-1} with sigma^k(ab) = u a b v (forward) or
/// sigma^k(ba) = v b a u (reverse).
struct SeedPair {
  std::size_t level = 2;
  char a = 0, b = 0;
  unsigned k = 1;
  Word u, v;
  Orientation orientation = Orientation::forward;

  /// The word ab (forward) or ba (reverse).
  Word pair_word() const;
  /// The right-hand side uabv (forward) or vbau (reverse).
  Word expansion() const;
};

SeedPair find_seed_pair(const Substitution& sigma, const ComponentChain& chain,
                        std::size_t i);

/// The quasi-fixed point of the seed is positively recurrent, i.e. v uses a
/// letter of A_i \ A_{i-1}. Throws ArgumentError when v is empty.
bool positively_recurrent(const ComponentChain& chain, const SeedPair& seed);

enum class PointKind { fixed_letter_power, bilateral_limit, quasi_fixed };

/// Shape of a bilateral limit: lim L_j . R_j with
///   plain       sigma^{qj}(left) . sigma^{qj}(right)
///   left_fixed  s^j . sigma^{qj}(right)
///   right_fixed sigma^{qj}(left) . s^j
///   middle      sigma^{qj}(left) . s^p sigma^{qj}(right)
enum class BilateralForm { plain, left_fixed, right_fixed, middle };

/// Finite description of a point of X_sigma.
struct PointSeed {
  PointKind kind = PointKind::bilateral_limit;
  std::size_t level = 1;
  BilateralForm form = BilateralForm::plain;
  char left = 0, right = 0;  // letters iterated to the left / right
  char fixed = 0;            // s for s^infinity and the s-sided forms
  unsigned period = 1;       // q
  unsigned middle = 0;       // p of the middle form
  std::optional<SeedPair> pair;
  bool shift_periodic = false;
  bool primitive_type = false;
  /// y_{[-R, 0)} and y_{[0, R)} for the radius R used in deduplication.
  Word left_window, right_window;

  std::string notation() const;
};

enum class MinimalSetKind { bottom, second_level, fixed_letter };

struct MinimalSet {
  MinimalSetKind kind;
  char letter = 0;  // s for {s^infinity}
  std::string name() const;
};

struct Verdict {
  bool uniquely_ergodic = false;
  std::string clause;  // "i", "ii", "iii", or empty
};

struct LevelReport {
  std::size_t level = 1;
  std::string case_tag;
  bool x_nonempty = false;  // X_i is nonempty
  std::optional<SeedPair> seed;
  std::optional<PointSeed> quasi_fixed;
  std::optional<bool> positively_recurrent;
  std::vector<PointSeed> periodic;  // the x_ij, one per orbit
  std::size_t dedup_radius = 0;
};

struct Census {
  std::vector<MinimalSet> minimal_sets;
  bool s_infinity_in_x = false;
  Verdict verdict;
};

struct DecompositionReport {
  std::vector<LevelReport> levels;
  Census census;
};

/// s^p is a factor of L(tau) for every p, where tau(s) = s.
bool arbitrarily_long_powers(const Substitution& tau, char s);

LevelReport classify_level(const Substitution& sigma, const ComponentChain& chain,
                           const SpectralProfile& spectral, std::size_t i);

Census minimal_sets(const Substitution& sigma, const ComponentChain& chain,
                    const SpectralProfile& spectral);

DecompositionReport classify(const Substitution& sigma, const ComponentChain& chain,
                             const SpectralProfile& spectral);

}  // namespace subshift
