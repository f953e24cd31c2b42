#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subshift/classify.hpp"
#include "subshift/polynomial.hpp"
#include "subshift/rational.hpp"
#include "subshift/spectral.hpp"
#include "subshift/structure.hpp"
#include "subshift/words.hpp"

namespace subshift {

/// `empty` marks levels that carry no measure of their own: theta_i = 1 with
/// no periodic orbit seeds, including an empty bottom.
enum class MeasureType {
  finite_ergodic,
  infinite_radon,
  counting_atom_finite,
  counting_infinite,
  empty
};

std::string to_string(MeasureType t);

/// Counting measure on the orbit of one point seed.
struct OrbitAtom {
  std::string point;  // PointSeed::notation()
  bool finite = false;
};

struct MeasureDescriptor {
  std::size_t level = 1;
  MeasureType type = MeasureType::empty;
  char anchor = 0;  // b_i
  std::size_t i_prime = 1;
  std::vector<OrbitAtom> atoms;
};

MeasureDescriptor measure_type(const Substitution& sigma, const ComponentChain& chain,
                               const SpectralProfile& spectral, std::size_t i);

struct CylinderValue {
  Word word;
  bool infinite = false;
  double value = 0;
  std::optional<Rational> exact;
  /// theta_i, which generates the field the value lies in, when not exact.
  std::optional<AlgebraicReal> field;
  char anchor = 0;
};

/// mu_i([v]) for finite levels and nu_i([v]) (scaled by the anchor) for
/// infinite ones.
CylinderValue cylinder_measure(const Substitution& sigma, const ComponentChain& chain,
                               const SpectralProfile& spectral, std::size_t i,
                               const Word& v);

/// Every cylinder value of a level at window m, in auxiliary order.
std::vector<CylinderValue> cylinder_table(const Substitution& sigma,
                                          const ComponentChain& chain,
                                          const SpectralProfile& spectral,
                                          std::size_t i, std::size_t m);

struct EmpiricalFrequency {
  char anchor = 0;
  unsigned k = 0;            // sigma^k(b_i) was streamed
  std::uint64_t length = 0;  // L
  std::uint64_t count = 0;   // N(v, prefix)
  double ratio = 0;
  // theta_i^{-k} N(v, sigma^k(b_i)) at the largest k within the budget.
  std::optional<unsigned> scaled_k;
  std::optional<double> scaled;
  std::optional<Rational> scaled_exact;
};

inline constexpr std::uint64_t kDefaultExpansionBudget = 1'000'000'000'000'000ULL;

EmpiricalFrequency empirical_frequency(const Substitution& sigma,
                                       const ComponentChain& chain,
                                       const SpectralProfile& spectral, std::size_t i,
                                       const Word& v, std::uint64_t L,
                                       std::uint64_t budget = kDefaultExpansionBudget);

/// N(v, sigma^k(w)) without expanding sigma^k(w).
BigInt count_in_power(const Substitution& sigma, const Word& v, const Word& w,
                      unsigned k);

struct UniformityReport {
  double target = 0;               // measure of [v] relative to the return set
  std::vector<double> ratios;      // per offset j
  std::vector<double> deviations;  // |ratio - target|
  double max_deviation = 0;
};

/// Streams a one-sided point of the level (the right half of the quasi-fixed
/// point, or a fixed point at level 1), marks the returns k_0 < k_1 < ... to
/// the letters of A_i \ A_{i-1} and compares N(v, w_[k_j, k_{j+n}]) / n with
/// the exact relative measure of [v].
UniformityReport uniformity_check(const Substitution& sigma, const ComponentChain& chain,
                                  const SpectralProfile& spectral, std::size_t i,
                                  const Word& v, std::size_t n,
                                  const std::vector<std::size_t>& offsets,
                                  std::uint64_t budget = 100'000'000);

}  // namespace subshift
