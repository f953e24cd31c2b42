#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "subshift/auxiliary.hpp"
#include "subshift/polynomial.hpp"
#include "subshift/structure.hpp"

namespace subshift {

/// Dominant eigenvalues theta_i of the diagonal blocks Q_i and the quantities
/// derived from them. Levels are 1-based; every comparison is exact.
class SpectralProfile {
 public:
  explicit SpectralProfile(const ComponentChain& chain);

  std::size_t levels() const noexcept { return theta_.size(); }
  const AlgebraicReal& theta(std::size_t i) const { return theta_.at(i - 1); }
  /// det(xI - Q_i).
  const Polynomial& char_poly(std::size_t i) const { return poly_.at(i - 1); }
  std::int64_t min_row_sum(std::size_t i) const { return min_row_.at(i - 1); }
  std::int64_t max_row_sum(std::size_t i) const { return max_row_.at(i - 1); }

  /// lambda_i = max_{j <= i} theta_j.
  const AlgebraicReal& lambda(std::size_t i) const {
    return theta(lambda_arg_.at(i - 1));
  }
  /// eta_i = max_{j >= i} theta_j.
  const AlgebraicReal& eta(std::size_t i) const {
    return theta(eta_arg_.at(i - 1));
  }
  const AlgebraicReal& lambda() const { return lambda(levels()); }
  std::size_t i_min() const noexcept { return i_min_; }
  std::size_t i_max() const noexcept { return i_max_; }

  /// -1, 0, 1 as theta_i <, =, > theta_j.
  int compare(std::size_t i, std::size_t j) const { return cmp_.at(i - 1).at(j - 1); }
  bool theta_is_one(std::size_t i) const { return one_.at(i - 1); }
  /// theta_i > lambda_{i-1} (always true at level 1).
  bool convergent(std::size_t i) const;
  /// min I with I = {i0 < i : theta_i1 < theta_i for i0 <= i1 < i}; i if I
  /// is empty.
  std::size_t i_prime(std::size_t i) const;
  /// Levels grouped by equal theta, each group ascending, groups ordered by
  /// their first level.
  std::vector<std::vector<std::size_t>> equality_classes() const;
  /// The value of lambda when it is an integer.
  std::optional<BigInt> integral_lambda() const { return lambda().as_integer(); }

 private:
  std::vector<AlgebraicReal> theta_;
  std::vector<Polynomial> poly_;
  std::vector<std::int64_t> min_row_, max_row_;
  std::vector<std::vector<int>> cmp_;
  std::vector<bool> one_;
  std::vector<std::size_t> lambda_arg_, eta_arg_;
  std::size_t i_min_ = 1, i_max_ = 1;
};

inline SpectralProfile block_eigenvalues(const ComponentChain& chain) {
  return SpectralProfile(chain);
}

/// Right (alpha) and left (beta) Perron-Frobenius vectors of M_{sigma^(m)}
/// for lambda, over the auxiliary coordinates. Smallest positive entry = 1.
struct EigenPair {
  std::size_t m = 1;
  std::vector<Word> coords;
  double eigenvalue = 0;
  std::vector<double> alpha, beta;
  std::optional<std::vector<Rational>> alpha_exact, beta_exact;
};

EigenPair pf_vectors(const Substitution& sigma, const ComponentChain& chain,
                     const SpectralProfile& spectral, std::size_t m);

enum class LimitMode { convergent, divergent };

/// Limit of theta_i^{-k} M_{sigma_i^(m)}^k on the coordinates L_m(sigma_i).
/// Convergent: right/left are the (alpha, beta) of sigma_i. Divergent: they
/// are (gamma, delta) of the matrix restricted to
/// L_m(sigma_i) \ L_m(sigma_{i'-1}) and every entry with v in
/// L_m(sigma_{i'-1}) is infinite. In both cases left . right = 1.
struct LimitData {
  std::size_t level = 1, m = 1, i_prime = 1;
  LimitMode mode = LimitMode::convergent;
  double theta = 0;
  std::vector<Word> coords;       // L_m(sigma_i) in auxiliary order
  CoordRange restricted;          // coordinates carrying the limit
  CoordRange top;                 // Q_m(i)
  std::vector<double> right, left;
  std::optional<std::vector<Rational>> right_exact, left_exact;
  std::vector<bool> infinite;

  bool exact() const noexcept { return right_exact.has_value(); }
};

LimitData limit_data(const Substitution& sigma, const ComponentChain& chain,
                     const SpectralProfile& spectral, std::size_t m,
                     std::size_t i);

}  // namespace subshift
