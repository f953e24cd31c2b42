#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "subshift/matrix.hpp"
#include "subshift/rational.hpp"

namespace subshift {

/// Univariate polynomial with rational coefficients, lowest degree first and
/// no trailing zeros (the zero polynomial has no coefficients).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  static Polynomial x_minus(const Rational& r) { return Polynomial({-r, 1}); }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<Rational>& coefficients() const noexcept { return c_; }
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& x) const;
  double operator()(double x) const;
  /// Sign of the value at x: -1, 0 or 1.
  int sign_at(const Rational& x) const;

  Polynomial derivative() const;
  Polynomial monic() const;
  /// Scaled to coprime integer coefficients with positive leading term.
  std::vector<BigInt> integer_coefficients() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Quotient and remainder of Euclidean division.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a,
                                                  const Polynomial& b);
  /// Monic greatest common divisor (zero if both are zero).
  static Polynomial gcd(Polynomial a, Polynomial b);

  /// Human-readable form in the variable x, e.g. "x^2 - x - 1".
  std::string str() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Characteristic polynomial det(xI - A) of a square integer matrix.
Polynomial characteristic_polynomial(const IntMatrix& a);

/// The product of the distinct irreducible factors of p, made monic.
Polynomial square_free_part(const Polynomial& p);

/// Sturm sequence of a square-free polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& p);
  /// Number of distinct real roots in the half-open interval (lo, hi].
  int count_roots(const Rational& lo, const Rational& hi) const;

 private:
  int sign_changes(const Rational& x) const;
  std::vector<Polynomial> seq_;
};

/// A real algebraic number: the only root of a square-free polynomial in an
/// isolating interval (lo, hi].
class AlgebraicReal {
 public:
  AlgebraicReal() = default;
  /// Wraps the exact rational r.
  explicit AlgebraicReal(const Rational& r);
  /// The largest real root of p; `lo` must lie below that root and `hi`
  /// bound it above.
  static AlgebraicReal largest_root(const Polynomial& p, const Rational& lo,
                                    const Rational& hi);

  const Polynomial& polynomial() const noexcept { return poly_; }
  const Rational& lower() const noexcept { return lo_; }
  const Rational& upper() const noexcept { return hi_; }
  double value() const noexcept { return approx_; }

  /// Shrinks the isolating interval to width at most `width`.
  void refine(const Rational& width);

  /// The exact value when it is an integer.
  std::optional<BigInt> as_integer() const;

  /// Exact comparison.
  friend std::strong_ordering compare(const AlgebraicReal& a,
                                      const AlgebraicReal& b);
  friend bool operator==(const AlgebraicReal& a, const AlgebraicReal& b) {
    return compare(a, b) == 0;
  }
  friend std::strong_ordering operator<=>(const AlgebraicReal& a,
                                          const AlgebraicReal& b) {
    return compare(a, b);
  }

 private:
  void bisect();
  void update_approx();

  Polynomial poly_;  // square free, root of multiplicity one
  Rational lo_, hi_;
  double approx_ = 0;
};

std::strong_ordering compare(const AlgebraicReal& a, const AlgebraicReal& b);

}  // namespace subshift
