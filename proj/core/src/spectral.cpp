#include "subshift/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <type_traits>

#include "subshift/errors.hpp"

namespace subshift {

namespace {

// Positive Perron-Frobenius right vector of a primitive block for its
// dominant eigenvalue.
std::vector<Rational> pf_right(const DenseMatrix<Rational>& Q, const Rational& lambda) {
  DenseMatrix<Rational> A(Q.rows(), Q.cols());
  for (std::size_t i = 0; i < Q.rows(); ++i)
    for (std::size_t j = 0; j < Q.cols(); ++j)
      A(i, j) = (i == j ? lambda : Rational(0)) - Q(i, j);
  std::vector<Rational> x = kernel_vector(A);
  Rational s = std::accumulate(x.begin(), x.end(), Rational(0));
  if (s < 0)
    for (auto& v : x) v = -v;
  return x;
}

std::vector<double> pf_right(const DenseMatrix<double>& Q, double lambda) {
  const std::size_t n = Q.rows();
  // Inverse iteration with a shift just above the dominant eigenvalue.
  double shift = lambda + std::max(1e-10 * lambda, 1e-12);
  DenseMatrix<double> A(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A(i, j) = (i == j ? shift : 0.0) - Q(i, j);
  std::vector<double> x(n, 1.0);
  for (int it = 0; it < 6; ++it) {
    x = solve(A, x);
    double s = std::accumulate(x.begin(), x.end(), 0.0);
    for (auto& v : x) v /= s;
  }
  for (auto& v : x) v = std::abs(v);
  return x;
}

template <class T>
void scale_min_positive(std::vector<T>& x) {
  T lo(0);
  bool found = false;
  for (const T& v : x)
    if (v > T(0) && (!found || v < lo)) lo = v, found = true;
  if (!found) return;
  for (T& v : x) v /= lo;
}

// Right and left eigenvectors for `lambda` of the principal submatrix of M on
// [lo, hi). The right vector vanishes before `right_block`, is the PF vector
// of that diagonal block on it and is solved for after it; the left vector
// mirrors this around `left_block`.
template <class T>
std::pair<std::vector<T>, std::vector<T>> structured_pair(
    const DenseMatrix<T>& M, std::size_t lo, std::size_t hi, CoordRange right_block,
    CoordRange left_block, const T& lambda) {
  auto range = [](std::size_t a, std::size_t b) {
    std::vector<std::size_t> r(b - a);
    std::iota(r.begin(), r.end(), a);
    return r;
  };
  std::vector<T> right(M.rows(), T(0)), left(M.rows(), T(0));

  auto rq = range(right_block.begin, right_block.end);
  auto rv = pf_right(M.sub(rq, rq), lambda);
  for (std::size_t k = 0; k < rq.size(); ++k) right[rq[k]] = rv[k];
  auto tail = range(right_block.end, hi);
  if (!tail.empty()) {
    DenseMatrix<T> D = M.sub(tail, tail);
    for (std::size_t i = 0; i < tail.size(); ++i)
      for (std::size_t j = 0; j < tail.size(); ++j)
        D(i, j) = (i == j ? lambda : T(0)) - D(i, j);
    std::vector<T> rhs = M.sub(tail, rq) * rv;
    auto x = solve(D, rhs);
    for (std::size_t k = 0; k < tail.size(); ++k) right[tail[k]] = x[k];
  }

  auto lq = range(left_block.begin, left_block.end);
  auto lv = pf_right(M.sub(lq, lq).transposed(), lambda);
  for (std::size_t k = 0; k < lq.size(); ++k) left[lq[k]] = lv[k];
  auto head = range(lo, left_block.begin);
  if (!head.empty()) {
    DenseMatrix<T> D = M.sub(head, head).transposed();
    for (std::size_t i = 0; i < head.size(); ++i)
      for (std::size_t j = 0; j < head.size(); ++j)
        D(i, j) = (i == j ? lambda : T(0)) - D(i, j);
    std::vector<T> rhs = lv * M.sub(lq, head);
    auto x = solve(D, rhs);
    for (std::size_t k = 0; k < head.size(); ++k) left[head[k]] = x[k];
  }
  return {std::move(right), std::move(left)};
}

std::vector<double> to_doubles(const std::vector<Rational>& x) {
  std::vector<double> out;
  out.reserve(x.size());
  for (const auto& v : x) out.push_back(to_double(v));
  return out;
}

}  // namespace

SpectralProfile::SpectralProfile(const ComponentChain& chain) {
  const std::size_t n = chain.size();
  for (std::size_t i = 1; i <= n; ++i) {
    const IntMatrix& Q = chain.block(i);
    std::int64_t lo = INT64_MAX, hi = 0;
    for (std::size_t r = 0; r < Q.rows(); ++r) {
      std::int64_t s = 0;
      for (std::size_t c = 0; c < Q.cols(); ++c) s += Q(r, c);
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
    min_row_.push_back(lo);
    max_row_.push_back(hi);
    poly_.push_back(characteristic_polynomial(Q));
    theta_.push_back(
        AlgebraicReal::largest_root(poly_.back(), Rational(lo - 1), Rational(hi)));
  }
  const AlgebraicReal one(Rational(1));
  cmp_.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    one_.push_back(theta_[i] == one);
    for (std::size_t j = i + 1; j < n; ++j) {
      auto c = subshift::compare(theta_[i], theta_[j]);
      int v = c < 0 ? -1 : (c > 0 ? 1 : 0);
      cmp_[i][j] = v;
      cmp_[j][i] = -v;
    }
  }
  lambda_arg_.assign(n, 1);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t best = lambda_arg_[i - 1];
    lambda_arg_[i] = cmp_[i][best - 1] > 0 ? i + 1 : best;
  }
  eta_arg_.assign(n, n);
  for (std::size_t i = n - 1; i-- > 0;) {
    std::size_t best = eta_arg_[i + 1];
    eta_arg_[i] = cmp_[i][best - 1] > 0 ? i + 1 : best;
  }
  std::size_t top = lambda_arg_.back();
  i_min_ = n + 1;
  i_max_ = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (cmp_[i][top - 1] == 0) {
      i_min_ = std::min(i_min_, i + 1);
      i_max_ = std::max(i_max_, i + 1);
    }
}

bool SpectralProfile::convergent(std::size_t i) const {
  if (i == 1) return true;
  return compare(i, lambda_arg_.at(i - 2)) > 0;
}

std::size_t SpectralProfile::i_prime(std::size_t i) const {
  for (std::size_t j = i - 1; j >= 1; --j)
    if (compare(j, i) >= 0) return j + 1;
  return 1;
}

std::vector<std::vector<std::size_t>> SpectralProfile::equality_classes() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> used(levels(), false);
  for (std::size_t i = 1; i <= levels(); ++i) {
    if (used[i - 1]) continue;
    std::vector<std::size_t> cls;
    for (std::size_t j = i; j <= levels(); ++j)
      if (!used[j - 1] && compare(i, j) == 0) {
        cls.push_back(j);
        used[j - 1] = true;
      }
    out.push_back(std::move(cls));
  }
  return out;
}

EigenPair pf_vectors(const Substitution& sigma, const ComponentChain& chain,
                     const SpectralProfile& spectral, std::size_t m) {
  if (spectral.theta_is_one(spectral.i_max()))
    throw LambdaNotDominant("lambda = 1: no Perron-Frobenius pair exists");
  AuxiliarySubstitution aux(sigma, chain, m);
  IntMatrix M = aux.matrix();
  CoordRange rb = aux.q_block(spectral.i_max()), lb = aux.q_block(spectral.i_min());
  EigenPair out;
  out.m = m;
  out.coords = aux.words();
  out.eigenvalue = spectral.lambda().value();
  if (auto L = spectral.integral_lambda()) {
    auto [a, b] = structured_pair(M.cast<Rational>(), 0, M.rows(), rb, lb, Rational(*L));
    scale_min_positive(a);
    scale_min_positive(b);
    out.alpha = to_doubles(a);
    out.beta = to_doubles(b);
    out.alpha_exact = std::move(a);
    out.beta_exact = std::move(b);
  } else {
    auto [a, b] = structured_pair(M.cast<double>(), 0, M.rows(), rb, lb,
                                  spectral.lambda().value());
    scale_min_positive(a);
    scale_min_positive(b);
    out.alpha = std::move(a);
    out.beta = std::move(b);
  }
  return out;
}

LimitData limit_data(const Substitution& sigma, const ComponentChain& chain,
                     const SpectralProfile& spectral, std::size_t m,
                     std::size_t i) {
  if (i < 1 || i > chain.size()) throw ArgumentError("level out of range");
  if (spectral.theta_is_one(i))
    throw ThetaNotAboveOne("theta_" + std::to_string(i) + " = 1");
  Substitution sigma_i = sub_substitution(sigma, chain, i);
  ComponentChain chain_i = chain.truncated(i);
  AuxiliarySubstitution aux(sigma_i, chain_i, m);

  LimitData out;
  out.level = i;
  out.m = m;
  out.theta = spectral.theta(i).value();
  out.coords = aux.words();
  out.top = aux.q_block(i);
  if (spectral.convergent(i)) {
    out.mode = LimitMode::convergent;
    out.i_prime = 1;
    out.restricted = {0, aux.size()};
  } else {
    out.mode = LimitMode::divergent;
    out.i_prime = spectral.i_prime(i);
    out.restricted = {aux.language_range(out.i_prime - 1).end, aux.size()};
  }
  out.infinite.assign(aux.size(), false);
  for (std::size_t k = 0; k < out.restricted.begin; ++k) out.infinite[k] = true;

  IntMatrix M = aux.matrix();
  auto finish = [&](auto& right, auto& left) {
    scale_min_positive(right);
    using T = typename std::decay_t<decltype(right)>::value_type;
    T pairing(0);
    for (std::size_t k = 0; k < right.size(); ++k) pairing += left[k] * right[k];
    for (auto& v : left) v /= pairing;
  };
  if (auto t = spectral.theta(i).as_integer()) {
    auto [r, l] = structured_pair(M.cast<Rational>(), out.restricted.begin,
                                  out.restricted.end, out.top, out.top, Rational(*t));
    finish(r, l);
    out.right = to_doubles(r);
    out.left = to_doubles(l);
    out.right_exact = std::move(r);
    out.left_exact = std::move(l);
  } else {
    auto [r, l] = structured_pair(M.cast<double>(), out.restricted.begin,
                                  out.restricted.end, out.top, out.top, out.theta);
    finish(r, l);
    out.right = std::move(r);
    out.left = std::move(l);
  }
  return out;
}

}  // namespace subshift
