#include <doctest.h>

#include <cmath>

#include "corpus.hpp"
#include "subshift/auxiliary.hpp"
#include "subshift/errors.hpp"
#include "subshift/spectral.hpp"

using namespace subshift;

namespace {

struct Setup {
  Substitution sigma;
  ComponentChain chain;
  SpectralProfile spectral;
  explicit Setup(Substitution s)
      : sigma(std::move(s)), chain(component_chain(sigma)), spectral(chain) {}
};

// x = c * want for one c > 0, with the same zero pattern.
void check_proportional(const std::vector<double>& got, const std::vector<double>& want) {
  REQUIRE(got.size() == want.size());
  double c = 0;
  for (std::size_t k = 0; k < got.size(); ++k)
    if (want[k] != 0) {
      c = got[k] / want[k];
      break;
    }
  REQUIRE(c > 0);
  for (std::size_t k = 0; k < got.size(); ++k) {
    CHECK((got[k] == 0) == (want[k] == 0));
    CHECK(std::abs(got[k] - c * want[k]) <= 1e-9 * std::abs(c * want[k]));
  }
}

// Dominant right and left vectors by power iteration on the full matrix.
std::pair<std::vector<double>, std::vector<double>> power_iteration(const IntMatrix& m) {
  auto M = m.cast<double>();
  std::vector<double> r(M.rows(), 1.0), l(M.rows(), 1.0);
  for (int it = 0; it < 400; ++it) {
    r = M * r;
    l = l * M;
    double sr = 0, sl = 0;
    for (double x : r) sr = std::max(sr, x);
    for (double x : l) sl = std::max(sl, x);
    for (double& x : r) x /= sr;
    for (double& x : l) x /= sl;
  }
  return {r, l};
}

}  // namespace

TEST_SUITE("spectral") {
  TEST_CASE("block eigenvalues") {
    Setup a(corpus::ex44i()), b(corpus::ex44ii()), c(corpus::ex532());
    std::vector<double> ta, tb, tc;
    for (std::size_t i = 1; i <= 3; ++i) {
      ta.push_back(a.spectral.theta(i).value());
      tb.push_back(b.spectral.theta(i).value());
      tc.push_back(c.spectral.theta(i).value());
    }
    CHECK(ta == std::vector<double>{4, 3, 2});
    CHECK(tb == std::vector<double>{2, 6, 2});
    CHECK(std::abs(tc[0] - (1 + std::sqrt(5.0)) / 2) < 1e-12);
    CHECK(tc[1] == 2);
    CHECK(tc[2] == 2);
    CHECK(c.spectral.char_poly(1).str() == "x^2 - x - 1");
    CHECK(b.spectral.char_poly(2).str() == "x^2 - 8x + 12");
  }

  TEST_CASE("exact equality classes") {
    Setup b(corpus::ex44ii()), c(corpus::ex532()), a(corpus::ex44i());
    using Classes = std::vector<std::vector<std::size_t>>;
    CHECK(b.spectral.equality_classes() == Classes{{1, 3}, {2}});
    CHECK(c.spectral.equality_classes() == Classes{{1}, {2, 3}});
    CHECK(a.spectral.equality_classes() == Classes{{1}, {2}, {3}});
    CHECK(c.spectral.compare(2, 3) == 0);
    CHECK(c.spectral.compare(1, 2) < 0);
  }

  TEST_CASE("lambda, dominant levels and convergence") {
    Setup a(corpus::ex44i()), b(corpus::ex44ii()), c(corpus::ex532()), ch(corpus::chacon());
    CHECK(a.spectral.i_min() == 1);
    CHECK(a.spectral.i_max() == 1);
    CHECK(b.spectral.i_min() == 2);
    CHECK(c.spectral.i_min() == 2);
    CHECK(c.spectral.i_max() == 3);
    CHECK(a.spectral.convergent(1));
    CHECK_FALSE(a.spectral.convergent(2));
    CHECK(a.spectral.i_prime(2) == 2);
    CHECK(a.spectral.i_prime(3) == 3);
    CHECK(b.spectral.i_prime(3) == 3);
    CHECK(c.spectral.convergent(2));
    CHECK_FALSE(c.spectral.convergent(3));
    CHECK(ch.spectral.theta_is_one(1));
    CHECK(ch.spectral.convergent(2));
    CHECK(ch.spectral.lambda().value() == 3);
  }

  TEST_CASE("Perron-Frobenius vectors of the block examples") {
    Setup a(corpus::ex44i()), b(corpus::ex44ii());
    auto a1 = pf_vectors(a.sigma, a.chain, a.spectral, 1);
    check_proportional(a1.alpha, {2, 2, 1});
    check_proportional(a1.beta, {1, 0, 0});
    auto a2 = pf_vectors(a.sigma, a.chain, a.spectral, 2);
    check_proportional(a2.alpha, {2, 2, 2, 2, 2, 1, 1});
    check_proportional(a2.beta, {1, 0, 0, 0, 0, 0, 0});
    auto b1 = pf_vectors(b.sigma, b.chain, b.spectral, 1);
    check_proportional(b1.alpha, {0, 2, 2, 1});
    check_proportional(b1.beta, {1, 1, 3, 0});
    auto b2 = pf_vectors(b.sigma, b.chain, b.spectral, 2);
    check_proportional(b2.alpha, {0, 0, 2, 2, 2, 2, 2, 1, 1});
    check_proportional(b2.beta, {1, 2, 1, 2, 2, 7, 0, 0, 0});
    CHECK(b2.alpha_exact.has_value());
  }

  TEST_CASE("PF vectors agree with power iteration") {
    for (auto s : {corpus::ex44i(), corpus::ex44ii(), corpus::chacon(), corpus::fib_acc()}) {
      Setup x(s);
      for (std::size_t m = 1; m <= 3; ++m) {
        auto e = pf_vectors(x.sigma, x.chain, x.spectral, m);
        auto [r, l] = power_iteration(AuxiliarySubstitution(x.sigma, x.chain, m).matrix());
        double cr = 0, cl = 0;
        for (std::size_t k = 0; k < r.size(); ++k) {
          cr = std::max(cr, e.alpha[k]);
          cl = std::max(cl, e.beta[k]);
        }
        for (std::size_t k = 0; k < r.size(); ++k) {
          CHECK(e.alpha[k] / cr == doctest::Approx(r[k]).epsilon(1e-6));
          CHECK(e.beta[k] / cl == doctest::Approx(l[k]).epsilon(1e-6));
        }
      }
    }
  }

  TEST_CASE("no PF pair when every block has eigenvalue one") {
    Setup x(Substitution{{'a', "a"}, {'b', "ab"}});
    CHECK_THROWS_AS(pf_vectors(x.sigma, x.chain, x.spectral, 1), LambdaNotDominant);
    CHECK_THROWS_AS(limit_data(x.sigma, x.chain, x.spectral, 1, 2), ThetaNotAboveOne);
  }

  TEST_CASE("scaled powers converge to the limit data") {
    auto run = [](const Substitution& s, std::size_t i, std::size_t m, unsigned k, double tol) {
      Setup x(s);
      LimitData ld = limit_data(x.sigma, x.chain, x.spectral, m, i);
      auto sub = sub_substitution(x.sigma, x.chain, i);
      auto M = AuxiliarySubstitution(sub, x.chain.truncated(i), m).matrix().cast<double>();
      DenseMatrix<double> P = DenseMatrix<double>::identity(M.rows());
      for (unsigned j = 0; j < k; ++j) {
        P = P * M;
        for (std::size_t r = 0; r < P.rows(); ++r)
          for (std::size_t c = 0; c < P.cols(); ++c) P(r, c) /= ld.theta;
      }
      for (std::size_t u = ld.restricted.begin; u < ld.restricted.end; ++u)
        for (std::size_t v = ld.restricted.begin; v < ld.restricted.end; ++v) {
          double want = ld.right[u] * ld.left[v];
          CHECK_MESSAGE(std::abs(P(u, v) - want) <= tol * std::max(1.0, want),
                        "level ", i, " m=", m, " ", ld.coords[u], "->", ld.coords[v]);
        }
    };
    for (std::size_t i = 1; i <= 3; ++i)
      for (std::size_t m = 1; m <= 2; ++m) run(corpus::ex44i(), i, m, 40, 1e-6);
    for (std::size_t m = 1; m <= 2; ++m) {
      run(corpus::ex532(), 2, m, 200, 1e-9);
      run(corpus::ex532(), 3, m, 60, 1e-9);
      run(corpus::ex44ii(), 2, m, 40, 1e-9);
    }
  }

  TEST_CASE("divergent limits are infinite on the lower language") {
    Setup a(corpus::ex44i());
    LimitData ld = limit_data(a.sigma, a.chain, a.spectral, 2, 3);
    CHECK(ld.mode == LimitMode::divergent);
    CHECK(ld.i_prime == 3);
    for (std::size_t k = 0; k < ld.coords.size(); ++k) {
      bool lower = ld.coords[k].find('c') == Word::npos;
      CHECK(ld.infinite[k] == lower);
    }
  }
}
