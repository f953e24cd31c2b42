#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include "corpus.hpp"
#include "subshift/errors.hpp"
#include "subshift/measures.hpp"

using namespace subshift;

namespace {

struct Setup {
  Substitution sigma;
  ComponentChain chain;
  SpectralProfile spectral;
  explicit Setup(Substitution s)
      : sigma(std::move(s)), chain(component_chain(sigma)), spectral(chain) {}
  CylinderValue value(std::size_t i, const Word& v) const {
    return cylinder_measure(sigma, chain, spectral, i, v);
  }
  MeasureType type(std::size_t i) const { return measure_type(sigma, chain, spectral, i).type; }
};

void check_exact(const CylinderValue& c, const Rational& want) {
  REQUIRE_MESSAGE(c.exact.has_value(), c.word);
  CHECK_MESSAGE(*c.exact == want, c.word, " = ", to_string(*c.exact));
  CHECK_FALSE(c.infinite);
}

std::vector<Substitution> measured_corpus() {
  return {corpus::ex44i(), corpus::ex44ii(), corpus::ex532(), corpus::chacon(),
          corpus::ex36iii(), corpus::fib_acc(), corpus::ex39ii()};
}

}  // namespace

TEST_SUITE("measures") {
  TEST_CASE("measure types") {
    Setup a(corpus::ex44i()), b(corpus::ex532()), ch(corpus::chacon()), p(corpus::ex36ii()),
        q(corpus::ex36iii());
    CHECK(a.type(1) == MeasureType::finite_ergodic);
    CHECK(a.type(2) == MeasureType::infinite_radon);
    CHECK(a.type(3) == MeasureType::infinite_radon);
    CHECK(b.type(1) == MeasureType::finite_ergodic);
    CHECK(b.type(2) == MeasureType::finite_ergodic);
    CHECK(b.type(3) == MeasureType::infinite_radon);
    CHECK(ch.type(1) == MeasureType::empty);
    CHECK(ch.type(2) == MeasureType::finite_ergodic);
    CHECK(p.type(2) == MeasureType::counting_infinite);
    auto q2 = measure_type(q.sigma, q.chain, q.spectral, 2);
    CHECK(q2.type == MeasureType::finite_ergodic);
    REQUIRE(q2.atoms.size() == 1);
    CHECK(q2.atoms[0].finite);
    CHECK(measure_type(a.sigma, a.chain, a.spectral, 3).anchor == 'c');
    CHECK(measure_type(a.sigma, a.chain, a.spectral, 3).i_prime == 3);
  }

  TEST_CASE("cylinders of the three-level example") {
    Setup s(corpus::ex44i());
    check_exact(s.value(1, "a"), 1);
    check_exact(s.value(2, "b"), 1);
    check_exact(s.value(2, "ab"), Rational(1, 3));
    check_exact(s.value(2, "ba"), Rational(1, 3));
    check_exact(s.value(2, "bb"), Rational(2, 3));
    for (const char* w : {"a", "aa"}) CHECK(s.value(2, w).infinite);
    check_exact(s.value(3, "c"), 1);
    check_exact(s.value(3, "bc"), 1);
    check_exact(s.value(3, "ca"), Rational(1, 2));
    check_exact(s.value(3, "cb"), Rational(1, 2));
    for (const char* w : {"a", "b", "aa", "ab", "ba", "bb"}) CHECK(s.value(3, w).infinite);
    CHECK(s.value(3, "cb").anchor == 'c');
  }

  TEST_CASE("cylinders of the Fibonacci-based example") {
    Setup s(corpus::ex532());
    const double r5 = std::sqrt(5.0);
    std::map<Word, double> mu1 = {{"a", (r5 - 1) / 2}, {"b", (3 - r5) / 2}, {"aa", r5 - 2},
                                  {"ab", (3 - r5) / 2}, {"ba", (3 - r5) / 2}};
    for (const auto& [w, want] : mu1) {
      auto c = s.value(1, w);
      CHECK_FALSE(c.exact);
      REQUIRE(c.field);
      CHECK(c.field->polynomial().str() == "x^2 - x - 1");
      CHECK(std::abs(c.value - want) < 1e-12);
    }
    std::map<Word, Rational> mu2 = {
        {"a", Rational(1, 2)},   {"b", Rational(1, 4)},   {"c", Rational(1, 8)},
        {"d", Rational(1, 8)},   {"aa", Rational(1, 8)},  {"ab", Rational(1, 4)},
        {"ba", Rational(1, 4)},  {"ac", Rational(1, 16)}, {"ad", Rational(1, 16)},
        {"ca", Rational(1, 16)}, {"cd", Rational(1, 16)}, {"da", Rational(1, 16)},
        {"dc", Rational(1, 16)}};
    for (const auto& [w, want] : mu2) check_exact(s.value(2, w), want);
    check_exact(s.value(3, "e"), 1);
    check_exact(s.value(3, "dd"), Rational(1, 4));
    for (const char* w : {"ce", "de", "ea", "ec"}) check_exact(s.value(3, w), Rational(1, 2));
    for (const char* w : {"a", "b", "c", "d", "aa", "ab", "ba", "ac", "ad", "ca", "cd", "da", "dc"})
      CHECK(s.value(3, w).infinite);
  }

  TEST_CASE("domain errors") {
    Setup s(corpus::ex44i()), p(corpus::ex36ii());
    CHECK_THROWS_AS(s.value(2, "cc"), WordNotInLevelLanguage);
    CHECK_THROWS_AS(s.value(2, "bc"), WordNotInLevelLanguage);
    CHECK_THROWS_AS(s.value(4, "a"), ArgumentError);
    CHECK_THROWS_AS(p.value(2, "ad"), MeasureTypeCounting);
    CHECK_THROWS_AS(empirical_frequency(s.sigma, s.chain, s.spectral, 2, "ab", 2000, 1000),
                    BudgetExceeded);
    CHECK_THROWS_AS(empirical_frequency(s.sigma, s.chain, s.spectral, 1, "abc", 100),
                    WordNotInLevelLanguage);
  }

  TEST_CASE("consistency and shift invariance") {
    for (const auto& sub : measured_corpus()) {
      Setup s(sub);
      for (std::size_t i = 1; i <= s.chain.size(); ++i) {
        MeasureType t = s.type(i);
        if (t != MeasureType::finite_ergodic && t != MeasureType::infinite_radon) continue;
        for (std::size_t m = 1; m <= 2; ++m) {
          auto small = cylinder_table(s.sigma, s.chain, s.spectral, i, m);
          auto big = cylinder_table(s.sigma, s.chain, s.spectral, i, m + 1);
          for (const auto& c : small)
            for (int side = 0; side < 2; ++side) {
              double sum = 0;
              bool inf = false;
              for (const auto& e : big)
                if (e.word.compare(side == 0 ? 0 : 1, m, c.word) == 0) {
                  inf = inf || e.infinite;
                  if (!e.infinite) sum += e.value;
                }
              if (c.infinite) {
                CHECK(inf);
              } else {
                CHECK_FALSE(inf);
                CHECK(std::abs(sum - c.value) <= 1e-9 * std::max(1.0, c.value));
              }
            }
          if (t == MeasureType::finite_ergodic) {
            double total = 0;
            for (const auto& c : big) total += c.value;
            CHECK(std::abs(total - 1) < 1e-9);
          }
        }
      }
    }
  }

  TEST_CASE("counting in powers matches expansion") {
    std::mt19937 rng(2718);
    for (int trial = 0; trial < 100; ++trial) {
      auto s = corpus::random_substitution(rng, 2 + trial % 3, 3);
      unsigned k = trial % 7;
      std::string w = corpus::expand(s, "ab", k);
      for (const Word& v : {Word("a"), Word("ab"), Word("ba"), Word("aab"), Word("bab"), Word("abba")})
        CHECK(count_in_power(s, v, "ab", k) == BigInt(corpus::count(v, w)));
    }
  }

  TEST_CASE("empirical frequencies") {
    Setup f(corpus::ex532()), a(corpus::ex44i()), ch(corpus::chacon());
    auto e = empirical_frequency(f.sigma, f.chain, f.spectral, 1, "a", 1'000'000);
    CHECK(std::abs(e.ratio - (std::sqrt(5.0) - 1) / 2) < 1e-3);
    CHECK(e.length == 1'000'000);

    auto s = empirical_frequency(a.sigma, a.chain, a.spectral, 2, "ab", 1000);
    REQUIRE(s.scaled);
    CHECK(std::abs(*s.scaled - 1.0 / 3) < 1e-3);
    CHECK(s.anchor == 'b');

    auto n3 = empirical_frequency(f.sigma, f.chain, f.spectral, 3, "dd", 1000);
    REQUIRE(n3.scaled_exact);
    CHECK(std::abs(*n3.scaled - 0.25) < 1e-3);

    for (const char* w : {"a", "b", "ab", "ba", "bb"}) {
      auto c = empirical_frequency(ch.sigma, ch.chain, ch.spectral, 2, w, 1'000'000);
      CHECK(std::abs(c.ratio - ch.value(2, w).value) < 1e-3);
    }
  }

  TEST_CASE("uniform return averages") {
    Setup a(corpus::ex44i()), ch(corpus::chacon());
    auto r = uniformity_check(a.sigma, a.chain, a.spectral, 2, "bb", 10000, {0, 1000, 10000});
    CHECK(r.target == doctest::Approx(2.0 / 3));
    CHECK(r.ratios.size() == 3);
    CHECK(r.max_deviation <= 2e-2);

    double previous = 1;
    for (std::size_t n : {100, 1000, 10000}) {
      auto c = uniformity_check(ch.sigma, ch.chain, ch.spectral, 2, "ba", n, {0, 100, 1000, 5000});
      CHECK(c.max_deviation <= previous);
      previous = c.max_deviation;
    }
    CHECK(previous < 1e-3);

    auto one = uniformity_check(a.sigma, a.chain, a.spectral, 2, "bb", 1, {0, 1, 2, 3});
    for (double x : one.ratios) CHECK((x == 0 || x == 1 || x == 2));
    CHECK_THROWS_AS(uniformity_check(a.sigma, a.chain, a.spectral, 2, "aa", 10, {0}), ArgumentError);
  }
}
