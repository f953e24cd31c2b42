#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "subshift/classify.hpp"
#include "subshift/errors.hpp"

using namespace subshift;

namespace {

DecompositionReport report(const Substitution& s) {
  auto chain = component_chain(s);
  SpectralProfile spectral(chain);
  return classify(s, chain, spectral);
}

void check_seed(const Substitution& s, std::size_t i, char a, char b, unsigned k, const Word& u,
                const Word& v) {
  auto seed = find_seed_pair(s, component_chain(s), i);
  CHECK(seed.a == a);
  CHECK(seed.b == b);
  CHECK(seed.k == k);
  CHECK(seed.u == u);
  CHECK(seed.v == v);
  // the defining identity
  CHECK(apply(s, seed.pair_word(), seed.k) == seed.expansion());
}

// Longest run of s among factors of sigma^n(x), over all letters x.
std::size_t longest_run(const Substitution& s, char letter, unsigned n) {
  std::size_t best = 0;
  for (char x : s.alphabet().letters()) {
    std::string w = corpus::expand(s, std::string(1, x), n);
    std::size_t run = 0;
    for (char c : w) {
      run = c == letter ? run + 1 : 0;
      best = std::max(best, run);
    }
  }
  return best;
}

}  // namespace

TEST_SUITE("classify") {
  TEST_CASE("seed pairs") {
    check_seed(corpus::chacon(), 2, 'a', 'b', 1, "", "bab");
    check_seed(corpus::ex39ii(), 2, 'a', 'c', 1, "ab", "b");
    check_seed(corpus::ex44i(), 3, 'b', 'c', 1, "abb", "bc");
    check_seed(corpus::ex44i(), 2, 'a', 'b', 1, "aaaa", "bb");
    check_seed(corpus::ex39i(), 2, 'a', 'd', 1, "abcaab", "cac");
    check_seed(corpus::fib_acc(), 2, 'a', 'c', 1, "ab", "c");
    check_seed(corpus::ex36ii(), 2, 'a', 'd', 1, "abcaabbc", "");
    check_seed(corpus::ex36iii(), 2, 'a', 'c', 1, "", "bc");
    CHECK_THROWS_AS(find_seed_pair(corpus::chacon(), component_chain(corpus::chacon()), 1),
                    ArgumentError);
  }

  TEST_CASE("reverse orientation keeps the identity") {
    auto s = corpus::ex36iii();
    auto seed = find_seed_pair(s, component_chain(s), 3);
    CHECK(seed.orientation == Orientation::reverse);
    CHECK(apply(s, seed.pair_word(), seed.k) == seed.expansion());
  }

  TEST_CASE("positive recurrence") {
    auto s = corpus::ex44i();
    auto c = component_chain(s);
    CHECK(positively_recurrent(c, find_seed_pair(s, c, 3)));
    auto t = corpus::ex39ii();
    auto ct = component_chain(t);
    CHECK_FALSE(positively_recurrent(ct, find_seed_pair(t, ct, 2)));
    auto p = corpus::ex36ii();
    auto cp = component_chain(p);
    CHECK_THROWS_AS(positively_recurrent(cp, find_seed_pair(p, cp, 2)), ArgumentError);
  }

  TEST_CASE("unique ergodicity verdicts") {
    struct Row {
      Substitution s;
      bool ue;
      const char* clause;
    };
    std::vector<Row> rows = {
        {corpus::ex36i(), true, "i"},   {corpus::ex36ii(), true, "i"},
        {corpus::ex39i(), true, "i"},   {corpus::ex39ii(), true, "i"},
        {corpus::ex44i(), true, "i"},   {corpus::chacon(), true, "ii"},
        {corpus::ex532(), false, ""},   {corpus::fib_acc(), false, ""},
        {corpus::ex44ii(), false, ""},  {corpus::ex36iii(), false, ""},
        {Substitution{{'a', "a"}, {'b', "ab"}}, true, "iii"},
    };
    for (const auto& r : rows) {
      auto v = report(r.s).census.verdict;
      CHECK_MESSAGE(v.uniquely_ergodic == r.ue, r.s.images()[1]);
      CHECK(v.clause == r.clause);
    }
  }

  TEST_CASE("periodic seeds") {
    auto d = report(corpus::ex36ii());
    REQUIRE(d.levels.size() == 2);
    CHECK(d.levels[1].case_tag == "periodic_only");
    REQUIRE(d.levels[1].periodic.size() == 2);
    CHECK(d.levels[1].periodic[0].notation() == "lim sigma^n(a).sigma^n(a)");
    CHECK(d.levels[1].periodic[1].notation() == "lim sigma^n(b).sigma^n(b)");
    CHECK_FALSE(d.levels[1].quasi_fixed);

    auto e = report(corpus::ex39i());
    CHECK(e.levels[1].case_tag == "quasi_fixed_primitive");
    REQUIRE(e.levels[1].quasi_fixed);
    CHECK(e.levels[1].quasi_fixed->primitive_type);
    REQUIRE(e.levels[1].periodic.size() == 2);
    CHECK(e.levels[1].periodic[0].left == 'a');
    CHECK(e.levels[1].periodic[1].left == 'c');
  }

  TEST_CASE("almost minimal system with a fixed letter") {
    auto d = report(corpus::ex36iii());
    REQUIRE(d.census.minimal_sets.size() == 1);
    CHECK(d.census.minimal_sets[0].name() == "a^inf");
    CHECK(d.census.s_infinity_in_x);
    CHECK(d.levels[0].case_tag == "bottom_empty");
    REQUIRE(d.levels[1].periodic.size() == 1);
    CHECK(d.levels[1].periodic[0].kind == PointKind::fixed_letter_power);
    CHECK(d.levels[1].periodic[0].shift_periodic);
    std::size_t fixed = 0;
    for (const auto& l : d.levels)
      for (const auto& p : l.periodic) fixed += p.kind == PointKind::fixed_letter_power;
    CHECK(fixed == 1);
    REQUIRE(d.levels[3].periodic.size() == 1);
    CHECK(d.levels[3].periodic[0].form == BilateralForm::left_fixed);
    CHECK(d.levels[3].periodic[0].notation() == "lim a^n.sigma^n(d)");
  }

  TEST_CASE("case tags") {
    auto ch = report(corpus::chacon());
    CHECK(ch.levels[1].case_tag == "chacon_type");
    CHECK(ch.census.minimal_sets[0].name() == "X_sigma2");
    CHECK_FALSE(ch.census.s_infinity_in_x);
    CHECK(ch.levels[1].periodic.empty());

    auto a = report(corpus::ex44i());
    CHECK(a.levels[0].case_tag == "bottom_letter_power");
    CHECK(a.levels[2].case_tag == "dense_orbits");
    CHECK(a.levels[2].positively_recurrent == true);

    CHECK(report(corpus::ex39ii()).levels[2].case_tag == "quasi_fixed_primitive");
    CHECK(report(corpus::fib_acc()).levels[1].case_tag == "dense_orbits");
    CHECK(report(corpus::ex36i()).levels[1].case_tag == "periodic_only");
    CHECK(report(Substitution{{'a', "a"}, {'b', "ab"}}).levels[1].case_tag == "singleton_orbit");
    CHECK(report(Substitution{{'a', "aa"}, {'b', "ab"}}).levels[1].case_tag ==
          "collapses_to_bottom");
  }

  TEST_CASE("level emptiness follows the block eigenvalue") {
    for (auto s : {corpus::ex36ii(), corpus::ex39i(), corpus::chacon(), corpus::ex532()}) {
      auto chain = component_chain(s);
      SpectralProfile spectral(chain);
      for (const auto& l : classify(s, chain, spectral).levels)
        CHECK(l.x_nonempty == !spectral.theta_is_one(l.level));
    }
  }

  TEST_CASE("arbitrarily long powers agree with expansion") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> len(1, 2), pick(0, 2);
    const std::string letters = "sxy";
    int unbounded = 0, bounded = 0;
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Word> images{"s"};
      for (int k = 0; k < 2; ++k) {
        Word w;
        for (int n = len(rng); n > 0; --n) w.push_back(letters[pick(rng)]);
        images.push_back(w);
      }
      Substitution s(Alphabet(letters), images);
      bool want = longest_run(s, 's', 20) > longest_run(s, 's', 10);
      CHECK_MESSAGE(arbitrarily_long_powers(s, 's') == want, images[1], " ", images[2]);
      (want ? unbounded : bounded)++;
    }
    CHECK(unbounded > 10);
    CHECK(bounded > 10);
    CHECK_THROWS_AS(arbitrarily_long_powers(corpus::chacon(), 'b'), ArgumentError);
  }
}
