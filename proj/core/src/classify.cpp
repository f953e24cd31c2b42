#include "subshift/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "subshift/errors.hpp"

namespace subshift {

namespace {

constexpr std::uint64_t kWordBudget = std::uint64_t{1} << 28;

Word reversed(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

// Forward seed of the constructive argument for a0 b0 crossing into the top
// level of tau; `fresh` tells whether a letter is new at that level.
template <class Fresh>
SeedPair forward_seed(const Substitution& tau, char a0, char b0, Fresh fresh) {
  std::map<std::pair<char, char>, unsigned> seen;
  char a = a0, b = b0;
  unsigned j = 0;
  while (!seen.count({a, b})) {
    seen[{a, b}] = j;
    const Word& img = tau.image(b);
    std::size_t p = 0;
    while (p < img.size() && !fresh(img[p])) ++p;
    if (p == img.size()) throw std::logic_error("image of a new letter has no new letter");
    char nb = img[p];
    char na = p > 0 ? img[p - 1] : tau.image(a).back();
    a = na;
    b = nb;
    ++j;
  }
  SeedPair s;
  s.a = a;
  s.b = b;
  s.k = j - seen[{a, b}];
  Word w = apply(tau, std::string{a, b}, s.k, false, kWordBudget);
  std::size_t pos = apply(tau, std::string(1, a), s.k, false, kWordBudget).size();
  while (!fresh(w[pos])) ++pos;
  if (w[pos] != b || w[pos - 1] != a)
    throw std::logic_error("seed pair identity does not hold");
  s.u = w.substr(0, pos - 1);
  s.v = w.substr(pos + 1);
  return s;
}

// Runs of a letter s with tau(s) = s between consecutive other letters in the
// words of L(tau). A state (e, d) stands for the factor e s^t d, where e or d
// may be the word boundary. Applying tau maps (e, d, t) to
// (last non-s letter of tau(e), first non-s letter of tau(d), t + trail + lead),
// and every factor arises from the images of single letters this way, so the
// closure of the one-letter configurations under this map is exact. Runs above
// the bound are only reachable on cycles with positive increment.
class RunProfile {
 public:
  // Letters whose iterates end up inside s* are folded into the run. A block
  // of s and such letters is measured by its eventual number of s; `pure`
  // marks blocks that are already a literal power of s.
  RunProfile(const Substitution& tau, char s, std::size_t cap = 0)
      : tau_(&tau), s_(s) {
    const Alphabet& A = tau.alphabet();
    n_ = A.size();
    weight_.assign(n_, 0);
    weight_[A.index(s)] = 1;
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t c = 0; c < n_; ++c) {
        if (weight_[c]) continue;
        std::size_t w = 0;
        for (char x : tau.image_at(c)) {
          std::size_t wx = weight_[A.index(x)];
          if (!wx) {
            w = 0;
            break;
          }
          w = std::min(w + wx, kHuge);
        }
        if (w) {
          weight_[c] = w;
          grew = true;
        }
      }
    }
    first_.assign(n_, none());
    last_.assign(n_, none());
    lead_.assign(n_, {0, true});
    trail_.assign(n_, {0, true});
    std::vector<State> base;
    std::size_t max_base = 0, max_inc = 0;
    for (std::size_t c = 0; c < n_; ++c) {
      if (weight_[c]) continue;
      std::size_t prev = none(), run = 0;
      bool pure = true, first = true;
      for (char x : tau.image_at(c)) {
        std::size_t xi = A.index(x);
        if (weight_[xi]) {
          run = std::min(run + weight_[xi], kHuge);
          pure = pure && x == s;
          continue;
        }
        if (first) {
          first_[c] = xi;
          lead_[c] = {run, pure};
          first = false;
        }
        base.push_back({prev, xi, run, pure});
        max_base = std::max(max_base, run);
        prev = xi;
        run = 0;
        pure = true;
      }
      last_[c] = prev;
      trail_[c] = {run, pure};
      base.push_back({prev, none(), run, pure});
      max_base = std::max(max_base, run);
      max_inc = std::max(max_inc, lead_[c].first + trail_[c].first);
    }
    bound_ = max_base + (n_ + 1) * (n_ + 1) * max_inc;
    cap_ = std::max(cap, bound_) + 1;
    std::vector<State> work;
    for (const State& x : base) add(x, work);
    while (!work.empty()) {
      State x = work.back();
      work.pop_back();
      State y{x.e == none() ? none() : last_[x.e], x.d == none() ? none() : first_[x.d], x.t,
              x.pure};
      if (x.e != none()) {
        y.t += trail_[x.e].first;
        y.pure = y.pure && trail_[x.e].second;
      }
      if (x.d != none()) {
        y.t += lead_[x.d].first;
        y.pure = y.pure && lead_[x.d].second;
      }
      add(y, work);
    }
  }

  bool unbounded_any() const {
    return std::any_of(found_.begin(), found_.end(),
                       [&](const State& x) { return x.t > bound_; });
  }
  bool unbounded_before(char d) const { return unbounded(none(), idx(d)); }
  bool unbounded_after(char e) const { return unbounded(idx(e), none()); }
  /// e s^p d is a factor, for p up to the cap given at construction.
  bool has_run(char e, char d, std::size_t p) const {
    return found_.count({idx(e), idx(d), p, true}) > 0;
  }
  std::vector<std::size_t> bounded_runs(char e, char d) const {
    std::vector<std::size_t> out;
    for (std::size_t t = 0; t <= bound_; ++t)
      if (has_run(e, d, t)) out.push_back(t);
    return out;
  }
  std::size_t bound() const noexcept { return bound_; }

 private:
  struct State {
    std::size_t e, d, t;
    bool pure;
    auto operator<=>(const State&) const = default;
  };
  static constexpr std::size_t kHuge = std::size_t(1) << 40;
  static constexpr std::size_t none() { return static_cast<std::size_t>(-1); }
  std::size_t idx(char c) const { return tau_->alphabet().index(c); }

  // Runs before d (after e) are unbounded when any state with that right
  // (left) letter exceeds the bound.
  bool unbounded(std::size_t e, std::size_t d) const {
    for (const State& x : found_) {
      if (x.t <= bound_) continue;
      if (e == none() && x.d == d) return true;
      if (d == none() && x.e == e) return true;
    }
    return false;
  }

  void add(State x, std::vector<State>& work) {
    if (x.e == none() && x.d == none()) return;
    x.t = std::min(x.t, cap_);
    if (found_.insert(x).second) work.push_back(x);
  }

  const Substitution* tau_;
  char s_;
  std::size_t n_ = 0, bound_ = 0, cap_ = 0;
  std::vector<std::size_t> weight_;
  std::vector<std::size_t> first_, last_;
  std::vector<std::pair<std::size_t, bool>> lead_, trail_;
  std::set<State> found_;
};

// Functional graph of c -> first (or last) letter of tau(c); period of c on
// its cycle, or 0 if c is not on a cycle.
std::map<char, unsigned> end_letter_periods(const Substitution& tau, bool last) {
  std::map<char, unsigned> out;
  for (char c : tau.alphabet().letters()) {
    char x = c;
    unsigned period = 0;
    for (unsigned step = 1; step <= tau.alphabet().size(); ++step) {
      const Word& img = tau.image(x);
      x = last ? img.back() : img.front();
      if (x == c) {
        period = step;
        break;
      }
    }
    out[c] = period;
  }
  return out;
}

// Whether some prolonger of tau around s has a nonempty remainder w
// (tau^k(c) = s^l c w or w c s^l with w nonempty).
bool prolonger_with_tail(const Substitution& tau, char s) {
  const Alphabet& A = tau.alphabet();
  for (int side = 0; side < 2; ++side) {
    for (char c : A.letters()) {
      if (c == s) continue;
      // Follow c -> first (last) non-s letter of its image.
      char x = c;
      std::size_t acc = 0;
      for (unsigned k = 1; k <= A.size(); ++k) {
        const Word& img = tau.image(x);
        std::size_t run = 0;
        if (side == 0) {
          while (img[run] == s) ++run;
          x = img[run];
        } else {
          while (img[img.size() - 1 - run] == s) ++run;
          x = img[img.size() - 1 - run];
        }
        acc += run;
        if (x == c) {
          if (acc > 0) {
            Word w = apply(tau, std::string(1, c), k, false, kWordBudget);
            if (w.size() != acc + 1) return true;
          }
          break;
        }
      }
    }
  }
  return false;
}

Word iterate_until(const Substitution& sigma, char c, unsigned q, std::size_t len) {
  Word w(1, c);
  for (int guard = 0; w.size() < len && guard < 4096; ++guard)
    w = apply(sigma, w, q, false, kWordBudget);
  return w;
}

Word suffix(const Word& w, std::size_t n) {
  return w.size() <= n ? w : w.substr(w.size() - n);
}
Word prefix(const Word& w, std::size_t n) { return w.substr(0, std::min(n, w.size())); }

void fill_windows(const Substitution& sigma, PointSeed& p, std::size_t R) {
  if (p.kind == PointKind::fixed_letter_power) {
    p.left_window = p.right_window = Word(R, p.fixed);
    return;
  }
  switch (p.form) {
    case BilateralForm::plain:
      p.left_window = suffix(iterate_until(sigma, p.left, p.period, R), R);
      p.right_window = prefix(iterate_until(sigma, p.right, p.period, R), R);
      break;
    case BilateralForm::left_fixed:
      p.left_window = Word(R, p.fixed);
      p.right_window = prefix(iterate_until(sigma, p.right, p.period, R), R);
      break;
    case BilateralForm::right_fixed:
      p.left_window = suffix(iterate_until(sigma, p.left, p.period, R), R);
      p.right_window = Word(R, p.fixed);
      break;
    case BilateralForm::middle:
      p.left_window = suffix(iterate_until(sigma, p.left, p.period, R), R);
      p.right_window =
          prefix(Word(p.middle, p.fixed) + iterate_until(sigma, p.right, p.period, R), R);
      break;
  }
}

// Same orbit under the shift, judged on windows: some shift |t| <= R/2 makes
// the central halves agree.
bool same_orbit(const PointSeed& x, const PointSeed& y, std::size_t R) {
  Word wx = x.left_window + x.right_window, wy = y.left_window + y.right_window;
  if (wx.size() != 2 * R || wy.size() != 2 * R) return wx == wy;
  std::size_t h = R / 2;
  for (std::size_t start = R - 2 * h; start <= R; ++start)
    if (wx.compare(start, 2 * h, wy, R - h, 2 * h) == 0) return true;
  return false;
}

std::size_t lcm_u(std::size_t a, std::size_t b) { return a / std::gcd(a, b) * b; }

std::vector<PointSeed> periodic_seeds(const Substitution& sigma,
                                      const ComponentChain& chain, std::size_t i,
                                      std::size_t& radius) {
  std::vector<PointSeed> seeds;
  Substitution sigma_i = sub_substitution(sigma, chain, i);
  Substitution sigma_p = sub_substitution(sigma, chain, i - 1);
  const Alphabet& lower = chain.level(i - 1);
  auto last_p = end_letter_periods(sigma_p, true);
  auto first_p = end_letter_periods(sigma_p, false);

  if (!is_empty_bottom(sigma, chain)) {
    auto Li = language(sigma_i, 2), Lp = language(sigma_p, 2);
    std::set<Word> in_p(Lp.begin(), Lp.end());
    for (const Word& w : Li) {
      char g = w[0], d = w[1];
      if (!lower.contains(g) || !lower.contains(d) || in_p.count(w)) continue;
      if (!last_p[g] || !first_p[d]) continue;
      PointSeed p;
      p.kind = PointKind::bilateral_limit;
      p.level = i;
      p.form = BilateralForm::plain;
      p.left = g;
      p.right = d;
      p.period = static_cast<unsigned>(lcm_u(last_p[g], first_p[d]));
      seeds.push_back(p);
    }
  } else {
    char s = chain.level(1)[0];
    RunProfile here(sigma_i, s);
    bool long_here = here.unbounded_any();
    bool long_below = i > 2 && RunProfile(sigma_p, s).unbounded_any();
    if (long_here && !long_below) {
      PointSeed p;
      p.kind = PointKind::fixed_letter_power;
      p.level = i;
      p.fixed = s;
      p.shift_periodic = true;
      seeds.push_back(p);
    }
    if (i >= 3) {
      RunProfile below(sigma_p, s, here.bound());
      for (char c : lower.letters()) {
        if (c == s) continue;
        if (first_p[c] && here.unbounded_before(c) && !below.unbounded_before(c)) {
          PointSeed p;
          p.level = i;
          p.form = BilateralForm::left_fixed;
          p.fixed = s;
          p.right = c;
          p.period = first_p[c];
          seeds.push_back(p);
        }
        if (last_p[c] && here.unbounded_after(c) && !below.unbounded_after(c)) {
          PointSeed p;
          p.level = i;
          p.form = BilateralForm::right_fixed;
          p.fixed = s;
          p.left = c;
          p.period = last_p[c];
          seeds.push_back(p);
        }
      }
      for (char d : lower.letters()) {
        if (d == s || !last_p[d]) continue;
        for (char g : lower.letters()) {
          if (g == s || !first_p[g]) continue;
          for (std::size_t run : here.bounded_runs(d, g)) {
            if (below.has_run(d, g, run)) continue;
            PointSeed p;
            p.level = i;
            p.form = run == 0 ? BilateralForm::plain : BilateralForm::middle;
            p.fixed = run == 0 ? 0 : s;
            p.left = d;
            p.right = g;
            p.middle = static_cast<unsigned>(run);
            p.period = static_cast<unsigned>(lcm_u(last_p[d], first_p[g]));
            seeds.push_back(p);
          }
        }
      }
    }
  }

  unsigned qmax = 1;
  for (const auto& p : seeds) qmax = std::max(qmax, p.period);
  std::uint64_t longest = 0;
  for (auto len : image_lengths(sigma_i, 2 * qmax)) longest = std::max(longest, len);
  radius = static_cast<std::size_t>(std::clamp<std::uint64_t>(2 * longest, 8, 4096));

  std::vector<PointSeed> unique;
  for (auto& p : seeds) {
    fill_windows(sigma, p, radius);
    bool dup = false;
    for (const auto& q : unique)
      if (q.kind == p.kind && same_orbit(q, p, radius)) dup = true;
    if (!dup) unique.push_back(p);
  }
  return unique;
}

}  // namespace

Word SeedPair::pair_word() const {
  return orientation == Orientation::forward ? std::string{a, b} : std::string{b, a};
}

Word SeedPair::expansion() const {
  return orientation == Orientation::forward ? u + a + b + v : v + b + a + u;
}

SeedPair find_seed_pair(const Substitution& sigma, const ComponentChain& chain,
                        std::size_t i) {
  if (i < 2 || i > chain.size()) throw ArgumentError("seed pairs exist for levels 2..n");
  Substitution sigma_i = sub_substitution(sigma, chain, i);
  auto fresh = [&](char c) { return chain.level_of(c) == static_cast<int>(i); };
  for (const Word& w : language(sigma_i, 2)) {
    bool old0 = !fresh(w[0]), old1 = !fresh(w[1]);
    if (old0 && !old1) {
      SeedPair s = forward_seed(sigma_i, w[0], w[1], fresh);
      s.level = i;
      return s;
    }
    if (!old0 && old1) {
      SeedPair s = forward_seed(sigma_i.reversed(), w[1], w[0], fresh);
      s.level = i;
      s.orientation = Orientation::reverse;
      s.u = reversed(s.u);
      s.v = reversed(s.v);
      return s;
    }
  }
  throw std::logic_error("no word of L_2 crosses into level " + std::to_string(i));
}

bool positively_recurrent(const ComponentChain& chain, const SeedPair& seed) {
  if (seed.v.empty()) throw ArgumentError("positive recurrence needs a nonempty v");
  return std::any_of(seed.v.begin(), seed.v.end(), [&](char c) {
    return chain.level_of(c) == static_cast<int>(seed.level);
  });
}

bool arbitrarily_long_powers(const Substitution& tau, char s) {
  if (tau.image(s) != std::string(1, s))
    throw ArgumentError(std::string("the image of '") + s + "' must be itself");
  return RunProfile(tau, s).unbounded_any();
}

std::string PointSeed::notation() const {
  auto it = [&](char c) {
    std::string e = period == 1 ? "n" : std::to_string(period) + "n";
    return "sigma^" + e + "(" + std::string(1, c) + ")";
  };
  switch (kind) {
    case PointKind::fixed_letter_power:
      return std::string(1, fixed) + "^inf";
    case PointKind::quasi_fixed: {
      const SeedPair& sp = *pair;
      std::string k = sp.k == 1 ? "" : "^" + std::to_string(sp.k);
      if (sp.orientation == Orientation::forward)
        return "...sigma" + k + "(u)u" + sp.a + "." + sp.b + "v sigma" + k + "(v)...";
      return "...sigma" + k + "(v)v" + sp.b + "." + sp.a + "u sigma" + k + "(u)...";
    }
    case PointKind::bilateral_limit:
      break;
  }
  std::string f(1, fixed);
  switch (form) {
    case BilateralForm::plain:
      return "lim " + it(left) + "." + it(right);
    case BilateralForm::left_fixed:
      return "lim " + f + "^n." + it(right);
    case BilateralForm::right_fixed:
      return "lim " + it(left) + "." + f + "^n";
    case BilateralForm::middle:
      return "lim " + it(left) + "." + f + "^" + std::to_string(middle) + it(right);
  }
  return {};
}

std::string MinimalSet::name() const {
  switch (kind) {
    case MinimalSetKind::bottom:
      return "X_sigma1";
    case MinimalSetKind::second_level:
      return "X_sigma2";
    case MinimalSetKind::fixed_letter:
      return std::string(1, letter) + "^inf";
  }
  return {};
}

LevelReport classify_level(const Substitution& sigma, const ComponentChain& chain,
                           const SpectralProfile& spectral, std::size_t i) {
  if (i < 1 || i > chain.size()) throw ArgumentError("level out of range");
  LevelReport r;
  r.level = i;
  r.x_nonempty = !spectral.theta_is_one(i);
  if (i == 1) {
    const Alphabet& A1 = chain.level(1);
    if (is_empty_bottom(sigma, chain))
      r.case_tag = "bottom_empty";
    else if (A1.size() == 1)
      r.case_tag = "bottom_letter_power";
    else
      r.case_tag = "bottom_primitive";
    return r;
  }

  SeedPair seed = find_seed_pair(sigma, chain, i);
  r.seed = seed;
  Substitution sigma_i = sub_substitution(sigma, chain, i);
  bool forward = seed.orientation == Orientation::forward;
  Word u = forward ? seed.u : reversed(seed.u);
  const Word& v = seed.v;
  char a = seed.a;
  bool u_is_power = !u.empty() && std::all_of(u.begin(), u.end(), [a](char c) { return c == a; });

  if (u.empty()) {
    if (!arbitrarily_long_powers(sigma_i, a))
      r.case_tag = "chacon_type";
    else
      r.case_tag = prolonger_with_tail(sigma_i, a) ? "almost_primitive" : "singleton_orbit";
  } else if (u_is_power) {
    if (!v.empty())
      r.case_tag = "almost_primitive";
    else
      r.case_tag = sigma.image(a) == std::string(1, a) ? "singleton_orbit"
                                                       : "collapses_to_bottom";
  } else if (v.empty()) {
    r.case_tag = "periodic_only";
  } else {
    bool excursion = positively_recurrent(chain, seed);
    r.case_tag = excursion ? "dense_orbits" : "quasi_fixed_primitive";
    r.positively_recurrent = excursion;
    PointSeed q;
    q.kind = PointKind::quasi_fixed;
    q.level = i;
    q.pair = seed;
    q.period = seed.k;
    q.primitive_type = !excursion;
    r.quasi_fixed = q;
  }

  r.periodic = periodic_seeds(sigma, chain, i, r.dedup_radius);
  return r;
}

Census minimal_sets(const Substitution& sigma, const ComponentChain& chain,
                    const SpectralProfile& spectral) {
  Census c;
  const std::size_t n = chain.size();
  bool empty_bottom = is_empty_bottom(sigma, chain);
  char s = chain.level(1)[0];
  if (!empty_bottom) {
    c.minimal_sets.push_back({MinimalSetKind::bottom});
  } else {
    c.s_infinity_in_x = arbitrarily_long_powers(sigma, s);
    bool long_in_2 = n >= 2 && arbitrarily_long_powers(sub_substitution(sigma, chain, 2), s);
    if (!c.s_infinity_in_x) {
      c.minimal_sets.push_back({MinimalSetKind::second_level});
    } else if (long_in_2) {
      c.minimal_sets.push_back({MinimalSetKind::fixed_letter, s});
    } else {
      c.minimal_sets.push_back({MinimalSetKind::second_level});
      c.minimal_sets.push_back({MinimalSetKind::fixed_letter, s});
    }
  }

  bool lambda_one = spectral.theta_is_one(spectral.i_max());
  if (!lambda_one && spectral.compare(1, spectral.i_min()) == 0) {
    c.verdict = {true, "i"};
  } else if (n >= 2 && spectral.theta_is_one(1) && !lambda_one &&
             spectral.compare(2, spectral.i_min()) == 0 && !c.s_infinity_in_x) {
    c.verdict = {true, "ii"};
  } else if (lambda_one) {
    c.verdict = {true, "iii"};
  } else {
    c.verdict = {false, ""};
  }
  return c;
}

DecompositionReport classify(const Substitution& sigma, const ComponentChain& chain,
                             const SpectralProfile& spectral) {
  DecompositionReport d;
  for (std::size_t i = 1; i <= chain.size(); ++i)
    d.levels.push_back(classify_level(sigma, chain, spectral, i));
  d.census = minimal_sets(sigma, chain, spectral);
  return d;
}

}  // namespace subshift
