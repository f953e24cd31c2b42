#include "subshift/measures.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <limits>

#include "subshift/auxiliary.hpp"
#include "subshift/errors.hpp"

namespace subshift {

namespace {

constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSat - b ? kSat : a + b; }

// |sigma^k(c)| for k = 0, 1, ... until `stop` says so.
class LengthTable {
 public:
  explicit LengthTable(const Substitution& sigma) : sigma_(&sigma) {
    rows_.emplace_back(sigma.alphabet().size(), 1);
  }
  std::uint64_t at(unsigned k, char c) {
    while (rows_.size() <= k) {
      const auto& prev = rows_.back();
      std::vector<std::uint64_t> next(prev.size(), 0);
      for (std::size_t i = 0; i < prev.size(); ++i)
        for (char x : sigma_->image_at(i))
          next[i] = sat_add(next[i], prev[sigma_->alphabet().index(x)]);
      rows_.push_back(std::move(next));
    }
    return rows_[k][sigma_->alphabet().index(c)];
  }

 private:
  const Substitution* sigma_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

char anchor_letter(const Substitution& sigma, const ComponentChain& chain, std::size_t i) {
  if (i == 1) return chain.level(1)[0];
  return find_seed_pair(sigma, chain, i).b;
}

void require_level(const ComponentChain& chain, std::size_t i) {
  if (i < 1 || i > chain.size())
    throw ArgumentError("level " + std::to_string(i) + " out of range 1.." +
                        std::to_string(chain.size()));
}

void require_word(const Substitution& sigma_i, std::size_t i, const Word& v) {
  if (v.empty()) throw ArgumentError("empty word");
  auto L = language(sigma_i, v.size());
  WordLess less{&sigma_i.alphabet()};
  for (char c : v)
    if (!sigma_i.alphabet().contains(c))
      throw WordNotInLevelLanguage("'" + v + "' is not in L(sigma_" + std::to_string(i) + ")");
  if (!std::binary_search(L.begin(), L.end(), v, less))
    throw WordNotInLevelLanguage("'" + v + "' is not in L(sigma_" + std::to_string(i) + ")");
}

bool has_cylinders(MeasureType t) {
  return t == MeasureType::finite_ergodic || t == MeasureType::infinite_radon;
}

std::vector<CylinderValue> values_of(const LimitData& ld, const MeasureDescriptor& d,
                                     const SpectralProfile& spectral) {
  std::vector<CylinderValue> out(ld.coords.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k].word = ld.coords[k];
    out[k].anchor = d.anchor;
  }
  auto field = [&](CylinderValue& c) {
    if (!c.exact && !c.infinite) c.field = spectral.theta(ld.level);
  };
  if (d.type == MeasureType::finite_ergodic) {
    if (ld.exact()) {
      Rational total(0);
      for (const auto& x : *ld.left_exact) total += x;
      for (std::size_t k = 0; k < out.size(); ++k) {
        out[k].exact = (*ld.left_exact)[k] / total;
        out[k].value = to_double(*out[k].exact);
      }
    } else {
      double total = 0;
      for (double x : ld.left) total += x;
      for (std::size_t k = 0; k < out.size(); ++k) out[k].value = ld.left[k] / total;
    }
    for (auto& c : out) field(c);
    return out;
  }
  std::size_t u = ld.restricted.end;
  for (std::size_t k = ld.restricted.begin; k < ld.restricted.end; ++k)
    if (ld.coords[k][0] == d.anchor) {
      u = k;
      break;
    }
  if (u == ld.restricted.end) throw std::logic_error("no window word starts with the anchor");
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (!ld.restricted.contains(k)) {
      out[k].infinite = true;
      continue;
    }
    if (ld.exact()) {
      out[k].exact = (*ld.right_exact)[u] * (*ld.left_exact)[k];
      out[k].value = to_double(*out[k].exact);
    } else {
      out[k].value = ld.right[u] * ld.left[k];
    }
    field(out[k]);
  }
  return out;
}

struct Piece {
  BigInt count = 0;
  std::uint64_t len = 0;
  Word head, tail;  // at most |v| - 1 letters each
};

Piece merge(const Piece& a, const Piece& b, const Word& v) {
  const std::size_t h = v.size() - 1;
  Piece r;
  r.count = a.count + b.count;
  if (h > 0) r.count += occurrence_count(v, a.tail + b.head);
  r.len = sat_add(a.len, b.len);
  r.head = a.head.size() >= h ? a.head : (a.head + b.head).substr(0, h);
  if (b.tail.size() >= h) {
    r.tail = b.tail;
  } else {
    Word t = a.tail + b.tail;
    r.tail = t.size() > h ? t.substr(t.size() - h) : t;
  }
  return r;
}

}  // namespace

std::string to_string(MeasureType t) {
  switch (t) {
    case MeasureType::finite_ergodic:
      return "FiniteErgodic";
    case MeasureType::infinite_radon:
      return "InfiniteRadon";
    case MeasureType::counting_atom_finite:
      return "CountingAtomFinite";
    case MeasureType::counting_infinite:
      return "CountingInfinite";
    case MeasureType::empty:
      return "Empty";
  }
  return {};
}

MeasureDescriptor measure_type(const Substitution& sigma, const ComponentChain& chain,
                               const SpectralProfile& spectral, std::size_t i) {
  require_level(chain, i);
  MeasureDescriptor d;
  d.level = i;
  d.anchor = anchor_letter(sigma, chain, i);
  if (i >= 2) {
    LevelReport r = classify_level(sigma, chain, spectral, i);
    for (const auto& p : r.periodic)
      d.atoms.push_back({p.notation(), p.kind == PointKind::fixed_letter_power});
    if (r.quasi_fixed) d.atoms.push_back({r.quasi_fixed->notation(), false});
  }
  if (!spectral.theta_is_one(i)) {
    if (spectral.convergent(i)) {
      d.type = MeasureType::finite_ergodic;
    } else {
      d.type = MeasureType::infinite_radon;
      d.i_prime = spectral.i_prime(i);
    }
    return d;
  }
  if (d.atoms.empty())
    d.type = MeasureType::empty;
  else if (std::all_of(d.atoms.begin(), d.atoms.end(), [](const OrbitAtom& a) { return a.finite; }))
    d.type = MeasureType::counting_atom_finite;
  else
    d.type = MeasureType::counting_infinite;
  return d;
}

std::vector<CylinderValue> cylinder_table(const Substitution& sigma,
                                          const ComponentChain& chain,
                                          const SpectralProfile& spectral,
                                          std::size_t i, std::size_t m) {
  MeasureDescriptor d = measure_type(sigma, chain, spectral, i);
  if (!has_cylinders(d.type))
    throw MeasureTypeCounting("level " + std::to_string(i) + " has measure type " +
                              to_string(d.type) + ": no cylinder values");
  if (m == 0) throw ArgumentError("window must be positive");
  return values_of(limit_data(sigma, chain, spectral, m, i), d, spectral);
}

CylinderValue cylinder_measure(const Substitution& sigma, const ComponentChain& chain,
                               const SpectralProfile& spectral, std::size_t i,
                               const Word& v) {
  require_level(chain, i);
  require_word(sub_substitution(sigma, chain, i), i, v);
  auto table = cylinder_table(sigma, chain, spectral, i, v.size());
  for (auto& c : table)
    if (c.word == v) return c;
  throw WordNotInLevelLanguage("'" + v + "' is not in L(sigma_" + std::to_string(i) + ")");
}

BigInt count_in_power(const Substitution& sigma, const Word& v, const Word& w, unsigned k) {
  if (v.empty()) throw ArgumentError("empty word");
  const Alphabet& A = sigma.alphabet();
  const std::size_t h = v.size() - 1;
  auto letter_piece = [&](char c) {
    Piece p;
    p.count = v.size() == 1 && v[0] == c ? 1 : 0;
    p.len = 1;
    if (h > 0) p.head = p.tail = Word(1, c);
    return p;
  };
  std::vector<Piece> level(A.size());
  for (std::size_t c = 0; c < A.size(); ++c) level[c] = letter_piece(A[c]);
  for (unsigned j = 0; j < k; ++j) {
    std::vector<Piece> next(A.size());
    for (std::size_t c = 0; c < A.size(); ++c) {
      const Word& img = sigma.image_at(c);
      Piece acc = level[A.index(img[0])];
      for (std::size_t t = 1; t < img.size(); ++t) acc = merge(acc, level[A.index(img[t])], v);
      next[c] = std::move(acc);
    }
    level = std::move(next);
  }
  Piece acc = level[A.index(w.at(0))];
  for (std::size_t t = 1; t < w.size(); ++t) acc = merge(acc, level[A.index(w[t])], v);
  return acc.count;
}

EmpiricalFrequency empirical_frequency(const Substitution& sigma,
                                       const ComponentChain& chain,
                                       const SpectralProfile& spectral, std::size_t i,
                                       const Word& v, std::uint64_t L,
                                       std::uint64_t budget) {
  require_level(chain, i);
  Substitution sigma_i = sub_substitution(sigma, chain, i);
  require_word(sigma_i, i, v);
  if (L < v.size()) throw ArgumentError("prefix length shorter than the word");
  if (L > budget) throw BudgetExceeded("prefix length exceeds the expansion budget");
  MeasureDescriptor d = measure_type(sigma, chain, spectral, i);
  if (!has_cylinders(d.type))
    throw MeasureTypeCounting("level " + std::to_string(i) + " has measure type " +
                              to_string(d.type));

  EmpiricalFrequency out;
  out.anchor = d.anchor;
  out.length = L;
  LengthTable lengths(sigma_i);
  constexpr unsigned kMaxDepth = 4096;
  unsigned k = 0;
  while (lengths.at(k, d.anchor) < L) {
    if (++k > kMaxDepth) throw BudgetExceeded("anchor expansion does not reach the prefix length");
  }
  out.k = k;

  PowerStream stream(sigma_i, Word(1, d.anchor), k);
  std::deque<char> window;
  for (std::uint64_t n = 0; n < L; ++n) {
    auto c = stream.next();
    if (!c) break;
    window.push_back(*c);
    if (window.size() > v.size()) window.pop_front();
    if (window.size() == v.size() && std::equal(window.begin(), window.end(), v.begin()))
      ++out.count;
  }
  out.ratio = static_cast<double>(out.count) / static_cast<double>(L);

  if (d.type == MeasureType::infinite_radon) {
    unsigned kk = 0;
    while (kk < kMaxDepth && lengths.at(kk + 1, d.anchor) <= budget) ++kk;
    BigInt n = count_in_power(sigma_i, v, Word(1, d.anchor), kk);
    out.scaled_k = kk;
    if (auto t = spectral.theta(i).as_integer()) {
      BigInt p = boost::multiprecision::pow(*t, kk);
      out.scaled_exact = Rational(n) / Rational(p);
      out.scaled = to_double(*out.scaled_exact);
    } else {
      long double th = spectral.theta(i).value();
      out.scaled = static_cast<double>(
          std::exp(std::log(static_cast<long double>(to_double(n))) - kk * std::log(th)));
      if (n == 0) out.scaled = 0.0;
    }
  }
  return out;
}

UniformityReport uniformity_check(const Substitution& sigma, const ComponentChain& chain,
                                  const SpectralProfile& spectral, std::size_t i,
                                  const Word& v, std::size_t n,
                                  const std::vector<std::size_t>& offsets,
                                  std::uint64_t budget) {
  require_level(chain, i);
  if (n == 0) throw ArgumentError("window count must be positive");
  Substitution sigma_i = sub_substitution(sigma, chain, i);
  require_word(sigma_i, i, v);

  auto table = cylinder_table(sigma, chain, spectral, i, v.size());
  auto fresh = [&](char c) {
    return i == 1 || chain.level_of(c) == static_cast<int>(i);
  };
  double num = -1, den = 0;
  for (const auto& c : table) {
    if (c.word == v) {
      if (c.infinite) throw ArgumentError("[" + v + "] has infinite measure");
      num = c.value;
    }
    if (fresh(c.word[0])) {
      if (c.infinite) throw ArgumentError("the return set has infinite measure");
      den += c.value;
    }
  }
  UniformityReport rep;
  rep.target = num / den;

  // The one-sided point, letter by letter.
  Word pattern = v;
  std::function<std::optional<char>()> next;
  Word lead;
  std::size_t lead_pos = 0;
  std::optional<PowerStream> stream;
  if (i == 1) {
    if (is_empty_bottom(sigma, chain)) throw ArgumentError("the bottom level is empty");
    // A letter that starts its own image under some power.
    char a = 0;
    unsigned p = 0;
    for (char c : sigma_i.alphabet().letters()) {
      char x = c;
      for (unsigned s = 1; s <= sigma_i.alphabet().size(); ++s) {
        x = sigma_i.image(x).front();
        if (x == c) {
          a = c;
          p = s;
          break;
        }
      }
      if (a) break;
    }
    LengthTable lengths(sigma_i);
    unsigned k = p;
    while (lengths.at(k, a) < budget && k < 64 * p) k += p;
    stream.emplace(sigma_i, Word(1, a), k);
    next = [&]() { return stream->next(); };
  } else {
    SeedPair seed = find_seed_pair(sigma, chain, i);
    if (seed.v.empty()) throw ArgumentError("the level has no quasi-fixed point to stream");
    Substitution tau = sigma_i;
    Word tail = seed.v;
    if (seed.orientation == Orientation::reverse) {
      tau = sigma_i.reversed();
      tail = Word(tail.rbegin(), tail.rend());
      pattern = Word(v.rbegin(), v.rend());
    }
    // b v tau^k(v) tau^2k(v) ...
    lead = Word(1, seed.b) + tail;
    unsigned power = 0;
    next = [&, tau, tail, k = seed.k, power]() mutable -> std::optional<char> {
      if (lead_pos < lead.size()) return lead[lead_pos++];
      for (;;) {
        if (stream)
          if (auto c = stream->next()) return c;
        power += k;
        stream.emplace(tau, tail, power);
      }
    };
  }

  std::size_t last = 0;
  for (auto j : offsets) last = std::max(last, j);
  const std::size_t needed_returns = last + n + 1;
  std::vector<std::uint64_t> returns, starts;
  std::deque<char> window;
  std::uint64_t pos = 0, stop = kSat;
  while (pos < stop) {
    if (pos >= budget) throw BudgetExceeded("stream budget exhausted before enough returns");
    auto c = next();
    if (!c) throw BudgetExceeded("the streamed point ended");
    if (fresh(*c) && returns.size() < needed_returns) {
      returns.push_back(pos);
      if (returns.size() == needed_returns) stop = pos + pattern.size();
    }
    window.push_back(*c);
    if (window.size() > pattern.size()) window.pop_front();
    if (window.size() == pattern.size() &&
        std::equal(window.begin(), window.end(), pattern.begin()))
      starts.push_back(pos + 1 - pattern.size());
    ++pos;
  }
  for (auto j : offsets) {
    std::uint64_t lo = returns[j], hi = returns[j + n];
    auto first = std::lower_bound(starts.begin(), starts.end(), lo);
    auto end = std::upper_bound(starts.begin(), starts.end(), hi + 1 - pattern.size());
    double count = hi + 1 >= lo + pattern.size() && end > first ? double(end - first) : 0.0;
    double ratio = count / static_cast<double>(n);
    rep.ratios.push_back(ratio);
    rep.deviations.push_back(std::abs(ratio - rep.target));
    rep.max_deviation = std::max(rep.max_deviation, rep.deviations.back());
  }
  return rep;
}

}  // namespace subshift
