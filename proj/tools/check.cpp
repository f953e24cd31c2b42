#include "check.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "subshift/auxiliary.hpp"
#include "subshift/input.hpp"

namespace subshift::cli {

namespace {

constexpr double kTol = 1e-9;
constexpr std::size_t kMaxWindow = 3;

struct Outcome {
  bool passed = true;
  std::string detail;
  void fail(const std::string& what) {
    if (passed) detail = what;
    passed = false;
  }
};

bool close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

Outcome aux_row_sums(const Substitution& sigma, const ComponentChain& chain) {
  Outcome o;
  for (std::size_t m = 1; m <= kMaxWindow; ++m) {
    AuxiliarySubstitution aux(sigma, chain, m);
    IntMatrix M = aux.matrix();
    for (std::size_t r = 0; r < aux.size(); ++r) {
      std::int64_t s = 0;
      for (std::size_t c = 0; c < aux.size(); ++c) s += M(r, c);
      auto want = static_cast<std::int64_t>(sigma.image(aux.word(r)[0]).size());
      if (s != want) o.fail("m=" + std::to_string(m) + " row " + aux.word(r));
    }
  }
  return o;
}

// (M^k)_{u,v} counts the m-windows of sigma^k(u) starting inside sigma^k(u_1).
Outcome aux_powers(const Substitution& sigma, const ComponentChain& chain) {
  Outcome o;
  for (std::size_t m = 2; m <= kMaxWindow; ++m) {
    AuxiliarySubstitution aux(sigma, chain, m);
    IntMatrix M = aux.matrix(), P = IntMatrix::identity(aux.size());
    for (unsigned k = 1; k <= 5; ++k) {
      P = P * M;
      for (std::size_t r = 0; r < aux.size(); ++r) {
        const Word& u = aux.word(r);
        auto lengths = image_lengths(sigma, k);
        std::uint64_t head = lengths[sigma.alphabet().index(u[0])];
        if (head > 200000) return o;
        Word w = apply(sigma, u, k);
        for (std::size_t c = 0; c < aux.size(); ++c) {
          std::int64_t n = 0;
          const Word& v = aux.word(c);
          for (std::uint64_t p = 0; p < head; ++p)
            if (w.compare(p, m, v) == 0) ++n;
          if (n != P(r, c))
            o.fail("m=" + std::to_string(m) + " k=" + std::to_string(k) + " (" + u + "," + v + ")");
        }
      }
    }
  }
  return o;
}

Outcome g_block_bound(const Substitution& sigma, const ComponentChain& chain) {
  Outcome o;
  for (std::size_t m = 2; m <= kMaxWindow; ++m) {
    AuxiliarySubstitution aux(sigma, chain, m);
    IntMatrix M = aux.matrix();
    for (std::size_t i = 1; i + 1 <= chain.size(); ++i) {
      CoordRange g = aux.g_block(i);
      if (g.empty()) continue;
      std::vector<std::size_t> idx;
      for (std::size_t k = g.begin; k < g.end; ++k) idx.push_back(k);
      IntMatrix G = M.sub(idx, idx), P = G;
      for (unsigned k = 1; k <= 6; ++k) {
        for (std::size_t r = 0; r < P.rows(); ++r) {
          std::int64_t s = 0;
          for (std::size_t c = 0; c < P.cols(); ++c) s += P(r, c);
          if (s > static_cast<std::int64_t>(m) - 1)
            o.fail("m=" + std::to_string(m) + " level " + std::to_string(i));
        }
        P = P * G;
      }
    }
  }
  return o;
}

Outcome eigen_residuals(const Substitution& sigma, const ComponentChain& chain,
                        const SpectralProfile& spectral) {
  Outcome o;
  if (spectral.theta_is_one(spectral.i_max())) {
    o.detail = "lambda = 1: nothing to check";
    return o;
  }
  for (std::size_t m = 1; m <= kMaxWindow; ++m) {
    EigenPair e = pf_vectors(sigma, chain, spectral, m);
    auto M = AuxiliarySubstitution(sigma, chain, m).matrix().cast<double>();
    auto Ma = M * e.alpha;
    auto bM = e.beta * M;
    double na = 0, nb = 0;
    for (double x : e.alpha) na = std::max(na, std::abs(x));
    for (double x : e.beta) nb = std::max(nb, std::abs(x));
    for (std::size_t k = 0; k < Ma.size(); ++k) {
      if (std::abs(Ma[k] - e.eigenvalue * e.alpha[k]) > kTol * e.eigenvalue * na)
        o.fail("right residual, m=" + std::to_string(m));
      if (std::abs(bM[k] - e.eigenvalue * e.beta[k]) > kTol * e.eigenvalue * nb)
        o.fail("left residual, m=" + std::to_string(m));
    }
  }
  return o;
}

Outcome gamma_first_letter(const Substitution& sigma, const ComponentChain& chain,
                           const SpectralProfile& spectral) {
  Outcome o;
  for (std::size_t i = 1; i <= chain.size(); ++i) {
    if (spectral.theta_is_one(i)) continue;
    for (std::size_t m = 2; m <= kMaxWindow; ++m) {
      LimitData ld = limit_data(sigma, chain, spectral, m, i);
      std::map<char, double> first;
      for (std::size_t k = ld.restricted.begin; k < ld.restricted.end; ++k) {
        char c = ld.coords[k][0];
        auto [it, fresh] = first.emplace(c, ld.right[k]);
        if (!fresh && !close(it->second, ld.right[k], kTol))
          o.fail("level " + std::to_string(i) + " m=" + std::to_string(m) + " at " + ld.coords[k]);
      }
    }
  }
  return o;
}

// Sum over extensions of v by one letter on the given side, at window |v|+1.
Outcome consistency(const Substitution& sigma, const ComponentChain& chain,
                    const SpectralProfile& spectral, bool left_side) {
  Outcome o;
  for (std::size_t i = 1; i <= chain.size(); ++i) {
    MeasureDescriptor d = measure_type(sigma, chain, spectral, i);
    if (d.type != MeasureType::finite_ergodic && d.type != MeasureType::infinite_radon) continue;
    for (std::size_t m = 1; m < kMaxWindow; ++m) {
      auto small = cylinder_table(sigma, chain, spectral, i, m);
      auto big = cylinder_table(sigma, chain, spectral, i, m + 1);
      for (const auto& c : small) {
        double sum = 0;
        bool inf = false;
        for (const auto& e : big) {
          bool ext = left_side ? e.word.compare(1, m, c.word) == 0
                               : e.word.compare(0, m, c.word) == 0;
          if (!ext) continue;
          if (e.infinite)
            inf = true;
          else
            sum += e.value;
        }
        if (c.infinite ? !inf : (inf || !close(sum, c.value, kTol)))
          o.fail("level " + std::to_string(i) + " [" + c.word + "]");
      }
    }
  }
  return o;
}

Outcome normalization(const Substitution& sigma, const ComponentChain& chain,
                      const SpectralProfile& spectral) {
  Outcome o;
  for (std::size_t i = 1; i <= chain.size(); ++i) {
    if (measure_type(sigma, chain, spectral, i).type != MeasureType::finite_ergodic) continue;
    for (std::size_t m = 1; m <= kMaxWindow; ++m) {
      double s = 0;
      for (const auto& c : cylinder_table(sigma, chain, spectral, i, m)) s += c.value;
      if (!close(s, 1.0, kTol)) o.fail("level " + std::to_string(i) + " m=" + std::to_string(m));
    }
  }
  return o;
}

Outcome empirical(const Substitution& sigma, const ComponentChain& chain,
                  const SpectralProfile& spectral) {
  Outcome o;
  std::ostringstream worst;
  double max_dev = 0;
  for (std::size_t i = 1; i <= chain.size(); ++i) {
    if (measure_type(sigma, chain, spectral, i).type != MeasureType::finite_ergodic) continue;
    for (const auto& c : cylinder_table(sigma, chain, spectral, i, 1)) {
      auto f = empirical_frequency(sigma, chain, spectral, i, c.word, 1'000'000);
      double dev = std::abs(f.ratio - c.value);
      if (dev > max_dev) {
        max_dev = dev;
        worst.str("");
        worst << "level " << i << " [" << c.word << "] deviation " << dev;
      }
      if (dev > 1e-3) o.fail(worst.str());
    }
  }
  if (o.passed) o.detail = "max deviation " + std::to_string(max_dev);
  return o;
}

Outcome round_trip(std::string_view source) {
  Outcome o;
  InputSpec a = parse_input(source);
  InputSpec b = parse_input(emit(a.substitution));
  if (!(a.substitution == b.substitution) || emit(b.substitution) != emit(a.substitution))
    o.fail("normalized form changed");
  return o;
}

}  // namespace

Json run_checks(std::string_view source) {
  InputSpec in = parse_input(source);
  const Substitution& sigma = in.substitution;
  ComponentChain chain = component_chain(sigma);
  SpectralProfile spectral(chain);

  std::vector<std::pair<std::string, std::function<Outcome()>>> suite = {
      {"round_trip", [&] { return round_trip(source); }},
      {"aux_row_sums", [&] { return aux_row_sums(sigma, chain); }},
      {"aux_powers", [&] { return aux_powers(sigma, chain); }},
      {"g_block_bound", [&] { return g_block_bound(sigma, chain); }},
      {"eigen_residuals", [&] { return eigen_residuals(sigma, chain, spectral); }},
      {"gamma_first_letter", [&] { return gamma_first_letter(sigma, chain, spectral); }},
      {"kolmogorov_consistency", [&] { return consistency(sigma, chain, spectral, false); }},
      {"shift_invariance", [&] { return consistency(sigma, chain, spectral, true); }},
      {"normalization", [&] { return normalization(sigma, chain, spectral); }},
      {"empirical_vs_exact", [&] { return empirical(sigma, chain, spectral); }},
  };
  Json checks = Json::array();
  bool all = true;
  for (auto& [name, run] : suite) {
    Outcome o = run();
    all = all && o.passed;
    checks.push_back({{"name", name}, {"passed", o.passed}, {"detail", o.detail}});
  }
  Json j;
  j["alphabet"] = letters_json(sigma.alphabet());
  j["checks"] = checks;
  j["passed"] = all;
  return j;
}

}  // namespace subshift::cli
