#include "report.hpp"

#include <algorithm>

namespace subshift::cli {

namespace {

Json rationals(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json algebraic_json(const AlgebraicReal& x) {
  Json j;
  j["float"] = x.value();
  j["char_poly"] = x.polynomial().str();
  j["interval"] = {to_string(x.lower()), to_string(x.upper())};
  return j;
}

Json seed_pair_json(const SeedPair& s) {
  Json j;
  j["a"] = std::string(1, s.a);
  j["b"] = std::string(1, s.b);
  j["k"] = s.k;
  j["u"] = s.u;
  j["v"] = s.v;
  j["orientation"] = s.orientation == Orientation::forward ? "forward" : "reverse";
  j["identity"] = "sigma^" + std::to_string(s.k) + "(" + s.pair_word() + ") = " + s.expansion();
  return j;
}

std::string form_name(BilateralForm f) {
  switch (f) {
    case BilateralForm::plain: return "plain";
    case BilateralForm::left_fixed: return "left_fixed";
    case BilateralForm::right_fixed: return "right_fixed";
    case BilateralForm::middle: return "middle";
  }
  return {};
}

Json point_json(const PointSeed& p) {
  Json j;
  j["notation"] = p.notation();
  switch (p.kind) {
    case PointKind::fixed_letter_power:
      j["kind"] = "fixed_letter_power";
      j["letter"] = std::string(1, p.fixed);
      j["shift_periodic"] = true;
      return j;
    case PointKind::quasi_fixed:
      j["kind"] = "quasi_fixed";
      j["primitive_type"] = p.primitive_type;
      return j;
    case PointKind::bilateral_limit:
      break;
  }
  j["kind"] = "bilateral_limit";
  j["form"] = form_name(p.form);
  j["period"] = p.period;
  if (p.left) j["left"] = std::string(1, p.left);
  if (p.right) j["right"] = std::string(1, p.right);
  if (p.fixed) j["fixed"] = std::string(1, p.fixed);
  if (p.form == BilateralForm::middle) j["middle"] = p.middle;
  j["shift_periodic"] = p.shift_periodic;
  return j;
}

}  // namespace

Json letters_json(const Alphabet& a) {
  Json out = Json::array();
  for (char c : a.letters()) out.push_back(std::string(1, c));
  return out;
}

Json chain_json(const ComponentChain& chain) {
  Json levels = Json::array();
  for (std::size_t i = 1; i <= chain.size(); ++i) {
    Json l;
    l["level"] = i;
    l["letters"] = letters_json(chain.level(i));
    l["new_letters"] = letters_json(chain.fresh(i));
    levels.push_back(l);
  }
  Json j;
  j["levels"] = levels;
  j["witness_k"] = chain.witness_k;
  return j;
}

Json matrix_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(row);
  }
  return out;
}

Json spectral_json(const SpectralProfile& spectral) {
  auto classes = spectral.equality_classes();
  Json levels = Json::array();
  for (std::size_t i = 1; i <= spectral.levels(); ++i) {
    Json theta = algebraic_json(spectral.theta(i));
    if (auto t = spectral.theta(i).as_integer())
      theta["exact"] = t->str();
    else
      theta["exact"] = nullptr;
    for (const auto& cls : classes)
      if (std::find(cls.begin(), cls.end(), i) != cls.end()) theta["exact_eq_classes"] = cls;
    Json l;
    l["level"] = i;
    l["theta"] = theta;
    l["theta_is_one"] = spectral.theta_is_one(i);
    l["convergent"] = spectral.convergent(i);
    levels.push_back(l);
  }
  Json j;
  j["levels"] = levels;
  j["exact_eq_classes"] = classes;
  j["lambda"] = algebraic_json(spectral.lambda());
  j["i_min"] = spectral.i_min();
  j["i_max"] = spectral.i_max();
  return j;
}

Json eigen_json(const EigenPair& e) {
  Json j;
  j["m"] = e.m;
  j["coords"] = e.coords;
  j["eigenvalue"] = e.eigenvalue;
  j["alpha"] = e.alpha;
  j["beta"] = e.beta;
  if (e.alpha_exact) j["alpha_exact"] = rationals(*e.alpha_exact);
  if (e.beta_exact) j["beta_exact"] = rationals(*e.beta_exact);
  return j;
}

Json classification_json(const DecompositionReport& d) {
  Json levels = Json::array();
  for (const auto& r : d.levels) {
    Json l;
    l["level"] = r.level;
    l["case"] = r.case_tag;
    l["x_nonempty"] = r.x_nonempty;
    if (r.seed) l["seed_pair"] = seed_pair_json(*r.seed);
    if (r.quasi_fixed) l["quasi_fixed"] = point_json(*r.quasi_fixed);
    if (r.positively_recurrent) l["positively_recurrent"] = *r.positively_recurrent;
    Json seeds = Json::array();
    for (const auto& p : r.periodic) seeds.push_back(point_json(p));
    l["seeds"] = seeds;
    if (!r.periodic.empty()) l["dedup_radius"] = r.dedup_radius;
    levels.push_back(l);
  }
  Json sets = Json::array();
  for (const auto& m : d.census.minimal_sets) sets.push_back(m.name());
  Json j;
  j["levels"] = levels;
  j["minimal_sets"] = sets;
  j["s_infinity_in_x"] = d.census.s_infinity_in_x;
  j["unique_ergodicity"] = {{"verdict", d.census.verdict.uniquely_ergodic},
                            {"clause", d.census.verdict.clause.empty()
                                           ? Json(nullptr)
                                           : Json(d.census.verdict.clause)}};
  return j;
}

Json descriptor_json(const MeasureDescriptor& d) {
  Json j;
  j["level"] = d.level;
  j["type"] = to_string(d.type);
  j["anchor_letter"] = std::string(1, d.anchor);
  if (d.type == MeasureType::infinite_radon) j["i_prime"] = d.i_prime;
  Json atoms = Json::array();
  for (const auto& a : d.atoms) atoms.push_back({{"point", a.point}, {"finite", a.finite}});
  j["orbit_atoms"] = atoms;
  return j;
}

Json cylinder_json(const CylinderValue& c) {
  Json j;
  j["word"] = c.word;
  if (c.infinite) {
    j["value"] = "inf";
    j["float"] = "inf";
  } else if (c.exact) {
    j["value"] = to_string(*c.exact);
    j["float"] = c.value;
  } else {
    j["value"] = c.value;
    j["float"] = c.value;
  }
  j["infinite"] = c.infinite;
  j["exact"] = c.exact.has_value();
  if (c.field) j["field"] = algebraic_json(*c.field);
  j["anchor_letter"] = std::string(1, c.anchor);
  return j;
}

Json error_json(const Error& e) {
  Json j;
  j["error"] = {{"kind", e.kind()}, {"code", static_cast<int>(e.code())}, {"message", e.what()}};
  return j;
}

}  // namespace subshift::cli
