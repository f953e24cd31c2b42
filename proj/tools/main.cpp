#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "check.hpp"
#include "report.hpp"
#include "subshift/auxiliary.hpp"
#include "subshift/input.hpp"

using namespace subshift;
using subshift::cli::Json;

namespace {

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorCode::parse, "IoError", what) {}
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Loaded {
  Substitution sigma;
  ComponentChain chain;
  SpectralProfile spectral;
};

Loaded load(const std::string& path) {
  InputSpec in = parse_input(read_file(path));
  ComponentChain chain = component_chain(in.substitution);
  SpectralProfile spectral(chain);
  return {in.substitution, std::move(chain), std::move(spectral)};
}

Json measures_json(const Loaded& s) {
  Json levels = Json::array();
  for (std::size_t i = 1; i <= s.chain.size(); ++i) {
    MeasureDescriptor d = measure_type(s.sigma, s.chain, s.spectral, i);
    Json l = cli::descriptor_json(d);
    if (d.type == MeasureType::finite_ergodic || d.type == MeasureType::infinite_radon) {
      Json cyl = Json::array();
      for (std::size_t m = 1; m <= 2; ++m)
        for (const auto& c : cylinder_table(s.sigma, s.chain, s.spectral, i, m))
          cyl.push_back(cli::cylinder_json(c));
      l["cylinders"] = cyl;
    }
    levels.push_back(l);
  }
  return {{"levels", levels}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analyze substitutions of some primitive components"};
  app.require_subcommand(1);

  std::string file, word;
  std::size_t m = 0, level = 0;
  std::uint64_t length = 0;

  auto* analyze = app.add_subcommand("analyze", "Full report");
  auto* language_cmd = app.add_subcommand("language", "L_m(sigma)");
  auto* matrix = app.add_subcommand("matrix", "Incidence matrix of sigma or sigma^(m)");
  auto* spectral = app.add_subcommand("spectral", "Block spectra, optionally PF vectors of sigma^(m)");
  auto* classify_cmd = app.add_subcommand("classify", "Invariant-set decomposition and verdict");
  auto* measure = app.add_subcommand("measure", "Measure of a cylinder at one level");
  auto* simulate = app.add_subcommand("simulate", "Empirical frequency of a word");
  auto* check = app.add_subcommand("check", "Invariant suite on the input");

  for (auto* sub : {analyze, language_cmd, matrix, spectral, classify_cmd, measure, simulate, check})
    sub->add_option("FILE", file, "Substitution file")->required();
  language_cmd->add_option("-m", m, "Word length")->required()->check(CLI::PositiveNumber);
  matrix->add_option("-m", m, "Window of the auxiliary substitution")->check(CLI::PositiveNumber);
  spectral->add_option("-m", m, "Window for the PF vectors")->check(CLI::PositiveNumber);
  for (auto* sub : {measure, simulate}) {
    sub->add_option("-i", level, "Level")->required();
    sub->add_option("-v", word, "Word")->required();
  }
  simulate->add_option("-L", length, "Prefix length")->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(ErrorCode::parse);
  }

  Json out;
  int status = 0;
  try {
    if (*check) {
      out = cli::run_checks(read_file(file));
      status = out["passed"].get<bool>() ? 0 : 1;
    } else {
      Loaded s = load(file);
      out["alphabet"] = cli::letters_json(s.sigma.alphabet());
      if (*analyze) {
        out["chain"] = cli::chain_json(s.chain);
        out["matrix"] = cli::matrix_json(incidence_matrix(s.sigma));
        out["spectral"] = cli::spectral_json(s.spectral);
        out["classification"] = cli::classification_json(classify(s.sigma, s.chain, s.spectral));
        out["measures"] = measures_json(s);
      } else if (*language_cmd) {
        out["m"] = m;
        out["language"] = language(s.sigma, m);
      } else if (*matrix) {
        if (m == 0) {
          out["matrix"] = cli::matrix_json(incidence_matrix(s.sigma));
        } else {
          AuxiliarySubstitution aux(s.sigma, s.chain, m);
          out["m"] = m;
          out["coords"] = aux.words();
          Json images = Json::object();
          for (const auto& u : aux.words()) images[u] = aux.image_words(u);
          out["images"] = images;
          out["matrix"] = cli::matrix_json(aux.matrix());
        }
      } else if (*spectral) {
        out["chain"] = cli::chain_json(s.chain);
        out["spectral"] = cli::spectral_json(s.spectral);
        if (m > 0) out["eigenvectors"] = cli::eigen_json(pf_vectors(s.sigma, s.chain, s.spectral, m));
      } else if (*classify_cmd) {
        Json c = cli::classification_json(classify(s.sigma, s.chain, s.spectral));
        for (auto& [k, v] : c.items()) out[k] = v;
      } else if (*measure) {
        MeasureDescriptor d = measure_type(s.sigma, s.chain, s.spectral, level);
        CylinderValue c = cylinder_measure(s.sigma, s.chain, s.spectral, level, word);
        out["level"] = level;
        out["type"] = to_string(d.type);
        Json value = cli::cylinder_json(c);
        for (auto& [k, v] : value.items()) out[k] = v;
      } else if (*simulate) {
        auto f = empirical_frequency(s.sigma, s.chain, s.spectral, level, word, length);
        out["level"] = level;
        out["word"] = word;
        out["anchor_letter"] = std::string(1, f.anchor);
        out["k"] = f.k;
        out["L"] = f.length;
        out["count"] = f.count;
        out["ratio"] = f.ratio;
        if (f.scaled) {
          Json sc;
          sc["k"] = *f.scaled_k;
          sc["value"] = f.scaled_exact ? Json(to_string(*f.scaled_exact)) : Json(*f.scaled);
          sc["float"] = *f.scaled;
          out["scaled"] = sc;
        }
        CylinderValue c = cylinder_measure(s.sigma, s.chain, s.spectral, level, word);
        out["exact"] = cli::cylinder_json(c);
      }
    }
  } catch (const Error& e) {
    std::cerr << e.kind() << ": " << e.what() << '\n';
    std::cout << cli::error_json(e).dump(2) << '\n';
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    Json j;
    j["error"] = {{"kind", "InternalError"}, {"code", 1}, {"message", e.what()}};
    std::cout << j.dump(2) << '\n';
    return 1;
  }
  std::cout << out.dump(2) << '\n';
  return status;
}
