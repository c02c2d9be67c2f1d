// Command-line frontend for the spectral risk measure library.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "specrisk/specrisk.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitEmpty = 3;
constexpr int kExitUnsupported = 4;

using specrisk::format_double;

int run_degree(const std::string& path, double p, bool json_mode) {
  specrisk::SpectralMeasure m = specrisk::load_measure(path);
  specrisk::DegreeReport rep = specrisk::degree(m, p);
  if (json_mode) {
    nlohmann::json j;
    j["p"] = rep.p;
    j["degree"] = rep.value;
    j["branch"] = specrisk::to_string(rep.branch);
    if (rep.cross_residual)
      j["cross_residual"] = *rep.cross_residual;
    else
      j["cross_residual"] = nullptr;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "p               " << format_double(rep.p) << "\n"
              << "degree          " << format_double(rep.value) << "\n"
              << "branch          " << specrisk::to_string(rep.branch) << "\n";
    std::cout << "cross_residual  ";
    if (rep.cross_residual)
      std::cout << format_double(*rep.cross_residual) << "\n";
    else
      std::cout << "n/a\n";
  }
  return 0;
}

int run_equivalent_cvar(const std::string& path, double p) {
  specrisk::SpectralMeasure m = specrisk::load_measure(path);
  std::cout << format_double(specrisk::equivalent_cvar(m, p)) << "\n";
  return 0;
}

int run_evaluate(const std::string& measure_path, const std::string& sample_path) {
  specrisk::SpectralMeasure m = specrisk::load_measure(measure_path);
  specrisk::EmpiricalSample sample = specrisk::load_sample(sample_path);
  std::cout << format_double(specrisk::rho_empirical(m, sample)) << "\n";
  return 0;
}

int run_compare(const std::string& a_path, const std::string& b_path, double p,
                double theta) {
  if (p <= -1.0) {
    std::cerr << "error: compare requires p > -1 (Z_p has infinite mean otherwise)\n";
    return kExitUnsupported;
  }
  specrisk::SpectralMeasure a = specrisk::load_measure(a_path);
  specrisk::SpectralMeasure b = specrisk::load_measure(b_path);
  specrisk::ZpFamily fam(p, theta);
  specrisk::EquivalenceReport rep = specrisk::check_equivalence(a, b, fam, 1e-9);
  std::cout << "degree_a  " << format_double(rep.degree_a) << "\n"
            << "degree_b  " << format_double(rep.degree_b) << "\n"
            << "risk_a    " << format_double(rep.risk_a) << "\n"
            << "risk_b    " << format_double(rep.risk_b) << "\n"
            << "verdict   " << (rep.risks_equal ? "EQUAL" : "UNEQUAL") << "\n";
  return 0;
}

int run_curve(const std::string& path, double p_min, double p_max, int steps,
              const std::string& out_path) {
  if (!(p_min < p_max) || steps < 2) {
    std::cerr << "error: need p-min < p-max and steps >= 2\n";
    return kExitParse;
  }
  specrisk::SpectralMeasure m = specrisk::load_measure(path);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file " << out_path << "\n";
    return kExitParse;
  }
  out << "p,degree,branch\n";
  for (int i = 0; i < steps; ++i) {
    double p = p_min + (p_max - p_min) * static_cast<double>(i) / (steps - 1);
    specrisk::DegreeReport rep = specrisk::degree(m, p);
    out << format_double(p) << "," << format_double(rep.value) << ","
        << specrisk::to_string(rep.branch) << "\n";
  }
  return 0;
}

int run_convert(const std::string& in_path, const std::string& to,
                const std::string& out_path) {
  specrisk::SpectralMeasure m = specrisk::load_measure(in_path);
  nlohmann::json j;
  if (to == "kusuoka")
    j = specrisk::measure_to_json(specrisk::SpectralMeasure(m.as_kusuoka()));
  else
    j = specrisk::measure_to_json(specrisk::SpectralMeasure(m.as_dual_utility()));
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file " << out_path << "\n";
    return kExitParse;
  }
  out << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral risk measures: degrees of risk aversion, conversions and evaluation"};
  app.require_subcommand(1);

  std::string measure_path, measure_path_b, sample_path, out_path, to_repr;
  double p = 1.0, theta = 1.0, p_min = -1.0, p_max = 1.0;
  int steps = 2;
  bool json_mode = false;

  auto* degree_cmd = app.add_subcommand("degree", "Degree of risk aversion r_p");
  degree_cmd->add_option("measure", measure_path, "measure JSON file")->required();
  degree_cmd->add_option("-p,--p", p, "degree parameter p")->required();
  degree_cmd->add_flag("--json", json_mode, "machine-readable output");

  auto* eq_cmd = app.add_subcommand("equivalent-cvar",
                                    "CVaR level with the same p-degree");
  eq_cmd->add_option("measure", measure_path, "measure JSON file")->required();
  eq_cmd->add_option("-p,--p", p, "degree parameter p")->required();

  auto* eval_cmd = app.add_subcommand("evaluate", "rho(Z) on an empirical sample");
  eval_cmd->add_option("measure", measure_path, "measure JSON file")->required();
  eval_cmd->add_option("samples", sample_path, "sample file, one loss per line")->required();

  auto* cmp_cmd = app.add_subcommand("compare",
                                     "Degrees and Z_p risks of two measures");
  cmp_cmd->add_option("a", measure_path, "first measure JSON file")->required();
  cmp_cmd->add_option("b", measure_path_b, "second measure JSON file")->required();
  cmp_cmd->add_option("-p,--p", p, "degree parameter p")->required();
  cmp_cmd->add_option("--theta", theta, "Z_p scale parameter")->capture_default_str();

  auto* curve_cmd = app.add_subcommand("curve", "Export r_p over a p grid as CSV");
  curve_cmd->add_option("measure", measure_path, "measure JSON file")->required();
  curve_cmd->add_option("--p-min", p_min, "grid lower end")->required();
  curve_cmd->add_option("--p-max", p_max, "grid upper end")->required();
  curve_cmd->add_option("--steps", steps, "number of grid points")->required();
  curve_cmd->add_option("--out", out_path, "output CSV path")->required();

  auto* conv_cmd = app.add_subcommand("convert", "Convert between representations");
  conv_cmd->add_option("input", measure_path, "measure JSON file")->required();
  conv_cmd->add_option("--to", to_repr, "target representation")
      ->required()
      ->check(CLI::IsMember({"kusuoka", "dual_utility"}));
  conv_cmd->add_option("--out", out_path, "output JSON path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (degree_cmd->parsed()) return run_degree(measure_path, p, json_mode);
    if (eq_cmd->parsed()) return run_equivalent_cvar(measure_path, p);
    if (eval_cmd->parsed()) return run_evaluate(measure_path, sample_path);
    if (cmp_cmd->parsed()) return run_compare(measure_path, measure_path_b, p, theta);
    if (curve_cmd->parsed()) return run_curve(measure_path, p_min, p_max, steps, out_path);
    if (conv_cmd->parsed()) return run_convert(measure_path, to_repr, out_path);
  } catch (const specrisk::EmptySample& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitEmpty;
  } catch (const specrisk::UnsupportedExponent& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return 0;
}
