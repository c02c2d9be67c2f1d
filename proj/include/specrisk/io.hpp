#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "specrisk/errors.hpp"
#include "specrisk/evaluate.hpp"
#include "specrisk/measure.hpp"

namespace specrisk {

/// Shortest decimal string that parses back to exactly the same double.
inline std::string format_double(double v) {
  char buf[64];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

namespace detail {

inline void require_keys(const nlohmann::json& obj,
                         const std::vector<std::string>& allowed,
                         const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const auto& k : allowed) known = known || it.key() == k;
    if (!known) throw ParseError("unknown key \"" + it.key() + "\" in " + where);
  }
  for (const auto& k : allowed)
    if (!obj.contains(k)) throw ParseError("missing key \"" + k + "\" in " + where);
}

inline double number_at(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number()) throw ParseError(where + " must be a number");
  return j.get<double>();
}

}  // namespace detail

/// Parses the measure JSON schema. The schema is strict: unknown keys
/// are errors, so a typo in "alpha"/"weight" cannot silently vanish.
inline SpectralMeasure measure_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("measure must be a JSON object");
  if (!j.contains("type") || !j.at("type").is_string())
    throw ParseError("measure needs a string \"type\" field");
  const std::string type = j.at("type").get<std::string>();

  if (type == "kusuoka") {
    detail::require_keys(j, {"type", "atoms"}, "kusuoka measure");
    const auto& atoms_json = j.at("atoms");
    if (!atoms_json.is_array()) throw ParseError("\"atoms\" must be an array");
    std::vector<KusuokaMeasure::Atom> atoms;
    for (const auto& a : atoms_json) {
      if (!a.is_object()) throw ParseError("each atom must be an object");
      detail::require_keys(a, {"alpha", "weight"}, "atom");
      atoms.push_back({detail::number_at(a.at("alpha"), "\"alpha\""),
                       detail::number_at(a.at("weight"), "\"weight\"")});
    }
    return SpectralMeasure(make_kusuoka(std::move(atoms)));
  }

  if (type == "dual_utility") {
    detail::require_keys(j, {"type", "breakpoints", "atom_at_one"}, "dual_utility measure");
    const auto& bps_json = j.at("breakpoints");
    if (!bps_json.is_array()) throw ParseError("\"breakpoints\" must be an array");
    std::vector<DualUtilityCdf::Breakpoint> bps;
    for (const auto& b : bps_json) {
      if (!b.is_array() || b.size() != 2)
        throw ParseError("each breakpoint must be a [t, w] pair");
      bps.push_back({detail::number_at(b.at(0), "breakpoint t"),
                     detail::number_at(b.at(1), "breakpoint w")});
    }
    double atom = detail::number_at(j.at("atom_at_one"), "\"atom_at_one\"");
    return SpectralMeasure(DualUtilityCdf(std::move(bps), atom));
  }

  throw ParseError("unknown measure type \"" + type + "\"");
}

inline nlohmann::json measure_to_json(const SpectralMeasure& m) {
  nlohmann::json j;
  if (m.holds_kusuoka()) {
    j["type"] = "kusuoka";
    j["atoms"] = nlohmann::json::array();
    KusuokaMeasure mu = m.as_kusuoka();
    for (const auto& a : mu.atoms())
      j["atoms"].push_back({{"alpha", a.alpha}, {"weight", a.weight}});
  } else {
    DualUtilityCdf w = m.as_dual_utility();
    j["type"] = "dual_utility";
    j["breakpoints"] = nlohmann::json::array();
    for (const auto& b : w.breakpoints())
      j["breakpoints"].push_back({b.t, b.w});
    j["atom_at_one"] = w.atom_at_one();
  }
  return j;
}

inline SpectralMeasure load_measure(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open measure file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return measure_from_json(j);
}

/// Loads a sample file: one finite decimal per line, blank lines
/// ignored, anything else is a hard error naming the line.
inline EmpiricalSample load_sample(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open sample file: " + path);
  std::vector<double> values;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    std::size_t end = line.find_last_not_of(" \t\r");
    std::string token = line.substr(start, end - start + 1);
    char* rest = nullptr;
    double v = std::strtod(token.c_str(), &rest);
    if (rest == token.c_str() || *rest != '\0' || !std::isfinite(v))
      throw ParseError(path + ":" + std::to_string(line_no) +
                       ": not a finite decimal: \"" + token + "\"");
    values.push_back(v);
  }
  return EmpiricalSample(std::move(values));
}

}  // namespace specrisk
