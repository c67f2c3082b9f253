#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sea/error.hpp"
#include "sea/matrix.hpp"
#include "sea/mv_ea.hpp"
#include "sea/spectral.hpp"

namespace sea {

// {"breakpoints": [...], "projections": [element JSON, ...], "L": x, "U": y}
template <class E>
nlohmann::json to_json(const SpectralFamily<E>& f) {
  nlohmann::json projections = nlohmann::json::array();
  for (const auto& p : f.projections) projections.push_back(to_json(p));
  return {{"breakpoints", f.breakpoints}, {"projections", projections}, {"L", f.lower}, {"U", f.upper}};
}

template <class E, class Parse>
SpectralFamily<E> family_from_json(const nlohmann::json& j, Parse parse) {
  SpectralFamily<E> f;
  try {
    f.breakpoints = j.at("breakpoints").get<std::vector<double>>();
    for (const auto& p : j.at("projections")) f.projections.push_back(parse(p));
    f.lower = j.at("L").get<double>();
    f.upper = j.at("U").get<double>();
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("malformed spectral family JSON: ") + ex.what());
  }
  if (f.breakpoints.empty() || f.projections.size() != f.breakpoints.size() + 1) {
    throw InputError("spectral family needs m breakpoints and m + 1 projections");
  }
  if (!std::is_sorted(f.breakpoints.begin(), f.breakpoints.end()) ||
      std::adjacent_find(f.breakpoints.begin(), f.breakpoints.end()) != f.breakpoints.end()) {
    throw InputError("spectral family breakpoints must be strictly increasing");
  }
  return f;
}

inline SpectralFamily<HermitianMatrix> matrix_family_from_json(const nlohmann::json& j) {
  return family_from_json<HermitianMatrix>(j, [](const nlohmann::json& p) {
    return HermitianMatrix(matrix_from_json(p));
  });
}

inline SpectralFamily<RealFunction> mv_family_from_json(const nlohmann::json& j) {
  return family_from_json<RealFunction>(j, [](const nlohmann::json& p) { return function_from_json(p); });
}

}  // namespace sea
