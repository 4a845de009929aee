#include "coseq/export.hpp"

#include <cstdio>

namespace coseq {

std::string format_rational(const Rat& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string format_double17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

nlohmann::ordered_json expansion_to_json(const FourierExpansion& expansion) {
  const FactoredModulus& mod = expansion.params.mod;
  nlohmann::ordered_json j;
  j["a"] = mod.value;
  j["R"] = mod.radical;
  j["Q"] = mod.radical_totient;
  j["phi"] = mod.totient;
  j["period"] = expansion.params.period;
  j["c0"] = {numerator(expansion.c0).str(), denominator(expansion.c0).str()};
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (const auto& c : expansion.coeffs) coeffs.push_back({c.real(), c.imag()});
  j["coefficients"] = std::move(coeffs);
  nlohmann::ordered_json residues = nlohmann::ordered_json::array();
  for (const Rat& r : expansion.residues.entries)
    residues.push_back({numerator(r).str(), denominator(r).str()});
  j["residues"] = std::move(residues);
  return j;
}

}  // namespace coseq
