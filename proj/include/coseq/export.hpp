#pragma once

#include <string>

#include <json.hpp>

#include "coseq/core.hpp"
#include "coseq/fourier.hpp"

namespace coseq {

// "num/den", always with an explicit denominator, for reproducible output.
std::string format_rational(const Rat& r);

// 17 significant digits, enough to round-trip a double.
std::string format_double17(double x);

// Coefficient export schema: ordered fields a, R, Q, phi, period, c0 as a
// [num, den] string pair, coefficients as [re, im] float pairs, residues as
// [num, den] string pairs. Integer-valued fields that can exceed double
// precision are carried as strings.
nlohmann::ordered_json expansion_to_json(const FourierExpansion& expansion);

}  // namespace coseq
