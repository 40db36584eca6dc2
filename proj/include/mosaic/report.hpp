#pragma once

#include <string>
#include <vector>

#include "mosaic/verify.hpp"

namespace mosaic {

// Deterministic JSON: primes ascending, components in canonical radicand
// order, fixed key order, residues as decimal strings, 2-space indent.
std::string report_to_json(const VerificationReport& report);
std::string reports_to_json(const std::vector<VerificationReport>& reports);

// One row per prime x component:
// series,prime,radicand,expected,actual,valuation,pass,applicable
// Valuation prints as an integer, ">=k" when only a lower bound was
// observed (modular path), or "inf".
std::string reports_to_csv(const std::vector<VerificationReport>& reports);

// One-line human summary, e.g.
// "EX1: 43 primes, 43 checks, 43 passed, 0 failed, 0 inapplicable".
std::string summary_line(const VerificationReport& report);

} // namespace mosaic
