#pragma once

#include <string>
#include <vector>

#include "mosaic/congruence.hpp"
#include "mosaic/quad.hpp"
#include "mosaic/sequences.hpp"

namespace mosaic {

enum class AnalyticTarget {
    PiInverse,
    PiSquaredInverse,
    None,
};

std::string target_name(AnalyticTarget t);
AnalyticTarget target_from_name(const std::string& name);

// One catalog entry. poly holds the congruence-normalized polynomial
// coefficients (a, b[, c]); scale is the factor lambda with
// lambda * sum = target. The two are kept separate because several entries
// check congruences on a rescaled sum.
struct SeriesSpec {
    std::string id;
    SequenceKind kind;
    MultiQuadElement z;
    std::vector<MultiQuadElement> poly; // length 2 (a+bn) or 3 (a+bn+cn^2)
    MultiQuadElement scale;
    AnalyticTarget target = AnalyticTarget::None;
    long long p_min = 2; // congruences claimed for primes p > p_min
    bool convergent = true;
    std::vector<CongruenceTarget> targets;

    // Throws ValidationError naming the violated invariant.
    void validate() const;

    bool operator==(const SeriesSpec& o) const = default;
};

// The seven built-in entries, ids EX1..EX7.
const std::vector<SeriesSpec>& builtin_catalog();
SeriesSpec builtin(const std::string& id); // throws UnknownSeries

// Catalog file format: a UTF-8 JSON array of entries. Rationals are strings
// "n/d"; multi-quad elements are arrays of {radicand, coeff} in ascending
// radicand order. See docs/catalog-format.md.
std::vector<SeriesSpec> load_catalog(const std::string& json_text);
std::vector<SeriesSpec> load_catalog_file(const std::string& path);

std::string serialize_catalog(const std::vector<SeriesSpec>& specs);

// Builtins plus the entries of an optional user catalog file. A user id that
// collides with a builtin id is rejected (DuplicateId).
std::vector<SeriesSpec> merged_catalog(const std::string& catalog_path);

} // namespace mosaic
