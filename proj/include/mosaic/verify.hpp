#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mosaic/catalog.hpp"
#include "mosaic/congruence.hpp"

namespace mosaic {

// Sum of the first `terms` series terms A_n * poly(n) * z^n in exact
// multi-quadratic arithmetic.
MultiQuadElement accumulate_exact(const SeriesSpec& spec, unsigned long terms);

// Truncation at n = p-1, decomposed per radicand. Requires p > the series
// p_min. Radicands named by the congruence targets are always present
// (zero-filled).
std::map<long long, Rational> partial_sum_exact(const SeriesSpec& spec, long long p);

// The identical accumulation carried out over formal combinations with
// coefficients in Z/p^k. Componentwise equal to residue_of_rational applied
// to partial_sum_exact. Throws DenominatorNotInvertible when any denominator
// meets p (the prime is inapplicable, mirroring the p > p_0 exclusions).
std::map<long long, ResidueClass> partial_sum_modular(const SeriesSpec& spec,
                                                      long long p, unsigned k);

enum class VerifyPath {
    Exact,
    Modular,
    Both,              // run both, cross-check, report from the exact path
    ModularWithAudit,  // modular, plus an exact cross-check every Nth prime
};

std::string path_name(VerifyPath p);

struct VerifyOptions {
    VerifyPath path = VerifyPath::ModularWithAudit;
    // Overrides every target's modulus exponent (explores weaker/stronger
    // congruences); auto (= nullopt) reads it from each target.
    std::optional<unsigned> mod_power;
    int jobs = 1;
    int audit_stride = 10;
};

struct PrimeResult {
    long long prime = 0;
    bool applicable = true; // false when the whole prime hit a denominator
    bool audited = false;   // exact path cross-checked this prime
    std::vector<ComponentVerdict> components;
};

struct VerifySummary {
    std::size_t primes = 0;
    std::size_t checks = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t inapplicable = 0;        // component granularity
    std::size_t inapplicable_primes = 0;
    bool all_passed() const { return failed == 0; }
};

struct VerificationReport {
    std::string series_id;
    long long p_lo = 0;
    long long p_hi = 0;
    VerifyPath path = VerifyPath::ModularWithAudit;
    std::optional<unsigned> mod_power;
    std::vector<PrimeResult> primes;
    VerifySummary summary;
};

// Checks every congruence target at every prime p with p_lo <= p <= p_hi,
// p > spec.p_min and p odd. Primes may be fanned out over options.jobs
// workers; the report is assembled in ascending-prime order regardless.
// Throws PathMismatch if the exact and modular paths ever disagree.
VerificationReport verify_series(const SeriesSpec& spec, long long p_lo,
                                 long long p_hi, const VerifyOptions& options = {});

} // namespace mosaic
