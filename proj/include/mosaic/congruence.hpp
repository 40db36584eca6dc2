#pragma once

#include <optional>
#include <vector>

#include "mosaic/quad.hpp"
#include "mosaic/rational.hpp"

namespace mosaic {

// Jacobi symbol (a/n) for odd n >= 1, by binary quadratic reciprocity:
// strip factors of 2 with the (2/n) = (-1)^((n^2-1)/8) rule, flip by
// (-1)^((a-1)(n-1)/4) when swapping, reduce, repeat. (a/1) = 1; returns 0
// iff gcd(a, n) > 1. Throws EvenModulus for even n.
int jacobi_symbol(const Integer& a, const Integer& n);
int jacobi_symbol(long long a, long long n);

// Ascending primes in the closed range [lo, hi], by sieve. lo <= hi.
std::vector<long long> primes_in(long long lo, long long hi);

// One mosaic piece: the component at sqrt(component_radicand) is expected
// to satisfy  alpha = coefficient * (jacobi_radicand / p) * p^p_exponent
// (mod p^modulus_exponent)  for primes p above the series threshold.
struct CongruenceTarget {
    long long component_radicand = 1;
    Rational coefficient;
    long long jacobi_radicand = 1;
    unsigned p_exponent = 1;        // 1 for 1/pi, 2 for 1/pi^2
    unsigned modulus_exponent = 3;  // 3 for 1/pi, 5 for 1/pi^2

    CongruenceTarget() = default;
    CongruenceTarget(long long radicand, Rational coeff, long long jacobi,
                     unsigned p_exp, unsigned mod_exp);
    // Defaults the Jacobi argument to -radicand, the general 1/pi pattern.
    // Several catalog entries override it (EX1 carries -15 on a rational
    // component, EX7 uses +5), so the explicit form above is the one the
    // catalog uses.
    static CongruenceTarget with_default_jacobi(long long radicand, Rational coeff);

    void validate() const; // throws ValidationError

    bool operator==(const CongruenceTarget& o) const = default;
};

// Outcome of checking one component at one prime. When a denominator met p
// the check is inapplicable: residues are absent, pass is false, and the
// valuation is negative (exact path) or absent (modular path, not computed).
struct ComponentVerdict {
    long long prime = 0;
    long long radicand = 1;
    std::optional<ResidueClass> expected_residue;
    std::optional<ResidueClass> actual_residue;
    std::optional<Valuation> residual_valuation;
    // The modular path only observes the residual mod p^k; when it vanishes
    // there, the valuation is reported as k with this flag set.
    bool valuation_is_lower_bound = false;
    bool pass = false;
    bool applicable = false;
};

// Exact-path check: residual = component - coefficient*(m/p)*p^e, verdict
// records v_p(residual) and pass = applicable && v_p >= required_exponent.
// Residues are reported mod p^required_exponent.
ComponentVerdict check_target(const Rational& component,
                              const CongruenceTarget& target, long long p,
                              unsigned required_exponent);

} // namespace mosaic
