#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "mosaic/errors.hpp"

namespace mosaic {

using Integer = mpz_class;

// Arbitrary-precision fraction, always in lowest terms with positive
// denominator; zero is 0/1. mpq_class arithmetic keeps operands canonical,
// so the invariants hold for every value produced by this library.
using Rational = mpq_class;

Integer to_integer(long long v);

// Canonicalized fraction from a possibly unreduced pair. den must be nonzero.
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long long num, long long den = 1);

// Grammar: optional leading '-', digits, optionally "/digits" with a positive
// denominator. This is the catalog/report wire format.
Rational parse_rational(const std::string& text);

// "n/d", or "n" when the denominator is 1.
std::string format_rational(const Rational& r);

// p-adic valuation value with a distinguished +infinity (the valuation of 0).
class Valuation {
public:
    static Valuation infinity() { return Valuation(true, 0); }
    static Valuation finite(long v) { return Valuation(false, v); }

    bool is_infinite() const { return infinite_; }
    long value() const; // finite values only

    bool operator==(const Valuation& o) const = default;
    bool operator<(const Valuation& o) const;
    bool operator>=(const Valuation& o) const { return !(*this < o); }
    bool operator>=(long v) const { return *this >= finite(v); }

    std::string str() const; // decimal digits, or "inf"

private:
    Valuation(bool infinite, long v) : infinite_(infinite), value_(v) {}
    bool infinite_;
    long value_;
};

// v_p(numerator) - v_p(denominator); +infinity for r = 0. p must be prime
// (not verified; composite p gives meaningless results).
Valuation padic_valuation(const Rational& r, const Integer& p);

// Multiplicity of p in a nonzero integer.
long integer_valuation(const Integer& n, const Integer& p);

// b with 0 <= b < m and a*b = 1 (mod m), m >= 2. Throws NotCoprime when
// gcd(a, m) > 1.
Integer mod_inverse(const Integer& a, const Integer& m);
std::uint64_t mod_inverse_u64(std::uint64_t a, std::uint64_t m);

// Residue modulo an odd prime power p^k, recorded together with (p, k).
struct ResidueClass {
    Integer value;   // 0 <= value < modulus
    Integer prime;   // odd prime p
    unsigned exponent = 1;
    Integer modulus; // p^exponent

    bool operator==(const ResidueClass& o) const = default;
    std::string str() const; // "value mod modulus"
};

ResidueClass make_residue(const Integer& value, const Integer& p, unsigned k);

// Unique c with c * den(r) = num(r) (mod p^k). Throws DenominatorNotInvertible
// when p divides den(r), EvenModulus when p is even (only odd primes are
// meaningful here).
ResidueClass residue_of_rational(const Rational& r, const Integer& p, unsigned k);

} // namespace mosaic
