#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mosaic/rational.hpp"

namespace mosaic {

// Radicands are square-free nonzero integers; 1 keys the rational component
// and d < 0 stands for the principal branch sqrt(d) = i*sqrt(|d|).
bool is_square_free(long long d);

struct RadicalParts {
    Integer scale;     // s > 0
    long long radicand; // square-free, sign(n)
};

// n = s^2 * d with d square-free and sign(d) = sign(n). Trial division, so
// callers should keep |n| within 64 bits (catalog radicands are tiny).
RadicalParts normalize_radical(const Integer& n);

// sqrt(d1) * sqrt(d2) = (negate ? -1 : +1) * scale * sqrt(radicand),
// for square-free d1, d2. negate is set exactly when d1 < 0 and d2 < 0
// (i^2 = -1); scale = gcd(|d1|, |d2|).
struct BasisProduct {
    long long scale;
    long long radicand;
    bool negate;
};
BasisProduct basis_product(long long d1, long long d2);

// Element of the free module over square-free radicands: a finite map
// radicand -> rational coefficient. Zero coefficients are never stored, so
// the zero element is the empty map and equality is structural.
class MultiQuadElement {
public:
    MultiQuadElement() = default;

    static MultiQuadElement one() { return from_rational(Rational(1)); }
    static MultiQuadElement from_rational(const Rational& r);
    // coeff * sqrt(radicand); validates the radicand invariants.
    static MultiQuadElement term(long long radicand, const Rational& coeff);

    const std::map<long long, Rational>& components() const { return comps_; }
    Rational component(long long radicand) const;
    std::vector<long long> radicands() const;
    bool is_zero() const { return comps_.empty(); }
    bool is_rational() const;

    MultiQuadElement operator+(const MultiQuadElement& o) const;
    MultiQuadElement operator-() const;
    MultiQuadElement operator-(const MultiQuadElement& o) const { return *this + (-o); }
    MultiQuadElement operator*(const MultiQuadElement& o) const;
    MultiQuadElement& operator+=(const MultiQuadElement& o);

    MultiQuadElement scaled(const Rational& c) const;
    MultiQuadElement pow(unsigned long n) const;

    // Negates coefficients of negative radicands; x * conjugate(x) is |x|^2
    // for the numeric embedding.
    MultiQuadElement conjugate() const;

    bool operator==(const MultiQuadElement& o) const = default;

    // Human-readable, e.g. "13/54*sqrt(7) - 17/27".
    std::string str() const;

private:
    std::map<long long, Rational> comps_;
    void add_term(long long d, const Rational& c);
};

} // namespace mosaic
