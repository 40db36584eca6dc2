#pragma once

#include <string>

#include <mpfr.h>

#include "mosaic/catalog.hpp"
#include "mosaic/quad.hpp"

namespace mosaic {

// Value-semantic mpfr_t wrapper carrying its own precision. Binary
// operations round to the wider operand's precision (MPFR_RNDN).
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t bits = 64);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(BigFloat o);
    ~BigFloat();

    static BigFloat of(long v, mpfr_prec_t bits);
    static BigFloat of(const Rational& r, mpfr_prec_t bits);
    static BigFloat sqrt_of(long long n, mpfr_prec_t bits); // n >= 0
    static BigFloat pi(mpfr_prec_t bits);

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

    BigFloat operator+(const BigFloat& o) const;
    BigFloat operator-(const BigFloat& o) const;
    BigFloat operator*(const BigFloat& o) const;
    BigFloat operator/(const BigFloat& o) const;
    BigFloat operator-() const;

    BigFloat abs() const;
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
    bool operator<(const BigFloat& o) const { return cmp(o) < 0; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    // floor(log10(|x|)) for x != 0.
    long log10_floor() const;
    std::string str(std::size_t digits) const;

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

private:
    mpfr_t v_;
};

struct BigComplex {
    BigFloat re, im;

    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    static BigComplex zero(mpfr_prec_t bits);

    BigComplex operator+(const BigComplex& o) const;
    BigComplex operator*(const BigComplex& o) const;
    BigComplex scaled(const BigFloat& f) const;
    BigFloat magnitude() const; // |z|
    std::string str(std::size_t digits) const;
};

mpfr_prec_t digits_to_bits(unsigned long digits);

// Guard digits added on top of the requested precision; linear accumulation
// bound over the summation loop.
unsigned long guard_digits(unsigned long terms);

// Numeric embedding sum coeff * sqrt(d), with sqrt(d) = i*sqrt(|d|) for
// d < 0, evaluated at `digits` decimal digits plus guard.
BigComplex mq_embed(const MultiQuadElement& x, unsigned long digits);

// scale * sum_{n<terms} A_n * poly(n) * z^n at `digits` working digits.
// terms >= 1, digits >= 10.
BigComplex evaluate_series(const SeriesSpec& spec, unsigned long terms,
                           unsigned long digits);

// 1/pi or 1/pi^2; pi comes from MPFR's builtin constant, never from a
// catalog series. Throws std::invalid_argument for None.
BigFloat target_constant(AnalyticTarget target, unsigned long digits);

// Count of matched significant digits: floor(-log10(|value-target|/|target|)),
// clamped to the working precision when the difference vanishes. May be
// negative when the values disagree outright.
long matched_digits(const BigComplex& value, const BigFloat& target);

} // namespace mosaic
