#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "mosaic/analytic.hpp"
#include "mosaic/catalog.hpp"
#include "mosaic/verify.hpp"

using namespace mosaic;

namespace {

// arctan(1/x) by its Taylor series over exact rationals, enough terms for
// `digits` decimal digits. Test-only oracle, independent of MPFR.
Rational arctan_inv(long x, unsigned long digits) {
    Rational sum(0);
    Rational power = make_rational(1, x);
    const Integer x_sq = Integer(x) * Integer(x);
    const Rational x2(x_sq);
    // |term_k| = 1/((2k+1) x^(2k+1)): stop once it drops below 10^-(digits+5)
    Integer bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), 10, digits + 5);
    for (unsigned long k = 0;; ++k) {
        const Rational term = power / Rational(static_cast<long>(2 * k + 1));
        sum += (k % 2 == 0) ? term : Rational(-term);
        if (term.get_den() > bound * term.get_num()) break;
        power /= x2;
    }
    return sum;
}

long first_mismatch(const std::string& a, const std::string& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return static_cast<long>(i);
    }
    return static_cast<long>(n);
}

} // namespace

TEST_CASE("target constants") {
    CHECK(target_constant(AnalyticTarget::PiInverse, 15).str(16).substr(0, 17) ==
          "3.183098861837907");
    CHECK(target_constant(AnalyticTarget::PiSquaredInverse, 15).str(16).substr(0, 17) ==
          "1.013211836423378");
    CHECK_THROWS_AS(target_constant(AnalyticTarget::None, 15), std::invalid_argument);
    CHECK_THROWS_AS(target_constant(AnalyticTarget::PiInverse, 5), std::invalid_argument);
}

TEST_CASE("builtin pi agrees with a Machin arctan oracle to 120 digits") {
    const unsigned long digits = 130;
    // pi = 16 arctan(1/5) - 4 arctan(1/239)
    const Rational machin =
        Rational(16) * arctan_inv(5, digits) - Rational(4) * arctan_inv(239, digits);
    const mpfr_prec_t bits = digits_to_bits(digits);
    const BigFloat diff = BigFloat::pi(bits) - BigFloat::of(machin, bits);
    if (!diff.is_zero()) {
        CHECK(diff.abs().log10_floor() <= -120);
    }
}

TEST_CASE("single-term evaluation is scale * A0 * poly(0)") {
    const SeriesSpec ex1 = builtin("EX1");
    const BigComplex v = evaluate_series(ex1, 1, 30);
    // 263 * sqrt(15)/3200
    const BigComplex expect = mq_embed(ex1.scale.scaled(Rational(263)), 30);
    const BigComplex diff(v.re - expect.re, v.im - expect.im);
    CHECK(diff.magnitude().to_double() < 1e-25);
    CHECK_THROWS_AS(evaluate_series(ex1, 0, 30), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_series(ex1, 10, 5), std::invalid_argument);
}

TEST_CASE("EX1 reproduces 1/pi at the documented rate") {
    const BigComplex v = evaluate_series(builtin("EX1"), 50, 300);
    const BigFloat target = target_constant(AnalyticTarget::PiInverse, 300);
    CHECK(matched_digits(v, target) >= 250);
}

TEST_CASE("EX7 reproduces 1/pi^2") {
    const BigComplex v = evaluate_series(builtin("EX7"), 40, 90);
    const BigFloat target = target_constant(AnalyticTarget::PiSquaredInverse, 90);
    CHECK(matched_digits(v, target) >= 50);
}

TEST_CASE("convergence improves along a term ladder") {
    const SeriesSpec ex2 = builtin("EX2");
    const BigFloat target = target_constant(AnalyticTarget::PiInverse, 80);
    long prev = -1000;
    for (const unsigned long terms : {5ul, 15ul, 25ul}) {
        const long digits = matched_digits(evaluate_series(ex2, terms, 80), target);
        CHECK(digits > prev);
        prev = digits;
    }
}

TEST_CASE("EX5 imaginary part shrinks along the ladder") {
    const SeriesSpec ex5 = builtin("EX5");
    const BigFloat target = target_constant(AnalyticTarget::PiInverse, 30);
    double prev_im = 1e9;
    double prev_err = 1e9;
    for (const unsigned long terms : {50ul, 200ul, 800ul}) {
        const BigComplex v = evaluate_series(ex5, terms, 30);
        const double im = v.im.abs().to_double();
        const BigComplex diff(v.re - target, v.im);
        const double err = diff.magnitude().to_double();
        CHECK(im < prev_im);
        CHECK(err < prev_err);
        prev_im = im;
        prev_err = err;
    }
    CHECK(prev_im < 0.008); // measured 0.0076 at N=800
}

TEST_CASE("precision honesty: P and 2P agree to P minus guard") {
    const SeriesSpec ex7 = builtin("EX7");
    const BigComplex lo = evaluate_series(ex7, 40, 60);
    const BigComplex hi = evaluate_series(ex7, 40, 120);
    const std::string a = lo.re.str(60);
    const std::string b = hi.re.str(60);
    CHECK(first_mismatch(a, b) >= 50);
}

TEST_CASE("exact decomposition embeds to the numeric partial sum") {
    // spot-check (series, prime) pairs across real, multi-root and complex bases
    const std::pair<const char*, long long> picks[] = {
        {"EX1", 11}, {"EX3", 11}, {"EX4", 7}, {"EX5", 13}, {"EX7", 11}};
    for (const auto& [id, p] : picks) {
        const SeriesSpec spec = builtin(id);
        const MultiQuadElement sum = accumulate_exact(spec, static_cast<unsigned long>(p));
        const BigComplex from_decomposition =
            mq_embed(sum, 60) * mq_embed(spec.scale, 60);
        const BigComplex from_floats = evaluate_series(spec, static_cast<unsigned long>(p), 60);
        const BigComplex diff(from_decomposition.re - from_floats.re,
                              from_decomposition.im - from_floats.im);
        // the partial sums grow large (divergent-looking prefixes), so compare
        // relative to the magnitude
        const double scale = std::max(1.0, from_floats.magnitude().to_double());
        CHECK(diff.magnitude().to_double() / scale < 1e-45);
    }
}

TEST_CASE("matched_digits semantics") {
    const mpfr_prec_t bits = digits_to_bits(40);
    const BigFloat target = BigFloat::pi(bits);
    const BigComplex same(target, BigFloat(bits));
    CHECK(matched_digits(same, target) > 30);
    const BigComplex off(target + BigFloat::of(make_rational(1, 100000), bits), BigFloat(bits));
    const long m = matched_digits(off, target);
    CHECK(m >= 5);
    CHECK(m <= 6);
    const BigComplex wrong(BigFloat::of(2, bits), BigFloat(bits));
    CHECK(matched_digits(wrong, target) <= 0);
}
