#include "mosaic/analytic.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "mosaic/sequences.hpp"

namespace mosaic {

BigFloat::BigFloat(mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(BigFloat o) {
    mpfr_swap(v_, o.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::of(long v, mpfr_prec_t bits) {
    BigFloat r(bits);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::of(const Rational& r, mpfr_prec_t bits) {
    BigFloat x(bits);
    mpfr_set_q(x.v_, r.get_mpq_t(), MPFR_RNDN);
    return x;
}

BigFloat BigFloat::sqrt_of(long long n, mpfr_prec_t bits) {
    if (n < 0) throw std::invalid_argument("sqrt_of: negative radicand");
    BigFloat r(bits);
    mpfr_sqrt_ui(r.v_, static_cast<unsigned long>(n), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pi(mpfr_prec_t bits) {
    BigFloat r(bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

namespace {
mpfr_prec_t joint_prec(const BigFloat& a, const BigFloat& b) {
    return std::max(a.precision(), b.precision());
}
} // namespace

BigFloat BigFloat::operator+(const BigFloat& o) const {
    BigFloat r(joint_prec(*this, o));
    mpfr_add(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator-(const BigFloat& o) const {
    BigFloat r(joint_prec(*this, o));
    mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator*(const BigFloat& o) const {
    BigFloat r(joint_prec(*this, o));
    mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator/(const BigFloat& o) const {
    BigFloat r(joint_prec(*this, o));
    mpfr_div(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::abs() const {
    BigFloat r(precision());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

long BigFloat::log10_floor() const {
    if (is_zero()) throw std::domain_error("log10_floor of zero");
    mpfr_t tmp;
    mpfr_init2(tmp, 64);
    mpfr_abs(tmp, v_, MPFR_RNDN);
    mpfr_log10(tmp, tmp, MPFR_RNDN);
    mpfr_floor(tmp, tmp);
    const long e = mpfr_get_si(tmp, MPFR_RNDN);
    mpfr_clear(tmp);
    return e;
}

std::string BigFloat::str(std::size_t digits) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Re", static_cast<int>(digits ? digits - 1 : 0), v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

BigComplex BigComplex::zero(mpfr_prec_t bits) {
    return BigComplex(BigFloat(bits), BigFloat(bits));
}

BigComplex BigComplex::operator+(const BigComplex& o) const {
    return BigComplex(re + o.re, im + o.im);
}

BigComplex BigComplex::operator*(const BigComplex& o) const {
    return BigComplex(re * o.re - im * o.im, re * o.im + im * o.re);
}

BigComplex BigComplex::scaled(const BigFloat& f) const {
    return BigComplex(re * f, im * f);
}

BigFloat BigComplex::magnitude() const {
    BigFloat r(std::max(re.precision(), im.precision()));
    mpfr_hypot(r.raw(), re.raw(), im.raw(), MPFR_RNDN);
    return r;
}

std::string BigComplex::str(std::size_t digits) const {
    if (im.is_zero()) return re.str(digits);
    return re.str(digits) + " + " + im.str(digits) + "*i";
}

mpfr_prec_t digits_to_bits(unsigned long digits) {
    return static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(digits) * 3.3219280948873626)) +
           16;
}

unsigned long guard_digits(unsigned long terms) {
    unsigned long g = 10;
    unsigned long t = 1;
    while (t < terms) {
        t *= 10;
        ++g;
    }
    return g;
}

BigComplex mq_embed(const MultiQuadElement& x, unsigned long digits) {
    if (digits < 1) throw std::invalid_argument("mq_embed: precision must be >= 1");
    const mpfr_prec_t bits = digits_to_bits(digits + 10);
    BigComplex acc = BigComplex::zero(bits);
    for (const auto& [d, c] : x.components()) {
        const BigFloat coeff = BigFloat::of(c, bits);
        const BigFloat root = BigFloat::sqrt_of(d < 0 ? -d : d, bits);
        if (d < 0) {
            acc.im = acc.im + coeff * root;
        } else {
            acc.re = acc.re + coeff * root;
        }
    }
    return acc;
}

BigComplex evaluate_series(const SeriesSpec& spec, unsigned long terms, unsigned long digits) {
    if (terms < 1) throw std::invalid_argument("evaluate_series: terms must be >= 1");
    if (digits < 10) throw std::invalid_argument("evaluate_series: precision must be >= 10");
    const unsigned long working = digits + guard_digits(terms);
    const mpfr_prec_t bits = digits_to_bits(working);

    const BigComplex z = mq_embed(spec.z, working);
    std::vector<BigComplex> poly;
    poly.reserve(spec.poly.size());
    for (const MultiQuadElement& c : spec.poly) poly.push_back(mq_embed(c, working));

    auto stream = make_stream(spec.kind);
    BigComplex acc = BigComplex::zero(bits);
    BigComplex zpow(BigFloat::of(1, bits), BigFloat(bits));
    for (unsigned long n = 0; n < terms; ++n) {
        if (n > 0) zpow = zpow * z;
        const BigFloat a_n = BigFloat::of(stream->next(), bits);
        const BigFloat n_f = BigFloat::of(static_cast<long>(n), bits);
        BigComplex poly_n = poly.back();
        for (std::size_t j = poly.size() - 1; j-- > 0;) {
            poly_n = poly_n.scaled(n_f) + poly[j];
        }
        acc = acc + (poly_n * zpow).scaled(a_n);
    }
    return acc * mq_embed(spec.scale, working);
}

BigFloat target_constant(AnalyticTarget target, unsigned long digits) {
    if (digits < 10) throw std::invalid_argument("target_constant: precision must be >= 10");
    if (target == AnalyticTarget::None) {
        throw std::invalid_argument("target_constant: series has no target constant");
    }
    const mpfr_prec_t bits = digits_to_bits(digits + 10);
    const BigFloat pi = BigFloat::pi(bits);
    const BigFloat one = BigFloat::of(1, bits);
    if (target == AnalyticTarget::PiInverse) return one / pi;
    return one / (pi * pi);
}

long matched_digits(const BigComplex& value, const BigFloat& target) {
    const BigComplex diff(value.re - target, value.im);
    const BigFloat err = diff.magnitude();
    if (err.is_zero()) {
        // agreement to working precision; report the precision itself
        return static_cast<long>(static_cast<double>(value.re.precision()) / 3.3219280948873626);
    }
    const BigFloat rel = err / target.abs();
    return -rel.log10_floor() - 1;
}

} // namespace mosaic
