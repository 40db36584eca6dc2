#include "mosaic/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace mosaic {

Integer to_integer(long long v) {
    Integer n;
    if (v >= 0) {
        mpz_set_ui(n.get_mpz_t(), static_cast<unsigned long>(v));
    } else {
        // avoid overflow on LLONG_MIN
        mpz_set_ui(n.get_mpz_t(), static_cast<unsigned long>(-(v + 1)));
        mpz_add_ui(n.get_mpz_t(), n.get_mpz_t(), 1);
        mpz_neg(n.get_mpz_t(), n.get_mpz_t());
    }
    return n;
}

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational make_rational(long long num, long long den) {
    return make_rational(to_integer(num), to_integer(den));
}

Rational parse_rational(const std::string& text) {
    const auto fail = [&] { throw ParseError("invalid rational literal: \"" + text + "\""); };
    std::size_t i = 0;
    if (i < text.size() && text[i] == '-') ++i;
    std::size_t num_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_begin) fail();
    std::string num = text.substr(0, i);
    std::string den = "1";
    if (i < text.size()) {
        if (text[i] != '/') fail();
        ++i;
        std::size_t den_begin = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_begin || i != text.size()) fail();
        den = text.substr(den_begin);
    }
    Integer d(den);
    if (d == 0) fail();
    return make_rational(Integer(num), d);
}

std::string format_rational(const Rational& r) {
    return r.get_str(); // "n/d" or "n", exactly the wire grammar
}

long Valuation::value() const {
    if (infinite_) throw std::logic_error("Valuation::value on infinity");
    return value_;
}

bool Valuation::operator<(const Valuation& o) const {
    if (infinite_) return false;
    if (o.infinite_) return true;
    return value_ < o.value_;
}

std::string Valuation::str() const {
    return infinite_ ? "inf" : std::to_string(value_);
}

long integer_valuation(const Integer& n, const Integer& p) {
    if (n == 0) throw std::invalid_argument("integer_valuation: zero argument");
    Integer reduced;
    return static_cast<long>(mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

Valuation padic_valuation(const Rational& r, const Integer& p) {
    if (p < 2) throw std::invalid_argument("padic_valuation: p must be prime");
    if (r == 0) return Valuation::infinity();
    const long vn = integer_valuation(r.get_num(), p);
    const long vd = integer_valuation(r.get_den(), p);
    return Valuation::finite(vn - vd);
}

Integer mod_inverse(const Integer& a, const Integer& m) {
    if (m < 2) throw std::invalid_argument("mod_inverse: modulus must be >= 2");
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
        throw NotCoprime("mod_inverse: gcd(" + a.get_str() + ", " + m.get_str() + ") > 1");
    }
    return inv;
}

std::uint64_t mod_inverse_u64(std::uint64_t a, std::uint64_t m) {
    if (m < 2) throw std::invalid_argument("mod_inverse_u64: modulus must be >= 2");
    a %= m;
    // extended Euclid over signed 128-bit accumulators
    std::uint64_t r0 = m, r1 = a;
    __int128 t0 = 0, t1 = 1;
    while (r1 != 0) {
        const std::uint64_t q = r0 / r1;
        const std::uint64_t r2 = r0 - q * r1;
        const __int128 t2 = t0 - static_cast<__int128>(q) * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1) {
        throw NotCoprime("mod_inverse_u64: arguments not coprime");
    }
    __int128 t = t0 % static_cast<__int128>(m);
    if (t < 0) t += m;
    return static_cast<std::uint64_t>(t);
}

std::string ResidueClass::str() const {
    return value.get_str() + " mod " + modulus.get_str();
}

namespace {

void require_odd_prime_base(const Integer& p) {
    if (p < 3 || mpz_even_p(p.get_mpz_t())) {
        throw EvenModulus("residue arithmetic requires an odd prime, got " + p.get_str());
    }
}

} // namespace

ResidueClass make_residue(const Integer& value, const Integer& p, unsigned k) {
    require_odd_prime_base(p);
    if (k < 1) throw std::invalid_argument("make_residue: exponent must be >= 1");
    ResidueClass rc;
    rc.prime = p;
    rc.exponent = k;
    mpz_pow_ui(rc.modulus.get_mpz_t(), p.get_mpz_t(), k);
    mpz_mod(rc.value.get_mpz_t(), value.get_mpz_t(), rc.modulus.get_mpz_t());
    return rc;
}

ResidueClass residue_of_rational(const Rational& r, const Integer& p, unsigned k) {
    require_odd_prime_base(p);
    if (k < 1) throw std::invalid_argument("residue_of_rational: exponent must be >= 1");
    Integer modulus;
    mpz_pow_ui(modulus.get_mpz_t(), p.get_mpz_t(), k);
    const Integer& den = r.get_den();
    if (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t())) {
        throw DenominatorNotInvertible("denominator " + den.get_str() +
                                       " shares the prime " + p.get_str());
    }
    Integer value = mod_inverse(den, modulus);
    value *= r.get_num();
    return make_residue(value, p, k);
}

} // namespace mosaic
