#include "mosaic/quad.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mosaic {

bool is_square_free(long long d) {
    if (d == 0) return false;
    unsigned long long n = d < 0 ? -static_cast<unsigned long long>(d) : d;
    for (unsigned long long f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            n /= f;
            if (n % f == 0) return false;
        }
    }
    return true;
}

RadicalParts normalize_radical(const Integer& n) {
    if (n == 0) throw ZeroRadicand("normalize_radical: radicand must be nonzero");
    if (!n.fits_slong_p()) {
        throw Error("normalize_radical: |n| must fit in 64 bits, got " + n.get_str());
    }
    const long v = n.get_si();
    unsigned long long rest = v < 0 ? -static_cast<unsigned long long>(v) : v;
    unsigned long long s = 1, d = 1;
    for (unsigned long long f = 2; f * f <= rest; ++f) {
        if (rest % f != 0) continue;
        unsigned e = 0;
        while (rest % f == 0) {
            rest /= f;
            ++e;
        }
        for (unsigned i = 0; i + 1 < e; i += 2) s *= f;
        if (e % 2) d *= f;
    }
    d *= rest;
    RadicalParts parts;
    parts.scale = to_integer(static_cast<long long>(s));
    parts.radicand = static_cast<long long>(d);
    if (v < 0) parts.radicand = -parts.radicand;
    return parts;
}

BasisProduct basis_product(long long d1, long long d2) {
    // For square-free d1, d2: d1*d2 = g^2 * (d1/g)(d2/g) with g = gcd, and
    // the cofactors are coprime and square-free, so their product already is
    // the canonical radicand. No factorization needed.
    const long long g = std::gcd(std::llabs(d1), std::llabs(d2));
    BasisProduct r;
    r.scale = g;
    r.radicand = (d1 / g) * (d2 / g);
    r.negate = d1 < 0 && d2 < 0;
    return r;
}

MultiQuadElement MultiQuadElement::from_rational(const Rational& r) {
    MultiQuadElement x;
    x.add_term(1, r);
    return x;
}

MultiQuadElement MultiQuadElement::term(long long radicand, const Rational& coeff) {
    if (radicand == 0) throw ZeroRadicand("radicand must be nonzero");
    if (!is_square_free(radicand)) {
        throw ValidationError("radicand " + std::to_string(radicand) + " is not square-free");
    }
    MultiQuadElement x;
    x.add_term(radicand, coeff);
    return x;
}

void MultiQuadElement::add_term(long long d, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = comps_.emplace(d, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) comps_.erase(it);
    }
}

Rational MultiQuadElement::component(long long radicand) const {
    const auto it = comps_.find(radicand);
    return it == comps_.end() ? Rational(0) : it->second;
}

std::vector<long long> MultiQuadElement::radicands() const {
    std::vector<long long> out;
    out.reserve(comps_.size());
    for (const auto& [d, c] : comps_) out.push_back(d);
    return out;
}

bool MultiQuadElement::is_rational() const {
    return comps_.empty() || (comps_.size() == 1 && comps_.begin()->first == 1);
}

MultiQuadElement MultiQuadElement::operator+(const MultiQuadElement& o) const {
    MultiQuadElement r = *this;
    r += o;
    return r;
}

MultiQuadElement& MultiQuadElement::operator+=(const MultiQuadElement& o) {
    for (const auto& [d, c] : o.comps_) add_term(d, c);
    return *this;
}

MultiQuadElement MultiQuadElement::operator-() const {
    MultiQuadElement r;
    for (const auto& [d, c] : comps_) r.comps_.emplace(d, -c);
    return r;
}

MultiQuadElement MultiQuadElement::operator*(const MultiQuadElement& o) const {
    MultiQuadElement r;
    for (const auto& [d1, c1] : comps_) {
        for (const auto& [d2, c2] : o.comps_) {
            const BasisProduct bp = basis_product(d1, d2);
            Rational c = c1 * c2;
            c *= to_integer(bp.negate ? -bp.scale : bp.scale);
            r.add_term(bp.radicand, c);
        }
    }
    return r;
}

MultiQuadElement MultiQuadElement::scaled(const Rational& c) const {
    MultiQuadElement r;
    if (c == 0) return r;
    for (const auto& [d, coeff] : comps_) r.comps_.emplace(d, coeff * c);
    return r;
}

MultiQuadElement MultiQuadElement::pow(unsigned long n) const {
    MultiQuadElement result = one();
    MultiQuadElement base = *this;
    while (n > 0) {
        if (n & 1UL) result = result * base;
        base = base * base;
        n >>= 1UL;
    }
    return result;
}

MultiQuadElement MultiQuadElement::conjugate() const {
    MultiQuadElement r;
    for (const auto& [d, c] : comps_) r.comps_.emplace(d, d < 0 ? -c : c);
    return r;
}

std::string MultiQuadElement::str() const {
    if (comps_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : comps_) {
        Rational a = c;
        if (!first) {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (d == 1) {
            os << format_rational(a);
        } else if (a == 1) {
            os << "sqrt(" << d << ")";
        } else {
            os << format_rational(a) << "*sqrt(" << d << ")";
        }
    }
    return os.str();
}

} // namespace mosaic
