#pragma once

#include <cstdint>
#include <map>
#include <memory>

#include "mosaic/quad.hpp"
#include "mosaic/sequences.hpp"

namespace mosaic {

// Arithmetic in Z/p^k for an odd prime p with p^k < 2^64. Products go
// through __uint128_t, so everything stays in machine words; this is the
// performance path for per-prime verification.
class ModContext {
public:
    ModContext(std::uint64_t p, unsigned k);

    std::uint64_t p() const { return p_; }
    unsigned k() const { return k_; }
    std::uint64_t modulus() const { return m_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : m_ - a; }
    std::uint64_t pow(std::uint64_t a, unsigned long e) const;
    // Throws DenominatorNotInvertible when gcd(a, p) > 1.
    std::uint64_t inv(std::uint64_t a) const;

    std::uint64_t of_integer(const Integer& n) const;
    // num * inv(den); throws DenominatorNotInvertible when p | den.
    std::uint64_t of_rational(const Rational& r) const;

private:
    std::uint64_t p_;
    unsigned k_;
    std::uint64_t m_;
};

// Formal combination sum c_d * sqrt(d) with coefficients in Z/p^k. Radicands
// multiply by the same square-free rule as MultiQuadElement; sqrt(d) is never
// mapped into Z/p^k (it need not exist there), which is exactly what keeps
// the mosaic components intact.
class ModQuad {
public:
    ModQuad() = default;
    static ModQuad one(const ModContext& ctx);
    static ModQuad of(const MultiQuadElement& x, const ModContext& ctx);

    const std::map<long long, std::uint64_t>& components() const { return comps_; }
    std::uint64_t component(long long radicand) const;

    ModQuad add(const ModQuad& o, const ModContext& ctx) const;
    ModQuad mul(const ModQuad& o, const ModContext& ctx) const;
    ModQuad scaled(std::uint64_t c, const ModContext& ctx) const;

private:
    std::map<long long, std::uint64_t> comps_;
    void add_term(long long d, std::uint64_t c, const ModContext& ctx);
};

// Modular image of a term stream: yields A_n mod p^k via the same
// recurrences as the exact stream, with mod_inverse standing in for
// denominators. Throws DenominatorNotInvertible if a denominator meets p.
class ModTermStream {
public:
    virtual ~ModTermStream() = default;
    virtual std::uint64_t next() = 0;
};

std::unique_ptr<ModTermStream> make_mod_stream(const SequenceKind& kind,
                                               const ModContext& ctx);

} // namespace mosaic
