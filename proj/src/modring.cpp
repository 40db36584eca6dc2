#include "mosaic/modring.hpp"

#include <limits>
#include <stdexcept>

namespace mosaic {

ModContext::ModContext(std::uint64_t p, unsigned k) : p_(p), k_(k) {
    if (p < 3 || p % 2 == 0) {
        throw EvenModulus("modular path requires an odd prime, got " + std::to_string(p));
    }
    if (k < 1) throw std::invalid_argument("ModContext: exponent must be >= 1");
    m_ = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (m_ > std::numeric_limits<std::uint64_t>::max() / p) {
            throw Error("modulus " + std::to_string(p) + "^" + std::to_string(k) +
                        " exceeds 64 bits; use the exact path");
        }
        m_ *= p;
    }
}

std::uint64_t ModContext::add(std::uint64_t a, std::uint64_t b) const {
    // a, b < m_; written to avoid overflow even when m_ nears 2^64
    if (b == 0) return a;
    return a >= m_ - b ? a - (m_ - b) : a + b;
}

std::uint64_t ModContext::sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + (m_ - b);
}

std::uint64_t ModContext::mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m_);
}

std::uint64_t ModContext::pow(std::uint64_t a, unsigned long e) const {
    std::uint64_t result = 1 % m_;
    a %= m_;
    while (e > 0) {
        if (e & 1UL) result = mul(result, a);
        a = mul(a, a);
        e >>= 1UL;
    }
    return result;
}

std::uint64_t ModContext::inv(std::uint64_t a) const {
    a %= m_;
    if (a % p_ == 0) {
        throw DenominatorNotInvertible("value divisible by " + std::to_string(p_) +
                                       " is not invertible mod " + std::to_string(m_));
    }
    return mod_inverse_u64(a, m_);
}

std::uint64_t ModContext::of_integer(const Integer& n) const {
    Integer r;
    mpz_mod_ui(r.get_mpz_t(), n.get_mpz_t(), m_);
    return r.get_ui();
}

std::uint64_t ModContext::of_rational(const Rational& r) const {
    return mul(of_integer(r.get_num()), inv(of_integer(r.get_den())));
}

ModQuad ModQuad::one(const ModContext& ctx) {
    ModQuad q;
    q.add_term(1, 1 % ctx.modulus(), ctx);
    return q;
}

ModQuad ModQuad::of(const MultiQuadElement& x, const ModContext& ctx) {
    ModQuad q;
    for (const auto& [d, c] : x.components()) q.add_term(d, ctx.of_rational(c), ctx);
    return q;
}

void ModQuad::add_term(long long d, std::uint64_t c, const ModContext& ctx) {
    if (c == 0) return;
    auto [it, inserted] = comps_.emplace(d, c);
    if (!inserted) {
        it->second = ctx.add(it->second, c);
        if (it->second == 0) comps_.erase(it);
    }
}

std::uint64_t ModQuad::component(long long radicand) const {
    const auto it = comps_.find(radicand);
    return it == comps_.end() ? 0 : it->second;
}

ModQuad ModQuad::add(const ModQuad& o, const ModContext& ctx) const {
    ModQuad r = *this;
    for (const auto& [d, c] : o.comps_) r.add_term(d, c, ctx);
    return r;
}

ModQuad ModQuad::mul(const ModQuad& o, const ModContext& ctx) const {
    ModQuad r;
    for (const auto& [d1, c1] : comps_) {
        for (const auto& [d2, c2] : o.comps_) {
            const BasisProduct bp = basis_product(d1, d2);
            std::uint64_t c = ctx.mul(c1, c2);
            c = ctx.mul(c, static_cast<std::uint64_t>(bp.scale) % ctx.modulus());
            if (bp.negate) c = ctx.neg(c);
            r.add_term(bp.radicand, c, ctx);
        }
    }
    return r;
}

ModQuad ModQuad::scaled(std::uint64_t c, const ModContext& ctx) const {
    ModQuad r;
    for (const auto& [d, coeff] : comps_) r.add_term(d, ctx.mul(coeff, c), ctx);
    return r;
}

namespace {

// Same ratio recurrence as the exact stream. Each step multiplies by
// prod(u_num + n*u_den) * prod(l_den) and divides by
// prod(u_den) * prod(l_num + n*l_den); the divisions go through modular
// inverses, which is valid because the underlying rational has a p-free
// denominator whenever the inverses exist.
class HypergeometricModStream final : public ModTermStream {
public:
    HypergeometricModStream(const SequenceKind& kind, const ModContext& ctx)
        : ctx_(ctx), value_(1 % ctx.modulus()), n_(0) {
        for (const Rational& u : kind.upper) {
            up_.push_back({ctx_.of_integer(u.get_num()), ctx_.of_integer(u.get_den())});
        }
        for (const Rational& l : kind.lower) {
            low_.push_back({ctx_.of_integer(l.get_num()), ctx_.of_integer(l.get_den())});
        }
    }

    std::uint64_t next() override {
        // Advance lazily: the ratio leaving term n-1 is applied only when
        // term n is requested, so a caller stopping at n = p-1 never trips
        // over the (1+n) = p factor in the next ratio's denominator.
        if (n_ > 0) {
            const std::uint64_t n = (n_ - 1) % ctx_.modulus();
            std::uint64_t num = 1 % ctx_.modulus();
            std::uint64_t den = 1 % ctx_.modulus();
            for (const auto& [un, ud] : up_) {
                num = ctx_.mul(num, ctx_.add(un, ctx_.mul(n, ud)));
                den = ctx_.mul(den, ud);
            }
            for (const auto& [ln, ld] : low_) {
                den = ctx_.mul(den, ctx_.add(ln, ctx_.mul(n, ld)));
                num = ctx_.mul(num, ld);
            }
            value_ = ctx_.mul(value_, ctx_.mul(num, ctx_.inv(den)));
        }
        ++n_;
        return value_;
    }

private:
    ModContext ctx_;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> up_, low_;
    std::uint64_t value_;
    std::uint64_t n_;
};

// Integer-kind terms mod p^k via the same incremental rows as the exact
// stream. All divisions are by integers < p (exact in Z), so multiplying by
// a modular inverse reproduces the true value mod p^k even when the running
// binomials are divisible by p.
class BinomialSumModStream final : public ModTermStream {
public:
    BinomialSumModStream(SequenceTag tag, const ModContext& ctx)
        : tag_(tag), ctx_(ctx) {}

    std::uint64_t next() override {
        ensure_row();
        const std::uint64_t out = term_value();
        ++n_;
        return out;
    }

private:
    SequenceTag tag_;
    ModContext ctx_;
    unsigned long n_ = 0;
    std::vector<std::uint64_t> row_;
    std::vector<std::uint64_t> central_;
    std::vector<std::uint64_t> mult3_;
    std::vector<std::uint64_t> pow3_;

    bool needs_central() const {
        return tag_ == SequenceTag::Domb || tag_ == SequenceTag::ConvolutionSquares ||
               tag_ == SequenceTag::CentralTimesCubes ||
               tag_ == SequenceTag::CentralTimesSquareCatalan;
    }

    void ensure_row() {
        if (n_ == 0) {
            row_.assign(1, 1 % ctx_.modulus());
        } else {
            row_.push_back(1 % ctx_.modulus());
            for (std::size_t k = row_.size() - 2; k >= 1; --k) {
                row_[k] = ctx_.add(row_[k], row_[k - 1]);
            }
        }
        while (needs_central() && central_.size() <= n_) {
            if (central_.empty()) {
                central_.push_back(1 % ctx_.modulus());
            } else {
                const unsigned long k = central_.size();
                std::uint64_t next = ctx_.mul(central_.back(), (4 * k - 2) % ctx_.modulus());
                next = ctx_.mul(next, ctx_.inv(k % ctx_.modulus())); // k < p
                central_.push_back(next);
            }
        }
        while (tag_ == SequenceTag::AlmkvistZudilin && 3 * mult3_.size() <= n_) {
            if (mult3_.empty()) {
                mult3_.push_back(1 % ctx_.modulus());
            } else {
                const unsigned long k = mult3_.size();
                std::uint64_t next = mult3_.back();
                next = ctx_.mul(next, (3 * k) % ctx_.modulus());
                next = ctx_.mul(next, (3 * k - 1) % ctx_.modulus());
                next = ctx_.mul(next, (3 * k - 2) % ctx_.modulus());
                const std::uint64_t ik = ctx_.inv(k % ctx_.modulus());
                next = ctx_.mul(next, ctx_.mul(ik, ctx_.mul(ik, ik)));
                mult3_.push_back(next);
            }
        }
        while (tag_ == SequenceTag::AlmkvistZudilin && pow3_.size() <= n_) {
            pow3_.push_back(pow3_.empty() ? 1 % ctx_.modulus()
                                          : ctx_.mul(pow3_.back(), 3 % ctx_.modulus()));
        }
    }

    std::uint64_t term_value() const {
        const unsigned long n = n_;
        std::uint64_t sum = 0;
        switch (tag_) {
            case SequenceTag::Apery: {
                std::uint64_t diag = 1 % ctx_.modulus();
                for (unsigned long k = 0; k <= n; ++k) {
                    if (k > 0) {
                        diag = ctx_.mul(diag, (n + k) % ctx_.modulus());
                        diag = ctx_.mul(diag, ctx_.inv(k % ctx_.modulus()));
                    }
                    const std::uint64_t sq = ctx_.mul(row_[k], diag);
                    sum = ctx_.add(sum, ctx_.mul(sq, sq));
                }
                break;
            }
            case SequenceTag::Domb: {
                for (unsigned long k = 0; k <= n; ++k) {
                    std::uint64_t t = ctx_.mul(row_[k], row_[k]);
                    t = ctx_.mul(t, central_[k]);
                    t = ctx_.mul(t, central_[n - k]);
                    sum = ctx_.add(sum, t);
                }
                break;
            }
            case SequenceTag::AlmkvistZudilin: {
                // 3^(n-3k) is a numerator, so it comes from a power table
                // rather than repeated division (3 need not be invertible).
                std::uint64_t diag = 1 % ctx_.modulus();
                for (unsigned long k = 0; 3 * k <= n; ++k) {
                    if (k > 0) {
                        diag = ctx_.mul(diag, (n + k) % ctx_.modulus());
                        diag = ctx_.mul(diag, ctx_.inv(k % ctx_.modulus()));
                    }
                    std::uint64_t t = ctx_.mul(mult3_[k], row_[3 * k]);
                    t = ctx_.mul(t, diag);
                    t = ctx_.mul(t, pow3_[n - 3 * k]);
                    if ((n - k) % 2 == 1) t = ctx_.neg(t);
                    sum = ctx_.add(sum, t);
                }
                break;
            }
            case SequenceTag::ConvolutionSquares: {
                for (unsigned long k = 0; k <= n; ++k) {
                    const std::uint64_t t = ctx_.mul(central_[k], central_[n - k]);
                    sum = ctx_.add(sum, ctx_.mul(t, t));
                }
                break;
            }
            case SequenceTag::CentralTimesCubes: {
                for (unsigned long k = 0; k <= n; ++k) {
                    const std::uint64_t sq = ctx_.mul(row_[k], row_[k]);
                    sum = ctx_.add(sum, ctx_.mul(sq, row_[k]));
                }
                sum = ctx_.mul(sum, central_[n]);
                break;
            }
            case SequenceTag::CentralTimesSquareCatalan: {
                for (unsigned long k = 0; k <= n; ++k) {
                    const std::uint64_t sq = ctx_.mul(row_[k], row_[k]);
                    sum = ctx_.add(sum, ctx_.mul(sq, central_[k]));
                }
                sum = ctx_.mul(sum, central_[n]);
                break;
            }
            case SequenceTag::Hypergeometric:
                throw std::logic_error("hypergeometric kind in BinomialSumModStream");
        }
        return sum;
    }
};

} // namespace

std::unique_ptr<ModTermStream> make_mod_stream(const SequenceKind& kind,
                                               const ModContext& ctx) {
    kind.validate();
    if (kind.tag == SequenceTag::Hypergeometric) {
        return std::make_unique<HypergeometricModStream>(kind, ctx);
    }
    return std::make_unique<BinomialSumModStream>(kind.tag, ctx);
}

} // namespace mosaic
