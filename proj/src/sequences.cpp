#include "mosaic/sequences.hpp"

#include <stdexcept>

namespace mosaic {

SequenceKind SequenceKind::hypergeometric(std::vector<Rational> upper,
                                          std::vector<Rational> lower) {
    SequenceKind k{SequenceTag::Hypergeometric, std::move(upper), std::move(lower)};
    k.validate();
    return k;
}

void SequenceKind::validate() const {
    if (tag != SequenceTag::Hypergeometric) {
        if (!upper.empty() || !lower.empty()) {
            throw ValidationError("parameter lists are only valid for hypergeometric kinds");
        }
        return;
    }
    if (upper.size() != lower.size()) {
        throw ValidationError("hypergeometric upper/lower lists differ in length");
    }
    if (upper.size() != 3 && upper.size() != 5) {
        throw ValidationError("hypergeometric parameter count must be 3 or 5, got " +
                              std::to_string(upper.size()));
    }
    for (const auto* list : {&upper, &lower}) {
        for (const Rational& s : *list) {
            if (s <= 0 || s > 1) {
                throw ValidationError("hypergeometric parameter " + format_rational(s) +
                                      " outside (0, 1]");
            }
        }
    }
}

std::string SequenceKind::name() const {
    switch (tag) {
        case SequenceTag::Hypergeometric: return "hypergeometric";
        case SequenceTag::Apery: return "apery";
        case SequenceTag::Domb: return "domb";
        case SequenceTag::AlmkvistZudilin: return "almkvist_zudilin";
        case SequenceTag::ConvolutionSquares: return "convolution_squares";
        case SequenceTag::CentralTimesCubes: return "central_times_cubes";
        case SequenceTag::CentralTimesSquareCatalan: return "central_times_square_catalan";
    }
    throw std::logic_error("unknown sequence tag");
}

namespace {

// A_{n+1}/A_n = prod(upper_i + n) / prod(lower_i + n), from A_0 = 1.
// One big-rational multiply per term instead of O(n) factorial work.
class HypergeometricStream final : public TermStream {
public:
    explicit HypergeometricStream(const SequenceKind& kind)
        : kind_(kind), value_(1), n_(0) {}

    Rational next() override {
        if (n_ > 0) {
            Rational ratio(1);
            for (const Rational& u : kind_.upper) ratio *= u + (n_ - 1);
            for (const Rational& l : kind_.lower) ratio /= l + (n_ - 1);
            value_ *= ratio;
        }
        ++n_;
        return value_;
    }

private:
    SequenceKind kind_;
    Rational value_;
    unsigned long n_;
};

// Shared incremental machinery for the binomial-sum kinds: the Pascal row
// C(n, .), central binomials C(2k, k), and per-n diagonals C(n+k, k), all
// exact integers updated in O(n) per term.
class BinomialSumStream final : public TermStream {
public:
    explicit BinomialSumStream(SequenceTag tag) : tag_(tag) {}

    Rational next() override {
        ensure_row();
        Integer sum = term_value();
        ++n_;
        return Rational(sum);
    }

private:
    SequenceTag tag_;
    unsigned long n_ = 0;
    std::vector<Integer> row_;      // C(n_, k)
    std::vector<Integer> central_;  // C(2k, k)
    std::vector<Integer> mult3_;    // (3k)!/(k!)^3

    bool needs_central() const {
        return tag_ == SequenceTag::Domb || tag_ == SequenceTag::ConvolutionSquares ||
               tag_ == SequenceTag::CentralTimesCubes ||
               tag_ == SequenceTag::CentralTimesSquareCatalan;
    }

    void ensure_row() {
        if (n_ == 0) {
            row_.assign(1, Integer(1));
        } else {
            row_.push_back(1);
            for (std::size_t k = row_.size() - 2; k >= 1; --k) row_[k] += row_[k - 1];
        }
        while (needs_central() && central_.size() <= n_) {
            if (central_.empty()) {
                central_.emplace_back(1);
            } else {
                const unsigned long k = central_.size();
                Integer next = central_.back() * to_integer(2 * (2 * static_cast<long long>(k) - 1));
                next /= to_integer(static_cast<long long>(k)); // exact
                central_.push_back(next);
            }
        }
        while (tag_ == SequenceTag::AlmkvistZudilin && 3 * mult3_.size() <= n_) {
            if (mult3_.empty()) {
                mult3_.emplace_back(1);
            } else {
                const long long k = static_cast<long long>(mult3_.size());
                Integer next = mult3_.back() * to_integer(3 * k) * to_integer(3 * k - 1) *
                               to_integer(3 * k - 2);
                next /= to_integer(k * k * k); // exact over the running product
                mult3_.push_back(next);
            }
        }
    }

    Integer term_value() const {
        const unsigned long n = n_;
        Integer sum = 0;
        switch (tag_) {
            case SequenceTag::Apery: {
                Integer diag = 1; // C(n+k, k)
                for (unsigned long k = 0; k <= n; ++k) {
                    if (k > 0) {
                        diag *= to_integer(static_cast<long long>(n + k));
                        diag /= to_integer(static_cast<long long>(k));
                    }
                    sum += row_[k] * row_[k] * diag * diag;
                }
                break;
            }
            case SequenceTag::Domb: {
                for (unsigned long k = 0; k <= n; ++k) {
                    sum += row_[k] * row_[k] * central_[k] * central_[n - k];
                }
                break;
            }
            case SequenceTag::AlmkvistZudilin: {
                // (-1)^(n-k) 3^(n-3k) (3k)!/(k!)^3 C(n,3k) C(n+k,k),
                // k up to floor(n/3): C(n,3k) vanishes beyond.
                Integer diag = 1;
                Integer pow3 = 1;
                for (unsigned long i = 0; i < n; ++i) pow3 *= 3;
                for (unsigned long k = 0; 3 * k <= n; ++k) {
                    if (k > 0) {
                        diag *= to_integer(static_cast<long long>(n + k));
                        diag /= to_integer(static_cast<long long>(k));
                        pow3 /= 27; // exact while 3k <= n
                    }
                    Integer term = mult3_[k] * row_[3 * k] * diag * pow3;
                    if ((n - k) % 2 == 1) term = -term;
                    sum += term;
                }
                break;
            }
            case SequenceTag::ConvolutionSquares: {
                for (unsigned long k = 0; k <= n; ++k) {
                    sum += central_[k] * central_[k] * central_[n - k] * central_[n - k];
                }
                break;
            }
            case SequenceTag::CentralTimesCubes: {
                for (unsigned long k = 0; k <= n; ++k) {
                    sum += row_[k] * row_[k] * row_[k];
                }
                sum *= central_[n];
                break;
            }
            case SequenceTag::CentralTimesSquareCatalan: {
                for (unsigned long k = 0; k <= n; ++k) {
                    sum += row_[k] * row_[k] * central_[k];
                }
                sum *= central_[n];
                break;
            }
            case SequenceTag::Hypergeometric:
                throw std::logic_error("hypergeometric kind in BinomialSumStream");
        }
        return sum;
    }
};

Integer binom(unsigned long n, unsigned long k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

} // namespace

std::unique_ptr<TermStream> make_stream(const SequenceKind& kind) {
    kind.validate();
    if (kind.tag == SequenceTag::Hypergeometric) {
        return std::make_unique<HypergeometricStream>(kind);
    }
    return std::make_unique<BinomialSumStream>(kind.tag);
}

Rational term_direct(const SequenceKind& kind, unsigned long n) {
    kind.validate();
    switch (kind.tag) {
        case SequenceTag::Hypergeometric: {
            // literal Pochhammer quotient prod (u)_n / prod (l)_n
            Rational value(1);
            for (const Rational& u : kind.upper) {
                for (unsigned long j = 0; j < n; ++j) value *= u + j;
            }
            for (const Rational& l : kind.lower) {
                for (unsigned long j = 0; j < n; ++j) value /= l + j;
            }
            return value;
        }
        case SequenceTag::Apery: {
            Integer sum = 0;
            for (unsigned long k = 0; k <= n; ++k) {
                Integer a = binom(n, k), b = binom(n + k, k);
                sum += a * a * b * b;
            }
            return Rational(sum);
        }
        case SequenceTag::Domb: {
            Integer sum = 0;
            for (unsigned long k = 0; k <= n; ++k) {
                Integer a = binom(n, k);
                sum += a * a * binom(2 * k, k) * binom(2 * (n - k), n - k);
            }
            return Rational(sum);
        }
        case SequenceTag::AlmkvistZudilin: {
            Integer sum = 0;
            for (unsigned long k = 0; 3 * k <= n; ++k) {
                Integer fact3k, factk;
                mpz_fac_ui(fact3k.get_mpz_t(), 3 * k);
                mpz_fac_ui(factk.get_mpz_t(), k);
                Integer term = fact3k / (factk * factk * factk);
                Integer pow3;
                mpz_ui_pow_ui(pow3.get_mpz_t(), 3, n - 3 * k);
                term *= pow3 * binom(n, 3 * k) * binom(n + k, k);
                if ((n - k) % 2 == 1) term = -term;
                sum += term;
            }
            return Rational(sum);
        }
        case SequenceTag::ConvolutionSquares: {
            Integer sum = 0;
            for (unsigned long k = 0; k <= n; ++k) {
                Integer a = binom(2 * k, k), b = binom(2 * (n - k), n - k);
                sum += a * a * b * b;
            }
            return Rational(sum);
        }
        case SequenceTag::CentralTimesCubes: {
            Integer sum = 0;
            for (unsigned long k = 0; k <= n; ++k) {
                Integer a = binom(n, k);
                sum += a * a * a;
            }
            return Rational(Integer(sum * binom(2 * n, n)));
        }
        case SequenceTag::CentralTimesSquareCatalan: {
            Integer sum = 0;
            for (unsigned long k = 0; k <= n; ++k) {
                Integer a = binom(n, k);
                sum += a * a * binom(2 * k, k);
            }
            return Rational(Integer(sum * binom(2 * n, n)));
        }
    }
    throw std::logic_error("unknown sequence tag");
}

} // namespace mosaic
