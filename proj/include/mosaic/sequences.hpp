#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mosaic/rational.hpp"

namespace mosaic {

enum class SequenceTag {
    Hypergeometric,
    Apery,
    Domb,
    AlmkvistZudilin,
    ConvolutionSquares,
    CentralTimesCubes,
    CentralTimesSquareCatalan,
};

// Descriptor of a term sequence A_0, A_1, ... Hypergeometric kinds carry
// their Pochhammer parameters (3 for 1/pi series, 5 for 1/pi^2 series);
// the other kinds are fixed binomial sums.
struct SequenceKind {
    SequenceTag tag = SequenceTag::Apery;
    std::vector<Rational> upper; // hypergeometric only
    std::vector<Rational> lower;

    static SequenceKind hypergeometric(std::vector<Rational> upper,
                                       std::vector<Rational> lower);
    static SequenceKind apery() { return {SequenceTag::Apery, {}, {}}; }
    static SequenceKind domb() { return {SequenceTag::Domb, {}, {}}; }
    static SequenceKind almkvist_zudilin() { return {SequenceTag::AlmkvistZudilin, {}, {}}; }
    static SequenceKind convolution_squares() { return {SequenceTag::ConvolutionSquares, {}, {}}; }
    static SequenceKind central_times_cubes() { return {SequenceTag::CentralTimesCubes, {}, {}}; }
    static SequenceKind central_times_square_catalan() {
        return {SequenceTag::CentralTimesSquareCatalan, {}, {}};
    }

    // Throws ValidationError: hypergeometric lists must have equal length
    // 3 or 5 with every parameter in (0, 1].
    void validate() const;

    std::string name() const; // wire name, e.g. "almkvist_zudilin"

    bool operator==(const SequenceKind& o) const = default;
};

// Stateful generator yielding A_0, A_1, A_2, ... exactly. Streams own
// private mutable state; create one per thread of control.
class TermStream {
public:
    virtual ~TermStream() = default;
    virtual Rational next() = 0;
};

std::unique_ptr<TermStream> make_stream(const SequenceKind& kind);

// Literal evaluation of the defining formula (Pochhammer products or the
// binomial sum with its exact bounds). Independent of the stream
// recurrences; serves as their oracle.
Rational term_direct(const SequenceKind& kind, unsigned long n);

} // namespace mosaic
