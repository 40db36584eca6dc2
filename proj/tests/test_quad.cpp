#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "mosaic/analytic.hpp"
#include "mosaic/quad.hpp"

using namespace mosaic;

namespace {

MultiQuadElement sq(long long d, long long num, long long den = 1) {
    return MultiQuadElement::term(d, make_rational(num, den));
}

double embed_err(const BigComplex& a, const BigComplex& b) {
    const BigComplex diff(a.re - b.re, a.im - b.im);
    return diff.magnitude().to_double();
}

} // namespace

TEST_CASE("normalize_radical") {
    CHECK(normalize_radical(12).scale == 2);
    CHECK(normalize_radical(12).radicand == 3);
    CHECK(normalize_radical(7).scale == 1);
    CHECK(normalize_radical(7).radicand == 7);
    CHECK(normalize_radical(-8).scale == 2);
    CHECK(normalize_radical(-8).radicand == -2);
    CHECK(normalize_radical(1).radicand == 1);
    CHECK(normalize_radical(-1).radicand == -1);
    CHECK(normalize_radical(720).scale == 12);
    CHECK(normalize_radical(720).radicand == 5);
    CHECK_THROWS_AS(normalize_radical(0), ZeroRadicand);
}

TEST_CASE("square-free detection") {
    CHECK(is_square_free(1));
    CHECK(is_square_free(-1));
    CHECK(is_square_free(15));
    CHECK(is_square_free(-7));
    CHECK(!is_square_free(12));
    CHECK(!is_square_free(-8));
    CHECK(!is_square_free(49));
    CHECK(!is_square_free(0));
    CHECK_THROWS_AS(MultiQuadElement::term(12, Rational(1)), ValidationError);
    CHECK_THROWS_AS(MultiQuadElement::term(0, Rational(1)), ZeroRadicand);
}

TEST_CASE("basis products") {
    // sqrt(2)*sqrt(3) = sqrt(6)
    CHECK(sq(2, 1) * sq(3, 1) == sq(6, 1));
    // sqrt(-1)*sqrt(-7) = -sqrt(7)
    CHECK(sq(-1, 1) * sq(-7, 1) == sq(7, -1));
    // sqrt(7)^2 = 7
    CHECK(sq(7, 1) * sq(7, 1) == MultiQuadElement::from_rational(Rational(7)));
    // sqrt(6)*sqrt(10) = 2*sqrt(15)
    CHECK(sq(6, 1) * sq(10, 1) == sq(15, 2));
    // sqrt(-7)^2 = -7
    CHECK(sq(-7, 1) * sq(-7, 1) == MultiQuadElement::from_rational(Rational(-7)));
    // sqrt(-2)*sqrt(3) = sqrt(-6)
    CHECK(sq(-2, 1) * sq(3, 1) == sq(-6, 1));
}

TEST_CASE("EX2 z squared matches hand expansion") {
    // ((13 sqrt(7) - 34)/54)^2 = (2339 - 884 sqrt(7))/2916
    const MultiQuadElement z = sq(7, 13, 54) + sq(1, -34, 54);
    const MultiQuadElement expect = sq(1, 2339, 2916) + sq(7, -884, 2916);
    CHECK(z * z == expect);
    CHECK(z.pow(2) == expect);
}

TEST_CASE("additive structure prunes zeros") {
    const MultiQuadElement a = sq(1, 3) + sq(2, 1);
    const MultiQuadElement sum = a + sq(1, -3);
    CHECK(sum == sq(2, 1));
    CHECK(sum.radicands() == std::vector<long long>{2});
    CHECK(sq(15, 1).scaled(Rational(0)).is_zero());
    const MultiQuadElement b = sq(7, 7) + sq(1, -10);
    CHECK(b + sq(-1, 13).scaled(Rational(0)) == b);
    CHECK((a - a).is_zero());
}

TEST_CASE("golden-ratio power") {
    // ((sqrt(5)-1)/2)^12 = 161 - 72 sqrt(5)
    const MultiQuadElement base = sq(5, 1, 2) + sq(1, -1, 2);
    const MultiQuadElement z = base.pow(12);
    CHECK(z == sq(1, 161) + sq(5, -72));
    CHECK(base.pow(0) == MultiQuadElement::one());
    CHECK(sq(7, 1).pow(2) == MultiQuadElement::from_rational(Rational(7)));
}

TEST_CASE("component extraction") {
    const MultiQuadElement x = sq(15, 60) + sq(3, -134);
    CHECK(x.component(15) == 60);
    CHECK(x.component(2) == 0);
    const MultiQuadElement y = sq(1, 73) + sq(2, 52) + sq(3, -42) + sq(6, -30);
    CHECK(y.component(1) == 73);
    CHECK(y.component(6) == -30);
}

TEST_CASE("numeric embedding") {
    const BigComplex z = mq_embed(sq(1, 161) + sq(5, -72), 40);
    CHECK(z.im.is_zero());
    CHECK(z.re.str(20).substr(0, 10) == "3.10562001");
    CHECK(z.re.log10_floor() == -3);

    const BigComplex i = mq_embed(sq(-1, 1), 30);
    CHECK(i.re.is_zero());
    CHECK(i.im.to_double() == doctest::Approx(1.0));

    CHECK(mq_embed(MultiQuadElement(), 30).magnitude().is_zero());
}

TEST_CASE("embedding fixes the sign rule for all radicand sign pairs") {
    const long long pool[] = {2, -2, 7, -7, 1, -1, 15};
    for (long long d1 : pool) {
        for (long long d2 : pool) {
            const BigComplex lhs = mq_embed(sq(d1, 1) * sq(d2, 1), 40);
            const BigComplex rhs = mq_embed(sq(d1, 1), 40) * mq_embed(sq(d2, 1), 40);
            CHECK(embed_err(lhs, rhs) < 1e-35);
        }
    }
}

namespace {

MultiQuadElement random_element(std::mt19937_64& rng) {
    static const long long pool[] = {1, -1, 2, -2, 3, 5, 6, -7, 10, 15};
    std::uniform_int_distribution<int> n_terms(0, 3);
    std::uniform_int_distribution<int> pick(0, 9);
    std::uniform_int_distribution<long long> num(-50, 50);
    std::uniform_int_distribution<long long> den(1, 20);
    MultiQuadElement x;
    const int terms = n_terms(rng);
    for (int i = 0; i < terms; ++i) {
        x += MultiQuadElement::term(pool[pick(rng)], make_rational(num(rng), den(rng)));
    }
    return x;
}

void check_normal_form(const MultiQuadElement& x) {
    for (const auto& [d, c] : x.components()) {
        CHECK(is_square_free(d));
        CHECK(c != 0);
    }
}

} // namespace

TEST_CASE("ring axioms on random elements") {
    std::mt19937_64 rng(4001);
    for (int i = 0; i < 1000; ++i) {
        const MultiQuadElement x = random_element(rng);
        const MultiQuadElement y = random_element(rng);
        const MultiQuadElement z = random_element(rng);
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x * MultiQuadElement::one() == x);
        check_normal_form(x * y);
        check_normal_form(x + y);
    }
}

TEST_CASE("power addition law") {
    std::mt19937_64 rng(4002);
    std::uniform_int_distribution<unsigned long> e(0, 5);
    for (int i = 0; i < 200; ++i) {
        const MultiQuadElement x = random_element(rng);
        const unsigned long m = e(rng), n = e(rng);
        CHECK(x.pow(m + n) == x.pow(m) * x.pow(n));
    }
}

TEST_CASE("embedding is a homomorphism") {
    std::mt19937_64 rng(4003);
    const unsigned long digits = 50;
    for (int i = 0; i < 1000; ++i) {
        const MultiQuadElement x = random_element(rng);
        const MultiQuadElement y = random_element(rng);
        const BigComplex ex = mq_embed(x, digits);
        const BigComplex ey = mq_embed(y, digits);
        CHECK(embed_err(mq_embed(x * y, digits), ex * ey) < 1e-40);
        CHECK(embed_err(mq_embed(x + y, digits), ex + ey) < 1e-40);
    }
}

TEST_CASE("conjugation gives |z|^2") {
    const MultiQuadElement z = sq(1, 47, 128) + sq(-7, 45, 128);
    CHECK(z * z.conjugate() == MultiQuadElement::one()); // |z| = 1 exactly
    const MultiQuadElement w = sq(1, 3) + sq(2, 1);
    CHECK(w * w.conjugate() == w * w); // real element
}

TEST_CASE("string rendering") {
    CHECK(MultiQuadElement().str() == "0");
    CHECK((sq(7, 13, 54) + sq(1, -17, 27)).str() == "-17/27 + 13/54*sqrt(7)");
    CHECK(sq(-1, 1).str() == "sqrt(-1)");
}
