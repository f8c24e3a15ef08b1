#include <doctest.h>

#include "planalg/scalar.hpp"

using namespace planalg;

namespace {

Scalar adjoin(long radicand) { return exact_sqrt_or_adjoin(Scalar(radicand)); }

}  // namespace

TEST_CASE("rational arithmetic stays rational") {
    const Scalar a(Rational(3, 4)), b(Rational(-5, 6));
    CHECK((a + b).is_rational());
    CHECK(a * b == Scalar(Rational(-5, 8)));
    CHECK(a / b == Scalar(Rational(-9, 10)));
    CHECK(pow(a, -2) == Scalar(Rational(16, 9)));
    CHECK_THROWS_AS(a / Scalar(0), Error);
}

TEST_CASE("a quadratic tower multiplies and inverts exactly") {
    const Scalar s = adjoin(13);
    CHECK(s.is_tower());
    CHECK(s * s == Scalar(13));
    const Scalar x = Scalar(3) + s;
    CHECK(x * (Scalar(1) / x) == Scalar(1));
    CHECK((x * x - Scalar(6) * x) == Scalar(4));
    CHECK(x.conj() == x);
}

TEST_CASE("nested radicals and imaginary units") {
    const Scalar s1 = adjoin(13);
    const Scalar s2 = exact_sqrt_or_adjoin(Scalar(10) + Scalar(2) * s1);
    CHECK(s2 * s2 == Scalar(10) + Scalar(2) * s1);
    const Scalar i = exact_sqrt_or_adjoin(Scalar(-1), SqrtOptions{3, true, 0});
    CHECK(i * i == Scalar(-1));
    CHECK(i.conj() == -i);
    CHECK_FALSE(i.is_real());
    CHECK_THROWS_AS(exact_sqrt_or_adjoin(Scalar(-1)), Error);
}

TEST_CASE("exact square roots are found before adjoining") {
    CHECK(*exact_sqrt(Scalar(Rational(49, 4))) == Scalar(Rational(7, 2)));
    CHECK_FALSE(exact_sqrt(Scalar(2)).has_value());
    const Scalar s = adjoin(13);
    const Scalar square = (Scalar(1) + s) * (Scalar(1) + s);
    const auto root = exact_sqrt(square);
    REQUIRE(root.has_value());
    CHECK(*root * *root == square);
}

TEST_CASE("certified signs and enclosures") {
    const Scalar s = adjoin(13);
    CHECK(certified_sign(s - Scalar(Rational(36, 10))) == Sign::positive);
    CHECK(certified_sign(s - Scalar(Rational(361, 100))) == Sign::negative);
    CHECK(certified_sign(Scalar(0)) == Sign::zero);
    const CertInterval iv = to_interval(s, 200);
    CHECK_FALSE(iv.contains_zero());
    CHECK(iv.contains(Rational(0)) == false);
    BigFloat limit(64);
    mpfr_set_ui_2exp(limit.get(), 1, -190, MPFR_RNDN);
    CHECK(compare(iv.width(), limit) < 0);
}

TEST_CASE("interval arithmetic encloses the exact result") {
    const CertInterval two = CertInterval::from_rational(Rational(2), 128);
    const CertInterval root = two.sqrt();
    const CertInterval square = root * root;
    CHECK(square.contains(Rational(2)));
    CHECK((square - two).contains_zero());
}

TEST_CASE("scalar JSON round-trips byte-identically") {
    const Scalar s1 = adjoin(13);
    const Scalar i = exact_sqrt_or_adjoin(Scalar(-3) - s1, SqrtOptions{3, true, 0});
    for (const Scalar& x : {Scalar(Rational(-7, 3)), Scalar(2) + s1, i * s1 + Scalar(1), Scalar(to_interval(s1, 96))}) {
        const std::string text = to_json(x);
        CHECK(to_json(scalar_from_json(text)) == text);
        if (x.is_exact()) CHECK(scalar_from_json(text) == x);
    }
    CHECK_THROWS_AS(scalar_from_json("{\"kind\": \"bogus\"}"), Error);
}

TEST_CASE("decimal rendering") {
    CHECK(to_decimal(Scalar(Rational(1, 4)), 5).rfind("0.25", 0) == 0);
    CHECK(to_decimal(adjoin(13), 10).rfind("3.605551275", 0) == 0);
}
