#include <doctest.h>

#include "support.hpp"

using namespace planalg;
using planalg::testing::haagerup;

TEST_CASE("planar algebra axioms hold exactly on seeded random elements") {
    const auto checks = check_axioms(haagerup(), 3, 100, 20261017);
    CHECK(checks.size() == 4 * 2 * 10);
    for (const auto& c : checks) {
        INFO(c.name << " n=" << c.n << " shading=" << to_string(c.shading));
        CHECK(c.passed);
    }
}

TEST_CASE("units and traces of Temperley-Lieb elements") {
    const auto& ctx = haagerup();
    for (std::size_t n = 0; n <= 4; ++n) {
        for (Shading s : {Shading::plus, Shading::minus}) {
            CHECK(trace(GpaElement::unit(ctx, n, s)) == pow(ctx->delta(), static_cast<long>(n)));
            for (const auto& d : all_diagrams(n)) {
                const GpaElement e = tl_embed(ctx, d, s);
                CHECK(trace(e) == pow(ctx->delta(), static_cast<long>(closure_loops(d))));
                if (n > 0) CHECK(click(e) == tl_embed(ctx, d.rotated(1), flip(s)));
            }
        }
    }
}

TEST_CASE("caps of embedded diagrams agree with diagrammatic caps") {
    const auto& ctx = haagerup();
    for (const auto& d : all_diagrams(3)) {
        for (std::size_t i = 1; i <= 6; ++i) {
            const GpaElement capped = cap(tl_embed(ctx, d, Shading::plus), i);
            const TLElement expected = tl_cap(TLElement::from_diagram(d), i, ctx->delta());
            CHECK(capped == tl_embed(ctx, expected, capped.shading()));
        }
    }
}

TEST_CASE("include adds a through strand") {
    const auto& ctx = haagerup();
    for (const auto& d : all_diagrams(3)) {
        CHECK(include(tl_embed(ctx, d, Shading::plus)) == tl_embed(ctx, d.with_strand(), Shading::plus));
        CHECK(include(tl_embed(ctx, d, Shading::plus)) == cup(tl_embed(ctx, d, Shading::plus), 4));
    }
}

TEST_CASE("element JSON round-trips byte-identically") {
    const auto& ctx = haagerup();
    std::mt19937_64 rng(7);
    const GpaElement x = random_element(ctx, 2, Shading::minus, rng).scaled(ctx->delta());
    const std::string text = x.to_json();
    const GpaElement y = GpaElement::from_json(ctx, text);
    CHECK(y == x);
    CHECK(y.to_json() == text);
    CHECK_THROWS_AS(GpaElement::from_json(ctx, "{\"n\": 2}"), Error);
}

TEST_CASE("shape mismatches are reported") {
    const auto& ctx = haagerup();
    const GpaElement a = GpaElement::unit(ctx, 2, Shading::plus);
    const GpaElement b = GpaElement::unit(ctx, 3, Shading::plus);
    CHECK_THROWS_AS(multiply(a, b), Error);
    CHECK_THROWS_AS(cap(a, 5), Error);
}
