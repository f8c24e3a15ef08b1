#include <doctest.h>

#include "planalg/data.hpp"
#include "support.hpp"

using namespace planalg;
using planalg::testing::generator;
using planalg::testing::haagerup;

TEST_CASE("words evaluate to the corresponding operations") {
    const GpaElement& t = generator().element;
    WordEvaluator ev(haagerup(), {{"T", t}});
    CHECK(ev.evaluate("T") == t);
    CHECK(ev.evaluate("mul(T, T)") == multiply(t, t));
    CHECK(ev.evaluate("rot(T)") == rotate(t));
    CHECK(ev.evaluate("click@3(T)") == click(t, 3));
    CHECK(ev.evaluate("cap@2(T)") == cap(t, 2));
    CHECK(ev.evaluate("cup@10(click(T))") == cup(click(t), 10));
    CHECK(ev.evaluate("adj(T)") == adjoint(t));
    CHECK(ev.evaluate("incl(T)") == include(t));
    CHECK(ev.evaluate("jw@4") == tl_embed(haagerup(), jones_wenzl(4, haagerup()->delta()), Shading::plus));
    CHECK(ev.evaluate("unit@2:-") == GpaElement::unit(haagerup(), 2, Shading::minus));
    CHECK(ev.evaluate("embed[2,1,4,3]") == tl_embed(haagerup(), TLDiagram::from_list({2, 1, 4, 3}), Shading::plus));
}

TEST_CASE("definitions expand and reject bad input") {
    WordEvaluator ev(haagerup(), {{"T", generator().element}});
    ev.define("X", "incl(T)");
    ev.define("Y", "mul(X, X)");
    CHECK(ev.evaluate("Y") == multiply(include(generator().element), include(generator().element)));
    CHECK_THROWS_AS(ev.define("X", "T"), Error);
    ev.define("Loop", "mul(Loop, T)");
    CHECK_THROWS_AS(ev.evaluate("Loop"), Error);
    CHECK_THROWS_AS(ev.evaluate("Z"), Error);
    CHECK_THROWS_AS(ev.evaluate("mul(T, T"), Error);
    CHECK_THROWS_AS(ev.evaluate("cap(T)"), Error);
    CHECK_THROWS_AS(ev.evaluate("T T"), Error);
}

TEST_CASE("the bundled manifest parses and round-trips") {
    const RelationManifest m = bundled_manifest();
    CHECK(m.generator.n == 4);
    CHECK(m.generator.rotation_eigenvalue == Scalar(-1));
    REQUIRE(m.generator.normalization.has_value());
    CHECK(m.relations.size() == 3);
    for (const auto& r : m.relations) CHECK_FALSE(r.description.empty());
    const std::string text = m.to_json();
    CHECK(RelationManifest::from_json(text).to_json() == text);
}

TEST_CASE("manifest parse errors") {
    CHECK_THROWS_AS(RelationManifest::from_json("[{]"), Error);
    CHECK_THROWS_AS(RelationManifest::from_json(R"({"relations": [{"id": "x", "kind": "odd"}]})"), Error);
    const RelationManifest list = RelationManifest::from_json(
        R"([{"id": "r", "lhs": "T", "rhs": [{"coeff": {"kind": "rat", "num": "1", "den": "1"}, "word": "T"}], "section_quote": "trivial"}])");
    REQUIRE(list.relations.size() == 1);
    CHECK(list.relations[0].kind == "equal");
}
