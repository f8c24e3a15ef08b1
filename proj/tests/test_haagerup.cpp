#include <doctest.h>

#include "support.hpp"

using namespace planalg;
using planalg::testing::generator;
using planalg::testing::haagerup;
using planalg::testing::sqrt13;

TEST_CASE("the generator satisfies its defining conditions exactly") {
    const GeneratorCandidate& c = generator();
    CHECK(c.low_weight_dimension == 13);
    CHECK(c.eigenspace_dimension == 4);
    CHECK(c.normalization == Scalar(3) + sqrt13());
    for (const auto& r : verify_generator(c)) {
        INFO(r.id);
        CHECK(r.certification == Certification::exact_zero);
    }
    const GpaElement& t = c.element;
    CHECK(trace(t).is_zero());
    CHECK_FALSE(t.is_zero());
}

TEST_CASE("find_generator is deterministic") {
    auto other = SpinContext::create(haagerup_graph());
    const GeneratorCandidate again = find_generator(other);
    CHECK(again.element.to_json() == generator().element.to_json());
    CHECK(again.selection_note == generator().selection_note);
    const GpaElement parsed = GpaElement::from_json(haagerup(), generator().element.to_json());
    CHECK(parsed == generator().element);
    CHECK(parsed.to_json() == generator().element.to_json());
}

TEST_CASE("no generator on graphs without low-weight vectors") {
    auto ctx = SpinContext::create(path_graph(2));
    CHECK_THROWS_AS(find_generator(ctx), Error);
    try {
        find_generator(ctx);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NoCandidate);
    }
}

TEST_CASE("the 4-box relation and the trace of T cubed") {
    const RelationReport r = relation_4box(generator());
    CHECK(r.certification == Certification::exact_zero);
    REQUIRE(r.coefficients.size() == 15);
    WordEvaluator ev(haagerup(), {{"T", generator().element}});
    GpaElement square(haagerup(), 4, Shading::plus);
    Scalar implied(0);
    for (const auto& [word, coeff] : r.coefficients) {
        const GpaElement b = ev.evaluate(word);
        square += b.scaled(coeff);
        implied += coeff * trace(multiply(generator().element, b));
    }
    CHECK(square == multiply(generator().element, generator().element));
    const GpaElement t = generator().element;
    CHECK(trace(multiply(t, multiply(t, t))) == implied);
}

TEST_CASE("manifest relations certify exactly and in interval mode") {
    for (const auto& r : relations_56(generator(), bundled_manifest())) {
        INFO(r.id);
        CHECK(r.certification == Certification::exact_zero);
    }
    GeneratorCandidate iv = generator();
    iv.element = to_interval(iv.element, 256);
    VerifyOptions options;
    for (const auto& r : relations_56(iv, bundled_manifest(), options, &generator())) {
        INFO(r.id);
        CHECK(r.certification == Certification::interval_bounded);
    }
}

TEST_CASE("an empty manifest is reported") {
    RelationManifest empty;
    try {
        relations_56(generator(), empty);
        FAIL("expected ManifestMissing");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ManifestMissing);
    }
}

TEST_CASE("a perturbed generator fails verification") {
    GeneratorCandidate bumped = generator();
    bumped.element[0] += Scalar(Rational(1, 1000));
    std::size_t failures = 0;
    for (const auto& r : verify_generator(bumped)) failures += r.certified() ? 0 : 1;
    if (!relation_4box(bumped).certified()) ++failures;
    CHECK(failures > 0);
    GeneratorCandidate bumped_interval = bumped;
    bumped_interval.element = to_interval(bumped.element, 256);
    std::size_t interval_failures = 0;
    for (const auto& r : verify_generator(bumped_interval)) interval_failures += r.certified() ? 0 : 1;
    CHECK(interval_failures > 0);
}

TEST_CASE("moments match the state-sum oracle") {
    const MomentTable m = moments(generator(), 4, true);
    CHECK(m.entries.at(1).is_zero());
    CHECK(m.entries.at(2) == generator().normalization);
    CHECK(m.entries.at(3).is_zero());
    for (int k = 1; k <= 4; ++k) CHECK(m.entries.at(k) == m.oracle.at(k));
}

TEST_CASE("dimension audit through four boxes") {
    const auto rows = dimension_audit(generator(), 4);
    REQUIRE(rows.size() == 5);
    for (const auto& row : rows) {
        CHECK(Integer(row.tl_dimension) == row.catalan);
        CHECK(Integer(row.span_dimension) <= row.base_loop_count);
    }
    CHECK(rows[4].span_dimension == 15);
    CHECK(Integer(rows[4].span_dimension) > catalan(4));
    const auto again = dimension_audit(generator(), 4);
    for (std::size_t n = 0; n < rows.size(); ++n) CHECK(again[n].span_dimension == rows[n].span_dimension);
}

TEST_CASE("graph scans") {
    for (std::size_t k : {2u, 3u}) {
        const ScanReport r = scan_graph(path_graph(k), 3);
        CHECK(r.below_two);
        for (const auto& row : r.rows) CHECK(row.low_weight_dimension == 0);
    }
    const ScanReport h = scan_graph(haagerup_graph(), 4);
    CHECK_FALSE(h.below_two);
    bool found = false;
    for (const auto& row : h.rows)
        if (row.n == 4 && row.shading == Shading::plus) found = row.low_weight_dimension == 13;
    CHECK(found);
}

TEST_CASE("the full pipeline passes in both modes") {
    PipelineOptions options;
    const PipelineReport exact = verify_all(haagerup(), bundled_manifest(), options);
    CHECK(exact.ok());
    options.interval_only = true;
    const PipelineReport iv = verify_all(haagerup(), bundled_manifest(), options);
    CHECK(iv.ok());
    CHECK(iv.precision_bits == 256);
    CHECK(exact.to_json() == verify_all(haagerup(), bundled_manifest(), PipelineOptions{}).to_json());
}
