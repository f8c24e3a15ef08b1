// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "planalg/haagerup.hpp"

using namespace planalg;

namespace {

constexpr long kDeltaAgreementBits = 100;
constexpr unsigned kResidualBits = 60;
constexpr unsigned kOraclePrecision = 512;
constexpr std::size_t kAxiomMaxN = 3;
constexpr std::size_t kAxiomSamples = 100;
constexpr std::uint64_t kAxiomSeed = 20261017;
constexpr std::size_t kAuditMaxN = 4;
constexpr int kMomentMaxK = 4;
constexpr double kLimitDelta = 1.0;
constexpr double kLimitTemperleyLieb = 30.0;
constexpr double kLimitAxioms = 300.0;
constexpr double kLimitPipeline = 600.0;
constexpr double kLimitScan = 60.0;

struct Outcome {
    bool passed = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            passed = false;
            detail << " [failed: " << what << "]";
        }
    }
};

const SpinContextPtr& haagerup() {
    static const SpinContextPtr ctx = SpinContext::create(haagerup_graph());
    return ctx;
}

VerifyOptions verify_options() {
    VerifyOptions o;
    o.tolerance_bits = kResidualBits;
    return o;
}

/// delta = sqrt((5 + sqrt 13) / 2) with outward rounding in MPFR.
std::pair<BigFloat, BigFloat> delta_oracle() {
    BigFloat lo(kOraclePrecision), hi(kOraclePrecision);
    mpfr_set_ui(lo.get(), 13, MPFR_RNDD);
    mpfr_set_ui(hi.get(), 13, MPFR_RNDU);
    mpfr_sqrt(lo.get(), lo.get(), MPFR_RNDD);
    mpfr_sqrt(hi.get(), hi.get(), MPFR_RNDU);
    mpfr_add_ui(lo.get(), lo.get(), 5, MPFR_RNDD);
    mpfr_add_ui(hi.get(), hi.get(), 5, MPFR_RNDU);
    mpfr_div_2ui(lo.get(), lo.get(), 1, MPFR_RNDD);
    mpfr_div_2ui(hi.get(), hi.get(), 1, MPFR_RNDU);
    mpfr_sqrt(lo.get(), lo.get(), MPFR_RNDD);
    mpfr_sqrt(hi.get(), hi.get(), MPFR_RNDU);
    return {std::move(lo), std::move(hi)};
}

bool within_bits(const BigFloat& a, const BigFloat& b, long bits) {
    BigFloat d(kOraclePrecision);
    mpfr_sub(d.get(), a.get(), b.get(), MPFR_RNDU);
    mpfr_abs(d.get(), d.get(), MPFR_RNDU);
    BigFloat limit(kOraclePrecision);
    mpfr_set_ui_2exp(limit.get(), 1, -bits, MPFR_RNDN);
    return compare(d, limit) <= 0;
}

Outcome criterion_delta() {
    Outcome out;
    const BipartiteGraph g = haagerup_graph();
    const Polynomial p = charpoly(g.adjacency());
    const Polynomial minimal({Rational(3), Rational(0), Rational(-5), Rational(0), Rational(1)});
    out.require(p.divmod(minimal).second.is_zero(), "charpoly divisible by x^4 - 5x^2 + 3");
    const Scalar delta = graph_norm(g);
    out.require(minimal.eval(delta).is_zero(), "delta is a root of its minimal polynomial");
    const CertInterval enclosure = to_interval(delta, 256);
    const auto [lo, hi] = delta_oracle();
    out.require(within_bits(enclosure.lower(), lo, kDeltaAgreementBits) &&
                    within_bits(enclosure.upper(), hi, kDeltaAgreementBits),
                "enclosure agrees with the MPFR evaluation to 2^-100");
    out.detail << " delta=" << to_decimal(delta, 25);
    return out;
}

Integer matchings(std::size_t n) {
    std::vector<Integer> c(n + 1, 0);
    c[0] = 1;
    for (std::size_t m = 1; m <= n; ++m)
        for (std::size_t k = 0; k < m; ++k) c[m] += c[k] * c[m - 1 - k];
    return c[n];
}

Outcome criterion_temperley_lieb() {
    Outcome out;
    for (std::size_t n = 0; n <= 8; ++n)
        out.require(Integer(all_diagrams(n).size()) == matchings(n) && catalan(n) == matchings(n),
                    "Catalan count n=" + std::to_string(n));
    const Scalar delta = haagerup()->delta();
    Scalar prev(1), cur(delta);  // [1], [2]
    for (std::size_t n = 1; n <= 6; ++n) {
        const TLElement f = jones_wenzl(n, delta);
        out.require((multiply(f, f, delta) - f).is_zero(), "f" + std::to_string(n) + " idempotent");
        for (std::size_t i = 1; i < 2 * n; ++i)
            if (i != n) out.require(tl_cap(f, i, delta).is_zero(), "f" + std::to_string(n) + " cap " + std::to_string(i));
        out.require(markov_trace(f, delta) == cur, "trace f" + std::to_string(n) + " = [n+1]");
        Scalar next = delta * cur - prev;
        prev = cur;
        cur = next;
    }
    return out;
}

Outcome criterion_axioms() {
    Outcome out;
    std::size_t count = 0;
    for (const auto& c : check_axioms(haagerup(), kAxiomMaxN, kAxiomSamples, kAxiomSeed)) {
        ++count;
        out.require(c.passed, c.name + " n=" + std::to_string(c.n) + to_string(c.shading));
    }
    out.detail << " checks=" << count;
    return out;
}

const GeneratorCandidate& generator() {
    static const GeneratorCandidate c = find_generator(haagerup(), generator_spec(bundled_manifest()));
    return c;
}

Outcome criterion_generator() {
    Outcome out;
    std::size_t caps = 0;
    for (const auto& r : verify_generator(generator(), verify_options())) {
        if (r.id.rfind("cap_", 0) == 0 && r.certified()) ++caps;
        out.require(r.certified(), r.id);
    }
    out.require(caps == 8, "eight cap-kills");
    auto other = SpinContext::create(haagerup_graph());
    const std::string again = find_generator(other, generator_spec(bundled_manifest())).element.to_json();
    out.require(again == generator().element.to_json(), "bit-identical serialization");
    out.detail << " caps=" << caps;
    return out;
}

Outcome criterion_relations() {
    Outcome out;
    const RelationManifest manifest = bundled_manifest();
    const PipelineReport report = verify_all(haagerup(), manifest, PipelineOptions{});
    out.require(report.ok(), "pipeline: " + report.first_failure());
    GeneratorCandidate bumped = generator();
    bumped.element[0] += Scalar(Rational(1, 1000));
    std::size_t failures = 0;
    for (const auto& r : verify_generator(bumped, verify_options())) failures += r.certified() ? 0 : 1;
    failures += relation_4box(bumped, verify_options()).certified() ? 0 : 1;
    for (const auto& r : relations_56(bumped, manifest, verify_options(), &generator())) failures += r.certified() ? 0 : 1;
    out.require(failures > 0, "perturbed generator detected");
    out.detail << " checks=" << report.checks.size() << " perturbed_failures=" << failures;
    return out;
}

Outcome criterion_traces() {
    Outcome out;
    const GpaElement& t = generator().element;
    const MomentTable m = moments(generator(), kMomentMaxK, true);
    out.require(m.entries.at(2) == inner_product(t, t), "tr(T^2) = <T,T>");
    const RelationReport r = relation_4box(generator());
    WordEvaluator ev(haagerup(), {{"T", t}});
    Scalar implied(0);
    for (const auto& [word, coeff] : r.coefficients) implied += coeff * trace(multiply(t, ev.evaluate(word)));
    out.require(m.entries.at(3) == implied, "tr(T^3) from the 4-box coefficients");
    for (int k = 1; k <= kMomentMaxK; ++k)
        out.require(m.entries.at(k) == m.oracle.at(k), "oracle k=" + std::to_string(k));
    out.detail << " tr(T^2)=" << to_string(m.entries.at(2));
    return out;
}

Outcome criterion_audit() {
    Outcome out;
    const auto first = dimension_audit(generator(), kAuditMaxN);
    const auto second = dimension_audit(generator(), kAuditMaxN);
    for (std::size_t n = 0; n < first.size(); ++n) {
        out.require(first[n].span_dimension == second[n].span_dimension &&
                        first[n].base_loop_count == second[n].base_loop_count,
                    "reproducible n=" + std::to_string(n));
        out.require(Integer(first[n].tl_dimension) == first[n].catalan, "TL = Catalan n=" + std::to_string(n));
        out.detail << " n" << n << ":" << first[n].span_dimension << "/" << first[n].base_loop_count;
    }
    out.require(first.size() == kAuditMaxN + 1 && Integer(first[4].span_dimension) > catalan(4), "n=4 span exceeds 14");
    return out;
}

Outcome criterion_scan() {
    Outcome out;
    for (std::size_t k : {2u, 3u})
        for (const auto& row : scan_graph(path_graph(k), 3).rows)
            out.require(row.low_weight_dimension == 0, "A_" + std::to_string(k) + " n=" + std::to_string(row.n));
    std::size_t dim = 0;
    for (const auto& row : scan_graph(haagerup_graph(), 4).rows)
        if (row.n == 4 && row.shading == Shading::plus) dim = row.low_weight_dimension;
    out.require(dim > 0, "Haagerup n=4 low-weight space nonzero");
    out.detail << " haagerup_n4=" << dim;
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit_seconds;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "graph norm", kLimitDelta, criterion_delta},
        {2, "Temperley-Lieb and Jones-Wenzl", kLimitTemperleyLieb, criterion_temperley_lieb},
        {3, "planar algebra axioms", kLimitAxioms, criterion_axioms},
        {4, "generator reconstruction", 0, criterion_generator},
        {5, "relation verification", kLimitPipeline, criterion_relations},
        {6, "trace consistency", 0, criterion_traces},
        {7, "dimension audit", 0, criterion_audit},
        {8, "graph scan", kLimitScan, criterion_scan},
    };
    bool all = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.require(false, e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0) out.require(seconds < c.limit_seconds, "runtime limit");
        all = all && out.passed;
        std::cout << "criterion " << c.id << " (" << c.name << "): " << (out.passed ? "PASS" : "FAIL") << " in "
                  << seconds << " s" << out.detail.str() << std::endl;
    }
    return all ? 0 : 1;
}
