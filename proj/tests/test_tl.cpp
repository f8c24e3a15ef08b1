#include <doctest.h>

#include "planalg/tl.hpp"

#include "support.hpp"

using namespace planalg;

namespace {

/// Non-crossing perfect matchings of 2n points, counted by splitting off the
/// partner of the first point.
Integer matchings(std::size_t n) {
    std::vector<Integer> c(n + 1, 0);
    c[0] = 1;
    for (std::size_t m = 1; m <= n; ++m)
        for (std::size_t k = 0; k < m; ++k) c[m] += c[k] * c[m - 1 - k];
    return c[n];
}

/// [k]_q by the Chebyshev recursion [k+1] = delta [k] - [k-1].
Scalar chebyshev(long k, const Scalar& delta) {
    Scalar prev(0), cur(1);
    for (long i = 1; i < k; ++i) {
        Scalar next = delta * cur - prev;
        prev = cur;
        cur = next;
    }
    return k == 0 ? Scalar(0) : cur;
}

}  // namespace

TEST_CASE("Catalan numbers count Temperley-Lieb diagrams") {
    for (std::size_t n = 0; n <= 8; ++n) {
        CHECK(Integer(all_diagrams(n).size()) == matchings(n));
        CHECK(catalan(n) == matchings(n));
    }
}

TEST_CASE("composition is associative and counts closed loops") {
    const auto ds = all_diagrams(3);
    for (const auto& a : ds)
        for (const auto& b : ds)
            for (const auto& c : {ds[0], ds[2], ds[4]}) {
                const auto ab = compose(a, b), bc = compose(b, c);
                const auto left = compose(ab.diagram, c), right = compose(a, bc.diagram);
                CHECK(left.diagram == right.diagram);
                CHECK(ab.closed_loops + left.closed_loops == bc.closed_loops + right.closed_loops);
            }
    const TLDiagram e1 = TLDiagram::generator(2, 1);
    CHECK(compose(e1, e1).closed_loops == 1);
    CHECK(compose(e1, e1).diagram == e1);
}

TEST_CASE("rotation and adjoint of diagrams") {
    for (const auto& d : all_diagrams(4)) {
        CHECK(d.rotated(8) == d);
        CHECK(d.rotated(3).rotated(-3) == d);
        CHECK(d.adjoint().adjoint() == d);
        CHECK(TLDiagram::from_list(d.to_list()) == d);
    }
    CHECK_THROWS_AS(TLDiagram::from_list({3, 4, 1, 2}), Error);
}

TEST_CASE("Jones-Wenzl projections at the Haagerup loop value") {
    const Scalar delta = testing::haagerup()->delta();
    for (std::size_t n = 1; n <= 6; ++n) {
        const TLElement f = jones_wenzl(n, delta);
        CHECK((multiply(f, f, delta) - f).is_zero());
        CHECK(f.adjoint().terms() == f.terms());
        for (std::size_t i = 1; i < 2 * n; ++i)
            if (i != n) CHECK(tl_cap(f, i, delta).is_zero());
        CHECK(markov_trace(f, delta) == chebyshev(static_cast<long>(n) + 1, delta));
        CHECK(markov_trace(f, delta) == quantum_integer(static_cast<long>(n) + 1, delta));
        CHECK(f.coefficient(TLDiagram::identity(n)) == Scalar(1));
    }
}

TEST_CASE("Jones-Wenzl recursion fails where a quantum integer vanishes") {
    const Scalar delta = exact_sqrt_or_adjoin(Scalar(2));
    CHECK(quantum_integer(4, delta).is_zero());
    CHECK_THROWS_AS(jones_wenzl(4, delta), Error);
}
