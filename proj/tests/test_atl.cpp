#include <doctest.h>

#include "support.hpp"

using namespace planalg;
using planalg::testing::generator;
using planalg::testing::haagerup;

namespace {

/// Nullity of x -> (cap_1 x, ..., cap_2n x) assembled from basis loops.
std::size_t cap_nullity(const SpinContextPtr& ctx, std::size_t n, Shading s) {
    const std::size_t dim = ctx->space(n, s).size();
    std::vector<std::vector<Scalar>> columns;
    for (std::size_t q = 0; q < dim; ++q) {
        const GpaElement e = GpaElement::basis_loop(ctx, n, s, q);
        std::vector<Scalar> col;
        for (std::size_t i = 1; i <= 2 * n; ++i) {
            const GpaElement c = cap(e, i);
            col.insert(col.end(), c.entries().begin(), c.entries().end());
        }
        columns.push_back(std::move(col));
    }
    Matrix m(columns.front().size(), dim);
    for (std::size_t q = 0; q < dim; ++q)
        for (std::size_t r = 0; r < columns[q].size(); ++r) m(r, q) = columns[q][r];
    return dim - rank(m);
}

}  // namespace

TEST_CASE("path graphs have no low-weight vectors up to three boxes") {
    for (std::size_t k : {2u, 3u}) {
        auto ctx = SpinContext::create(path_graph(k));
        for (std::size_t n = 1; n <= 3; ++n)
            for (Shading s : {Shading::plus, Shading::minus}) CHECK(low_weight_space(ctx, n, s).dimension() == 0);
    }
}

TEST_CASE("Haagerup low-weight space at four boxes") {
    const LowWeightSpace space = low_weight_space(haagerup(), 4, Shading::plus);
    CHECK(space.dimension() == 13);
    for (const auto& v : space.basis)
        for (std::size_t i = 1; i <= 8; ++i) CHECK(cap(v, i).is_zero());
    std::size_t total = 0, minus_one = 0;
    for (const auto& cls : rotation_eigenspaces(space)) {
        total += cls.basis.size();
        if (cls.order == 2) minus_one = cls.multiplicity;
        for (const auto& v : cls.basis) {
            if (cls.order == 1) CHECK(rotate(v) == v);
            if (cls.order == 2) CHECK(rotate(v) == -v);
        }
    }
    CHECK(total == 13);
    CHECK(minus_one == 4);
    const std::vector<std::size_t> frozen{0, 1, 5};
    for (std::size_t n = 1; n <= 3; ++n) {
        CHECK(low_weight_space(haagerup(), n, Shading::plus).dimension() == cap_nullity(haagerup(), n, Shading::plus));
        CHECK(low_weight_space(haagerup(), n, Shading::plus).dimension() == frozen[n - 1]);
    }
}

TEST_CASE("coordinates reproduce basis vectors") {
    const LowWeightSpace space = low_weight_space(haagerup(), 4, Shading::plus);
    const Vector c = space.coordinates(space.basis[3]);
    for (std::size_t i = 0; i < c.size(); ++i) CHECK(c[i] == Scalar(i == 3 ? 1 : 0));
    CHECK_THROWS_AS(space.coordinates(GpaElement::unit(haagerup(), 4, Shading::plus)), Error);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == Polynomial({Rational(-1), Rational(1)}));
    CHECK(cyclotomic(2) == Polynomial({Rational(1), Rational(1)}));
    CHECK(cyclotomic(4) == Polynomial({Rational(1), Rational(0), Rational(1)}));
}

TEST_CASE("annular consequences of the generator") {
    CHECK(annular_dimension(5, 4) == 10);
    CHECK(annular_dimension(6, 4) == 66);
    AnnularOptions opts;
    opts.base_loops_only = true;
    CHECK(annular_consequences(generator().element, 5, opts).images.size() == 10);
    CHECK(annular_consequences(generator().element, 6, opts).images.size() == 66);
}

TEST_CASE("dual bases invert the Gram matrix") {
    std::vector<GpaElement> tl;
    for (const auto& d : all_diagrams(3)) tl.push_back(tl_embed(haagerup(), d, Shading::plus));
    const DualBasisData duals = dual_basis(tl);
    for (std::size_t i = 0; i < tl.size(); ++i)
        for (std::size_t j = 0; j < tl.size(); ++j)
            CHECK(inner_product(tl[i], duals.duals[j]) == Scalar(i == j ? 1 : 0));
    const Projection p = project_onto_span(tl[2].scaled(Scalar(5)) - tl[4], duals);
    CHECK(p.residual.is_zero());
    CHECK(p.coefficients[2] == Scalar(5));
    CHECK(p.coefficients[4] == Scalar(-1));
    tl.push_back(tl[0] + tl[1]);
    CHECK_THROWS_AS(dual_basis(tl), Error);
}
