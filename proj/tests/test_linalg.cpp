#include <doctest.h>

#include "planalg/linalg.hpp"

using namespace planalg;

namespace {

Matrix from_rows(const std::vector<std::vector<long>>& rows) {
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = Scalar(rows[i][j]);
    return m;
}

}  // namespace

TEST_CASE("determinant and inverse of an integer matrix") {
    const Matrix m = from_rows({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
    CHECK(determinant(m) == Scalar(4));
    CHECK((m * inverse(m) - Matrix::identity(3)).is_zero());
    CHECK(rank(m) == 3);
}

TEST_CASE("nullspace of a rank-deficient matrix") {
    const Matrix m = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    CHECK(rank(m) == 2);
    const auto kernel = nullspace(m);
    REQUIRE(kernel.size() == 1);
    const Vector image = m.apply(kernel.front());
    for (const auto& v : image) CHECK(v.is_zero());
    CHECK(determinant(m).is_zero());
    CHECK_THROWS_AS(inverse(m), Error);
}

TEST_CASE("solve_linear returns the unique solution") {
    const Matrix m = from_rows({{3, 1}, {1, 2}});
    const Vector x = solve_linear(m, {Scalar(9), Scalar(8)});
    CHECK(x[0] == Scalar(2));
    CHECK(x[1] == Scalar(3));
}

TEST_CASE("characteristic polynomial by Berkowitz") {
    // Path on four vertices: x^4 - 3x^2 + 1.
    const Matrix a = from_rows({{0, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}});
    const Polynomial p = charpoly(a);
    CHECK(p == Polynomial({Rational(1), Rational(0), Rational(-3), Rational(0), Rational(1)}));
    CHECK(p.eval(a).is_zero());
}

TEST_CASE("polynomial division and gcd") {
    const Polynomial f({Rational(-1), Rational(0), Rational(1)});
    const Polynomial g({Rational(1), Rational(1)});
    const auto [q, r] = f.divmod(g);
    CHECK(r.is_zero());
    CHECK(q == Polynomial({Rational(-1), Rational(1)}));
    CHECK(gcd(f, f * g).monic() == f.monic());
}

TEST_CASE("real root isolation with Sturm sequences") {
    const Polynomial p({Rational(3), Rational(0), Rational(-5), Rational(0), Rational(1)});
    const auto roots = isolate_real_roots(p);
    CHECK(roots.size() == 4);
    const CertInterval top = root_enclosure(p, roots.back(), 200);
    CHECK(top.contains(Rational(2074, 1000)) == false);
    CHECK(compare(top.lower(), to_interval(Scalar(Rational(2074, 1000)), 64).upper()) > 0);
}

TEST_CASE("echelon basis tracks rank and kernel") {
    EchelonBasis e(3);
    CHECK(e.insert({{0, Scalar(1)}, {1, Scalar(1)}}));
    CHECK(e.insert({{1, Scalar(1)}, {2, Scalar(1)}}));
    CHECK_FALSE(e.insert({{0, Scalar(1)}, {2, Scalar(-1)}}));
    CHECK(e.rank() == 2);
    const auto kernel = e.nullspace();
    REQUIRE(kernel.size() == 1);
    CHECK(e.reduce({{0, Scalar(2)}, {1, Scalar(2)}}).empty());
}

TEST_CASE("certified eigenvector of a rational matrix") {
    const Matrix m = from_rows({{2, 1}, {1, 2}});
    const Vector v = certified_eigenvector(m, Scalar(3));
    CHECK(v[0] == Scalar(1));
    CHECK(v[1] == Scalar(1));
}
