#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "planalg/scalar.hpp"

namespace planalg {

using Vector = std::vector<Scalar>;

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    const std::vector<Scalar>& entries() const { return entries_; }

    bool is_exact() const;
    bool is_rational() const;
    Matrix operator*(const Matrix& other) const;
    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    Matrix scaled(const Scalar& s) const;
    Vector apply(const Vector& v) const;
    Matrix transpose() const;
    Matrix conj_transpose() const;
    bool is_zero() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> entries_;
};

/// Polynomial with rational coefficients, lowest degree first. The zero
/// polynomial has an empty coefficient list.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);
    static Polynomial monomial(std::size_t degree, const Rational& c = 1);

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const Rational& leading() const { return coeffs_.back(); }
    Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

    Rational eval(const Rational& x) const;
    Scalar eval(const Scalar& x) const;
    Matrix eval(const Matrix& m) const;
    Polynomial derivative() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rational& q) const;
    /// Quotient and remainder by a nonzero divisor.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
    Polynomial monic() const;
    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }
    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

using PolynomialZ = Polynomial;

Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial squarefree_part(const Polynomial& p);
std::vector<Polynomial> sturm_sequence(const Polynomial& p);
/// Number of distinct real roots in (lower, upper].
std::size_t sturm_count(const std::vector<Polynomial>& sturm, const Rational& lower, const Rational& upper);
Rational cauchy_root_bound(const Polynomial& p);

/// An isolating interval (lower, upper] holding exactly one real root; when
/// lower == upper the root is the rational lower itself.
struct RootInterval {
    Rational lower, upper;
    bool exact() const { return lower == upper; }
};

std::vector<RootInterval> isolate_real_roots(const Polynomial& p);
/// Shrinks an isolating interval of p until its width is at most 2^-bits.
RootInterval refine_root(const Polynomial& p, RootInterval root, unsigned bits);
CertInterval root_enclosure(const Polynomial& p, const RootInterval& root, unsigned bits);

/// Sparse vector with strictly increasing column indices and no stored zeros.
using SparseVector = std::vector<std::pair<std::uint32_t, Scalar>>;

void sparse_axpy(SparseVector& y, const Scalar& a, const SparseVector& x);

/// Incremental row space in reduced echelon form. Pivot rows are normalized
/// to 1 at the pivot and cleared in every other pivot column.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t cols) : cols_(cols) {}

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }
    SparseVector reduce(SparseVector v) const;
    /// Inserts v when independent; returns whether the rank grew.
    bool insert(SparseVector v);
    const std::vector<SparseVector>& rows() const { return rows_; }
    const std::vector<std::uint32_t>& pivots() const { return pivots_; }
    /// Basis of the right nullspace of the stored rows in reduced echelon
    /// normal form, one vector per free column in increasing order.
    std::vector<SparseVector> nullspace() const;

private:
    std::size_t cols_;
    std::vector<SparseVector> rows_;
    std::vector<std::uint32_t> pivots_;
    std::vector<std::int64_t> row_of_pivot_;
};

std::vector<Vector> nullspace(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Fraction-free (Bareiss) row echelon form; returns the determinant for
/// square inputs as the last pivot.
Scalar determinant(const Matrix& m);
Vector solve_linear(const Matrix& m, const Vector& rhs);
Matrix inverse(const Matrix& m);
/// det(xI - m) by the division-free Berkowitz recursion.
Polynomial charpoly(const Matrix& m);

struct EigenOptions {
    std::size_t normalize_index = 0;
    bool allow_degenerate = false;
};

/// Eigenvector normalized to 1 at options.normalize_index. For interval
/// eigenvalues the returned entries are certified enclosures.
Vector certified_eigenvector(const Matrix& m, const Scalar& lambda, const EigenOptions& options = {});
std::vector<Vector> eigenspace_basis(const Matrix& m, const Scalar& lambda);

}  // namespace planalg
