#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planalg/gpa.hpp"
#include "planalg/linalg.hpp"

namespace planalg {

/// Elements of P_{n,shading} killed by every cap. The basis is in reduced
/// echelon form: basis[j] is 1 at loop coordinate_loops[j] and 0 at the other
/// coordinate loops, so those entries are coordinates on the space.
struct LowWeightSpace {
    std::size_t n = 0;
    Shading shading = Shading::plus;
    std::vector<GpaElement> basis;
    std::vector<std::uint32_t> coordinate_loops;

    std::size_t dimension() const { return basis.size(); }
    /// Coordinates of an element of the space in the basis.
    Vector coordinates(const GpaElement& x) const;
};

/// The stacked cap-constraint rows of P_{n,shading}: each row lists the loops
/// whose entries sum to one entry of some cap_i(x).
std::vector<std::vector<std::uint32_t>> cap_constraints(const SpinContextPtr& ctx, std::size_t n, Shading shading);
LowWeightSpace low_weight_space(const SpinContextPtr& ctx, std::size_t n, Shading shading);

/// The rotation rho restricted to a low-weight space has eigenvalues among the
/// n-th roots of unity. Each class collects the primitive order-th roots, spanning
/// the kernel of the cyclotomic polynomial of that order evaluated at rho. For
/// order 1 and 2 the eigenvalue is the exact value 1 or -1; higher orders form
/// invariant planes whose eigenvalues exp(2 pi i k / order), gcd(k, order) = 1,
/// each occur multiplicity times.
struct RotationClass {
    unsigned order = 1;
    std::optional<Scalar> eigenvalue;
    std::size_t multiplicity = 0;
    std::vector<GpaElement> basis;
    Matrix rotation;
};

/// The matrix of rho on the space in the basis coordinates.
Matrix rotation_matrix(const LowWeightSpace& space);
std::vector<RotationClass> rotation_eigenspaces(const LowWeightSpace& space);
Polynomial cyclotomic(unsigned order);

struct AnnularImage {
    std::string word;
    GpaElement element;
};

/// Independent images of a low-weight source under annular tangles. Words are
/// clicks of the source followed by cup insertions; an image is kept when it is
/// independent of the earlier ones.
struct AnnularFamily {
    GpaElement source;
    std::string source_name;
    std::size_t target_n = 0;
    std::vector<AnnularImage> images;
};

/// Dimension of the weight-k annular module at n boundary pairs for a
/// rotation eigenvalue away from the trivial ones: binom(2n, n-k).
Integer annular_dimension(std::size_t n, std::size_t k);

struct AnnularOptions {
    std::string source_name = "T";
    /// Independence is decided on the loops starting at the base vertex only
    /// when true; otherwise on every loop.
    bool base_loops_only = false;
    Shading target_shading = Shading::plus;
};

AnnularFamily annular_consequences(const GpaElement& source, std::size_t target_n, const AnnularOptions& options = {});

struct DualBasisData {
    std::vector<GpaElement> vectors;
    Matrix gram;
    Matrix gram_inverse;
    std::vector<GpaElement> duals;
};

Matrix gram_matrix(const std::vector<GpaElement>& vectors);
DualBasisData dual_basis(const std::vector<GpaElement>& vectors);

struct Projection {
    Vector coefficients;
    GpaElement residual;
};

Projection project_onto_span(const GpaElement& x, const DualBasisData& basis);

/// Solves x = sum c_i vectors[i] using only the loops based at the base vertex,
/// then forms the residual on every loop. The base-loop restriction of the
/// vectors must be independent.
Projection solve_on_base_loops(const GpaElement& x, const std::vector<GpaElement>& vectors);

}  // namespace planalg
