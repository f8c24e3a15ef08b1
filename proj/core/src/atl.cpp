#include "planalg/atl.hpp"

#include <algorithm>
#include <map>

namespace planalg {

namespace {

long positive_mod(long a, long m) { return ((a % m) + m) % m; }

LoopPath click_loop(const BipartiteGraph& g, const LoopPath& l, long k) {
    const long m = static_cast<long>(l.edges.size());
    if (m == 0) return l;
    const long shift = positive_mod(k, m);
    const auto vs = loop_vertices(g, l);
    LoopPath r;
    r.start = static_cast<std::uint32_t>(vs[static_cast<std::size_t>(positive_mod(-shift, m))]);
    r.edges.resize(l.edges.size());
    for (long j = 0; j < m; ++j) r.edges[static_cast<std::size_t>((j + shift) % m)] = l.edges[static_cast<std::size_t>(j)];
    return r;
}

SparseVector to_sparse(const GpaElement& x, const std::vector<std::uint32_t>* columns) {
    SparseVector out;
    if (columns == nullptr) {
        for (std::size_t i = 0; i < x.size(); ++i)
            if (!x[i].is_zero()) out.emplace_back(static_cast<std::uint32_t>(i), x[i]);
        return out;
    }
    for (std::size_t c = 0; c < columns->size(); ++c) {
        const Scalar& v = x[(*columns)[c]];
        if (!v.is_zero()) out.emplace_back(static_cast<std::uint32_t>(c), v);
    }
    return out;
}

std::vector<std::uint32_t> base_loops(const GpaElement& x) {
    std::vector<std::uint32_t> out;
    const auto base = x.context()->graph().base();
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x.space().loop(i).start == base) out.push_back(static_cast<std::uint32_t>(i));
    return out;
}

}  // namespace

Vector LowWeightSpace::coordinates(const GpaElement& x) const {
    Vector c;
    c.reserve(coordinate_loops.size());
    for (auto loop : coordinate_loops) c.push_back(x[loop]);
    GpaElement rebuilt(x.context(), n, shading);
    for (std::size_t i = 0; i < c.size(); ++i) rebuilt += basis[i].scaled(c[i]);
    if (!(rebuilt - x).is_zero()) throw Error(ErrorCode::NotLowWeight, "element is not in the low-weight space");
    return c;
}

std::vector<std::vector<std::uint32_t>> cap_constraints(const SpinContextPtr& ctx, std::size_t n, Shading shading) {
    std::vector<std::vector<std::uint32_t>> rows;
    if (n == 0) return rows;
    const BipartiteGraph& g = ctx->graph();
    const LoopSpace& sp = ctx->space(n, shading);
    for (std::size_t i = 1; i <= 2 * n; ++i) {
        const long k = static_cast<long>(n) - static_cast<long>(i);
        const long back = i == 2 * n ? -k - 1 : -k;
        std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>, std::vector<std::uint32_t>> groups;
        for (std::size_t j = 0; j < sp.size(); ++j) {
            LoopPath l = click_loop(g, sp.loop(j), k);
            if (l.edges[n - 1] != l.edges[n]) continue;
            LoopPath r;
            r.start = l.start;
            for (std::size_t e = 0; e < 2 * n; ++e)
                if (e != n - 1 && e != n) r.edges.push_back(l.edges[e]);
            if (n > 1) r = click_loop(g, r, back);
            groups[{r.start, r.edges}].push_back(static_cast<std::uint32_t>(j));
        }
        for (auto& [key, members] : groups) rows.push_back(std::move(members));
    }
    return rows;
}

LowWeightSpace low_weight_space(const SpinContextPtr& ctx, std::size_t n, Shading shading) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "low-weight spaces need n >= 1");
    LowWeightSpace out;
    out.n = n;
    out.shading = shading;
    const LoopSpace& sp = ctx->space(n, shading);
    EchelonBasis echelon(sp.size());
    for (const auto& row : cap_constraints(ctx, n, shading)) {
        SparseVector v;
        for (auto c : row) v.emplace_back(c, Scalar(1));
        echelon.insert(std::move(v));
    }
    for (const auto& null : echelon.nullspace()) {
        GpaElement x(ctx, n, shading);
        for (const auto& [c, val] : null) x[c] = val;
        out.basis.push_back(std::move(x));
    }
    std::vector<char> pivot(sp.size(), 0);
    for (auto p : echelon.pivots()) pivot[p] = 1;
    for (std::size_t c = 0; c < sp.size(); ++c)
        if (!pivot[c]) out.coordinate_loops.push_back(static_cast<std::uint32_t>(c));
    return out;
}

Matrix rotation_matrix(const LowWeightSpace& space) {
    const std::size_t k = space.dimension();
    Matrix r(k, k);
    for (std::size_t j = 0; j < k; ++j) {
        Vector c = space.coordinates(rotate(space.basis[j]));
        for (std::size_t i = 0; i < k; ++i) r(i, j) = c[i];
    }
    return r;
}

Polynomial cyclotomic(unsigned order) {
    if (order == 0) throw Error(ErrorCode::InvalidArgument, "cyclotomic order must be positive");
    std::vector<Rational> c(order + 1, Rational(0));
    c[0] = -1;
    c[order] = 1;
    Polynomial p(c);
    for (unsigned d = 1; d < order; ++d)
        if (order % d == 0) p = p.divmod(cyclotomic(d)).first;
    return p;
}

std::vector<RotationClass> rotation_eigenspaces(const LowWeightSpace& space) {
    std::vector<RotationClass> out;
    if (space.dimension() == 0) return out;
    const Matrix r = rotation_matrix(space);
    for (unsigned order = 1; order <= space.n; ++order) {
        if (space.n % order != 0) continue;
        const Polynomial phi = cyclotomic(order);
        const auto kernel = nullspace(phi.eval(r));
        if (kernel.empty()) continue;
        RotationClass cls;
        cls.order = order;
        if (order == 1) cls.eigenvalue = Scalar(1);
        if (order == 2) cls.eigenvalue = Scalar(-1);
        cls.multiplicity = kernel.size() / static_cast<std::size_t>(phi.degree());
        for (const auto& v : kernel) {
            GpaElement x(space.basis.front().context(), space.n, space.shading);
            for (std::size_t j = 0; j < v.size(); ++j)
                if (!v[j].is_zero()) x += space.basis[j].scaled(v[j]);
            cls.basis.push_back(std::move(x));
        }
        const std::size_t k = kernel.size();
        cls.rotation = Matrix(k, k);
        // Express rho on the class basis through the coordinates of the kernel vectors.
        Matrix coords(space.dimension(), k);
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < space.dimension(); ++i) coords(i, j) = kernel[j][i];
        const Matrix image = r * coords;
        EchelonBasis pick(k);
        std::vector<std::size_t> rows;
        for (std::size_t i = 0; i < space.dimension() && rows.size() < k; ++i) {
            SparseVector row;
            for (std::size_t j = 0; j < k; ++j)
                if (!coords(i, j).is_zero()) row.emplace_back(static_cast<std::uint32_t>(j), coords(i, j));
            if (pick.insert(row)) rows.push_back(i);
        }
        Matrix square(k, k);
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t j = 0; j < k; ++j) square(a, j) = coords(rows[a], j);
        const Matrix inv = inverse(square);
        Matrix picked(k, k);
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t j = 0; j < k; ++j) picked(a, j) = image(rows[a], j);
        cls.rotation = inv * picked;
        out.push_back(std::move(cls));
    }
    return out;
}

Integer annular_dimension(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), 2 * n, n - k);
    return c;
}

AnnularFamily annular_consequences(const GpaElement& source, std::size_t target_n, const AnnularOptions& options) {
    const std::size_t m = source.n();
    if (target_n < m) throw Error(ErrorCode::InvalidArgument, "annular target below the source size");
    if (m > 0) {
        for (std::size_t i = 1; i <= 2 * m; ++i)
            if (!cap(source, i).is_zero()) throw Error(ErrorCode::NotLowWeight, "source is not killed by every cap");
    }
    AnnularFamily family;
    family.source = source;
    family.source_name = options.source_name;
    family.target_n = target_n;

    std::vector<AnnularImage> level{{options.source_name, source}};
    if (m > 0) level.push_back({"click(" + options.source_name + ")", click(source)});
    for (std::size_t j = m; j < target_n; ++j) {
        std::vector<AnnularImage> next;
        for (const auto& img : level)
            for (std::size_t i = 1; i <= 2 * (j + 1); ++i)
                next.push_back({"cup@" + std::to_string(i) + "(" + img.word + ")", cup(img.element, i)});
        level = std::move(next);
    }

    std::vector<std::uint32_t> columns;
    const bool restrict = options.base_loops_only && options.target_shading == Shading::plus;
    for (const auto& img : level) {
        if (img.element.shading() != options.target_shading) continue;
        if (restrict && columns.empty()) columns = base_loops(img.element);
        break;
    }
    const std::size_t width = restrict ? columns.size() : (level.empty() ? 0 : level.front().element.size());
    EchelonBasis echelon(width);
    for (auto& img : level) {
        if (img.element.shading() != options.target_shading) continue;
        if (echelon.insert(to_sparse(img.element, restrict ? &columns : nullptr))) family.images.push_back(std::move(img));
    }
    return family;
}

Matrix gram_matrix(const std::vector<GpaElement>& vectors) {
    const std::size_t k = vectors.size();
    Matrix g(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i; j < k; ++j) {
            g(i, j) = inner_product(vectors[i], vectors[j]);
            if (j != i) g(j, i) = g(i, j).conj();
        }
    }
    return g;
}

DualBasisData dual_basis(const std::vector<GpaElement>& vectors) {
    DualBasisData out;
    out.vectors = vectors;
    out.gram = gram_matrix(vectors);
    try {
        out.gram_inverse = inverse(out.gram);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::Singular || e.code() == ErrorCode::UncertifiableDeterminant)
            throw Error(ErrorCode::SingularGram, "vectors are not linearly independent");
        throw;
    }
    const std::size_t k = vectors.size();
    for (std::size_t j = 0; j < k; ++j) {
        GpaElement d(vectors[j].context(), vectors[j].n(), vectors[j].shading());
        for (std::size_t i = 0; i < k; ++i) {
            const Scalar c = out.gram_inverse(i, j).conj();
            if (!c.is_zero()) d += vectors[i].scaled(c);
        }
        out.duals.push_back(std::move(d));
    }
    return out;
}

Projection project_onto_span(const GpaElement& x, const DualBasisData& basis) {
    Projection p;
    p.residual = x;
    for (std::size_t i = 0; i < basis.vectors.size(); ++i) {
        Scalar c = inner_product(x, basis.duals[i]);
        if (!c.is_zero()) p.residual -= basis.vectors[i].scaled(c);
        p.coefficients.push_back(std::move(c));
    }
    return p;
}

Projection solve_on_base_loops(const GpaElement& x, const std::vector<GpaElement>& vectors) {
    const std::vector<std::uint32_t> columns = base_loops(x);
    const std::size_t k = vectors.size();
    std::vector<std::uint32_t> rows;
    if (columns.size() == k) {
        rows = columns;
    } else {
        EchelonBasis pick(k);
        for (auto c : columns) {
            SparseVector row;
            for (std::size_t j = 0; j < k; ++j)
                if (!vectors[j][c].is_zero()) row.emplace_back(static_cast<std::uint32_t>(j), vectors[j][c]);
            if (pick.insert(std::move(row))) rows.push_back(c);
            if (rows.size() == k) break;
        }
        if (rows.size() < k) throw Error(ErrorCode::SingularGram, "vectors are dependent on the base loops");
    }
    Matrix a(k, k);
    Vector rhs(k);
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t j = 0; j < k; ++j) a(r, j) = vectors[j][rows[r]];
        rhs[r] = x[rows[r]];
    }
    Projection p;
    try {
        p.coefficients = solve_linear(a, rhs);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::Singular) throw Error(ErrorCode::SingularGram, "vectors are dependent on the base loops");
        throw;
    }
    p.residual = x;
    for (std::size_t j = 0; j < k; ++j)
        if (!p.coefficients[j].is_zero()) p.residual -= vectors[j].scaled(p.coefficients[j]);
    return p;
}

}  // namespace planalg
