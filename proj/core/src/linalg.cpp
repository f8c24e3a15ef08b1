#include "planalg/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace planalg {

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

bool Matrix::is_exact() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_exact(); });
}

bool Matrix::is_rational() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.as_rational().has_value(); });
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (cols_ != other.rows_) throw Error(ErrorCode::ShapeMismatch, "matrix product shape mismatch");
    Matrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (a.is_exact() && a.is_zero()) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                const Scalar& b = other(k, j);
                if (b.is_exact() && b.is_zero()) continue;
                out(i, j) += a * b;
            }
        }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw Error(ErrorCode::ShapeMismatch, "matrix sum shape mismatch");
    Matrix out(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] + other.entries_[k];
    return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw Error(ErrorCode::ShapeMismatch, "matrix sum shape mismatch");
    Matrix out(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] - other.entries_[k];
    return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
    Matrix out(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] * s;
    return out;
}

Vector Matrix::apply(const Vector& v) const {
    if (v.size() != cols_) throw Error(ErrorCode::ShapeMismatch, "matrix-vector shape mismatch");
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            const Scalar& a = (*this)(i, j);
            if (a.is_exact() && a.is_zero()) continue;
            out[i] += a * v[j];
        }
    }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

Matrix Matrix::conj_transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j).conj();
    return out;
}

bool Matrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_zero(); });
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::monomial(std::size_t degree, const Rational& c) {
    std::vector<Rational> coeffs(degree + 1);
    coeffs[degree] = c;
    return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Scalar Polynomial::eval(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Scalar(*it);
    return acc;
}

Matrix Polynomial::eval(const Matrix& m) const {
    if (m.rows() != m.cols()) throw Error(ErrorCode::ShapeMismatch, "polynomial of a non-square matrix");
    Matrix acc(m.rows(), m.cols());
    const Matrix id = Matrix::identity(m.rows());
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * m + id.scaled(Scalar(*it));
    return acc;
}

Polynomial Polynomial::derivative() const {
    std::vector<Rational> out;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) out.push_back(coeffs_[k] * static_cast<long>(k));
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = coefficient(k) + o.coefficient(k);
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = coefficient(k) - o.coefficient(k);
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::scaled(const Rational& q) const {
    std::vector<Rational> out = coeffs_;
    for (auto& c : out) c *= q;
    return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    std::vector<Rational> rem = coeffs_;
    const long dd = divisor.degree();
    if (degree() < dd) return {Polynomial(), *this};
    std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1));
    for (long k = degree() - dd; k >= 0; --k) {
        Rational c = rem[static_cast<std::size_t>(k + dd)] / divisor.leading();
        quot[static_cast<std::size_t>(k)] = c;
        if (c == 0) continue;
        for (long j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= c * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(Rational(1) / leading());
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (long k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0 || mag != 1) out << mag.get_str();
        if (k > 0 && mag != 1) out << "*";
        if (k > 0) out << var;
        if (k > 1) out << "^" << k;
    }
    return out.str();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = x.divmod(y).second;
        x = y;
        y = r;
    }
    return x.monic();
}

Polynomial squarefree_part(const Polynomial& p) {
    if (p.degree() <= 0) return p;
    Polynomial g = gcd(p, p.derivative());
    return p.divmod(g).first.monic();
}

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
    std::vector<Polynomial> seq;
    Polynomial p0 = squarefree_part(p);
    seq.push_back(p0);
    if (p0.degree() <= 0) return seq;
    seq.push_back(p0.derivative());
    while (true) {
        Polynomial r = seq[seq.size() - 2].divmod(seq.back()).second;
        if (r.is_zero()) break;
        seq.push_back(r.scaled(Rational(-1)));
    }
    return seq;
}

namespace {

std::size_t sign_variations(const std::vector<Polynomial>& seq, const Rational& x) {
    std::size_t count = 0;
    int last = 0;
    for (const auto& p : seq) {
        int s = sgn(p.eval(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

}  // namespace

std::size_t sturm_count(const std::vector<Polynomial>& sturm, const Rational& lower, const Rational& upper) {
    return sign_variations(sturm, lower) - sign_variations(sturm, upper);
}

Rational cauchy_root_bound(const Polynomial& p) {
    Rational m(0);
    for (long k = 0; k < p.degree(); ++k) m = std::max(m, Rational(abs(p.coefficient(static_cast<std::size_t>(k)) / p.leading())));
    return m + 1;
}

std::vector<RootInterval> isolate_real_roots(const Polynomial& p) {
    if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "root isolation of the zero polynomial");
    std::vector<RootInterval> out;
    if (p.degree() == 0) return out;
    const std::vector<Polynomial> seq = sturm_sequence(p);
    const Polynomial& sf = seq.front();
    const Rational bound = cauchy_root_bound(sf);
    std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
    while (!stack.empty()) {
        auto [lo, hi] = stack.back();
        stack.pop_back();
        std::size_t c = sturm_count(seq, lo, hi);
        if (c == 0) continue;
        if (c == 1) {
            if (sf.eval(hi) == 0) {
                out.push_back({hi, hi});
            } else {
                out.push_back({lo, hi});
            }
            continue;
        }
        Rational mid = (lo + hi) / 2;
        stack.push_back({lo, mid});
        stack.push_back({mid, hi});
    }
    std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.upper < b.upper; });
    return out;
}

RootInterval refine_root(const Polynomial& p, RootInterval root, unsigned bits) {
    if (root.exact()) return root;
    const std::vector<Polynomial> seq = sturm_sequence(p);
    const Polynomial& sf = seq.front();
    Rational target(1);
    target /= Rational(mpz_class(1) << bits);
    while (root.upper - root.lower > target) {
        Rational mid = (root.lower + root.upper) / 2;
        if (sf.eval(mid) == 0) return {mid, mid};
        if (sturm_count(seq, root.lower, mid) == 1) {
            root.upper = mid;
        } else {
            root.lower = mid;
        }
    }
    return root;
}

CertInterval root_enclosure(const Polynomial& p, const RootInterval& root, unsigned bits) {
    RootInterval r = refine_root(p, root, bits + 2);
    CertInterval lo = CertInterval::from_rational(r.lower, bits);
    CertInterval hi = CertInterval::from_rational(r.upper, bits);
    return CertInterval(lo.lower(), hi.upper(), bits);
}

// ---------------------------------------------------------------------------
// Sparse rows

void sparse_axpy(SparseVector& y, const Scalar& a, const SparseVector& x) {
    if (a.is_exact() && a.is_zero()) return;
    SparseVector out;
    out.reserve(y.size() + x.size());
    std::size_t i = 0, j = 0;
    while (i < y.size() || j < x.size()) {
        if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
            out.push_back(std::move(y[i++]));
        } else if (i == y.size() || x[j].first < y[i].first) {
            out.emplace_back(x[j].first, a * x[j].second);
            ++j;
        } else {
            Scalar v = y[i].second + a * x[j].second;
            if (!(v.is_exact() && v.is_zero())) out.emplace_back(y[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    y = std::move(out);
}

SparseVector EchelonBasis::reduce(SparseVector v) const {
    if (rows_.empty()) return v;
    std::vector<std::pair<std::size_t, Scalar>> hits;
    for (const auto& [col, val] : v) {
        if (col < row_of_pivot_.size() && row_of_pivot_[col] >= 0) hits.emplace_back(static_cast<std::size_t>(row_of_pivot_[col]), val);
    }
    if (hits.empty()) return v;
    if (hits.size() <= 2) {
        for (const auto& [row, val] : hits) sparse_axpy(v, -val, rows_[row]);
        return v;
    }
    std::vector<Scalar> dense(cols_);
    std::vector<char> touched(cols_, 0);
    for (auto& [col, val] : v) {
        dense[col] = std::move(val);
        touched[col] = 1;
    }
    for (const auto& [row, coeff] : hits) {
        const Scalar neg = -coeff;
        for (const auto& [col, val] : rows_[row]) {
            dense[col] += neg * val;
            touched[col] = 1;
        }
    }
    SparseVector out;
    for (std::uint32_t c = 0; c < cols_; ++c) {
        if (touched[c] && !(dense[c].is_exact() && dense[c].is_zero())) out.emplace_back(c, std::move(dense[c]));
    }
    return out;
}

bool EchelonBasis::insert(SparseVector v) {
    SparseVector r = reduce(std::move(v));
    if (r.empty()) return false;
    if (r.front().second.is_interval()) throw Error(ErrorCode::InexactEntries, "echelon basis requires exact entries");
    const std::uint32_t pivot = r.front().first;
    const Scalar inv = Scalar(1) / r.front().second;
    for (auto& [col, val] : r) val = val * inv;
    r.front().second = Scalar(1);
    for (auto& row : rows_) {
        auto it = std::lower_bound(row.begin(), row.end(), pivot,
                                   [](const std::pair<std::uint32_t, Scalar>& e, std::uint32_t c) { return e.first < c; });
        if (it != row.end() && it->first == pivot) {
            Scalar coeff = it->second;
            sparse_axpy(row, -coeff, r);
        }
    }
    if (row_of_pivot_.size() < cols_) row_of_pivot_.assign(cols_, -1);
    row_of_pivot_[pivot] = static_cast<std::int64_t>(rows_.size());
    rows_.push_back(std::move(r));
    pivots_.push_back(pivot);
    return true;
}

std::vector<SparseVector> EchelonBasis::nullspace() const {
    std::vector<char> is_pivot(cols_, 0);
    for (auto p : pivots_) is_pivot[p] = 1;
    std::vector<std::vector<std::pair<std::uint32_t, Scalar>>> by_free(cols_);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        for (const auto& [col, val] : rows_[k]) {
            if (col != pivots_[k]) by_free[col].emplace_back(pivots_[k], -val);
        }
    }
    std::vector<SparseVector> out;
    for (std::uint32_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        SparseVector v = std::move(by_free[f]);
        v.emplace_back(f, Scalar(1));
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        out.push_back(std::move(v));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Dense exact elimination

namespace {

struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivot_cols;
    int swaps = 0;
};

/// Bareiss fraction-free echelon form. Pivot choice: first exactly nonzero
/// entry in the column.
Echelon bareiss(Matrix m) {
    Echelon e;
    Scalar prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
            ++e.swaps;
        }
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            const Scalar lead = m(i, c);
            for (std::size_t j = c + 1; j < m.cols(); ++j) {
                Scalar v = m(r, c) * m(i, j);
                if (!lead.is_zero()) v -= lead * m(r, j);
                m(i, j) = v / prev;
            }
            m(i, c) = Scalar(0);
        }
        prev = m(r, c);
        e.pivot_cols.push_back(c);
        ++r;
    }
    e.reduced = std::move(m);
    return e;
}

void require_exact(const Matrix& m) {
    if (!m.is_exact()) throw Error(ErrorCode::InexactEntries, "exact entries required");
}

}  // namespace

std::vector<Vector> nullspace(const Matrix& m) {
    require_exact(m);
    Echelon e = bareiss(m);
    Matrix& r = e.reduced;
    const std::size_t k = e.pivot_cols.size();
    for (std::size_t a = k; a-- > 0;) {
        const std::size_t pc = e.pivot_cols[a];
        const Scalar inv = Scalar(1) / r(a, pc);
        for (std::size_t j = pc; j < r.cols(); ++j) r(a, j) = r(a, j) * inv;
        for (std::size_t b = 0; b < a; ++b) {
            const Scalar f = r(b, pc);
            if (f.is_zero()) continue;
            for (std::size_t j = pc; j < r.cols(); ++j) r(b, j) -= f * r(a, j);
        }
    }
    std::vector<char> is_pivot(m.cols(), 0);
    for (auto pc : e.pivot_cols) is_pivot[pc] = 1;
    std::vector<Vector> out;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.cols());
        v[f] = Scalar(1);
        for (std::size_t a = 0; a < k; ++a) v[e.pivot_cols[a]] = -r(a, f);
        out.push_back(std::move(v));
    }
    return out;
}

std::size_t rank(const Matrix& m) {
    require_exact(m);
    return bareiss(m).pivot_cols.size();
}

Scalar determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::ShapeMismatch, "determinant of a non-square matrix");
    if (m.rows() == 0) return Scalar(1);
    require_exact(m);
    Echelon e = bareiss(m);
    if (e.pivot_cols.size() < m.rows()) return Scalar(0);
    Scalar d = e.reduced(m.rows() - 1, m.cols() - 1);
    return e.swaps % 2 ? -d : d;
}

namespace {

/// Gauss-Jordan on an augmented system. Exact pivots: first nonzero entry.
/// Interval pivots: the entry whose enclosure is farthest from zero.
Matrix gauss_jordan(Matrix a, Matrix b) {
    const std::size_t n = a.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = n;
        if (a.is_exact()) {
            for (std::size_t i = c; i < n; ++i) {
                if (!a(i, c).is_zero()) {
                    p = i;
                    break;
                }
            }
            if (p == n) throw Error(ErrorCode::Singular, "matrix is singular");
        } else {
            BigFloat best(64);
            for (std::size_t i = c; i < n; ++i) {
                CertInterval iv = to_interval(a(i, c), 64);
                if (iv.contains_zero()) continue;
                BigFloat mag = iv.lower().sign() > 0 ? iv.lower() : (-iv).lower();
                if (p == n || compare(mag, best) > 0) {
                    p = i;
                    best = mag;
                }
            }
            if (p == n) throw Error(ErrorCode::UncertifiableDeterminant, "no certified nonzero pivot");
        }
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            for (std::size_t j = 0; j < b.cols(); ++j) std::swap(b(p, j), b(c, j));
        }
        const Scalar inv = Scalar(1) / a(c, c);
        for (std::size_t j = c; j < n; ++j) a(c, j) = a(c, j) * inv;
        for (std::size_t j = 0; j < b.cols(); ++j) b(c, j) = b(c, j) * inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c) continue;
            const Scalar f = a(i, c);
            if (f.is_exact() && f.is_zero()) continue;
            for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
            for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) -= f * b(c, j);
        }
    }
    return b;
}

}  // namespace

Vector solve_linear(const Matrix& m, const Vector& rhs) {
    if (m.rows() != m.cols() || rhs.size() != m.rows()) throw Error(ErrorCode::ShapeMismatch, "solve shape mismatch");
    Matrix b(rhs.size(), 1);
    for (std::size_t i = 0; i < rhs.size(); ++i) b(i, 0) = rhs[i];
    Matrix x = gauss_jordan(m, b);
    Vector out(rhs.size());
    for (std::size_t i = 0; i < rhs.size(); ++i) out[i] = x(i, 0);
    return out;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::ShapeMismatch, "inverse of a non-square matrix");
    return gauss_jordan(m, Matrix::identity(m.rows()));
}

Polynomial charpoly(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::ShapeMismatch, "charpoly of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Polynomial({Rational(1)});
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            auto q = m(i, j).as_rational();
            if (!q) throw Error(ErrorCode::InvalidArgument, "charpoly requires rational entries");
            a[i][j] = *q;
        }
    }
    // Berkowitz: v holds det(xI - A_r) coefficients, highest degree first.
    std::vector<Rational> v{Rational(1), Rational(-a[0][0])};
    for (std::size_t r = 1; r < n; ++r) {
        std::vector<Rational> q(r + 2);
        q[0] = 1;
        q[1] = -a[r][r];
        std::vector<Rational> s(r);
        for (std::size_t i = 0; i < r; ++i) s[i] = a[i][r];
        for (std::size_t k = 0; k + 2 <= r + 1; ++k) {
            Rational dot(0);
            for (std::size_t i = 0; i < r; ++i) dot += a[r][i] * s[i];
            q[k + 2] = -dot;
            std::vector<Rational> next(r);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) next[i] += a[i][j] * s[j];
            s = std::move(next);
        }
        std::vector<Rational> w(r + 2);
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, r); ++j) w[i] += q[i - j] * v[j];
        v = std::move(w);
    }
    std::reverse(v.begin(), v.end());
    return Polynomial(std::move(v));
}

std::vector<Vector> eigenspace_basis(const Matrix& m, const Scalar& lambda) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::ShapeMismatch, "eigenspace of a non-square matrix");
    return nullspace(m - Matrix::identity(m.rows()).scaled(lambda));
}

Vector certified_eigenvector(const Matrix& m, const Scalar& lambda, const EigenOptions& options) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw Error(ErrorCode::ShapeMismatch, "eigenvector of a non-square matrix");
    if (options.normalize_index >= n) throw Error(ErrorCode::InvalidArgument, "normalization index out of range");
    if (lambda.is_exact() && m.is_exact()) {
        std::vector<Vector> basis = eigenspace_basis(m, lambda);
        if (basis.empty()) throw Error(ErrorCode::NotAnEigenvalue, "lambda is not an eigenvalue");
        if (basis.size() > 1 && !options.allow_degenerate)
            throw Error(ErrorCode::EigenspaceNotOneDimensional,
                        "eigenspace has dimension " + std::to_string(basis.size()));
        for (const Vector& v : basis) {
            const Scalar& pivot = v[options.normalize_index];
            if (pivot.is_zero()) continue;
            Vector out(n);
            for (std::size_t i = 0; i < n; ++i) out[i] = v[i] / pivot;
            return out;
        }
        throw Error(ErrorCode::InvalidArgument, "eigenvector vanishes at the normalization index");
    }
    // Enclosure path: fix x[k] = 1 and solve the remaining equations, dropping
    // one row whose removal leaves a certifiably invertible system.
    const std::size_t k = options.normalize_index;
    Matrix shifted = m - Matrix::identity(n).scaled(lambda);
    for (std::size_t drop = 0; drop < n; ++drop) {
        Matrix sub(n - 1, n - 1);
        Vector rhs(n - 1);
        std::size_t ri = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == drop) continue;
            std::size_t ci = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == k) continue;
                sub(ri, ci++) = shifted(i, j);
            }
            rhs[ri] = -shifted(i, k);
            ++ri;
        }
        try {
            Vector x = solve_linear(sub, rhs);
            Vector out(n);
            std::size_t ci = 0;
            for (std::size_t j = 0; j < n; ++j) out[j] = j == k ? Scalar(1) : x[ci++];
            return out;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::UncertifiableDeterminant && e.code() != ErrorCode::Singular) throw;
        }
    }
    throw Error(ErrorCode::NotAnEigenvalue, "no certified eigenvector enclosure");
}

}  // namespace planalg
