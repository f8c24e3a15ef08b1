#include "planalg/tl.hpp"

#include <algorithm>
#include <functional>

#include "json_detail.hpp"

namespace planalg {

TLDiagram::TLDiagram(std::size_t n, std::vector<std::uint8_t> partner) : n_(n), partner_(std::move(partner)) {
    if (partner_.size() != 2 * n_) throw Error(ErrorCode::InvalidArgument, "pairing must cover 2n points");
    for (std::size_t p = 0; p < partner_.size(); ++p) {
        std::size_t q = partner_[p];
        if (q >= partner_.size() || q == p || partner_[q] != p)
            throw Error(ErrorCode::InvalidArgument, "pairing is not a perfect matching");
    }
    std::vector<std::size_t> stack;
    for (std::size_t p = 0; p < partner_.size(); ++p) {
        if (partner_[p] > p) {
            stack.push_back(p);
        } else {
            if (stack.empty() || stack.back() != partner_[p])
                throw Error(ErrorCode::InvalidArgument, "pairing is not planar");
            stack.pop_back();
        }
    }
}

TLDiagram TLDiagram::identity(std::size_t n) {
    std::vector<std::uint8_t> p(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
        p[j] = static_cast<std::uint8_t>(top_point(n, j));
        p[top_point(n, j)] = static_cast<std::uint8_t>(j);
    }
    return TLDiagram(n, std::move(p));
}

TLDiagram TLDiagram::generator(std::size_t n, std::size_t i) {
    if (i < 1 || i >= n) throw Error(ErrorCode::BadPosition, "generator index out of range");
    TLDiagram d = identity(n);
    const std::size_t a = i - 1, b = i;
    d.partner_[a] = static_cast<std::uint8_t>(b);
    d.partner_[b] = static_cast<std::uint8_t>(a);
    const std::size_t ta = top_point(n, a), tb = top_point(n, b);
    d.partner_[ta] = static_cast<std::uint8_t>(tb);
    d.partner_[tb] = static_cast<std::uint8_t>(ta);
    return d;
}

std::size_t TLDiagram::through_strands() const {
    std::size_t count = 0;
    for (std::size_t p = 0; p < n_; ++p) count += is_through(p) ? 1 : 0;
    return count;
}

TLDiagram TLDiagram::adjoint() const {
    const std::size_t m = 2 * n_;
    std::vector<std::uint8_t> p(m);
    for (std::size_t x = 0; x < m; ++x) p[m - 1 - x] = static_cast<std::uint8_t>(m - 1 - partner_[x]);
    return TLDiagram(n_, std::move(p));
}

TLDiagram TLDiagram::rotated(long k) const {
    const long m = static_cast<long>(2 * n_);
    if (m == 0) return *this;
    const long shift = ((k % m) + m) % m;
    std::vector<std::uint8_t> p(static_cast<std::size_t>(m));
    for (long x = 0; x < m; ++x)
        p[static_cast<std::size_t>((x + shift) % m)] = static_cast<std::uint8_t>((partner_[static_cast<std::size_t>(x)] + shift) % m);
    return TLDiagram(n_, std::move(p));
}

TLDiagram TLDiagram::with_strand() const {
    const std::size_t n = n_ + 1;
    auto map = [&](std::size_t x) -> std::size_t { return x < n_ ? x : x + 2; };
    std::vector<std::uint8_t> p(2 * n);
    for (std::size_t x = 0; x < 2 * n_; ++x) p[map(x)] = static_cast<std::uint8_t>(map(partner_[x]));
    p[n_] = static_cast<std::uint8_t>(n_ + 1);
    p[n_ + 1] = static_cast<std::uint8_t>(n_);
    return TLDiagram(n, std::move(p));
}

std::vector<int> TLDiagram::to_list() const {
    std::vector<int> out;
    for (auto q : partner_) out.push_back(static_cast<int>(q) + 1);
    return out;
}

TLDiagram TLDiagram::from_list(const std::vector<int>& partners) {
    if (partners.size() % 2) throw Error(ErrorCode::InvalidArgument, "diagram needs an even number of points");
    std::vector<std::uint8_t> p;
    for (int q : partners) {
        if (q < 1 || q > static_cast<int>(partners.size())) throw Error(ErrorCode::InvalidArgument, "point out of range");
        p.push_back(static_cast<std::uint8_t>(q - 1));
    }
    return TLDiagram(partners.size() / 2, std::move(p));
}

std::string TLDiagram::to_json() const { return detail::json(to_list()).dump(); }

Composite compose(const TLDiagram& a, const TLDiagram& b) {
    if (a.n() != b.n()) throw Error(ErrorCode::ShapeMismatch, "composing diagrams of different size");
    const std::size_t n = a.n(), m = 2 * n;
    auto partner = [&](std::size_t x) -> std::size_t { return x < m ? a.partner(x) : m + b.partner(x - m); };
    auto boundary = [&](std::size_t x) { return x < n || x >= m + n; };
    auto glue = [&](std::size_t x) -> std::size_t { return x < m ? m + (m - 1 - x) : m - 1 - (x - m); };
    std::vector<std::uint8_t> out(m);
    std::vector<char> seen(2 * m, 0);
    auto result_index = [&](std::size_t x) { return x < n ? x : x - m; };
    for (std::size_t start = 0; start < 2 * m; ++start) {
        if (!boundary(start) || seen[start]) continue;
        std::size_t x = start;
        seen[x] = 1;
        while (true) {
            std::size_t y = partner(x);
            seen[y] = 1;
            if (boundary(y)) {
                out[result_index(start)] = static_cast<std::uint8_t>(result_index(y));
                out[result_index(y)] = static_cast<std::uint8_t>(result_index(start));
                break;
            }
            x = glue(y);
            seen[x] = 1;
        }
    }
    std::size_t loops = 0;
    for (std::size_t start = 0; start < 2 * m; ++start) {
        if (seen[start]) continue;
        ++loops;
        std::size_t x = start;
        do {
            seen[x] = 1;
            std::size_t y = partner(x);
            seen[y] = 1;
            x = glue(y);
        } while (x != start);
    }
    return {TLDiagram(n, std::move(out)), loops};
}

std::size_t closure_loops(const TLDiagram& d) {
    const std::size_t n = d.n(), m = 2 * n;
    std::vector<char> seen(m, 0);
    std::size_t loops = 0;
    for (std::size_t start = 0; start < m; ++start) {
        if (seen[start]) continue;
        ++loops;
        std::size_t x = start;
        do {
            seen[x] = 1;
            std::size_t y = d.partner(x);
            seen[y] = 1;
            x = m - 1 - y;
        } while (!seen[x]);
    }
    return loops;
}

std::vector<TLDiagram> all_diagrams(std::size_t n) {
    const std::size_t m = 2 * n;
    std::vector<TLDiagram> out;
    std::vector<std::uint8_t> partner(m);
    std::function<void(std::vector<std::size_t>&)> rec;
    std::vector<std::vector<std::uint8_t>> found;
    std::function<void(std::size_t, std::size_t, std::function<void()>)> match = [&](std::size_t lo, std::size_t hi,
                                                                                      std::function<void()> next) {
        if (lo >= hi) {
            next();
            return;
        }
        for (std::size_t j = lo + 1; j < hi; j += 2) {
            partner[lo] = static_cast<std::uint8_t>(j);
            partner[j] = static_cast<std::uint8_t>(lo);
            match(lo + 1, j, [&, j, hi, next]() { match(j + 1, hi, next); });
        }
    };
    match(0, m, [&]() { found.push_back(partner); });
    std::sort(found.begin(), found.end());
    for (auto& p : found) out.emplace_back(n, std::move(p));
    return out;
}

Integer catalan(std::size_t n) {
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), 2 * n, n);
    return c / static_cast<unsigned long>(n + 1);
}

// ---------------------------------------------------------------------------
// TLElement

TLElement TLElement::from_diagram(const TLDiagram& d, const Scalar& c) {
    TLElement x(d.n());
    x.add(d, c);
    return x;
}

Scalar TLElement::coefficient(const TLDiagram& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void TLElement::add(const TLDiagram& d, const Scalar& c) {
    if (d.n() != n_) throw Error(ErrorCode::ShapeMismatch, "diagram size mismatch");
    if (c.is_exact() && c.is_zero()) return;
    auto it = terms_.find(d);
    if (it == terms_.end()) {
        terms_.emplace(d, c);
        return;
    }
    it->second += c;
    if (it->second.is_exact() && it->second.is_zero()) terms_.erase(it);
}

TLElement TLElement::operator+(const TLElement& o) const {
    if (o.n_ != n_) throw Error(ErrorCode::ShapeMismatch, "TL sum size mismatch");
    TLElement out = *this;
    for (const auto& [d, c] : o.terms_) out.add(d, c);
    return out;
}

TLElement TLElement::operator-(const TLElement& o) const { return *this + o.scaled(Scalar(-1)); }

TLElement TLElement::scaled(const Scalar& c) const {
    TLElement out(n_);
    for (const auto& [d, v] : terms_) out.add(d, v * c);
    return out;
}

TLElement TLElement::adjoint() const {
    TLElement out(n_);
    for (const auto& [d, v] : terms_) out.add(d.adjoint(), v.conj());
    return out;
}

TLElement TLElement::rotated(long k) const {
    TLElement out(n_);
    for (const auto& [d, v] : terms_) out.add(d.rotated(k), v);
    return out;
}

TLElement TLElement::with_strand() const {
    TLElement out(n_ + 1);
    for (const auto& [d, v] : terms_) out.add(d.with_strand(), v);
    return out;
}

TLElement multiply(const TLElement& x, const TLElement& y, const Scalar& delta) {
    if (x.n() != y.n()) throw Error(ErrorCode::ShapeMismatch, "TL product size mismatch");
    TLElement out(x.n());
    std::vector<Scalar> powers{Scalar(1)};
    for (const auto& [a, ca] : x.terms()) {
        for (const auto& [b, cb] : y.terms()) {
            Composite c = compose(a, b);
            while (powers.size() <= c.closed_loops) powers.push_back(powers.back() * delta);
            out.add(c.diagram, ca * cb * powers[c.closed_loops]);
        }
    }
    return out;
}

Scalar markov_trace(const TLElement& x, const Scalar& delta) {
    Scalar total(0);
    for (const auto& [d, c] : x.terms()) total += c * pow(delta, static_cast<long>(closure_loops(d)));
    return total;
}

Scalar quantum_integer(long n, const Scalar& delta) {
    if (n < 0) return -quantum_integer(-n, delta);
    Scalar prev(0), cur(1);
    if (n == 0) return prev;
    for (long k = 1; k < n; ++k) {
        Scalar next = delta * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

namespace {

bool provably_nonzero(const Scalar& s) {
    if (s.is_exact()) return !s.is_zero();
    return !s.interval().contains_zero();
}

}  // namespace

TLElement jones_wenzl(std::size_t n, const Scalar& delta) {
    TLElement f = TLElement::from_diagram(TLDiagram::identity(std::min<std::size_t>(n, 1)));
    if (n <= 1) return f;
    for (std::size_t k = 2; k <= n; ++k) {
        const Scalar qk = quantum_integer(static_cast<long>(k), delta);
        if (!provably_nonzero(qk)) throw Error(ErrorCode::VanishingQuantumInteger, "[" + std::to_string(k) + "] vanishes");
        const Scalar ratio = quantum_integer(static_cast<long>(k) - 1, delta) / qk;
        TLElement g = f.with_strand();
        TLElement e = TLElement::from_diagram(TLDiagram::generator(k, k - 1));
        TLElement sandwich = multiply(multiply(g, e, delta), g, delta);
        f = g - sandwich.scaled(ratio);
    }
    return f;
}

namespace {

/// Joins bottom point n-1 and top point n (zero-based), the rightmost cap.
TLElement right_trace(const TLElement& x, const Scalar& delta) {
    const std::size_t n = x.n();
    TLElement out(n - 1);
    const std::size_t a = n - 1, b = n;
    auto renumber = [&](std::size_t p) { return p < a ? p : p - 2; };
    for (const auto& [d, c] : x.terms()) {
        if (d.partner(a) == b) {
            std::vector<std::uint8_t> p(2 * (n - 1));
            for (std::size_t q = 0; q < 2 * n; ++q) {
                if (q == a || q == b) continue;
                p[renumber(q)] = static_cast<std::uint8_t>(renumber(d.partner(q)));
            }
            out.add(TLDiagram(n - 1, std::move(p)), c * delta);
            continue;
        }
        std::vector<std::uint8_t> p(2 * (n - 1));
        const std::size_t pa = d.partner(a), pb = d.partner(b);
        for (std::size_t q = 0; q < 2 * n; ++q) {
            if (q == a || q == b) continue;
            std::size_t t = d.partner(q);
            if (t == a) t = pb;
            else if (t == b) t = pa;
            p[renumber(q)] = static_cast<std::uint8_t>(renumber(t));
        }
        out.add(TLDiagram(n - 1, std::move(p)), c);
    }
    return out;
}

}  // namespace

TLElement tl_cap(const TLElement& x, std::size_t i, const Scalar& delta) {
    const std::size_t n = x.n();
    if (n == 0 || i < 1 || i > 2 * n) throw Error(ErrorCode::BadPosition, "cap position out of range");
    const long k = static_cast<long>(n) - static_cast<long>(i);
    const long back = i == 2 * n ? -k - 1 : -k;
    return right_trace(x.rotated(k), delta).rotated(back);
}

}  // namespace planalg
