#include "planalg/gpa.hpp"

#include <algorithm>
#include <functional>

#include "json_detail.hpp"

namespace planalg {

namespace {

std::string loop_key(std::uint32_t start, const std::vector<std::uint32_t>& edges) {
    std::string key;
    key.reserve(4 * (edges.size() + 1));
    auto put = [&](std::uint32_t v) {
        for (int b = 0; b < 4; ++b) key.push_back(static_cast<char>((v >> (8 * b)) & 0xffu));
    };
    put(start);
    for (auto e : edges) put(e);
    return key;
}

long positive_mod(long a, long m) { return ((a % m) + m) % m; }

}  // namespace

// ---------------------------------------------------------------------------
// LoopSpace

LoopSpace::LoopSpace(const SpinContext& ctx, std::size_t n, Shading shading) : n_(n), shading_(shading) {
    const BipartiteGraph& g = ctx.graph();
    loops_ = enumerate_loops(g, n, shading);
    index_.reserve(loops_.size());
    for (std::size_t i = 0; i < loops_.size(); ++i)
        index_.emplace(loop_key(loops_[i].start, loops_[i].edges), static_cast<std::uint32_t>(i));

    const Parity want = parity_of(shading);
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> grouped;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (g.vertices()[v].parity != want) continue;
        HalfPath cur;
        cur.start = static_cast<std::uint32_t>(v);
        std::function<void(std::size_t)> walk = [&](std::size_t at) {
            if (cur.edges.size() == n) {
                cur.end = static_cast<std::uint32_t>(at);
                grouped[{cur.start, cur.end}].push_back(static_cast<std::uint32_t>(halves_.size()));
                halves_.push_back(cur);
                return;
            }
            for (const auto& [s, w] : g.incident(at)) {
                cur.edges.push_back(s);
                walk(w);
                cur.edges.pop_back();
            }
        };
        walk(v);
    }
    block_of_half_.resize(halves_.size());
    position_in_block_.resize(halves_.size());
    std::unordered_map<std::string, std::uint32_t> half_index;
    for (std::size_t h = 0; h < halves_.size(); ++h)
        half_index.emplace(loop_key(halves_[h].start, halves_[h].edges), static_cast<std::uint32_t>(h));
    for (auto& [key, members] : grouped) {
        const auto b = static_cast<std::uint32_t>(blocks_.size());
        for (std::size_t i = 0; i < members.size(); ++i) {
            block_of_half_[members[i]] = b;
            position_in_block_[members[i]] = static_cast<std::uint32_t>(i);
        }
        block_loops_.emplace_back(members.size() * members.size(), -1);
        blocks_.push_back(members);
    }

    split_.resize(loops_.size());
    for (std::size_t i = 0; i < loops_.size(); ++i) {
        const LoopPath& l = loops_[i];
        std::vector<std::uint32_t> bottom(l.edges.begin(), l.edges.begin() + static_cast<long>(n));
        std::vector<std::uint32_t> top(l.edges.rbegin(), l.edges.rbegin() + static_cast<long>(n));
        const std::uint32_t hb = half_index.at(loop_key(l.start, bottom));
        const std::uint32_t ht = half_index.at(loop_key(l.start, top));
        split_[i] = {hb, ht};
        const std::size_t b = block_of_half_[hb];
        const std::size_t size = blocks_[b].size();
        block_loops_[b][position_in_block_[hb] * size + position_in_block_[ht]] = static_cast<std::int32_t>(i);
    }

    auto interior_product = [&](const HalfPath& h) {
        Scalar p(1);
        std::size_t at = h.start;
        for (std::size_t j = 0; j + 1 < h.edges.size(); ++j) {
            at = g.other_end(h.edges[j], at);
            p *= ctx.mu(at);
        }
        return p;
    };
    std::vector<Scalar> interior(halves_.size());
    for (std::size_t h = 0; h < halves_.size(); ++h) interior[h] = interior_product(halves_[h]);

    const Scalar& z = ctx.normalization();
    product_weight_.resize(halves_.size());
    for (std::size_t h = 0; h < halves_.size(); ++h) {
        const HalfPath& hp = halves_[h];
        if (n == 0)
            product_weight_[h] = Scalar(1) / ctx.mu(hp.start);
        else
            product_weight_[h] = Scalar(1) / (ctx.mu(hp.start) * ctx.mu(hp.end) * interior[h]);
    }
    inner_weight_.resize(loops_.size());
    reverse_.resize(loops_.size());
    for (std::size_t i = 0; i < loops_.size(); ++i) {
        const auto [hb, ht] = split_[i];
        const HalfPath& hp = halves_[hb];
        if (n == 0) {
            inner_weight_[i] = Scalar(1) / z;
            trace_weights_.emplace_back(static_cast<std::uint32_t>(i), ctx.mu(hp.start) / z);
        } else {
            inner_weight_[i] = Scalar(1) / (z * ctx.mu(hp.start) * ctx.mu(hp.end) * interior[hb] * interior[ht]);
            if (hb == ht) trace_weights_.emplace_back(static_cast<std::uint32_t>(i), Scalar(1) / (z * interior[hb]));
        }
        std::vector<std::uint32_t> rev(loops_[i].edges.rbegin(), loops_[i].edges.rend());
        reverse_[i] = index_.at(loop_key(loops_[i].start, rev));
    }
}

long LoopSpace::find(const LoopPath& loop) const {
    auto it = index_.find(loop_key(loop.start, loop.edges));
    return it == index_.end() ? -1 : static_cast<long>(it->second);
}

long LoopSpace::join(std::size_t bottom, std::size_t top) const {
    const std::size_t b = block_of_half_[bottom];
    if (block_of_half_[top] != b) return -1;
    const std::size_t size = blocks_[b].size();
    return block_loops_[b][position_in_block_[bottom] * size + position_in_block_[top]];
}

// ---------------------------------------------------------------------------
// SpinContext

SpinContext::SpinContext(BipartiteGraph graph, PerronData perron) : graph_(std::move(graph)), perron_(std::move(perron)) {
    z_ = Scalar(0);
    for (std::size_t v = 0; v < graph_.vertex_count(); ++v) {
        mu_inverse_.push_back(Scalar(1) / perron_.mu[v]);
        if (graph_.vertices()[v].parity == Parity::even) z_ += perron_.mu[v] * perron_.mu[v];
    }
}

SpinContextPtr SpinContext::create(BipartiteGraph graph, const NormOptions& options) {
    validate(graph);
    PerronData perron = perron_vector(graph, options);
    return create(std::move(graph), std::move(perron));
}

SpinContextPtr SpinContext::create(BipartiteGraph graph, PerronData perron) {
    return SpinContextPtr(new SpinContext(std::move(graph), std::move(perron)));
}

Scalar SpinContext::mu_power(std::size_t v, long k) const {
    return k >= 0 ? pow(perron_.mu[v], k) : pow(mu_inverse_[v], -k);
}

const LoopSpace& SpinContext::space(std::size_t n, Shading shading) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto key = std::make_pair(n, shading == Shading::plus ? 0 : 1);
    auto it = spaces_.find(key);
    if (it == spaces_.end()) it = spaces_.emplace(key, std::make_unique<LoopSpace>(*this, n, shading)).first;
    return *it->second;
}

// ---------------------------------------------------------------------------
// GpaElement

GpaElement::GpaElement(SpinContextPtr ctx, std::size_t n, Shading shading)
    : ctx_(std::move(ctx)), n_(n), shading_(shading) {
    space_ = &ctx_->space(n, shading);
    entries_.assign(space_->size(), Scalar(0));
}

GpaElement GpaElement::unit(SpinContextPtr ctx, std::size_t n, Shading shading) {
    return tl_embed(ctx, TLDiagram::identity(n), shading);
}

GpaElement GpaElement::basis_loop(SpinContextPtr ctx, std::size_t n, Shading shading, std::size_t loop) {
    GpaElement x(std::move(ctx), n, shading);
    if (loop >= x.size()) throw Error(ErrorCode::InvalidArgument, "loop index out of range");
    x.entries_[loop] = Scalar(1);
    return x;
}

bool GpaElement::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool GpaElement::is_exact() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_exact(); });
}

Scalar GpaElement::max_abs_bound(unsigned bits) const {
    BigFloat best(static_cast<mpfr_prec_t>(bits));
    mpfr_set_zero(best.get(), 1);
    bool any = false;
    for (const auto& s : entries_) {
        if (s.is_zero()) continue;
        BigFloat m = to_interval(s, bits).magnitude_bound();
        if (!any || compare(m, best) > 0) best = m;
        any = true;
    }
    if (!any) return Scalar(0);
    return Scalar(CertInterval(best, best, bits));
}

void GpaElement::check_same_shape(const GpaElement& o) const {
    if (ctx_ != o.ctx_ || n_ != o.n_ || shading_ != o.shading_)
        throw Error(ErrorCode::ShapeMismatch, "elements live in different box spaces");
}

GpaElement GpaElement::operator+(const GpaElement& o) const {
    GpaElement out = *this;
    out += o;
    return out;
}

GpaElement GpaElement::operator-(const GpaElement& o) const {
    GpaElement out = *this;
    out -= o;
    return out;
}

GpaElement GpaElement::operator-() const {
    GpaElement out = *this;
    for (auto& s : out.entries_)
        if (!s.is_zero()) s = -s;
    return out;
}

GpaElement& GpaElement::operator+=(const GpaElement& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (!o.entries_[i].is_zero()) entries_[i] += o.entries_[i];
    return *this;
}

GpaElement& GpaElement::operator-=(const GpaElement& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (!o.entries_[i].is_zero()) entries_[i] -= o.entries_[i];
    return *this;
}

GpaElement GpaElement::scaled(const Scalar& c) const {
    GpaElement out = *this;
    for (auto& s : out.entries_)
        if (!s.is_zero()) s *= c;
    return out;
}

bool GpaElement::operator==(const GpaElement& o) const {
    if (ctx_ != o.ctx_ || n_ != o.n_ || shading_ != o.shading_) return false;
    return (*this - o).is_zero();
}

std::string GpaElement::to_json() const {
    detail::json j;
    j["graph"] = ctx_->graph().hash();
    j["n"] = n_;
    j["shading"] = to_string(shading_);
    j["coordinates"] = "balanced";
    detail::json entries = detail::json::array();
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].is_zero()) continue;
        detail::json e;
        e["loop"] = loop_to_ids(ctx_->graph(), space_->loop(i));
        e["value"] = detail::scalar_to_json(entries_[i]);
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    return j.dump();
}

GpaElement GpaElement::from_json(SpinContextPtr ctx, const std::string& text) {
    detail::json j;
    try {
        j = detail::json::parse(text);
    } catch (const std::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("element JSON: ") + e.what());
    }
    try {
        if (j.at("graph").get<std::string>() != ctx->graph().hash())
            throw Error(ErrorCode::ShapeMismatch, "element belongs to a different graph");
        GpaElement x(ctx, j.at("n").get<std::size_t>(), shading_from_string(j.at("shading").get<std::string>()));
        for (const auto& e : j.at("entries")) {
            LoopPath loop = loop_from_ids(ctx->graph(), e.at("loop").get<std::vector<std::string>>());
            long idx = x.space().find(loop);
            if (idx < 0) throw Error(ErrorCode::ParseError, "entry loop is not in the box space");
            x.entries_[static_cast<std::size_t>(idx)] = detail::scalar_from_json(e.at("value"));
        }
        return x;
    } catch (const detail::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("element JSON: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Tangle actions

GpaElement multiply(const GpaElement& x, const GpaElement& y) {
    if (x.context() != y.context() || x.n() != y.n() || x.shading() != y.shading())
        throw Error(ErrorCode::ShapeMismatch, "product of elements from different box spaces");
    GpaElement out(x.context(), x.n(), x.shading());
    const LoopSpace& sp = x.space();
    for (const auto& block : sp.blocks()) {
        for (auto a : block) {
            for (auto m : block) {
                const Scalar& xv = x[static_cast<std::size_t>(sp.join(a, m))];
                if (xv.is_zero()) continue;
                const Scalar left = xv * sp.product_weight(m);
                for (auto c : block) {
                    const Scalar& yv = y[static_cast<std::size_t>(sp.join(m, c))];
                    if (yv.is_zero()) continue;
                    out[static_cast<std::size_t>(sp.join(a, c))] += left * yv;
                }
            }
        }
    }
    return out;
}

GpaElement adjoint(const GpaElement& x) {
    GpaElement out(x.context(), x.n(), x.shading());
    const LoopSpace& sp = x.space();
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) out[sp.reversed(i)] = x[i].conj();
    return out;
}

GpaElement click(const GpaElement& x, long k) {
    const std::size_t n = x.n();
    if (n == 0) {
        if (k % 2 != 0) throw Error(ErrorCode::BadPosition, "a 0-box has no boundary points to rotate");
        return x;
    }
    const long m = static_cast<long>(2 * n);
    const long shift = positive_mod(k, m);
    if (shift == 0) return x;
    const Shading target = shift % 2 ? flip(x.shading()) : x.shading();
    GpaElement out(x.context(), n, target);
    const BipartiteGraph& g = x.context()->graph();
    const LoopSpace& in = x.space();
    const LoopSpace& to = out.space();
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        const LoopPath& l = in.loop(i);
        const auto vs = loop_vertices(g, l);
        LoopPath r;
        r.start = static_cast<std::uint32_t>(vs[static_cast<std::size_t>(positive_mod(-shift, m))]);
        r.edges.resize(l.edges.size());
        for (long j = 0; j < m; ++j)
            r.edges[static_cast<std::size_t>((j + shift) % m)] = l.edges[static_cast<std::size_t>(j)];
        out[static_cast<std::size_t>(to.find(r))] = x[i];
    }
    return out;
}

GpaElement rotate(const GpaElement& x, long k) { return click(x, 2 * k); }

namespace {

/// Joins the rightmost bottom point to the rightmost top point.
GpaElement right_trace(const GpaElement& x) {
    const std::size_t n = x.n();
    GpaElement out(x.context(), n - 1, x.shading());
    const BipartiteGraph& g = x.context()->graph();
    const LoopSpace& in = x.space();
    const LoopSpace& to = out.space();
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        const LoopPath& l = in.loop(i);
        if (l.edges[n - 1] != l.edges[n]) continue;
        LoopPath r;
        r.start = l.start;
        r.edges.reserve(2 * n - 2);
        for (std::size_t j = 0; j < 2 * n; ++j)
            if (j != n - 1 && j != n) r.edges.push_back(l.edges[j]);
        const auto vs = loop_vertices(g, l);
        out[static_cast<std::size_t>(to.find(r))] += x[i] / x.context()->mu(vs[n - 1]);
    }
    return out;
}

}  // namespace

GpaElement include(const GpaElement& x) {
    const std::size_t n = x.n() + 1;
    GpaElement out(x.context(), n, x.shading());
    const BipartiteGraph& g = x.context()->graph();
    const LoopSpace& in = x.space();
    const LoopSpace& to = out.space();
    for (std::size_t i = 0; i < out.size(); ++i) {
        const LoopPath& l = to.loop(i);
        if (l.edges[n - 1] != l.edges[n]) continue;
        LoopPath r;
        r.start = l.start;
        for (std::size_t j = 0; j < 2 * n; ++j)
            if (j != n - 1 && j != n) r.edges.push_back(l.edges[j]);
        const Scalar& v = x[static_cast<std::size_t>(in.find(r))];
        if (v.is_zero()) continue;
        const auto vs = loop_vertices(g, l);
        out[i] = v * x.context()->mu(vs[n]);
    }
    return out;
}

GpaElement cap(const GpaElement& x, std::size_t position) {
    const std::size_t n = x.n();
    if (n == 0 || position < 1 || position > 2 * n) throw Error(ErrorCode::BadPosition, "cap position out of range");
    const long k = static_cast<long>(n) - static_cast<long>(position);
    const long back = position == 2 * n ? -k - 1 : -k;
    GpaElement reduced = right_trace(click(x, k));
    return n > 1 ? click(reduced, back) : reduced;
}

GpaElement cup(const GpaElement& x, std::size_t position) {
    const std::size_t n = x.n() + 1;
    if (position < 1 || position > 2 * n) throw Error(ErrorCode::BadPosition, "cup position out of range");
    const long k = static_cast<long>(n) - static_cast<long>(position);
    const long back = position == 2 * n ? k + 1 : k;
    GpaElement moved = x.n() > 0 ? click(x, back) : x;
    return click(include(moved), -k);
}

Scalar trace(const GpaElement& x) {
    Scalar total(0);
    for (const auto& [i, w] : x.space().trace_weights())
        if (!x[i].is_zero()) total += x[i] * w;
    return total;
}

Scalar inner_product(const GpaElement& x, const GpaElement& y) {
    if (x.context() != y.context() || x.n() != y.n() || x.shading() != y.shading())
        throw Error(ErrorCode::ShapeMismatch, "inner product of elements from different box spaces");
    Scalar total(0);
    const LoopSpace& sp = x.space();
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero() || y[i].is_zero()) continue;
        total += x[i] * y[i].conj() * sp.inner_weight(i);
    }
    return total;
}

GpaElement tl_embed(const SpinContextPtr& ctx, const TLDiagram& d, Shading shading) {
    const std::size_t n = d.n();
    GpaElement out(ctx, n, shading);
    const BipartiteGraph& g = ctx->graph();
    const LoopSpace& sp = out.space();
    std::vector<long> exponent(g.vertex_count());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const LoopPath& l = sp.loop(i);
        if (n == 0) {
            out[i] = ctx->mu(l.start);
            continue;
        }
        bool compatible = true;
        for (std::size_t p = 0; p < 2 * n && compatible; ++p)
            compatible = l.edges[p] == l.edges[d.partner(p)];
        if (!compatible) continue;
        const auto vs = loop_vertices(g, l);
        std::fill(exponent.begin(), exponent.end(), 0);
        for (std::size_t j = 0; j < 2 * n; ++j) exponent[vs[j]] += (j == 0 || j == n) ? 2 : 1;
        for (std::size_t p = 0; p < 2 * n; ++p) {
            const std::size_t q = d.partner(p);
            if (q < p || d.is_through(p)) continue;
            // Zero-based point p sits on edge p+1, between regions v_p and v_{p+1}.
            exponent[vs[p + 1]] += 1;
            exponent[vs[p]] -= 1;
        }
        Scalar value(1);
        for (std::size_t v = 0; v < exponent.size(); ++v) {
            if (exponent[v] == 0) continue;
            if (exponent[v] % 2 != 0) throw Error(ErrorCode::InvalidArgument, "odd spin exponent in embedding");
            value *= ctx->mu_power(v, exponent[v] / 2);
        }
        out[i] = value;
    }
    return out;
}

GpaElement tl_embed(const SpinContextPtr& ctx, const TLElement& x, Shading shading) {
    GpaElement out(ctx, x.n(), shading);
    for (const auto& [d, c] : x.terms()) out += tl_embed(ctx, d, shading).scaled(c);
    return out;
}

GpaElement to_interval(const GpaElement& x, unsigned bits) {
    GpaElement out = x;
    for (auto& s : out.entries())
        if (!s.is_interval()) s = Scalar(to_interval(s, bits));
    return out;
}

GpaElement random_element(const SpinContextPtr& ctx, std::size_t n, Shading shading, std::mt19937_64& rng,
                          int bound) {
    GpaElement x(ctx, n, shading);
    std::uniform_int_distribution<int> draw(-bound, bound);
    for (auto& e : x.entries()) e = Scalar(draw(rng));
    return x;
}

std::vector<AxiomCheck> check_axioms(const SpinContextPtr& ctx, std::size_t n_max, std::size_t samples,
                                     std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<AxiomCheck> out;
    const Scalar& delta = ctx->delta();
    for (std::size_t n = 0; n <= n_max; ++n) {
        for (Shading s : {Shading::plus, Shading::minus}) {
            std::vector<GpaElement> xs;
            for (std::size_t i = 0; i < samples; ++i) xs.push_back(random_element(ctx, n, s, rng));
            const GpaElement one = GpaElement::unit(ctx, n, s);
            bool assoc = true, unit = true, cyclic = true, pairing = true, star = true;
            bool period = true, unitary = true, adjoint_cap = true, zigzag = true;
            for (std::size_t i = 0; i < samples; ++i) {
                const GpaElement& x = xs[i];
                const GpaElement& y = xs[(i + 1) % samples];
                const GpaElement& z = xs[(i + 2) % samples];
                const GpaElement xy = multiply(x, y);
                assoc = assoc && multiply(xy, z) == multiply(x, multiply(y, z));
                unit = unit && multiply(one, x) == x && multiply(x, one) == x;
                cyclic = cyclic && trace(xy) == trace(multiply(y, x));
                pairing = pairing && inner_product(x, y) == trace(multiply(adjoint(y), x));
                star = star && adjoint(xy) == multiply(adjoint(y), adjoint(x));
                if (n == 0) continue;
                period = period && rotate(x, static_cast<long>(n)) == x;
                unitary = unitary && inner_product(rotate(x), rotate(y)) == inner_product(x, y);
                const std::size_t i_cap = 1 + i % (2 * n);
                const GpaElement cx = cap(x, i_cap);
                const GpaElement w = random_element(ctx, n - 1, cx.shading(), rng);
                adjoint_cap = adjoint_cap && inner_product(cx, w) == inner_product(x, cup(w, i_cap));
                if (i_cap + 1 < 2 * n) zigzag = zigzag && cap(cup(w, i_cap), i_cap + 1) == w;
                zigzag = zigzag && cap(cup(w, i_cap), i_cap) == w.scaled(delta);
            }
            bool hom = true;
            const auto diagrams = all_diagrams(n);
            for (const auto& a : diagrams)
                for (const auto& b : diagrams) {
                    const auto c = compose(a, b);
                    hom = hom && multiply(tl_embed(ctx, a, s), tl_embed(ctx, b, s)) ==
                                     tl_embed(ctx, c.diagram, s).scaled(pow(delta, c.closed_loops));
                }
            for (auto [name, ok] : std::initializer_list<std::pair<const char*, bool>>{
                     {"associativity", assoc}, {"unit", unit}, {"trace_cyclicity", cyclic},
                     {"inner_product_trace", pairing}, {"adjoint_antimultiplicative", star},
                     {"rotation_period", period}, {"rotation_unitary", unitary}, {"cap_cup_adjoint", adjoint_cap},
                     {"zigzag", zigzag}, {"tl_homomorphism", hom}})
                out.push_back({name, n, s, ok});
        }
    }
    return out;
}

}  // namespace planalg
