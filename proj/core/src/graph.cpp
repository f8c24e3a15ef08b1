#include "planalg/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <optional>
#include <queue>

#include "json_detail.hpp"

namespace planalg {

using detail::json;

const char* to_string(Shading s) { return s == Shading::plus ? "+" : "-"; }

Shading shading_from_string(const std::string& text) {
    if (text == "+") return Shading::plus;
    if (text == "-") return Shading::minus;
    throw Error(ErrorCode::ParseError, "shading must be + or -, got " + text);
}

BipartiteGraph::BipartiteGraph(std::vector<Vertex> vertices, std::vector<EdgeRecord> edges, std::size_t base)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), base_(base) {
    index();
}

void BipartiteGraph::index() {
    strands_.clear();
    incident_.assign(vertices_.size(), {});
    for (std::size_t r = 0; r < edges_.size(); ++r) {
        const EdgeRecord& e = edges_[r];
        if (e.even >= vertices_.size() || e.odd >= vertices_.size())
            throw Error(ErrorCode::ParseError, "edge " + e.id + " references an unknown vertex");
        if (e.multiplicity == 0) throw Error(ErrorCode::ParseError, "edge " + e.id + " has multiplicity 0");
        for (unsigned c = 0; c < e.multiplicity; ++c) {
            std::string id = e.multiplicity == 1 ? e.id : e.id + "#" + std::to_string(c);
            strands_.push_back({id, e.even, e.odd, r, c});
        }
    }
    for (std::uint32_t s = 0; s < strands_.size(); ++s) {
        const Strand& st = strands_[s];
        incident_[st.even].emplace_back(s, st.odd);
        if (st.odd != st.even) incident_[st.odd].emplace_back(s, st.even);
    }
}

std::size_t BipartiteGraph::vertex_index(const std::string& id) const {
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
        if (vertices_[v].id == id) return v;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown vertex " + id);
}

std::size_t BipartiteGraph::strand_index(const std::string& id) const {
    for (std::size_t s = 0; s < strands_.size(); ++s) {
        if (strands_[s].id == id) return s;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown edge " + id);
}

std::size_t BipartiteGraph::other_end(std::uint32_t strand, std::size_t v) const {
    const Strand& s = strands_.at(strand);
    return s.even == v ? s.odd : s.even;
}

Matrix BipartiteGraph::adjacency() const {
    Matrix a(vertices_.size(), vertices_.size());
    for (const auto& e : edges_) {
        a(e.even, e.odd) += Scalar(static_cast<long>(e.multiplicity));
        if (e.even != e.odd) a(e.odd, e.even) += Scalar(static_cast<long>(e.multiplicity));
    }
    return a;
}

std::vector<std::vector<Integer>> BipartiteGraph::integer_adjacency() const {
    std::vector<std::vector<Integer>> a(vertices_.size(), std::vector<Integer>(vertices_.size()));
    for (const auto& e : edges_) {
        a[e.even][e.odd] += e.multiplicity;
        if (e.even != e.odd) a[e.odd][e.even] += e.multiplicity;
    }
    return a;
}

BipartiteGraph BipartiteGraph::from_json(const std::string& text) {
    try {
        json j = json::parse(text);
        std::vector<Vertex> vertices;
        for (const auto& v : j.at("vertices")) {
            const std::string parity = v.at("parity").get<std::string>();
            if (parity != "even" && parity != "odd") throw Error(ErrorCode::ParseError, "bad parity " + parity);
            vertices.push_back({v.at("id").get<std::string>(), parity == "even" ? Parity::even : Parity::odd});
        }
        auto find = [&](const std::string& id) -> std::size_t {
            for (std::size_t k = 0; k < vertices.size(); ++k) {
                if (vertices[k].id == id) return k;
            }
            throw Error(ErrorCode::ParseError, "edge references unknown vertex " + id);
        };
        std::vector<EdgeRecord> edges;
        for (const auto& e : j.at("edges")) {
            long mult = e.value("mult", 1L);
            if (mult < 1) throw Error(ErrorCode::ParseError, "edge multiplicity must be at least 1");
            edges.push_back({e.at("id").get<std::string>(), find(e.at("even").get<std::string>()),
                             find(e.at("odd").get<std::string>()), static_cast<unsigned>(mult)});
        }
        const std::string base = j.at("base").get<std::string>();
        std::size_t b = vertices.size();
        for (std::size_t k = 0; k < vertices.size(); ++k) {
            if (vertices[k].id == base) b = k;
        }
        return BipartiteGraph(std::move(vertices), std::move(edges), b);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

std::string BipartiteGraph::to_json() const {
    json j;
    json vs = json::array();
    for (const auto& v : vertices_) vs.push_back({{"id", v.id}, {"parity", v.parity == Parity::even ? "even" : "odd"}});
    json es = json::array();
    for (const auto& e : edges_)
        es.push_back({{"id", e.id}, {"even", vertices_[e.even].id}, {"odd", vertices_[e.odd].id}, {"mult", e.multiplicity}});
    j["vertices"] = vs;
    j["edges"] = es;
    j["base"] = base_ < vertices_.size() ? vertices_[base_].id : std::string();
    return j.dump();
}

std::string BipartiteGraph::hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : to_json()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void validate(const BipartiteGraph& g) {
    for (const auto& e : g.edges()) {
        if (g.vertices()[e.even].parity != Parity::even || g.vertices()[e.odd].parity != Parity::odd)
            throw Error(ErrorCode::NotBipartite, "edge " + e.id + " does not join an even vertex to an odd vertex");
    }
    if (g.base() >= g.vertex_count()) throw Error(ErrorCode::BadBase, "base vertex does not exist");
    if (g.vertices()[g.base()].parity != Parity::even) throw Error(ErrorCode::BadBase, "base vertex is not even");
    std::vector<char> seen(g.vertex_count(), 0);
    std::queue<std::size_t> todo;
    todo.push(g.base());
    seen[g.base()] = 1;
    while (!todo.empty()) {
        std::size_t v = todo.front();
        todo.pop();
        for (const auto& [s, w] : g.incident(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                todo.push(w);
            }
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) throw Error(ErrorCode::Disconnected, "graph is disconnected");
}

// ---------------------------------------------------------------------------
// Graph norm

namespace {

/// The rational with the smallest denominator in the closed interval [lo, hi].
Rational simplest_between(Rational lo, Rational hi) {
    if (lo > hi) std::swap(lo, hi);
    if (lo <= 0 && hi >= 0) return Rational(0);
    if (hi < 0) return -simplest_between(-hi, -lo);
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    if (Rational(fl) == lo) return lo;
    if (Rational(fl + 1) <= hi) return Rational(fl + 1);
    Rational rest = simplest_between(Rational(1) / (hi - Rational(fl)), Rational(1) / (lo - Rational(fl)));
    return Rational(fl) + Rational(1) / rest;
}

struct EvenPart {
    Polynomial q;
    bool ok = false;
};

/// Writes p(x) = x^k q(x^2) when possible.
EvenPart even_part(const Polynomial& p) {
    const auto& c = p.coefficients();
    std::size_t k = 0;
    while (k < c.size() && c[k] == 0) ++k;
    std::vector<Rational> q;
    for (std::size_t i = k; i < c.size(); ++i) {
        if ((i - k) % 2 == 1) {
            if (c[i] != 0) return {};
        } else {
            q.push_back(c[i]);
        }
    }
    return {Polynomial(std::move(q)), true};
}

std::optional<Scalar> exact_norm_squared(const Polynomial& q, const NormOptions& options) {
    std::vector<RootInterval> roots = isolate_real_roots(q);
    if (roots.empty()) return std::nullopt;
    const RootInterval top = roots.back();
    if (top.exact()) return Scalar(top.lower);
    const unsigned bits = 200;
    CertInterval y = root_enclosure(q, top, bits);
    {
        Rational lo, hi;
        mpfr_get_q(lo.get_mpq_t(), y.lower().get());
        mpfr_get_q(hi.get_mpq_t(), y.upper().get());
        const Rational r = simplest_between(lo, hi);
        if (q.eval(r) == 0) return Scalar(r);
    }
    for (std::size_t k = 0; k + 1 < roots.size(); ++k) {
        if (roots[k].exact()) continue;
        CertInterval z = root_enclosure(q, roots[k], bits);
        CertInterval sum = y + z, prod = y * z;
        Rational s_lo, s_hi, t_lo, t_hi;
        mpfr_get_q(s_lo.get_mpq_t(), sum.lower().get());
        mpfr_get_q(s_hi.get_mpq_t(), sum.upper().get());
        mpfr_get_q(t_lo.get_mpq_t(), prod.lower().get());
        mpfr_get_q(t_hi.get_mpq_t(), prod.upper().get());
        Rational s = simplest_between(s_lo, s_hi), t = simplest_between(t_lo, t_hi);
        Polynomial quad({t, -s, Rational(1)});
        if (!q.divmod(quad).second.is_zero()) continue;
        Rational disc = s * s - 4 * t;
        if (disc <= 0) continue;
        SqrtOptions so;
        so.max_depth = options.max_depth;
        Scalar root = exact_sqrt_or_adjoin(Scalar(disc), so);
        return (Scalar(s) + root) / Scalar(2);
    }
    return std::nullopt;
}

}  // namespace

Scalar graph_norm(const BipartiteGraph& g, const NormOptions& options) {
    const Polynomial p = charpoly(g.adjacency());
    EvenPart ep = even_part(p);
    if (ep.ok) {
        try {
            if (auto y = exact_norm_squared(ep.q, options)) {
                SqrtOptions so;
                so.max_depth = options.max_depth;
                return exact_sqrt_or_adjoin(*y, so);
            }
        } catch (const Error& e) {
            if (e.code() != ErrorCode::TowerDepthExceeded) throw;
        }
    }
    std::vector<RootInterval> roots = isolate_real_roots(p);
    const RootInterval& top = roots.back();
    if (top.exact()) return Scalar(top.lower);
    return Scalar(root_enclosure(p, top, options.fallback_bits));
}

PerronData perron_vector(const BipartiteGraph& g, const NormOptions& options) {
    PerronData out;
    out.delta = graph_norm(g, options);
    EigenOptions eo;
    eo.normalize_index = g.base();
    out.mu = certified_eigenvector(g.adjacency(), out.delta, eo);
    for (const auto& m : out.mu) {
        if (certified_sign(m) != Sign::positive)
            throw Error(ErrorCode::NotAnEigenvalue, "Perron vector is not strictly positive");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Loops

bool LoopPath::operator<(const LoopPath& o) const {
    if (edges != o.edges) return edges < o.edges;
    return start < o.start;
}

std::vector<std::size_t> loop_vertices(const BipartiteGraph& g, const LoopPath& loop) {
    std::vector<std::size_t> vs{loop.start};
    vs.reserve(loop.edges.size() + 1);
    for (auto s : loop.edges) vs.push_back(g.other_end(s, vs.back()));
    return vs;
}

std::vector<std::string> loop_to_ids(const BipartiteGraph& g, const LoopPath& loop) {
    std::vector<std::string> out{"@" + g.vertices()[loop.start].id};
    for (auto s : loop.edges) out.push_back(g.strands()[s].id);
    return out;
}

LoopPath loop_from_ids(const BipartiteGraph& g, const std::vector<std::string>& ids) {
    LoopPath loop;
    std::size_t offset = 0;
    std::optional<std::size_t> start;
    if (!ids.empty() && !ids[0].empty() && ids[0][0] == '@') {
        start = g.vertex_index(ids[0].substr(1));
        offset = 1;
    }
    if ((ids.size() - offset) % 2) throw Error(ErrorCode::ParseError, "loop must have even length");
    for (std::size_t i = offset; i < ids.size(); ++i) loop.edges.push_back(static_cast<std::uint32_t>(g.strand_index(ids[i])));
    if (!start) {
        if (loop.edges.empty()) throw Error(ErrorCode::ParseError, "empty loop needs a start vertex");
        const Strand& first = g.strands()[loop.edges[0]];
        const Strand& last = g.strands()[loop.edges.back()];
        start = (last.even == first.even || last.odd == first.even) ? first.even : first.odd;
    }
    loop.start = static_cast<std::uint32_t>(*start);
    std::size_t v = *start;
    for (auto s : loop.edges) {
        const Strand& st = g.strands()[s];
        if (st.even != v && st.odd != v) throw Error(ErrorCode::ParseError, "edges do not form a path");
        v = g.other_end(s, v);
    }
    if (v != *start) throw Error(ErrorCode::ParseError, "path is not closed");
    return loop;
}

std::vector<LoopPath> enumerate_loops(const BipartiteGraph& g, std::size_t n, Shading shading) {
    std::vector<LoopPath> out;
    const Parity want = parity_of(shading);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (g.vertices()[v].parity != want) continue;
        LoopPath cur;
        cur.start = static_cast<std::uint32_t>(v);
        std::function<void(std::size_t)> walk = [&](std::size_t at) {
            if (cur.edges.size() == 2 * n) {
                if (at == v) out.push_back(cur);
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
    std::sort(out.begin(), out.end());
    return out;
}

Integer count_loops(const BipartiteGraph& g, std::size_t n, std::size_t base) {
    const auto a = g.integer_adjacency();
    const std::size_t m = a.size();
    std::vector<Integer> row(m);
    row[base] = 1;
    for (std::size_t step = 0; step < 2 * n; ++step) {
        std::vector<Integer> next(m);
        for (std::size_t i = 0; i < m; ++i) {
            if (row[i] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) {
                if (a[i][j] != 0) next[j] += row[i] * a[i][j];
            }
        }
        row = std::move(next);
    }
    return row[base];
}

BipartiteGraph path_graph(std::size_t k) {
    if (k == 0) throw Error(ErrorCode::InvalidArgument, "path graph needs a vertex");
    std::vector<Vertex> vs;
    for (std::size_t i = 0; i < k; ++i) vs.push_back({"p" + std::to_string(i), i % 2 == 0 ? Parity::even : Parity::odd});
    std::vector<EdgeRecord> es;
    for (std::size_t i = 0; i + 1 < k; ++i) {
        std::size_t even = i % 2 == 0 ? i : i + 1;
        std::size_t odd = i % 2 == 0 ? i + 1 : i;
        es.push_back({"q" + std::to_string(i), even, odd, 1});
    }
    return BipartiteGraph(std::move(vs), std::move(es), 0);
}

}  // namespace planalg
