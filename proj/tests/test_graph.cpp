#include <doctest.h>

#include "planalg/data.hpp"
#include "planalg/graph.hpp"
#include "planalg/linalg.hpp"

using namespace planalg;

namespace {

/// Closed walks of length 2n from every vertex of the given parity, by
/// integer adjacency powers.
Integer walk_count(const BipartiteGraph& g, std::size_t n, Parity parity) {
    const auto a = g.integer_adjacency();
    const std::size_t m = a.size();
    std::vector<std::vector<Integer>> p(m, std::vector<Integer>(m, 0));
    for (std::size_t i = 0; i < m; ++i) p[i][i] = 1;
    for (std::size_t step = 0; step < 2 * n; ++step) {
        std::vector<std::vector<Integer>> q(m, std::vector<Integer>(m, 0));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t k = 0; k < m; ++k)
                if (p[i][k] != 0)
                    for (std::size_t j = 0; j < m; ++j) q[i][j] += p[i][k] * a[k][j];
        p = std::move(q);
    }
    Integer total = 0;
    for (std::size_t v = 0; v < m; ++v)
        if (g.vertices()[v].parity == parity) total += p[v][v];
    return total;
}

Integer base_walks(const BipartiteGraph& g, std::size_t n) {
    const auto a = g.integer_adjacency();
    std::vector<Integer> row(a.size(), 0);
    row[g.base()] = 1;
    for (std::size_t step = 0; step < 2 * n; ++step) {
        std::vector<Integer> next(a.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < a.size(); ++j) next[j] += row[i] * a[i][j];
        row = std::move(next);
    }
    return row[g.base()];
}

}  // namespace

TEST_CASE("the bundled Haagerup graph is valid and hashes stably") {
    const BipartiteGraph g = haagerup_graph();
    CHECK_NOTHROW(validate(g));
    CHECK(g.vertex_count() == 10);
    CHECK(g.hash() == BipartiteGraph::from_json(bundled_graph_json()).hash());
    CHECK(g.hash() == BipartiteGraph::from_json(g.to_json()).hash());
    CHECK(g.to_json() == BipartiteGraph::from_json(g.to_json()).to_json());
}

TEST_CASE("loop enumeration matches adjacency powers") {
    const BipartiteGraph g = haagerup_graph();
    for (std::size_t n = 0; n <= 6; ++n) {
        CHECK(Integer(enumerate_loops(g, n, Shading::plus).size()) == walk_count(g, n, Parity::even));
        CHECK(Integer(enumerate_loops(g, n, Shading::minus).size()) == walk_count(g, n, Parity::odd));
        CHECK(count_loops(g, n, g.base()) == base_walks(g, n));
    }
}

TEST_CASE("frozen Haagerup loop counts") {
    const BipartiteGraph g = haagerup_graph();
    const std::vector<std::size_t> plus{6, 9, 27, 96, 375, 1539, 6474};
    const std::vector<long> base{1, 1, 2, 5, 15, 52, 199, 807};
    for (std::size_t n = 0; n < plus.size(); ++n) CHECK(enumerate_loops(g, n, Shading::plus).size() == plus[n]);
    for (std::size_t n = 0; n < base.size(); ++n) CHECK(count_loops(g, n, g.base()) == base[n]);
}

TEST_CASE("graph norm and Perron-Frobenius vector are exact") {
    const BipartiteGraph g = haagerup_graph();
    const PerronData p = perron_vector(g);
    const Matrix a = g.adjacency();
    const Vector image = a.apply(p.mu);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) CHECK(image[v] == p.delta * p.mu[v]);
    CHECK(p.at(g, "*") == Scalar(1));
    CHECK(p.at(g, "a") == p.delta);
    CHECK(p.at(g, "f1") == Scalar(1));
    CHECK(p.at(g, "d1") == p.at(g, "d2"));
    const Scalar s13 = exact_sqrt_or_adjoin(Scalar(13));
    CHECK(p.at(g, "b") == (Scalar(3) + s13) / Scalar(2));
    // delta^4 - 5 delta^2 + 3 = 0.
    const Scalar d2 = p.delta * p.delta;
    CHECK((d2 * d2 - Scalar(5) * d2 + Scalar(3)).is_zero());
    CHECK(certified_sign(p.delta - Scalar(2)) == Sign::positive);
}

TEST_CASE("path graphs have norm 2 cos(pi/(k+1))") {
    CHECK(graph_norm(path_graph(2)) == Scalar(1));
    const Scalar d3 = graph_norm(path_graph(3));
    CHECK(d3 * d3 == Scalar(2));
    const Scalar d5 = graph_norm(path_graph(5));
    CHECK(d5 * d5 == Scalar(3));
}

TEST_CASE("loop identifiers round-trip") {
    const BipartiteGraph g = haagerup_graph();
    for (std::size_t n : {0u, 1u, 3u}) {
        for (const auto& loop : enumerate_loops(g, n, Shading::minus)) {
            const auto ids = loop_to_ids(g, loop);
            CHECK(loop_from_ids(g, ids) == loop);
        }
    }
}

TEST_CASE("malformed graphs are rejected") {
    CHECK_THROWS_AS(BipartiteGraph::from_json("{"), Error);
    const std::string odd_base = R"({"vertices": [{"id": "x", "parity": "odd"}, {"id": "y", "parity": "even"}],
        "edges": [{"id": "xy", "even": "y", "odd": "x", "mult": 1}], "base": "x"})";
    CHECK_THROWS_AS(validate(BipartiteGraph::from_json(odd_base)), Error);
    const std::string split = R"({"vertices": [{"id": "x", "parity": "even"}, {"id": "y", "parity": "odd"},
        {"id": "z", "parity": "even"}], "edges": [{"id": "xy", "even": "x", "odd": "y", "mult": 1}], "base": "x"})";
    CHECK_THROWS_AS(validate(BipartiteGraph::from_json(split)), Error);
}
