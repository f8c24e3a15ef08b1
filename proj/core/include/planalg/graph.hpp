#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "planalg/linalg.hpp"
#include "planalg/scalar.hpp"

namespace planalg {

enum class Parity { even, odd };
/// Shading class of a box space: plus for loops based at even vertices.
enum class Shading { plus, minus };

inline Shading flip(Shading s) { return s == Shading::plus ? Shading::minus : Shading::plus; }
inline Parity parity_of(Shading s) { return s == Shading::plus ? Parity::even : Parity::odd; }
const char* to_string(Shading s);
Shading shading_from_string(const std::string& text);

struct Vertex {
    std::string id;
    Parity parity;
};

struct EdgeRecord {
    std::string id;
    std::size_t even;
    std::size_t odd;
    unsigned multiplicity = 1;
};

/// One parallel copy of an edge record. Loops are sequences of strands, so
/// parallel edges are told apart.
struct Strand {
    std::string id;
    std::size_t even;
    std::size_t odd;
    std::size_t record;
    unsigned copy;
};

class BipartiteGraph {
public:
    BipartiteGraph() = default;
    BipartiteGraph(std::vector<Vertex> vertices, std::vector<EdgeRecord> edges, std::size_t base);

    static BipartiteGraph from_json(const std::string& text);
    std::string to_json() const;

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<EdgeRecord>& edges() const { return edges_; }
    const std::vector<Strand>& strands() const { return strands_; }
    std::size_t base() const { return base_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t vertex_index(const std::string& id) const;
    std::size_t strand_index(const std::string& id) const;

    /// Strands at vertex v paired with the far endpoint, in strand order.
    const std::vector<std::pair<std::uint32_t, std::size_t>>& incident(std::size_t v) const { return incident_[v]; }
    std::size_t other_end(std::uint32_t strand, std::size_t v) const;

    Matrix adjacency() const;
    std::vector<std::vector<Integer>> integer_adjacency() const;
    /// FNV-1a digest of the canonical JSON form.
    std::string hash() const;

private:
    void index();

    std::vector<Vertex> vertices_;
    std::vector<EdgeRecord> edges_;
    std::size_t base_ = 0;
    std::vector<Strand> strands_;
    std::vector<std::vector<std::pair<std::uint32_t, std::size_t>>> incident_;
};

void validate(const BipartiteGraph& g);

struct NormOptions {
    std::size_t max_depth = 3;
    unsigned fallback_bits = 256;
};

Scalar graph_norm(const BipartiteGraph& g, const NormOptions& options = {});

struct PerronData {
    Scalar delta;
    std::vector<Scalar> mu;
    const Scalar& at(const BipartiteGraph& g, const std::string& id) const { return mu[g.vertex_index(id)]; }
};

PerronData perron_vector(const BipartiteGraph& g, const NormOptions& options = {});

struct LoopPath {
    std::uint32_t start = 0;
    std::vector<std::uint32_t> edges;

    bool operator==(const LoopPath& o) const { return start == o.start && edges == o.edges; }
    bool operator<(const LoopPath& o) const;
};

/// Vertices visited by a loop, including the closing return to the start.
std::vector<std::size_t> loop_vertices(const BipartiteGraph& g, const LoopPath& loop);
std::vector<std::string> loop_to_ids(const BipartiteGraph& g, const LoopPath& loop);
LoopPath loop_from_ids(const BipartiteGraph& g, const std::vector<std::string>& ids);

std::vector<LoopPath> enumerate_loops(const BipartiteGraph& g, std::size_t n, Shading shading);
Integer count_loops(const BipartiteGraph& g, std::size_t n, std::size_t base);

BipartiteGraph haagerup_graph();
/// The path graph with k vertices, based at one end.
BipartiteGraph path_graph(std::size_t k);

}  // namespace planalg
