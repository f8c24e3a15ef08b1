#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "planalg/graph.hpp"
#include "planalg/scalar.hpp"
#include "planalg/tl.hpp"

namespace planalg {

class SpinContext;

/// A path of length n in the graph, one half of a loop.
struct HalfPath {
    std::uint32_t start = 0;
    std::uint32_t end = 0;
    std::vector<std::uint32_t> edges;
};

/// Basis of the box space P_{n,shading}: loops of length 2n in canonical order,
/// together with the index tables used by the tangle actions.
class LoopSpace {
public:
    LoopSpace(const SpinContext& ctx, std::size_t n, Shading shading);

    std::size_t n() const { return n_; }
    Shading shading() const { return shading_; }
    std::size_t size() const { return loops_.size(); }
    const std::vector<LoopPath>& loops() const { return loops_; }
    const LoopPath& loop(std::size_t i) const { return loops_[i]; }
    /// Index of a loop, or -1 when it is not a basis loop of this space.
    long find(const LoopPath& loop) const;
    /// Index of the loop with bottom half `bottom` and top half `top`, or -1.
    long join(std::size_t bottom, std::size_t top) const;

    const std::vector<HalfPath>& halves() const { return halves_; }
    /// Groups of half paths sharing start and end vertex.
    const std::vector<std::vector<std::uint32_t>>& blocks() const { return blocks_; }
    std::size_t bottom_half(std::size_t loop) const { return split_[loop].first; }
    std::size_t top_half(std::size_t loop) const { return split_[loop].second; }

    /// Factor applied to each summand of a product, indexed by the middle half path.
    const Scalar& product_weight(std::size_t half) const { return product_weight_[half]; }
    /// Diagonal loops with their trace weights.
    const std::vector<std::pair<std::uint32_t, Scalar>>& trace_weights() const { return trace_weights_; }
    /// Weight of a loop in the inner product.
    const Scalar& inner_weight(std::size_t loop) const { return inner_weight_[loop]; }
    /// Index of the reversed loop (the adjoint permutation).
    std::uint32_t reversed(std::size_t loop) const { return reverse_[loop]; }

private:
    std::size_t n_;
    Shading shading_;
    std::vector<LoopPath> loops_;
    std::unordered_map<std::string, std::uint32_t> index_;
    std::vector<HalfPath> halves_;
    std::vector<std::vector<std::uint32_t>> blocks_;
    std::vector<std::uint32_t> block_of_half_;
    std::vector<std::uint32_t> position_in_block_;
    std::vector<std::vector<std::int32_t>> block_loops_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> split_;
    std::vector<Scalar> product_weight_;
    std::vector<std::pair<std::uint32_t, Scalar>> trace_weights_;
    std::vector<Scalar> inner_weight_;
    std::vector<std::uint32_t> reverse_;
};

/// Per-graph data for the graph planar algebra: Perron-Frobenius weights,
/// the trace normalization and cached box-space bases.
class SpinContext : public std::enable_shared_from_this<SpinContext> {
public:
    static std::shared_ptr<const SpinContext> create(BipartiteGraph graph, const NormOptions& options = {});
    static std::shared_ptr<const SpinContext> create(BipartiteGraph graph, PerronData perron);

    const BipartiteGraph& graph() const { return graph_; }
    const PerronData& perron() const { return perron_; }
    const Scalar& delta() const { return perron_.delta; }
    const Scalar& mu(std::size_t v) const { return perron_.mu[v]; }
    /// mu(v)^k for any integer k.
    Scalar mu_power(std::size_t v, long k) const;
    /// Sum of mu(v)^2 over even vertices; the trace of the unit of P_0 is 1.
    const Scalar& normalization() const { return z_; }
    const LoopSpace& space(std::size_t n, Shading shading) const;

private:
    SpinContext(BipartiteGraph graph, PerronData perron);

    BipartiteGraph graph_;
    PerronData perron_;
    Scalar z_;
    std::vector<Scalar> mu_inverse_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<std::size_t, int>, std::unique_ptr<LoopSpace>> spaces_;
};

using SpinContextPtr = std::shared_ptr<const SpinContext>;

/// An element of the box space P_{n,shading}. Entries are stored in balanced
/// coordinates: the value on a loop is multiplied by mu(v_0) mu(v_n) times the
/// square root of the product of mu over the remaining loop vertices (mu(v_0)
/// alone when n = 0). In these coordinates every tangle action has weights that
/// are integral powers of mu.
class GpaElement {
public:
    GpaElement() = default;
    GpaElement(SpinContextPtr ctx, std::size_t n, Shading shading);

    static GpaElement unit(SpinContextPtr ctx, std::size_t n, Shading shading);
    static GpaElement basis_loop(SpinContextPtr ctx, std::size_t n, Shading shading, std::size_t loop);

    const SpinContextPtr& context() const { return ctx_; }
    std::size_t n() const { return n_; }
    Shading shading() const { return shading_; }
    const LoopSpace& space() const { return *space_; }
    std::size_t size() const { return entries_.size(); }
    const std::vector<Scalar>& entries() const { return entries_; }
    std::vector<Scalar>& entries() { return entries_; }
    const Scalar& operator[](std::size_t i) const { return entries_[i]; }
    Scalar& operator[](std::size_t i) { return entries_[i]; }

    bool is_zero() const;
    bool is_exact() const;
    /// Largest magnitude bound over entries; exact zero gives 0.
    Scalar max_abs_bound(unsigned bits = 128) const;

    GpaElement operator+(const GpaElement& o) const;
    GpaElement operator-(const GpaElement& o) const;
    GpaElement operator-() const;
    GpaElement scaled(const Scalar& c) const;
    GpaElement& operator+=(const GpaElement& o);
    GpaElement& operator-=(const GpaElement& o);
    bool operator==(const GpaElement& o) const;

    std::string to_json() const;
    static GpaElement from_json(SpinContextPtr ctx, const std::string& text);

private:
    void check_same_shape(const GpaElement& o) const;

    SpinContextPtr ctx_;
    const LoopSpace* space_ = nullptr;
    std::size_t n_ = 0;
    Shading shading_ = Shading::plus;
    std::vector<Scalar> entries_;
};

GpaElement multiply(const GpaElement& x, const GpaElement& y);
GpaElement adjoint(const GpaElement& x);
/// One click: P_{n,s} -> P_{n,1-s}, every boundary point advances by one.
GpaElement click(const GpaElement& x, long k = 1);
/// The rotation rho, two clicks; rho^n is the identity on P_n.
GpaElement rotate(const GpaElement& x, long k = 1);
/// Joins boundary points position and position+1 (one-based, circular).
GpaElement cap(const GpaElement& x, std::size_t position);
/// Inserts a cup between the new boundary points position and position+1 of P_{n+1}.
GpaElement cup(const GpaElement& x, std::size_t position);
/// Adds a through strand on the right; equals cup(x, n+1).
GpaElement include(const GpaElement& x);
Scalar trace(const GpaElement& x);
/// <x, y> = trace(y* x).
Scalar inner_product(const GpaElement& x, const GpaElement& y);
GpaElement tl_embed(const SpinContextPtr& ctx, const TLDiagram& d, Shading shading);
GpaElement tl_embed(const SpinContextPtr& ctx, const TLElement& x, Shading shading);
/// Converts every entry to a certified interval.
GpaElement to_interval(const GpaElement& x, unsigned bits);

/// Element with independent integer entries drawn uniformly from [-bound, bound].
GpaElement random_element(const SpinContextPtr& ctx, std::size_t n, Shading shading, std::mt19937_64& rng,
                          int bound = 3);

struct AxiomCheck {
    std::string name;
    std::size_t n = 0;
    Shading shading = Shading::plus;
    bool passed = false;
};

/// Exact checks of the planar algebra axioms on seeded random elements for
/// every n <= n_max and both shadings: associativity, unit, trace cyclicity,
/// the inner product as a trace, rho^n = 1, unitarity of rho, cap/cup
/// adjointness, the zig-zag identity, and the Temperley-Lieb homomorphism.
std::vector<AxiomCheck> check_axioms(const SpinContextPtr& ctx, std::size_t n_max, std::size_t samples,
                                     std::uint64_t seed);

}  // namespace planalg
