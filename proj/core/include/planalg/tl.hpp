#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "planalg/scalar.hpp"

namespace planalg {

/// Non-crossing perfect matching on 2n boundary points. Points 0..n-1 run
/// left to right along the bottom and points n..2n-1 run right to left along
/// the top, so the index order is the circular order.
class TLDiagram {
public:
    TLDiagram() = default;
    TLDiagram(std::size_t n, std::vector<std::uint8_t> partner);

    static TLDiagram identity(std::size_t n);
    /// e_i for 1 <= i < n: joins bottom strands i, i+1 and top strands i, i+1.
    static TLDiagram generator(std::size_t n, std::size_t i);

    std::size_t n() const { return n_; }
    std::size_t partner(std::size_t point) const { return partner_[point]; }
    const std::vector<std::uint8_t>& pairing() const { return partner_; }
    static std::size_t top_point(std::size_t n, std::size_t column) { return 2 * n - 1 - column; }
    bool is_through(std::size_t point) const { return (point < n_) != (partner_[point] < n_); }
    std::size_t through_strands() const;

    TLDiagram adjoint() const;
    /// Rotation moving every boundary point k steps along the circular order.
    TLDiagram rotated(long k) const;
    /// Adds a through strand on the right.
    TLDiagram with_strand() const;

    bool operator<(const TLDiagram& o) const { return partner_ < o.partner_; }
    bool operator==(const TLDiagram& o) const { return n_ == o.n_ && partner_ == o.partner_; }

    /// One-based partner list of the 2n points.
    std::vector<int> to_list() const;
    static TLDiagram from_list(const std::vector<int>& partners);
    std::string to_json() const;

private:
    std::size_t n_ = 0;
    std::vector<std::uint8_t> partner_;
};

struct Composite {
    TLDiagram diagram;
    std::size_t closed_loops = 0;
};

/// Stacks b on top of a.
Composite compose(const TLDiagram& a, const TLDiagram& b);
/// Loops produced by joining each bottom point to the top point above it.
std::size_t closure_loops(const TLDiagram& d);
std::vector<TLDiagram> all_diagrams(std::size_t n);
Integer catalan(std::size_t n);

class TLElement {
public:
    explicit TLElement(std::size_t n = 0) : n_(n) {}
    static TLElement from_diagram(const TLDiagram& d, const Scalar& c = Scalar(1));

    std::size_t n() const { return n_; }
    const std::map<TLDiagram, Scalar>& terms() const { return terms_; }
    Scalar coefficient(const TLDiagram& d) const;
    bool is_zero() const { return terms_.empty(); }

    void add(const TLDiagram& d, const Scalar& c);
    TLElement operator+(const TLElement& o) const;
    TLElement operator-(const TLElement& o) const;
    TLElement scaled(const Scalar& c) const;
    TLElement adjoint() const;
    TLElement rotated(long k) const;
    TLElement with_strand() const;

private:
    std::size_t n_;
    std::map<TLDiagram, Scalar> terms_;
};

TLElement multiply(const TLElement& x, const TLElement& y, const Scalar& delta);
Scalar markov_trace(const TLElement& x, const Scalar& delta);
/// [n] at loop value delta via [n+1] = delta [n] - [n-1].
Scalar quantum_integer(long n, const Scalar& delta);
TLElement jones_wenzl(std::size_t n, const Scalar& delta);
/// The element obtained by capping points i and i+1 (one-based, circular).
TLElement tl_cap(const TLElement& x, std::size_t i, const Scalar& delta);

}  // namespace planalg
