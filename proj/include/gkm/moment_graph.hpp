#pragma once

#include "gkm/polynomial.hpp"
#include "gkm/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace gkm {

/// An isolated fixed point together with its moment image in t*.
struct Vertex {
    std::string id;
    RatVector moment;

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// A one-skeleton sphere joining two fixed points. The weight is oriented
/// from src to dst: mu(dst) - mu(src) is a positive multiple of it.
struct Edge {
    std::string src;
    std::string dst;
    LinearForm weight;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Fixed points and weighted one-skeleton of a Hamiltonian T-space.
///
/// Construction does not validate; call `validate` or `require_valid`.
/// Lookups by id assume ids are unique.
class MomentGraph {
public:
    MomentGraph(std::size_t torus_rank, std::vector<Vertex> vertices, std::vector<Edge> edges);

    std::size_t torus_rank() const { return torus_rank_; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    std::optional<std::size_t> find(const std::string& id) const;
    /// Throws PreconditionError for an unknown id.
    std::size_t index_of(const std::string& id) const;
    const Vertex& vertex(const std::string& id) const { return vertices_[index_of(id)]; }

    /// Indices of the edges touching vertex `v` (by vertex index), in edge order.
    const std::vector<std::size_t>& incident(std::size_t v) const { return incident_[v]; }

    /// Weight of edge `e` oriented away from vertex `v` (an endpoint of e).
    LinearForm weight_away(std::size_t e, std::size_t v) const;
    /// The endpoint of edge `e` other than vertex `v`.
    std::size_t other_end(std::size_t e, std::size_t v) const;

    /// "edge 3 (a->b)", used in diagnostics.
    std::string edge_label(std::size_t e) const;

    friend bool operator==(const MomentGraph& a, const MomentGraph& b) {
        return a.torus_rank_ == b.torus_rank_ && a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

private:
    std::size_t torus_rank_;
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> incident_;
    std::vector<std::size_t> src_index_;
    std::vector<std::size_t> dst_index_;
};

struct Issue {
    std::string subject;  // vertex id or edge label
    std::string message;
};

struct ValidationReport {
    std::vector<Issue> violations;
    std::vector<Issue> warnings;  // e.g. non-primitive weights

    bool ok() const { return violations.empty(); }
};

ValidationReport validate(const MomentGraph& g);

/// Throws ValidationError listing every violation.
void require_valid(const MomentGraph& g);

/// An element xi of t defining the Morse function f = <mu, xi>.
struct Direction {
    IntVector xi;

    Direction operator-() const;
    friend bool operator==(const Direction&, const Direction&) = default;
};

std::string to_string(const Direction& d);

/// Throws GenericityError naming the first edge whose weight pairs to zero
/// with xi, DimensionMismatch when the length is wrong.
void require_generic(const MomentGraph& g, const Direction& xi);
bool is_generic(const MomentGraph& g, const Direction& xi);

/// First generic xi among (1, c, c^2, ..., c^(n-1)) for c = 1, 2, 3, ...
Direction generic_direction(const MomentGraph& g);

/// f(v) = <mu(v), xi>.
Rational height(const MomentGraph& g, const Direction& xi, std::size_t v);

/// Weights, oriented away from v, of the edges along which f decreases.
std::vector<LinearForm> downward_weights(const MomentGraph& g, const Direction& xi, const std::string& v);

/// Twice the number of downward edges at v.
unsigned morse_index(const MomentGraph& g, const Direction& xi, const std::string& v);

/// Morse index of every vertex, in vertex order.
std::vector<unsigned> morse_indices(const MomentGraph& g, const Direction& xi);

/// Product of the downward weights at v (1 at a local minimum).
Polynomial euler_class_down(const MomentGraph& g, const Direction& xi, const std::string& v);

/// Vertex ids sorted by ascending f; equal heights ordered by id.
std::vector<std::string> critical_order(const MomentGraph& g, const Direction& xi);

}  // namespace gkm
