#pragma once

#include "gkm/moment_graph.hpp"

#include <string>
#include <utility>
#include <vector>

namespace gkm::builders {

/// A single fixed point at the origin of a rank-n torus; vertex id "pt".
MomentGraph point(std::size_t torus_rank);

/// Two poles joined by one edge of weight alpha: "S" at `base`, "N" at
/// base + scale * alpha. An empty base means the origin.
MomentGraph sphere(const LinearForm& alpha, RatVector base = {}, const Rational& scale = 1);

/// The standard CP^m graph: vertices "p0".."pm" at 0, e_1, .., e_m, an edge
/// i -> j for every i < j weighted by the primitive vector of mu(j) - mu(i).
MomentGraph projective_space(std::size_t m);

/// Product action of the rank n1 + n2 torus. Vertex ids are concatenated
/// (id1 + id2), moments concatenated, weights zero-padded.
MomentGraph product(const MomentGraph& a, const MomentGraph& b);

/// Every weight multiplied by k > 0; moments unchanged.
MomentGraph scale_action(const MomentGraph& g, const Integer& k);

/// Toric graph from polytope vertices and edges (index pairs). Vertex ids are
/// "v0", "v1", ...; each edge i -> j is weighted by the primitive vector along
/// vertex j - vertex i. Throws ValidationError when the result violates the
/// moment-graph invariants (for instance proportional edges at a vertex).
MomentGraph from_delzant(const std::vector<RatVector>& vertices,
                         const std::vector<std::pair<std::size_t, std::size_t>>& edges);

/// Same, from text: points as "x,y;x,y;..." (rationals), edges as "0-1;1-2;...".
MomentGraph from_delzant(const std::string& points, const std::string& edges);

/// Smoothness check: vertices with exactly n incident edges whose primitive
/// edge directions do not form a unimodular matrix.
std::vector<Issue> delzant_warnings(const MomentGraph& g);

}  // namespace gkm::builders
