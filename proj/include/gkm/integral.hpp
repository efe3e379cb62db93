#pragma once

#include "gkm/linalg.hpp"
#include "gkm/moment_graph.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace gkm {

/// Lattice of integer tuples (a_v) in Z[x]_d with a_src - a_dst in
/// alpha_e * Z[x] for every edge, as rows of a Hermite normal form over the
/// vertex-major, grlex-monomial coordinates.
struct IntKernelBasis {
    unsigned degree = 0;
    std::size_t torus_rank = 0;
    std::vector<Exponent> monomials;
    linalg::IntMatrix basis;

    std::size_t rank() const { return basis.size(); }
    /// Tuple in vertex order, one polynomial per vertex.
    bool contains(const std::vector<Polynomial>& tuple) const;
    std::vector<Polynomial> element(std::size_t i) const;
};

/// Each congruence is encoded with auxiliary quotient unknowns q_e,
/// a_src - a_dst - alpha_e * q_e = 0, and the integer kernel of that system
/// is projected back onto the a-coordinates (the projection is injective).
IntKernelBasis int_kernel_basis(const MomentGraph& g, unsigned d);

/// Index of the integral restrictions {c(v)} of degree lambda_v/2 classes
/// vanishing strictly below v inside Z * e_v, where e_v is the downward Euler
/// class: the lattice is generated by e_v / gap. Gap 1 means every such
/// integral one-skeleton class restricts to a multiple of e_v.
/// Throws StructuralError when the lattice is zero or not generated by an
/// integral fraction of e_v.
Integer euler_divisibility_gap(const MomentGraph& g, const Direction& xi, const std::string& v);

struct GapRow {
    std::string vertex;
    Integer gap;
};

/// Gaps for every vertex, in critical order.
std::vector<GapRow> gap_report(const MomentGraph& g, const Direction& xi);

/// One line per vertex: `vertex_id gap`.
void write_gaps(std::ostream& out, const std::vector<GapRow>& rows);

}  // namespace gkm
