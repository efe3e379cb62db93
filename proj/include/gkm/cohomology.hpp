#pragma once

#include "gkm/linalg.hpp"
#include "gkm/moment_graph.hpp"
#include "gkm/polynomial.hpp"

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gkm {

using GraphPtr = std::shared_ptr<const MomentGraph>;

inline GraphPtr share(MomentGraph g) { return std::make_shared<const MomentGraph>(std::move(g)); }

/// Index of the first edge whose endpoint values are not congruent modulo
/// the edge weight, or nullopt when all congruences hold.
std::optional<std::size_t> failed_congruence(const MomentGraph& g, const std::vector<Polynomial>& values);

/// An equivariant class of cohomological degree 2d, given by its restrictions
/// to the fixed points (one homogeneous polynomial of degree d per vertex, in
/// vertex order). The constructor rejects tuples violating a congruence.
class CohomologyClass {
public:
    CohomologyClass(GraphPtr graph, unsigned degree, std::vector<Polynomial> values);

    static CohomologyClass unit(GraphPtr graph);

    const MomentGraph& graph() const { return *graph_; }
    const GraphPtr& graph_ptr() const { return graph_; }
    unsigned degree() const { return degree_; }
    const std::vector<Polynomial>& values() const { return values_; }
    const Polynomial& at(const std::string& vertex_id) const { return values_[graph_->index_of(vertex_id)]; }
    bool is_zero() const;

    /// Coefficients in the vertex-major, grlex-monomial coordinate order.
    RatVector coordinates() const;

    friend bool operator==(const CohomologyClass& a, const CohomologyClass& b) {
        return a.degree_ == b.degree_ && a.values_ == b.values_;
    }

private:
    GraphPtr graph_;
    unsigned degree_;
    std::vector<Polynomial> values_;
};

/// Vertexwise product; the graphs must be equal.
CohomologyClass class_product(const CohomologyClass& a, const CohomologyClass& b);

/// Module action of a homogeneous polynomial of H*(BT) on a class.
CohomologyClass scalar_product(const Polynomial& p, const CohomologyClass& c);

/// The linear congruence conditions in degree d.
///
/// Unknowns are the coefficients of (a_v) ordered vertex-major, then by the
/// descending grlex monomial basis of Sym^d. Each edge e contributes the
/// coefficients of a_src - a_dst restricted to the hyperplane alpha_e = 0,
/// written in the (n-1)-variable grlex basis after eliminating the last
/// variable with nonzero coefficient in alpha_e.
struct CongruenceSystem {
    std::vector<Exponent> monomials;  // basis of Sym^d
    std::size_t columns = 0;          // vertices * monomials
    linalg::RatMatrix matrix;
};

CongruenceSystem congruence_system(const MomentGraph& g, unsigned d);

struct GradedBasis {
    unsigned degree = 0;
    std::vector<CohomologyClass> basis;

    std::size_t dimension() const { return basis.size(); }
};

/// Basis of the degree-d congruence kernel, in reduced row echelon form with
/// respect to the coordinate order of `congruence_system`.
GradedBasis kernel_basis(const GraphPtr& g, unsigned d);

std::size_t kernel_dimension(const MomentGraph& g, unsigned d);

/// Basis of the degree-d kernel classes that vanish at every vertex strictly
/// below v (same normal form as `kernel_basis`).
GradedBasis vanishing_below_basis(const GraphPtr& g, const Direction& xi, const std::string& v, unsigned d);

/// Kernel dimensions next to the Morse prediction
/// sum_v C(d - lambda_v/2 + n - 1, n - 1) for d = 0..max_degree.
struct HilbertTable {
    unsigned max_degree = 0;
    std::vector<std::size_t> dims;
    std::vector<std::size_t> predicted;

    bool agrees() const { return dims == predicted; }
    std::vector<unsigned> disagreements() const;
};

HilbertTable hilbert_table(const MomentGraph& g, const Direction& xi, unsigned max_degree);

/// Prediction only; needs no kernel solve.
std::vector<std::size_t> predicted_dimensions(const MomentGraph& g, const Direction& xi, unsigned max_degree);

/// Ordinary Betti numbers b_0..b_top from the Morse indices (odd ones zero).
std::vector<std::size_t> betti_numbers(const MomentGraph& g, const Direction& xi);

/// The class of degree lambda_v/2 that vanishes strictly below v and equals
/// the downward Euler class at v. Among all such classes, the one whose free
/// coordinates are zero in the reduced echelon solution. Throws
/// StructuralError when none exists.
CohomologyClass flow_up_class(const GraphPtr& g, const Direction& xi, const std::string& v);

struct FreenessRow {
    unsigned degree = 0;
    std::size_t products = 0;       // number of tau_v * m with deg = degree
    std::size_t rank = 0;           // rank of those products
    std::size_t kernel_dim = 0;
    bool in_kernel = true;

    bool free() const { return in_kernel && products == rank && rank == kernel_dim; }
};

struct ModuleGenerators {
    std::vector<std::string> vertices;  // critical order
    std::vector<CohomologyClass> generators;
    std::vector<FreenessRow> freeness;

    bool free() const;
};

/// Flow-up classes of every vertex, with a check that their H*(BT)-multiples
/// form a basis of the kernel in each degree <= max_degree.
ModuleGenerators module_generators(const GraphPtr& g, const Direction& xi, unsigned max_degree);

struct DivisibilityCheck {
    bool divisible = false;
    std::optional<Polynomial> quotient;
};

/// Whether c(v) is a multiple of the downward Euler class at v. Requires c to
/// vanish at every vertex strictly below v (PreconditionError otherwise).
DivisibilityCheck onesk_divisibility_check(const MomentGraph& g, const Direction& xi, const std::string& v,
                                           const CohomologyClass& c);

/// One row per vertex: `id polynomial`.
void write_class(std::ostream& out, const CohomologyClass& c);

/// One row per degree: `d computed predicted`.
void write_hilbert(std::ostream& out, const HilbertTable& table);

}  // namespace gkm
