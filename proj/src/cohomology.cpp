#include "gkm/cohomology.hpp"

#include "gkm/errors.hpp"

#include <algorithm>
#include <future>
#include <ostream>

namespace gkm {

namespace {

std::vector<Polynomial> split_coordinates(const MomentGraph& g, const std::vector<Exponent>& monomials,
                                          const RatVector& coords) {
    const std::size_t width = monomials.size();
    std::vector<Polynomial> values;
    values.reserve(g.vertices().size());
    for (std::size_t v = 0; v < g.vertices().size(); ++v) {
        RatVector block(coords.begin() + static_cast<std::ptrdiff_t>(v * width),
                        coords.begin() + static_cast<std::ptrdiff_t>((v + 1) * width));
        values.push_back(Polynomial::from_coordinates(g.torus_rank(), monomials, block));
    }
    return values;
}

GradedBasis to_graded_basis(const GraphPtr& g, unsigned d, const std::vector<Exponent>& monomials,
                            const linalg::RatMatrix& rows) {
    GradedBasis out;
    out.degree = d;
    for (const auto& row : rows) out.basis.emplace_back(g, d, split_coordinates(*g, monomials, row));
    return out;
}

std::vector<bool> strictly_below(const MomentGraph& g, const Direction& xi, std::size_t v) {
    const Rational fv = height(g, xi, v);
    std::vector<bool> below(g.vertices().size());
    for (std::size_t w = 0; w < below.size(); ++w) below[w] = height(g, xi, w) < fv;
    return below;
}

void require_same_graph(const CohomologyClass& a, const CohomologyClass& b) {
    if (a.graph_ptr() != b.graph_ptr() && !(a.graph() == b.graph())) {
        throw PreconditionError("classes live on different moment graphs");
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// Classes

std::optional<std::size_t> failed_congruence(const MomentGraph& g, const std::vector<Polynomial>& values) {
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        const Edge& edge = g.edges()[e];
        Polynomial diff = values[g.index_of(edge.src)] - values[g.index_of(edge.dst)];
        if (!divide_with_remainder(diff, edge.weight).remainder.is_zero()) return e;
    }
    return std::nullopt;
}

CohomologyClass::CohomologyClass(GraphPtr graph, unsigned degree, std::vector<Polynomial> values)
    : graph_(std::move(graph)), degree_(degree), values_(std::move(values)) {
    if (!graph_) throw PreconditionError("cohomology class without a graph");
    if (values_.size() != graph_->vertices().size()) {
        throw DimensionMismatch("class has " + std::to_string(values_.size()) + " values for " +
                                std::to_string(graph_->vertices().size()) + " vertices");
    }
    for (std::size_t v = 0; v < values_.size(); ++v) {
        const Polynomial& p = values_[v];
        if (p.num_vars() != graph_->torus_rank()) throw DimensionMismatch("class value in the wrong ring");
        if (!p.is_zero() && (!p.is_homogeneous() || p.degree() != static_cast<int>(degree_))) {
            throw PreconditionError("value at " + graph_->vertices()[v].id + " is not homogeneous of degree " +
                                    std::to_string(degree_));
        }
    }
    if (auto e = failed_congruence(*graph_, values_)) {
        throw PreconditionError("tuple violates the congruence along " + graph_->edge_label(*e));
    }
}

CohomologyClass CohomologyClass::unit(GraphPtr graph) {
    std::vector<Polynomial> ones(graph->vertices().size(), Polynomial::constant(graph->torus_rank(), 1));
    return CohomologyClass(std::move(graph), 0, std::move(ones));
}

bool CohomologyClass::is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

RatVector CohomologyClass::coordinates() const {
    const auto monomials = monomial_basis(graph_->torus_rank(), degree_);
    RatVector out;
    out.reserve(values_.size() * monomials.size());
    for (const auto& p : values_) {
        auto block = p.coordinates(monomials);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

CohomologyClass class_product(const CohomologyClass& a, const CohomologyClass& b) {
    require_same_graph(a, b);
    std::vector<Polynomial> values;
    values.reserve(a.values().size());
    for (std::size_t v = 0; v < a.values().size(); ++v) values.push_back(a.values()[v] * b.values()[v]);
    return CohomologyClass(a.graph_ptr(), a.degree() + b.degree(), std::move(values));
}

CohomologyClass scalar_product(const Polynomial& p, const CohomologyClass& c) {
    if (!p.is_homogeneous() || p.is_zero()) throw PreconditionError("module action needs a nonzero homogeneous polynomial");
    std::vector<Polynomial> values;
    values.reserve(c.values().size());
    for (const auto& value : c.values()) values.push_back(p * value);
    return CohomologyClass(c.graph_ptr(), c.degree() + static_cast<unsigned>(p.degree()), std::move(values));
}

// ---------------------------------------------------------------------------
// Congruence kernel

CongruenceSystem congruence_system(const MomentGraph& g, unsigned d) {
    const std::size_t n = g.torus_rank();
    CongruenceSystem sys;
    sys.monomials = monomial_basis(n, d);
    const std::size_t width = sys.monomials.size();
    sys.columns = g.vertices().size() * width;
    const auto reduced_basis = monomial_basis(n - 1, d);

    for (const Edge& edge : g.edges()) {
        const std::size_t s = g.index_of(edge.src);
        const std::size_t t = g.index_of(edge.dst);
        // images[k][r]: coefficient of reduced monomial r in monomial k on the hyperplane.
        std::vector<RatVector> images;
        images.reserve(width);
        for (const auto& m : sys.monomials) {
            images.push_back(restrict_to_hyperplane(Polynomial::monomial(m), edge.weight).coordinates(reduced_basis));
        }
        for (std::size_t r = 0; r < reduced_basis.size(); ++r) {
            RatVector row(sys.columns);
            bool nonzero = false;
            for (std::size_t k = 0; k < width; ++k) {
                if (images[k][r] == 0) continue;
                row[s * width + k] += images[k][r];
                row[t * width + k] -= images[k][r];
                nonzero = true;
            }
            if (nonzero) sys.matrix.push_back(std::move(row));
        }
    }
    return sys;
}

GradedBasis kernel_basis(const GraphPtr& g, unsigned d) {
    require_valid(*g);
    auto sys = congruence_system(*g, d);
    return to_graded_basis(g, d, sys.monomials, linalg::nullspace(sys.matrix, sys.columns));
}

std::size_t kernel_dimension(const MomentGraph& g, unsigned d) {
    require_valid(g);
    auto sys = congruence_system(g, d);
    return sys.columns - linalg::rank(sys.matrix, sys.columns);
}

GradedBasis vanishing_below_basis(const GraphPtr& g, const Direction& xi, const std::string& v, unsigned d) {
    require_valid(*g);
    require_generic(*g, xi);
    auto sys = congruence_system(*g, d);
    const auto below = strictly_below(*g, xi, g->index_of(v));
    const std::size_t width = sys.monomials.size();
    for (std::size_t w = 0; w < below.size(); ++w) {
        if (!below[w]) continue;
        for (std::size_t k = 0; k < width; ++k) {
            RatVector row(sys.columns);
            row[w * width + k] = 1;
            sys.matrix.push_back(std::move(row));
        }
    }
    return to_graded_basis(g, d, sys.monomials, linalg::nullspace(sys.matrix, sys.columns));
}

// ---------------------------------------------------------------------------
// Morse predictions

std::vector<unsigned> HilbertTable::disagreements() const {
    std::vector<unsigned> out;
    for (unsigned d = 0; d < dims.size() && d < predicted.size(); ++d) {
        if (dims[d] != predicted[d]) out.push_back(d);
    }
    return out;
}

std::vector<std::size_t> predicted_dimensions(const MomentGraph& g, const Direction& xi, unsigned max_degree) {
    require_valid(g);
    const auto indices = morse_indices(g, xi);
    const std::size_t n = g.torus_rank();
    std::vector<std::size_t> predicted(max_degree + 1, 0);
    for (unsigned d = 0; d <= max_degree; ++d) {
        for (unsigned lambda : indices) {
            const unsigned half = lambda / 2;
            if (d >= half) predicted[d] += binomial(d - half + n - 1, n - 1);
        }
    }
    return predicted;
}

HilbertTable hilbert_table(const MomentGraph& g, const Direction& xi, unsigned max_degree) {
    HilbertTable table;
    table.max_degree = max_degree;
    table.predicted = predicted_dimensions(g, xi, max_degree);

    std::vector<std::future<std::size_t>> jobs;
    for (unsigned d = 0; d <= max_degree; ++d) {
        jobs.push_back(std::async(std::launch::async, [&g, d] { return kernel_dimension(g, d); }));
    }
    for (auto& job : jobs) table.dims.push_back(job.get());
    return table;
}

std::vector<std::size_t> betti_numbers(const MomentGraph& g, const Direction& xi) {
    require_valid(g);
    const auto indices = morse_indices(g, xi);
    unsigned top = 0;
    for (unsigned lambda : indices) top = std::max(top, lambda);
    std::vector<std::size_t> betti(indices.empty() ? 0 : top + 1, 0);
    for (unsigned lambda : indices) ++betti[lambda];
    return betti;
}

// ---------------------------------------------------------------------------
// Flow-up classes

CohomologyClass flow_up_class(const GraphPtr& g, const Direction& xi, const std::string& v) {
    require_valid(*g);
    require_generic(*g, xi);
    const std::size_t vi = g->index_of(v);
    const Polynomial euler = euler_class_down(*g, xi, v);
    const auto degree = static_cast<unsigned>(euler.degree());
    const auto below = strictly_below(*g, xi, vi);

    auto sys = congruence_system(*g, degree);
    const std::size_t width = sys.monomials.size();

    // Fixed blocks: zero below v, the Euler class at v. The rest is unknown.
    RatVector fixed(sys.columns);
    const auto euler_coords = euler.coordinates(sys.monomials);
    std::copy(euler_coords.begin(), euler_coords.end(), fixed.begin() + static_cast<std::ptrdiff_t>(vi * width));
    std::vector<std::size_t> unknown_vertices;
    for (std::size_t w = 0; w < g->vertices().size(); ++w) {
        if (w != vi && !below[w]) unknown_vertices.push_back(w);
    }

    linalg::RatMatrix reduced;
    RatVector rhs;
    for (const auto& row : sys.matrix) {
        Rational known = 0;
        for (std::size_t k = 0; k < width; ++k) known += row[vi * width + k] * fixed[vi * width + k];
        RatVector r;
        r.reserve(unknown_vertices.size() * width);
        for (std::size_t w : unknown_vertices) {
            r.insert(r.end(), row.begin() + static_cast<std::ptrdiff_t>(w * width),
                     row.begin() + static_cast<std::ptrdiff_t>((w + 1) * width));
        }
        reduced.push_back(std::move(r));
        rhs.push_back(-known);
    }

    auto solution = linalg::solve(reduced, rhs, unknown_vertices.size() * width);
    if (!solution) {
        throw StructuralError("no flow-up class at vertex " + v +
                              ": the graph does not model a closed Hamiltonian T-space");
    }
    for (std::size_t i = 0; i < unknown_vertices.size(); ++i) {
        const std::size_t w = unknown_vertices[i];
        std::copy(solution->begin() + static_cast<std::ptrdiff_t>(i * width),
                  solution->begin() + static_cast<std::ptrdiff_t>((i + 1) * width),
                  fixed.begin() + static_cast<std::ptrdiff_t>(w * width));
    }
    return CohomologyClass(g, degree, split_coordinates(*g, sys.monomials, fixed));
}

bool ModuleGenerators::free() const {
    return std::all_of(freeness.begin(), freeness.end(), [](const FreenessRow& r) { return r.free(); });
}

ModuleGenerators module_generators(const GraphPtr& g, const Direction& xi, unsigned max_degree) {
    ModuleGenerators out;
    out.vertices = critical_order(*g, xi);
    for (const auto& v : out.vertices) out.generators.push_back(flow_up_class(g, xi, v));

    const std::size_t n = g->torus_rank();
    for (unsigned d = 0; d <= max_degree; ++d) {
        FreenessRow row;
        row.degree = d;
        row.kernel_dim = kernel_dimension(*g, d);
        linalg::RatMatrix products;
        for (const auto& tau : out.generators) {
            if (tau.degree() > d) continue;
            for (const auto& m : monomial_basis(n, d - tau.degree())) {
                try {
                    products.push_back(scalar_product(Polynomial::monomial(m), tau).coordinates());
                } catch (const PreconditionError&) {
                    row.in_kernel = false;
                }
            }
        }
        row.products = products.size();
        const std::size_t cols = g->vertices().size() * monomial_basis(n, d).size();
        row.rank = linalg::rank(products, cols);
        out.freeness.push_back(row);
    }
    return out;
}

DivisibilityCheck onesk_divisibility_check(const MomentGraph& g, const Direction& xi, const std::string& v,
                                           const CohomologyClass& c) {
    require_generic(g, xi);
    if (!(c.graph() == g)) throw PreconditionError("class belongs to a different graph");
    const std::size_t vi = g.index_of(v);
    const auto below = strictly_below(g, xi, vi);
    for (std::size_t w = 0; w < below.size(); ++w) {
        if (below[w] && !c.values()[w].is_zero()) {
            throw PreconditionError("class does not vanish at " + g.vertices()[w].id + ", which lies below " + v);
        }
    }
    std::vector<LinearFactor> factors;
    for (auto& w : downward_weights(g, xi, v)) factors.push_back({std::move(w), 1});
    auto quotient = lemma42_divide(c.values()[vi], factors);
    return {quotient.has_value(), std::move(quotient)};
}

// ---------------------------------------------------------------------------
// Text output

void write_class(std::ostream& out, const CohomologyClass& c) {
    for (std::size_t v = 0; v < c.values().size(); ++v) {
        out << c.graph().vertices()[v].id << ' ' << to_string(c.values()[v]) << '\n';
    }
}

void write_hilbert(std::ostream& out, const HilbertTable& table) {
    for (unsigned d = 0; d <= table.max_degree; ++d) {
        out << table.dims[d] << ' ' << table.predicted[d] << '\n';
    }
}

}  // namespace gkm
