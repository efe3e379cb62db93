#include "gkm/integral.hpp"

#include "gkm/errors.hpp"

#include <optional>
#include <ostream>

namespace gkm {

namespace {

// Integral congruence lattice with the vertices flagged in `forced_zero`
// pinned to zero; rows are in full vertex-major coordinates, HNF.
IntKernelBasis integral_lattice(const MomentGraph& g, unsigned d, const std::vector<bool>& forced_zero) {
    require_valid(g);
    const std::size_t n = g.torus_rank();
    IntKernelBasis out;
    out.degree = d;
    out.torus_rank = n;
    out.monomials = monomial_basis(n, d);
    const std::size_t width = out.monomials.size();
    const auto lower = d == 0 ? std::vector<Exponent>{} : monomial_basis(n, d - 1);

    std::vector<std::size_t> free_vertices;
    std::vector<std::size_t> column_of(g.vertices().size(), 0);
    for (std::size_t v = 0; v < g.vertices().size(); ++v) {
        if (forced_zero[v]) continue;
        column_of[v] = free_vertices.size() * width;
        free_vertices.push_back(v);
    }
    const std::size_t a_cols = free_vertices.size() * width;
    const std::size_t cols = a_cols + g.edges().size() * lower.size();

    linalg::IntMatrix system;
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        const Edge& edge = g.edges()[e];
        const std::size_t s = g.index_of(edge.src);
        const std::size_t t = g.index_of(edge.dst);
        const Polynomial alpha = edge.weight.to_polynomial();
        // products[k'] = coordinates of alpha * m_k' in the degree-d basis.
        std::vector<RatVector> products;
        for (const auto& m : lower) products.push_back((alpha * Polynomial::monomial(m)).coordinates(out.monomials));

        for (std::size_t k = 0; k < width; ++k) {
            IntVector row(cols);
            if (!forced_zero[s]) row[column_of[s] + k] += 1;
            if (!forced_zero[t]) row[column_of[t] + k] -= 1;
            for (std::size_t q = 0; q < lower.size(); ++q) {
                row[a_cols + e * lower.size() + q] = -products[q][k].get_num();
            }
            system.push_back(std::move(row));
        }
    }

    linalg::IntMatrix projected;
    for (const auto& z : linalg::integer_kernel(system, cols)) {
        IntVector full(g.vertices().size() * width);
        for (std::size_t v : free_vertices) {
            for (std::size_t k = 0; k < width; ++k) full[v * width + k] = z[column_of[v] + k];
        }
        projected.push_back(std::move(full));
    }
    out.basis = linalg::hermite_normal_form(std::move(projected), g.vertices().size() * width);
    return out;
}

}  // namespace

bool IntKernelBasis::contains(const std::vector<Polynomial>& tuple) const {
    IntVector coords;
    for (const auto& p : tuple) {
        if (!p.has_integer_coefficients()) return false;
        if (!p.is_zero() && p.degree() != static_cast<int>(degree)) return false;
        for (const auto& c : p.coordinates(monomials)) coords.push_back(c.get_num());
    }
    const std::size_t cols = basis.empty() ? coords.size() : basis.front().size();
    if (coords.size() != cols) throw DimensionMismatch("tuple has the wrong number of vertices");
    return linalg::in_row_lattice(basis, std::move(coords));
}

std::vector<Polynomial> IntKernelBasis::element(std::size_t i) const {
    const std::size_t width = monomials.size();
    const auto& row = basis.at(i);
    std::vector<Polynomial> out;
    for (std::size_t v = 0; v * width < row.size(); ++v) {
        RatVector block;
        for (std::size_t k = 0; k < width; ++k) block.emplace_back(row[v * width + k]);
        out.push_back(Polynomial::from_coordinates(torus_rank, monomials, block));
    }
    return out;
}

IntKernelBasis int_kernel_basis(const MomentGraph& g, unsigned d) {
    return integral_lattice(g, d, std::vector<bool>(g.vertices().size(), false));
}

Integer euler_divisibility_gap(const MomentGraph& g, const Direction& xi, const std::string& v) {
    require_valid(g);
    require_generic(g, xi);
    const std::size_t vi = g.index_of(v);
    const Polynomial euler = euler_class_down(g, xi, v);
    const auto d = static_cast<unsigned>(euler.degree());

    const Rational fv = height(g, xi, vi);
    std::vector<bool> below(g.vertices().size());
    for (std::size_t w = 0; w < below.size(); ++w) below[w] = height(g, xi, w) < fv;

    const auto lattice = integral_lattice(g, d, below);
    const std::size_t width = lattice.monomials.size();
    linalg::IntMatrix at_v;
    for (const auto& row : lattice.basis) {
        at_v.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(vi * width),
                          row.begin() + static_cast<std::ptrdiff_t>((vi + 1) * width));
    }
    at_v = linalg::hermite_normal_form(std::move(at_v), width);
    if (at_v.empty()) {
        throw StructuralError("no integral one-skeleton class is supported at or above " + v);
    }
    if (at_v.size() > 1) {
        throw StructuralError("restrictions at " + v + " span a lattice of rank " + std::to_string(at_v.size()) +
                              "; expected multiples of the Euler class");
    }

    const IntVector& generator = at_v.front();
    const RatVector e = euler.coordinates(lattice.monomials);
    // e = ratio * generator, coordinate by coordinate.
    std::optional<Rational> ratio;
    bool proportional = true;
    for (std::size_t k = 0; k < width && proportional; ++k) {
        if (generator[k] == 0) {
            proportional = e[k] == 0;
            continue;
        }
        Rational r = e[k] / Rational(generator[k]);
        proportional = !ratio || *ratio == r;
        ratio = r;
    }
    if (!proportional) ratio.reset();
    if (!ratio || ratio->get_den() != 1) {
        throw StructuralError("Euler class at " + v + " is not an integral multiple of the lattice generator");
    }
    return abs(ratio->get_num());
}

std::vector<GapRow> gap_report(const MomentGraph& g, const Direction& xi) {
    std::vector<GapRow> rows;
    for (const auto& v : critical_order(g, xi)) rows.push_back({v, euler_divisibility_gap(g, xi, v)});
    return rows;
}

void write_gaps(std::ostream& out, const std::vector<GapRow>& rows) {
    for (const auto& row : rows) out << row.vertex << ' ' << to_string(row.gap) << '\n';
}

}  // namespace gkm
