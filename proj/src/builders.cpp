#include "gkm/builders.hpp"

#include "gkm/errors.hpp"
#include "gkm/linalg.hpp"

#include <sstream>

namespace gkm::builders {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, sep)) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

Integer determinant(const linalg::IntMatrix& m) {
    const std::size_t n = m.size();
    linalg::RatMatrix r;
    for (const auto& row : m) r.emplace_back(row.begin(), row.end());
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && r[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(r[p], r[c]);
            det = -det;
        }
        det *= r[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            Rational f = r[i][c] / r[c][c];
            for (std::size_t j = c; j < n; ++j) r[i][j] -= f * r[c][j];
        }
    }
    return det.get_num();
}

}  // namespace

MomentGraph point(std::size_t torus_rank) {
    return MomentGraph(torus_rank, {{"pt", RatVector(torus_rank)}}, {});
}

MomentGraph sphere(const LinearForm& alpha, RatVector base, const Rational& scale) {
    const std::size_t n = alpha.num_vars();
    if (base.empty()) base.assign(n, Rational(0));
    if (base.size() != n) throw DimensionMismatch("sphere base point has the wrong length");
    if (scale <= 0) throw PreconditionError("sphere scale must be positive");
    RatVector top = base;
    for (std::size_t i = 0; i < n; ++i) top[i] += scale * alpha[i];
    return MomentGraph(n, {{"S", std::move(base)}, {"N", std::move(top)}}, {{"S", "N", alpha}});
}

MomentGraph projective_space(std::size_t m) {
    if (m == 0) throw PreconditionError("projective space dimension must be at least 1");
    std::vector<RatVector> points;
    points.emplace_back(m);
    for (std::size_t i = 0; i < m; ++i) {
        RatVector e(m);
        e[i] = 1;
        points.push_back(std::move(e));
    }
    std::vector<Vertex> vertices;
    for (std::size_t i = 0; i <= m; ++i) vertices.push_back({"p" + std::to_string(i), points[i]});
    std::vector<Edge> edges;
    for (std::size_t i = 0; i <= m; ++i) {
        for (std::size_t j = i + 1; j <= m; ++j) {
            RatVector diff(m);
            for (std::size_t k = 0; k < m; ++k) diff[k] = points[j][k] - points[i][k];
            edges.push_back({vertices[i].id, vertices[j].id, LinearForm(primitive_direction(diff))});
        }
    }
    return MomentGraph(m, std::move(vertices), std::move(edges));
}

MomentGraph product(const MomentGraph& a, const MomentGraph& b) {
    const std::size_t na = a.torus_rank();
    const std::size_t nb = b.torus_rank();
    auto pad = [&](const LinearForm& w, bool first) {
        IntVector v(na + nb);
        for (std::size_t i = 0; i < w.num_vars(); ++i) v[(first ? 0 : na) + i] = w[i];
        return LinearForm(std::move(v));
    };

    std::vector<Vertex> vertices;
    for (const auto& va : a.vertices()) {
        for (const auto& vb : b.vertices()) {
            RatVector moment = va.moment;
            moment.insert(moment.end(), vb.moment.begin(), vb.moment.end());
            vertices.push_back({va.id + vb.id, std::move(moment)});
        }
    }
    std::vector<Edge> edges;
    for (const auto& ea : a.edges()) {
        for (const auto& vb : b.vertices()) edges.push_back({ea.src + vb.id, ea.dst + vb.id, pad(ea.weight, true)});
    }
    for (const auto& va : a.vertices()) {
        for (const auto& eb : b.edges()) edges.push_back({va.id + eb.src, va.id + eb.dst, pad(eb.weight, false)});
    }
    return MomentGraph(na + nb, std::move(vertices), std::move(edges));
}

MomentGraph scale_action(const MomentGraph& g, const Integer& k) {
    if (k <= 0) throw PreconditionError("scale factor must be a positive integer");
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) edges.push_back({e.src, e.dst, e.weight.scaled(k)});
    return MomentGraph(g.torus_rank(), g.vertices(), std::move(edges));
}

MomentGraph from_delzant(const std::vector<RatVector>& points,
                         const std::vector<std::pair<std::size_t, std::size_t>>& edge_pairs) {
    if (points.empty()) throw PreconditionError("polytope has no vertices");
    const std::size_t n = points.front().size();
    std::vector<Vertex> vertices;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].size() != n) throw DimensionMismatch("polytope vertices of different dimensions");
        vertices.push_back({"v" + std::to_string(i), points[i]});
    }
    std::vector<Edge> edges;
    for (auto [i, j] : edge_pairs) {
        if (i >= points.size() || j >= points.size()) throw PreconditionError("edge refers to a missing vertex");
        if (i == j || points[i] == points[j]) throw PreconditionError("edge joins a vertex to itself");
        RatVector diff(n);
        for (std::size_t k = 0; k < n; ++k) diff[k] = points[j][k] - points[i][k];
        edges.push_back({vertices[i].id, vertices[j].id, LinearForm(primitive_direction(diff))});
    }
    MomentGraph g(n, std::move(vertices), std::move(edges));
    require_valid(g);
    return g;
}

MomentGraph from_delzant(const std::string& points, const std::string& edges) {
    std::vector<RatVector> pts;
    for (const auto& p : split(points, ';')) pts.push_back(parse_rational_list(p));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& e : split(edges, ';')) {
        auto dash = e.find('-');
        if (dash == std::string::npos) throw ParseError("malformed edge '" + e + "', expected i-j");
        Integer i = parse_integer(e.substr(0, dash));
        Integer j = parse_integer(e.substr(dash + 1));
        if (i < 0 || j < 0 || !i.fits_ulong_p() || !j.fits_ulong_p()) {
            throw ParseError("malformed edge '" + e + "'");
        }
        pairs.emplace_back(i.get_ui(), j.get_ui());
    }
    return from_delzant(pts, pairs);
}

std::vector<Issue> delzant_warnings(const MomentGraph& g) {
    std::vector<Issue> out;
    const std::size_t n = g.torus_rank();
    for (std::size_t v = 0; v < g.vertices().size(); ++v) {
        const auto& inc = g.incident(v);
        if (inc.size() != n) continue;
        linalg::IntMatrix m;
        for (std::size_t e : inc) m.push_back(g.weight_away(e, v).primitive_part().coeffs());
        Integer det = determinant(m);
        if (det != 1 && det != -1) {
            out.push_back({g.vertices()[v].id, "edge directions have determinant " + to_string(det) +
                                                   ", polytope is not smooth here"});
        }
    }
    return out;
}

}  // namespace gkm::builders
