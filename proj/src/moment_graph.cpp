#include "gkm/moment_graph.hpp"

#include "gkm/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace gkm {

MomentGraph::MomentGraph(std::size_t torus_rank, std::vector<Vertex> vertices, std::vector<Edge> edges)
    : torus_rank_(torus_rank), vertices_(std::move(vertices)), edges_(std::move(edges)) {
    incident_.resize(vertices_.size());
    const std::size_t missing = vertices_.size();
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        auto s = find(edges_[e].src);
        auto d = find(edges_[e].dst);
        src_index_.push_back(s.value_or(missing));
        dst_index_.push_back(d.value_or(missing));
        if (s) incident_[*s].push_back(e);
        if (d && d != s) incident_[*d].push_back(e);
    }
}

std::optional<std::size_t> MomentGraph::find(const std::string& id) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (vertices_[i].id == id) return i;
    }
    return std::nullopt;
}

std::size_t MomentGraph::index_of(const std::string& id) const {
    auto i = find(id);
    if (!i) throw PreconditionError("unknown vertex '" + id + "'");
    return *i;
}

LinearForm MomentGraph::weight_away(std::size_t e, std::size_t v) const {
    return src_index_[e] == v ? edges_[e].weight : -edges_[e].weight;
}

std::size_t MomentGraph::other_end(std::size_t e, std::size_t v) const {
    return src_index_[e] == v ? dst_index_[e] : src_index_[e];
}

std::string MomentGraph::edge_label(std::size_t e) const {
    return "edge " + std::to_string(e) + " (" + edges_[e].src + "->" + edges_[e].dst + ")";
}

// ---------------------------------------------------------------------------
// Validation

namespace {

std::string vector_text(const IntVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
    return s + ")";
}

}  // namespace

ValidationReport validate(const MomentGraph& g) {
    ValidationReport report;
    auto violation = [&](std::string subject, std::string message) {
        report.violations.push_back({std::move(subject), std::move(message)});
    };
    const std::size_t n = g.torus_rank();
    if (n == 0) violation("graph", "torus rank must be positive");

    std::map<std::string, int> seen;
    for (const auto& v : g.vertices()) {
        if (v.id.empty()) violation("vertex", "empty vertex id");
        if (++seen[v.id] == 2) violation(v.id, "duplicate vertex id");
        if (v.moment.size() != n) {
            violation(v.id, "moment has " + std::to_string(v.moment.size()) + " coordinates, expected " +
                                std::to_string(n));
        }
    }

    std::vector<bool> usable(g.edges().size(), false);
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        const Edge& edge = g.edges()[e];
        const std::string label = g.edge_label(e);
        auto s = g.find(edge.src);
        auto d = g.find(edge.dst);
        bool ok = true;
        if (!s) violation(label, "unknown source vertex '" + edge.src + "'"), ok = false;
        if (!d) violation(label, "unknown target vertex '" + edge.dst + "'"), ok = false;
        if (edge.src == edge.dst) violation(label, "loop edge"), ok = false;
        if (edge.weight.num_vars() != n) violation(label, "weight has wrong length"), ok = false;
        if (!ok) continue;
        const auto& ms = g.vertices()[*s].moment;
        const auto& md = g.vertices()[*d].moment;
        if (ms.size() != n || md.size() != n) continue;

        // mu(dst) - mu(src) = c * weight with c > 0.
        std::optional<Rational> c;
        bool compatible = true;
        for (std::size_t i = 0; i < n && compatible; ++i) {
            Rational diff = md[i] - ms[i];
            const Integer& w = edge.weight[i];
            if (w == 0) {
                compatible = diff == 0;
            } else {
                Rational ratio = diff / Rational(w);
                if (!c) c = ratio;
                compatible = *c == ratio;
            }
        }
        if (!compatible || !c || *c <= 0) {
            violation(label, "moment difference is not a positive multiple of weight " +
                                 vector_text(edge.weight.coeffs()));
            continue;
        }
        usable[e] = true;
        if (!edge.weight.is_primitive()) {
            report.warnings.push_back({label, "weight " + vector_text(edge.weight.coeffs()) + " is not primitive"});
        }
    }

    for (std::size_t v = 0; v < g.vertices().size(); ++v) {
        const auto& inc = g.incident(v);
        for (std::size_t i = 0; i < inc.size(); ++i) {
            for (std::size_t j = i + 1; j < inc.size(); ++j) {
                const auto& wi = g.edges()[inc[i]].weight;
                const auto& wj = g.edges()[inc[j]].weight;
                if (wi.num_vars() != n || wj.num_vars() != n) continue;
                if (proportional(wi, wj)) {
                    violation(g.vertices()[v].id, "GKM condition fails: " + g.edge_label(inc[i]) + " and " +
                                                      g.edge_label(inc[j]) + " have proportional weights");
                }
            }
        }
    }
    return report;
}

void require_valid(const MomentGraph& g) {
    auto report = validate(g);
    if (report.ok()) return;
    std::ostringstream out;
    out << "invalid moment graph:";
    for (const auto& issue : report.violations) out << "\n  " << issue.subject << ": " << issue.message;
    throw ValidationError(out.str());
}

// ---------------------------------------------------------------------------
// Morse data

Direction Direction::operator-() const {
    Direction d = *this;
    for (auto& z : d.xi) z = -z;
    return d;
}

std::string to_string(const Direction& d) {
    std::string s;
    for (std::size_t i = 0; i < d.xi.size(); ++i) s += (i ? "," : "") + to_string(d.xi[i]);
    return s;
}

bool is_generic(const MomentGraph& g, const Direction& xi) {
    if (xi.xi.size() != g.torus_rank()) return false;
    return std::all_of(g.edges().begin(), g.edges().end(),
                       [&](const Edge& e) { return e.weight.pair(xi.xi) != 0; });
}

void require_generic(const MomentGraph& g, const Direction& xi) {
    if (xi.xi.size() != g.torus_rank()) {
        throw DimensionMismatch("direction has " + std::to_string(xi.xi.size()) + " entries, torus rank is " +
                                std::to_string(g.torus_rank()));
    }
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        if (g.edges()[e].weight.pair(xi.xi) == 0) {
            throw GenericityError("direction (" + to_string(xi) + ") is orthogonal to the weight of " +
                                  g.edge_label(e));
        }
    }
}

Direction generic_direction(const MomentGraph& g) {
    for (Integer c = 1;; ++c) {
        Direction d;
        Integer power = 1;
        for (std::size_t i = 0; i < g.torus_rank(); ++i) {
            d.xi.push_back(power);
            power *= c;
        }
        if (is_generic(g, d)) return d;
    }
}

Rational height(const MomentGraph& g, const Direction& xi, std::size_t v) {
    return dot(g.vertices()[v].moment, xi.xi);
}

std::vector<LinearForm> downward_weights(const MomentGraph& g, const Direction& xi, const std::string& id) {
    require_generic(g, xi);
    const std::size_t v = g.index_of(id);
    std::vector<LinearForm> out;
    for (std::size_t e : g.incident(v)) {
        LinearForm w = g.weight_away(e, v);
        if (w.pair(xi.xi) < 0) out.push_back(std::move(w));
    }
    return out;
}

unsigned morse_index(const MomentGraph& g, const Direction& xi, const std::string& v) {
    return 2 * static_cast<unsigned>(downward_weights(g, xi, v).size());
}

std::vector<unsigned> morse_indices(const MomentGraph& g, const Direction& xi) {
    std::vector<unsigned> out;
    out.reserve(g.vertices().size());
    for (const auto& v : g.vertices()) out.push_back(morse_index(g, xi, v.id));
    return out;
}

Polynomial euler_class_down(const MomentGraph& g, const Direction& xi, const std::string& v) {
    Polynomial e = Polynomial::constant(g.torus_rank(), 1);
    for (const auto& w : downward_weights(g, xi, v)) e *= w.to_polynomial();
    return e;
}

std::vector<std::string> critical_order(const MomentGraph& g, const Direction& xi) {
    if (xi.xi.size() != g.torus_rank()) throw DimensionMismatch("direction length differs from torus rank");
    std::vector<std::size_t> order(g.vertices().size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<Rational> f;
    for (std::size_t v = 0; v < order.size(); ++v) f.push_back(height(g, xi, v));
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (f[a] != f[b]) return f[a] < f[b];
        return g.vertices()[a].id < g.vertices()[b].id;
    });
    std::vector<std::string> ids;
    for (auto v : order) ids.push_back(g.vertices()[v].id);
    return ids;
}

}  // namespace gkm
