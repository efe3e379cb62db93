#include "gkm/cli.hpp"

#include "gkm/builders.hpp"
#include "gkm/cohomology.hpp"
#include "gkm/errors.hpp"
#include "gkm/graph_io.hpp"
#include "gkm/integral.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace gkm::cli {

namespace {

struct Options {
    std::string file;
    std::string second_file;
    std::string xi;
    std::string output = "-";
    unsigned max_degree = 0;
    unsigned degree = 0;
    std::string weight;
    std::string base;
    std::string scale = "1";
    std::size_t dim = 0;
    std::string factor;
    std::string points;
    std::string edges;
};

class Session {
public:
    Session(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {}

    MomentGraph load(const std::string& path) const { return path == "-" ? read_graph(in_) : load_graph(path); }

    /// Loads and validates, reporting violations on stderr.
    std::optional<MomentGraph> load_valid(const std::string& path) const {
        MomentGraph g = load(path);
        auto report = validate(g);
        if (report.ok()) return g;
        for (const auto& issue : report.violations) err_ << "violation " << issue.subject << ": " << issue.message << '\n';
        return std::nullopt;
    }

    Direction direction(const MomentGraph& g, const std::string& xi) const {
        if (xi.empty()) return generic_direction(g);
        Direction d{parse_integer_list(xi)};
        require_generic(g, d);
        return d;
    }

    int validate_cmd(const Options& o) const {
        MomentGraph g = load(o.file);
        auto report = validate(g);
        for (const auto& issue : report.violations) out_ << "violation " << issue.subject << ": " << issue.message << '\n';
        for (const auto& issue : report.warnings) out_ << "warning " << issue.subject << ": " << issue.message << '\n';
        out_ << (report.ok() ? "valid" : "invalid") << '\n';
        return report.ok() ? kSuccess : kFailure;
    }

    int betti_cmd(const Options& o) const {
        auto g = load_valid(o.file);
        if (!g) return kFailure;
        auto betti = betti_numbers(*g, direction(*g, o.xi));
        for (std::size_t k = 0; k < betti.size(); ++k) out_ << (k ? " " : "") << betti[k];
        out_ << '\n';
        return kSuccess;
    }

    int hilbert_cmd(const Options& o) const {
        auto g = load_valid(o.file);
        if (!g) return kFailure;
        auto table = hilbert_table(*g, direction(*g, o.xi), o.max_degree);
        write_hilbert(out_, table);
        for (unsigned d : table.disagreements()) {
            err_ << "degree " << d << ": kernel dimension " << table.dims[d] << " differs from Morse prediction "
                 << table.predicted[d] << '\n';
        }
        return kSuccess;
    }

    int basis_cmd(const Options& o) const {
        auto g = load_valid(o.file);
        if (!g) return kFailure;
        auto basis = kernel_basis(share(std::move(*g)), o.degree);
        out_ << "degree " << basis.degree << " dimension " << basis.dimension() << '\n';
        for (std::size_t i = 0; i < basis.basis.size(); ++i) {
            out_ << "class " << i << '\n';
            write_class(out_, basis.basis[i]);
        }
        return kSuccess;
    }

    int generators_cmd(const Options& o) const {
        auto g = load_valid(o.file);
        if (!g) return kFailure;
        auto shared = share(std::move(*g));
        auto xi = direction(*shared, o.xi);
        auto gens = module_generators(shared, xi, o.max_degree);
        for (std::size_t i = 0; i < gens.generators.size(); ++i) {
            out_ << "generator " << gens.vertices[i] << " index " << 2 * gens.generators[i].degree() << '\n';
            write_class(out_, gens.generators[i]);
        }
        out_ << "freeness degree products rank kernel\n";
        for (const auto& row : gens.freeness) {
            out_ << row.degree << ' ' << row.products << ' ' << row.rank << ' ' << row.kernel_dim << ' '
                 << (row.free() ? "ok" : "fail") << '\n';
        }
        return gens.free() ? kSuccess : kFailure;
    }

    int gap_cmd(const Options& o) const {
        auto g = load_valid(o.file);
        if (!g) return kFailure;
        write_gaps(out_, gap_report(*g, direction(*g, o.xi)));
        return kSuccess;
    }

    int emit(const Options& o, const MomentGraph& g) const {
        if (o.output == "-") {
            write_graph(out_, g);
            return kSuccess;
        }
        std::ofstream file(o.output);
        if (!file) throw ParseError("cannot write '" + o.output + "'");
        write_graph(file, g);
        return kSuccess;
    }

    int build_sphere(const Options& o) const {
        LinearForm alpha(parse_integer_list(o.weight));
        RatVector base = o.base.empty() ? RatVector{} : parse_rational_list(o.base);
        return emit(o, builders::sphere(alpha, base, parse_rational(o.scale)));
    }
    int build_cpn(const Options& o) const { return emit(o, builders::projective_space(o.dim)); }
    int build_product(const Options& o) const {
        if (o.file == "-" && o.second_file == "-") throw ParseError("only one graph can be read from stdin");
        return emit(o, builders::product(load(o.file), load(o.second_file)));
    }
    int build_scale(const Options& o) const { return emit(o, builders::scale_action(load(o.file), parse_integer(o.factor))); }
    int build_delzant(const Options& o) const {
        auto g = builders::from_delzant(o.points, o.edges);
        for (const auto& w : builders::delzant_warnings(g)) err_ << "warning " << w.subject << ": " << w.message << '\n';
        return emit(o, g);
    }

private:
    std::istream& in_;
    std::ostream& out_;
    std::ostream& err_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Equivariant cohomology of Hamiltonian T-spaces from moment graphs", "gkm"};
    app.require_subcommand(1);
    Options o;
    Session session(in, out, err);
    std::function<int()> action;

    auto file_arg = [&](CLI::App* cmd) { cmd->add_option("file", o.file, "graph file, - for stdin")->required(); };
    auto xi_opt = [&](CLI::App* cmd) { cmd->add_option("--xi", o.xi, "generic direction, e.g. 1,2"); };

    auto* validate_cmd = app.add_subcommand("validate", "check the moment-graph invariants");
    file_arg(validate_cmd);
    validate_cmd->callback([&] { action = [&] { return session.validate_cmd(o); }; });

    auto* betti = app.add_subcommand("betti", "ordinary Betti numbers from Morse indices");
    file_arg(betti);
    xi_opt(betti);
    betti->callback([&] { action = [&] { return session.betti_cmd(o); }; });

    auto* hilbert = app.add_subcommand("hilbert", "kernel dimensions against the Morse prediction");
    file_arg(hilbert);
    xi_opt(hilbert);
    hilbert->add_option("--max-degree", o.max_degree, "largest polynomial degree")->required();
    hilbert->callback([&] { action = [&] { return session.hilbert_cmd(o); }; });

    auto* basis = app.add_subcommand("basis", "basis of the congruence kernel in one degree");
    file_arg(basis);
    basis->add_option("--degree", o.degree, "polynomial degree")->required();
    basis->callback([&] { action = [&] { return session.basis_cmd(o); }; });

    auto* generators = app.add_subcommand("generators", "flow-up classes and freeness check");
    file_arg(generators);
    xi_opt(generators);
    generators->add_option("--max-degree", o.max_degree, "largest polynomial degree checked")->required();
    generators->callback([&] { action = [&] { return session.generators_cmd(o); }; });

    auto* gap = app.add_subcommand("int-gap", "integral Euler-class divisibility gap per vertex");
    file_arg(gap);
    xi_opt(gap);
    gap->callback([&] { action = [&] { return session.gap_cmd(o); }; });

    auto* build = app.add_subcommand("build", "emit a graph file for a standard space");
    build->require_subcommand(1);
    auto output_opt = [&](CLI::App* cmd) { cmd->add_option("-o,--output", o.output, "output file, - for stdout"); };

    auto* sphere = build->add_subcommand("sphere", "two-sphere with one weight");
    sphere->add_option("--weight", o.weight, "integer weight, e.g. 1,-1")->required();
    sphere->add_option("--base", o.base, "moment of the south pole");
    sphere->add_option("--scale", o.scale, "positive rational edge length");
    output_opt(sphere);
    sphere->callback([&] { action = [&] { return session.build_sphere(o); }; });

    auto* cpn = build->add_subcommand("cpn", "complex projective space");
    cpn->add_option("--dim", o.dim, "complex dimension")->required()->check(CLI::PositiveNumber);
    output_opt(cpn);
    cpn->callback([&] { action = [&] { return session.build_cpn(o); }; });

    auto* prod = build->add_subcommand("product", "product of two graphs");
    prod->add_option("first", o.file)->required();
    prod->add_option("second", o.second_file)->required();
    output_opt(prod);
    prod->callback([&] { action = [&] { return session.build_product(o); }; });

    auto* scale = build->add_subcommand("scale", "multiply every weight by k");
    scale->add_option("file", o.file)->required();
    scale->add_option("--k", o.factor, "positive integer factor")->required();
    output_opt(scale);
    scale->callback([&] { action = [&] { return session.build_scale(o); }; });

    auto* delzant = build->add_subcommand("delzant", "toric graph from polytope vertices and edges");
    delzant->add_option("--points", o.points, "vertices, e.g. 0,0;1,0;0,1")->required();
    delzant->add_option("--edges", o.edges, "edges as index pairs, e.g. 0-1;0-2;1-2")->required();
    output_opt(delzant);
    delzant->callback([&] { action = [&] { return session.build_delzant(o); }; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        return action ? action() : kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
}

}  // namespace gkm::cli
