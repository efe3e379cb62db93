#include "gkm/graph_io.hpp"

#include "gkm/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <initializer_list>
#include <sstream>

namespace gkm {

namespace {

using nlohmann::json;

[[noreturn]] void field_error(const std::string& path, const std::string& what) {
    throw ParseError("field " + path + ": " + what);
}

void require_keys(const json& obj, const std::string& path, std::initializer_list<const char*> keys) {
    if (!obj.is_object()) field_error(path, "expected an object");
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* k : keys) known = known || key == k;
        if (!known) field_error(path + "." + key, "unknown field");
    }
    for (const char* k : keys) {
        if (!obj.contains(k)) field_error(path + "." + k, "missing field");
    }
}

const json& array_field(const json& obj, const char* key, const std::string& path) {
    const json& value = obj.at(key);
    if (!value.is_array()) field_error(path + "." + key, "expected a list");
    return value;
}

std::string string_field(const json& obj, const char* key, const std::string& path) {
    const json& value = obj.at(key);
    if (!value.is_string()) field_error(path + "." + key, "expected a string");
    return value.get<std::string>();
}

Rational rational_value(const json& value, const std::string& path) {
    try {
        if (value.is_string()) return parse_rational(value.get<std::string>());
        if (value.is_number_integer()) return parse_rational(value.dump());
    } catch (const ParseError& e) {
        field_error(path, e.what());
    }
    field_error(path, "expected a rational such as \"1/3\"");
}

Integer integer_value(const json& value, const std::string& path) {
    if (!value.is_number_integer()) field_error(path, "expected an integer, got " + value.dump());
    return parse_integer(value.dump());
}

std::string quoted(const std::string& s) { return json(s).dump(); }

}  // namespace

MomentGraph parse_graph(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed graph file: ") + e.what());
    }
    require_keys(doc, "graph", {"torus_rank", "vertices", "edges"});

    const json& rank = doc.at("torus_rank");
    if (!rank.is_number_unsigned() || rank.get<std::uint64_t>() == 0) {
        field_error("torus_rank", "expected a positive integer");
    }
    const auto n = rank.get<std::size_t>();

    std::vector<Vertex> vertices;
    const json& vs = array_field(doc, "vertices", "graph");
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const std::string path = "vertices[" + std::to_string(i) + "]";
        require_keys(vs[i], path, {"id", "moment"});
        Vertex v{string_field(vs[i], "id", path), {}};
        const json& moment = array_field(vs[i], "moment", path);
        for (std::size_t k = 0; k < moment.size(); ++k) {
            v.moment.push_back(rational_value(moment[k], path + ".moment[" + std::to_string(k) + "]"));
        }
        vertices.push_back(std::move(v));
    }

    std::vector<Edge> edges;
    const json& es = array_field(doc, "edges", "graph");
    for (std::size_t i = 0; i < es.size(); ++i) {
        const std::string path = "edges[" + std::to_string(i) + "]";
        require_keys(es[i], path, {"src", "dst", "weight"});
        IntVector weight;
        const json& w = array_field(es[i], "weight", path);
        for (std::size_t k = 0; k < w.size(); ++k) {
            weight.push_back(integer_value(w[k], path + ".weight[" + std::to_string(k) + "]"));
        }
        try {
            edges.push_back({string_field(es[i], "src", path), string_field(es[i], "dst", path),
                             LinearForm(std::move(weight))});
        } catch (const PreconditionError&) {
            field_error(path + ".weight", "weight must be nonzero");
        }
    }
    return MomentGraph(n, std::move(vertices), std::move(edges));
}

MomentGraph read_graph(std::istream& in) {
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}

MomentGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file '" + path + "'");
    return read_graph(in);
}

std::string format_graph(const MomentGraph& g) {
    std::ostringstream out;
    out << "{\n  \"torus_rank\": " << g.torus_rank() << ",\n  \"vertices\": [";
    for (std::size_t i = 0; i < g.vertices().size(); ++i) {
        const auto& v = g.vertices()[i];
        out << (i ? ",\n" : "\n") << "    {\"id\": " << quoted(v.id) << ", \"moment\": [";
        for (std::size_t k = 0; k < v.moment.size(); ++k) out << (k ? ", " : "") << quoted(to_string(v.moment[k]));
        out << "]}";
    }
    out << (g.vertices().empty() ? "]" : "\n  ]") << ",\n  \"edges\": [";
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        const auto& e = g.edges()[i];
        out << (i ? ",\n" : "\n") << "    {\"src\": " << quoted(e.src) << ", \"dst\": " << quoted(e.dst)
            << ", \"weight\": [";
        for (std::size_t k = 0; k < e.weight.num_vars(); ++k) out << (k ? ", " : "") << to_string(e.weight[k]);
        out << "]}";
    }
    out << (g.edges().empty() ? "]" : "\n  ]") << "\n}\n";
    return out.str();
}

void write_graph(std::ostream& out, const MomentGraph& g) { out << format_graph(g); }

}  // namespace gkm
