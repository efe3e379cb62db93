#pragma once

#include "gkm/moment_graph.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace gkm {

/// Graph files are JSON documents with exactly the fields
///
///   torus_rank  positive integer
///   vertices    [{"id": string, "moment": ["p/q" | "p", ...]}, ...]
///   edges       [{"src": id, "dst": id, "weight": [integer, ...]}, ...]
///
/// Unknown fields, non-integer weights and malformed rationals raise
/// ParseError with the offending field path (or line and column for JSON
/// syntax errors). The result is not validated.
MomentGraph parse_graph(std::string_view text);
MomentGraph read_graph(std::istream& in);
MomentGraph load_graph(const std::string& path);

/// Canonical text: fixed indentation, one vertex or edge per line, rationals
/// in lowest terms without a "/1" denominator. parse_graph(format_graph(g)) == g.
std::string format_graph(const MomentGraph& g);
void write_graph(std::ostream& out, const MomentGraph& g);

}  // namespace gkm
