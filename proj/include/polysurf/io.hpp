#pragma once

#include "polysurf/graph.hpp"
#include "polysurf/surface.hpp"

#include <iosfwd>
#include <string>

namespace polysurf {

// Graph text format: header "n m", then one "u v" line per edge,
// 0-based indices, '#' starts a comment.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);
Graph load_graph(const std::string& path);
void save_graph(const std::string& path, const Graph& g);

// Surface file: JSON with fields version, mode, polygons (corner triples
// as exact rational strings) and ids. Round-trips bit-exactly.
Surface read_surface(std::istream& in);
void write_surface(std::ostream& out, const Surface& s);
Surface load_surface(const std::string& path);
void save_surface(const std::string& path, const Surface& s);

// Lossy mesh export for external viewers; vertices deduplicated by exact
// coordinate equality so shared sides reference shared vertices.
void export_off(std::ostream& out, const Surface& s, int digits);
void export_obj(std::ostream& out, const Surface& s, int digits);

}  // namespace polysurf
