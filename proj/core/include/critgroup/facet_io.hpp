#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "critgroup/simplicial_complex.hpp"

namespace critgroup {

// Facet file format: one facet per line, base-10 vertex labels separated by
// whitespace. Blank lines and lines whose first non-blank character is '#'
// are ignored.
std::vector<std::vector<Vertex>> parse_facets(std::istream& in);
std::vector<std::vector<Vertex>> parse_facets(const std::string& text);
SimplicialComplex read_complex(std::istream& in);
SimplicialComplex load_complex(const std::string& path);

/// Canonical rendering of the complex's facets, one per line.
std::string format_facets(const SimplicialComplex& complex);

}  // namespace critgroup
