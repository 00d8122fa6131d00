#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "critgroup/chip_firing.hpp"
#include "critgroup/simplicial_complex.hpp"
#include "critgroup/spanning_trees.hpp"

namespace critgroup::cli {

struct LoadedComplex {
  std::string source;
  SimplicialComplex complex;
};

/// kind followed by integer parameters, e.g. {"simplex-skeleton", "6", "2"}.
SimplicialComplex generate(const std::vector<std::string>& words);
/// Same, from one string split on whitespace, commas and colons.
SimplicialComplex generate(const std::string& spec);

/// Exactly one of `path` ("-" = stdin) and `gen_spec` must be non-empty.
LoadedComplex load_source(const std::string& path, const std::string& gen_spec, std::istream& in);

std::vector<std::string> split_words(const std::string& s);
std::vector<Integer> parse_integers(const std::string& s);
std::vector<Chips> parse_chips(const std::string& s);
/// "23", "2 3" or "2,3".
Simplex parse_face(const std::string& s);

/// "auto" picks a torsion-free tree; anything else is a file listing the
/// tree's i-faces one per line.
SpanningTree resolve_tree(const SimplicialComplex& complex, int i, const std::string& spec);

}  // namespace critgroup::cli
