#include "critgroup/facet_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>

#include "critgroup/errors.hpp"

namespace critgroup {

std::vector<std::vector<Vertex>> parse_facets(std::istream& in) {
  std::vector<std::vector<Vertex>> facets;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream tokens(line);
    std::string tok;
    std::vector<Vertex> facet;
    while (tokens >> tok) {
      unsigned long long value = 0;
      const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc{} || end != tok.data() + tok.size() || value == 0 ||
          value > std::numeric_limits<Vertex>::max())
        throw InputError("line " + std::to_string(line_no) + ": bad vertex label '" + tok + "'");
      facet.push_back(static_cast<Vertex>(value));
    }
    facets.push_back(std::move(facet));
  }
  return facets;
}

std::vector<std::vector<Vertex>> parse_facets(const std::string& text) {
  std::istringstream in(text);
  return parse_facets(in);
}

SimplicialComplex read_complex(std::istream& in) {
  return SimplicialComplex::from_facets(parse_facets(in));
}

SimplicialComplex load_complex(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open facet file '" + path + "'");
  return read_complex(in);
}

std::string format_facets(const SimplicialComplex& complex) {
  std::string out;
  for (const auto& f : complex.facets()) {
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (j > 0) out += ' ';
      out += std::to_string(f.vertices()[j]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace critgroup
