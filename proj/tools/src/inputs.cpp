#include "inputs.hpp"

#include <charconv>
#include <fstream>
#include <istream>

#include "critgroup/errors.hpp"
#include "critgroup/facet_io.hpp"
#include "critgroup/generators.hpp"

namespace critgroup::cli {

namespace {

int to_int(const std::string& w) {
  int v = 0;
  const auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
  if (ec != std::errc() || p != w.data() + w.size()) throw InputError("expected an integer, got '" + w + "'");
  return v;
}

void want(const std::vector<std::string>& words, std::size_t n) {
  if (words.size() != n + 1)
    throw InputError("generator '" + words[0] + "' takes " + std::to_string(n) + " parameter(s)");
}

}  // namespace

std::vector<std::string> split_words(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == ',' || c == ':' || c == '\n') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

SimplicialComplex generate(const std::vector<std::string>& words) {
  if (words.empty()) throw InputError("missing generator kind");
  const std::string& kind = words[0];
  if (kind == "bipyramid") {
    want(words, 0);
    return gen::bipyramid();
  }
  if (kind == "rp2") {
    want(words, 0);
    return gen::projective_plane();
  }
  if (kind == "cycle") {
    want(words, 1);
    return gen::cycle(to_int(words[1]));
  }
  if (kind == "complete") {
    want(words, 1);
    return gen::complete_graph(to_int(words[1]));
  }
  if (kind == "simplex-skeleton") {
    want(words, 2);
    return gen::simplex_skeleton(to_int(words[1]), to_int(words[2]));
  }
  if (kind == "sphere") {
    want(words, 1);
    return gen::sphere(to_int(words[1]));
  }
  throw InputError("unknown generator '" + kind +
                   "' (bipyramid, cycle N, complete N, simplex-skeleton N K, sphere D, rp2)");
}

SimplicialComplex generate(const std::string& spec) { return generate(split_words(spec)); }

LoadedComplex load_source(const std::string& path, const std::string& gen_spec, std::istream& in) {
  if (!path.empty() && !gen_spec.empty()) throw InputError("give either a facet file or --gen, not both");
  if (!gen_spec.empty()) {
    auto words = split_words(gen_spec);
    std::string name = "gen:";
    for (std::size_t j = 0; j < words.size(); ++j) name += (j ? " " : "") + words[j];
    return {name, generate(words)};
  }
  if (path.empty()) throw InputError("no complex given (facet file, '-' for stdin, or --gen)");
  if (path == "-") return {"stdin", read_complex(in)};
  return {"file:" + path, load_complex(path)};
}

std::vector<Integer> parse_integers(const std::string& s) {
  std::vector<Integer> out;
  for (const auto& w : split_words(s)) {
    Integer x;
    const bool neg = !w.empty() && (w[0] == '-' || w[0] == '+');
    const std::string digits = neg ? w.substr(1) : w;
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("expected an integer, got '" + w + "'");
    x.set_str(digits, 10);
    out.push_back(w[0] == '-' ? Integer(-x) : x);
  }
  return out;
}

std::vector<Chips> parse_chips(const std::string& s) {
  std::vector<Chips> out;
  for (const auto& w : split_words(s)) {
    Chips v = 0;
    const auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
    if (ec != std::errc() || p != w.data() + w.size() || v < 0)
      throw InputError("chip counts are nonnegative integers, got '" + w + "'");
    out.push_back(v);
  }
  return out;
}

Simplex parse_face(const std::string& s) {
  auto words = split_words(s);
  std::vector<Vertex> verts;
  if (words.size() == 1 && words[0].size() > 1) {
    for (char c : words[0]) {
      if (c < '0' || c > '9') throw InputError("bad face '" + s + "'");
      verts.push_back(static_cast<Vertex>(c - '0'));
    }
  } else {
    for (const auto& w : words) {
      const int v = to_int(w);
      if (v <= 0) throw InputError("vertex labels are positive, got '" + w + "'");
      verts.push_back(static_cast<Vertex>(v));
    }
  }
  if (verts.empty()) throw InputError("empty face");
  return Simplex::from_unsorted(std::move(verts));
}

SpanningTree resolve_tree(const SimplicialComplex& complex, int i, const std::string& spec) {
  if (spec == "auto") {
    auto tree = find_torsion_free_tree(complex, i);
    if (!tree) throw TreeHasTorsion("no torsion-free " + std::to_string(i) + "-dimensional spanning tree");
    return *tree;
  }
  std::ifstream f(spec);
  if (!f) throw InputError("cannot open tree file '" + spec + "'");
  std::vector<Simplex> faces;
  for (auto& verts : parse_facets(f)) faces.push_back(Simplex::from_unsorted(std::move(verts)));
  for (const auto& face : faces)
    if (face.dimension() != i || !complex.contains(face))
      throw InputError("tree face " + face.to_string() + " is not an " + std::to_string(i) +
                       "-face of the complex");
  auto tree = is_spanning_tree(complex, i, faces);
  if (!tree) throw NotATree("tree file does not describe a spanning tree");
  return *tree;
}

}  // namespace critgroup::cli
