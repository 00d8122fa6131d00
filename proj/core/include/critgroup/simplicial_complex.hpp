#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "critgroup/exact_linalg.hpp"
#include "critgroup/integer_matrix.hpp"

namespace critgroup {

using Vertex = std::uint32_t;

// An oriented simplex: strictly increasing positive vertex labels. The
// default-constructed simplex is the empty face of dimension -1.
class Simplex {
 public:
  Simplex() = default;
  /// Throws InputError unless `vertices` is strictly increasing and positive.
  explicit Simplex(std::vector<Vertex> vertices);
  /// Sorts; throws InputError on duplicates or a zero label.
  static Simplex from_unsorted(std::vector<Vertex> vertices);

  int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  bool contains(Vertex v) const;
  bool is_subset_of(const Simplex& other) const;
  /// The codimension-one face omitting the j-th vertex.
  Simplex without(std::size_t j) const;
  Simplex with(Vertex v) const;

  /// Concatenated labels ("23") when all labels are single digits, otherwise
  /// space separated ("2 13").
  std::string to_string() const;

  friend auto operator<=>(const Simplex&, const Simplex&) = default;
  friend bool operator==(const Simplex&, const Simplex&) = default;

 private:
  std::vector<Vertex> vertices_;
};

// Reduced homology group: Z^betti + torsion (invariant factors > 1).
using HomologyGroup = CokernelStructure;

// A finite abstract simplicial complex with every face stored, including the
// empty face at dimension -1. Face lists are lexicographically sorted, and all
// matrix row/column orders follow them. Immutable after construction.
class SimplicialComplex {
 public:
  /// Downward closure of the facets. Throws InputError on an empty list, an
  /// empty facet, a repeated vertex inside a facet, or a zero label.
  static SimplicialComplex from_facets(const std::vector<std::vector<Vertex>>& facets);
  static SimplicialComplex from_facets(const std::vector<Simplex>& facets);

  int dimension() const { return static_cast<int>(faces_.size()) - 2; }

  /// f_i; zero outside [-1, d].
  std::size_t face_count(int i) const;
  /// (f_{-1}, f_0, ..., f_d).
  std::vector<std::size_t> f_vector() const;
  /// Faces of dimension i in lexicographic order; throws DimensionError outside [-1, d].
  const std::vector<Simplex>& faces(int i) const;
  std::optional<std::size_t> index_of(const Simplex& face) const;
  bool contains(const Simplex& face) const { return index_of(face).has_value(); }

  std::vector<Vertex> vertices() const;
  /// Maximal faces, ordered by dimension then lexicographically.
  std::vector<Simplex> facets() const;
  bool is_pure() const;
  /// Faces of dimension <= i.
  SimplicialComplex skeleton(int i) const;

  /// Matrix of the boundary map C_i -> C_{i-1}; column j is the boundary of
  /// faces(i)[j] with sign (-1)^p on the face omitting the p-th vertex.
  /// Defined for -1 <= i <= d; the i = 0 map is the augmentation row of ones.
  IntegerMatrix boundary_matrix(int i) const;
  IntegerMatrix coboundary_matrix(int i) const;

  /// Reduced homology over Z, for -1 <= i <= d.
  HomologyGroup reduced_homology(int i) const;
  std::size_t betti(int i) const;
  /// Acyclic in positive codimension: rational reduced homology vanishes below d.
  bool is_apc() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.faces_ == b.faces_;
  }

 private:
  explicit SimplicialComplex(std::vector<std::vector<Simplex>> faces);
  void check_dimension(int i, int lo, int hi, const char* what) const;

  // faces_[i + 1] holds the i-dimensional faces.
  std::vector<std::vector<Simplex>> faces_;
};

}  // namespace critgroup
