#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "critgroup/simplicial_complex.hpp"

namespace critgroup {

// An i-dimensional simplicial spanning tree: the full (i-1)-skeleton plus the
// i-faces listed in `faces` (indices into complex.faces(i), ascending).
struct SpanningTree {
  int dimension = 0;
  std::vector<std::size_t> faces;
  /// |H_{i-1}(tree; Z)|, always finite for a tree.
  Integer torsion_order = 1;

  bool is_torsion_free() const { return torsion_order == 1; }
  std::vector<Simplex> face_list(const SimplicialComplex& complex) const;
  /// Indices of the i-faces not in the tree, ascending.
  std::vector<std::size_t> complement(const SimplicialComplex& complex) const;
};

/// Number of i-faces a spanning tree must have: f_i - beta_i(skeleton) + beta_{i-1}.
std::size_t tree_size(const SimplicialComplex& complex, int i);

/// Checks the tree conditions for the subcomplex (i-1)-skeleton + `faces`:
/// boundary columns independent over Q and the forced face count. The
/// remaining condition (finite codimension-one homology) follows from those
/// two. Returns nullopt when `faces` is not a spanning tree.
std::optional<SpanningTree> is_spanning_tree(const SimplicialComplex& complex, int i,
                                             std::span<const std::size_t> faces);
std::optional<SpanningTree> is_spanning_tree(const SimplicialComplex& complex, int i,
                                             const std::vector<Simplex>& faces);

/// Product of the invariant factors of the tree's boundary columns.
Integer tree_torsion(const SimplicialComplex& complex, int i, std::span<const std::size_t> faces);

struct TreeCensus {
  int dimension = 0;
  std::uint64_t count = 0;
  /// Sum over trees of torsion_order^2.
  Integer tau = 0;
  std::map<Integer, std::uint64_t> torsion_histogram;
  /// Set when the extension budget ran out; counts are then lower bounds.
  bool partial = false;
  std::uint64_t extensions = 0;
  std::vector<std::string> warnings;

  void merge(const TreeCensus& other);
};

struct EnumerationOptions {
  /// Maximum number of subset extensions (candidate faces tried) before the
  /// enumeration stops with `partial` set.
  std::uint64_t budget = 10'000'000;
  /// Workers > 1 partition the search by first chosen face.
  unsigned workers = 1;
  /// Called for each tree found. Lexicographic order with one worker; with
  /// several workers calls are serialized but unordered.
  std::function<void(const SpanningTree&)> on_tree;
  /// Optional; returning false stops the enumeration after that tree.
  std::function<bool(const SpanningTree&)> keep_going;
};

/// Exhaustive enumeration of i-dimensional spanning trees. Depth-first over
/// face subsets in lexicographic order, pruning as soon as the chosen
/// boundary columns become rationally dependent. Returns an empty census with
/// a warning when the i-skeleton is not APC.
TreeCensus enumerate_trees(const SimplicialComplex& complex, int i,
                           const EnumerationOptions& options = {});

/// Greedy lexicographic column basis; if that tree has torsion, falls back to
/// enumeration until a torsion-free tree turns up.
std::optional<SpanningTree> find_torsion_free_tree(const SimplicialComplex& complex, int i);

}  // namespace critgroup
