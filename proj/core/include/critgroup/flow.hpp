#pragma once

#include <optional>
#include <span>
#include <vector>

#include "critgroup/critical.hpp"
#include "critgroup/exact_linalg.hpp"
#include "critgroup/simplicial_complex.hpp"
#include "critgroup/spanning_trees.hpp"

namespace critgroup {

// An integer i-chain, indexed like complex.faces(i).
struct Configuration {
  int dimension = 0;
  IntegerVector values;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

// Element of Z^m / im(reduced Laplacian) in Smith coordinates: residues[j] is
// taken modulo moduli[j]. A modulus of 0 marks a free coordinate, a modulus of
// 1 a coordinate that is always 0.
class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(std::vector<Integer> residues, std::vector<Integer> moduli);

  const std::vector<Integer>& residues() const { return residues_; }
  const std::vector<Integer>& moduli() const { return moduli_; }
  bool is_identity() const;

  GroupElement operator+(const GroupElement& other) const;
  GroupElement operator-() const;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement& a, const GroupElement& b) {
    return a.residues_ <=> b.residues_;
  }

 private:
  std::vector<Integer> residues_;
  std::vector<Integer> moduli_;
};

// Discrete i-flow on the i-faces of a complex: firing, conservativity and
// equivalence modulo the image of the up-down Laplacian.
class FlowModel {
 public:
  FlowModel(SimplicialComplex complex, int i);

  const SimplicialComplex& complex() const { return complex_; }
  int dimension() const { return dim_; }
  std::size_t size() const { return laplacian_.rows(); }
  const IntegerMatrix& laplacian() const { return laplacian_; }

  Configuration zero() const;
  Configuration make(IntegerVector values) const;

  /// c - L e_F: one unit of flow diverted from F around every (i+1)-face
  /// containing it. Throws InputError for a face outside complex.faces(i).
  Configuration fire(const Configuration& c, const Simplex& face) const;
  Configuration fire(const Configuration& c, std::size_t face_index) const;

  /// d_i c == 0; for i = 0 the entries sum to zero.
  bool is_conservative(const Configuration& c) const;

  /// The unique conservative configuration agreeing with `theta` on the faces
  /// outside `tree`. Throws TreeHasTorsion or NotATree.
  Configuration extend_to_conservative(const SpanningTree& tree, std::span<const Integer> theta) const;

  /// c1 - c2 lies in the integer column span of the Laplacian.
  bool equivalent(const Configuration& c1, const Configuration& c2) const;
  /// Firing vector x with c1 - c2 == L x, if any.
  std::optional<IntegerVector> firing_witness(const Configuration& c1, const Configuration& c2) const;

 private:
  void check(const Configuration& c) const;

  SimplicialComplex complex_;
  int dim_;
  IntegerMatrix boundary_;
  IntegerMatrix laplacian_;
  mutable std::optional<SmithForm> laplacian_snf_;
};

// Canonical coordinates on K_i for a fixed torsion-free tree: a configuration
// maps to U * c_Theta reduced modulo the invariant factors of the reduced
// Laplacian, where U is its left Smith transform. Conservative configurations
// map to the same element exactly when they are equivalent. The coordinates
// depend on the tree and the pivoting rule; equivalence does not.
class CriticalCoordinates {
 public:
  CriticalCoordinates(const FlowModel& model, const SpanningTree& tree);

  const std::vector<std::size_t>& theta() const { return theta_; }
  const std::vector<Integer>& moduli() const { return moduli_; }
  const SpanningTree& tree() const { return tree_; }

  /// Accepts either a full configuration or its restriction to Theta.
  GroupElement to_group_element(std::span<const Integer> values) const;
  GroupElement to_group_element(const Configuration& c) const { return to_group_element(c.values); }
  GroupElement identity() const;
  /// Unit vector coordinates: the class of the configuration e_j (j-th Theta face).
  GroupElement generator(std::size_t theta_position) const;

 private:
  SpanningTree tree_;
  std::size_t full_size_;
  std::vector<std::size_t> theta_;
  SmithForm snf_;
  std::vector<Integer> moduli_;
};

}  // namespace critgroup
