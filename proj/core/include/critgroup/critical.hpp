#pragma once

#include <string>
#include <vector>

#include "critgroup/exact_linalg.hpp"
#include "critgroup/simplicial_complex.hpp"
#include "critgroup/spanning_trees.hpp"

namespace critgroup {

enum class LaplacianKind { up_down, down_up, total };

// K_i as Z^free_rank + (+)_j Z/invariant_factors[j]; `order` is the order of
// the finite part.
struct CriticalGroup {
  int dimension = 0;
  std::vector<Integer> invariant_factors;
  std::size_t free_rank = 0;
  Integer order = 1;

  bool is_finite() const { return free_rank == 0; }
  bool is_cyclic() const { return free_rank == 0 && invariant_factors.size() <= 1; }
  std::string to_string() const;

  friend bool operator==(const CriticalGroup&, const CriticalGroup&) = default;
};

CriticalGroup to_critical_group(int dimension, const CokernelStructure& c);

/// up_down = d_{i+1} d_{i+1}^T, down_up = d_i^T d_i, total = their sum; for 0 <= i <= d.
IntegerMatrix laplacian(const SimplicialComplex& complex, int i,
                        LaplacianKind kind = LaplacianKind::up_down);

/// Up-down Laplacian restricted to the i-faces outside `tree`. Throws NotATree
/// when `tree` fails the spanning tree conditions.
IntegerMatrix reduced_laplacian(const SimplicialComplex& complex, int i, const SpanningTree& tree);

/// K_i as the cokernel of the reduced Laplacian. Requires a torsion-free
/// i-tree (TreeHasTorsion otherwise) and 0 <= i < d.
CriticalGroup critical_group_reduced(const SimplicialComplex& complex, int i,
                                     const SpanningTree& tree);

/// K_i = ker d_i / im L straight from the definition: the up-down Laplacian's
/// columns are rewritten in a Z-basis of ker d_i and the resulting
/// coefficient matrix's cokernel is returned. No tree needed; 0 <= i < d.
CriticalGroup critical_group_direct(const SimplicialComplex& complex, int i);

/// Product of nonzero eigenvalues of d_j d_j^T (the up-down Laplacian in
/// dimension j - 1); for j = 0 that matrix is [f_0]. 0 <= j <= d.
Integer pi_product(const SimplicialComplex& complex, int j);

/// prod_{j=0}^{i+1} pi_j^{(-1)^{i+1-j}}. When H_{i-1}(complex; Z) = 0 and a
/// torsion-free i-tree exists this is a positive integer equal to |K_i|.
/// 0 <= i < d.
Rational alternating_order(const SimplicialComplex& complex, int i);

/// Square matrix on the simplex [n]: the boundary d_k with rows of
/// (k-1)-faces containing vertex 1 removed, stacked over minus the
/// coboundary d*_{k+1} with rows of (k+1)-faces not containing vertex 1
/// removed. Columns are the k-faces. 1 <= k <= n - 2.
IntegerMatrix maxwell_matrix(int n, int k);

struct SimplexStructureReport {
  int n = 0;
  int k = 0;
  CokernelStructure coker_a;
  CokernelStructure coker_aat;
  CriticalGroup k_lower;  // K_{k-1}
  CriticalGroup k_upper;  // K_k, computed on the (k+1)-skeleton
  /// A*A^T equals diag(reduced up-down L_{k-1}, reduced down-up L_{k+1}).
  bool aat_block_diagonal = false;
  /// Invariant factors of coker(A A^T) equal those of K_{k-1} (+) K_k.
  bool aat_matches_adjacent_sum = false;
  /// Invariant factors of coker(A A^T) equal those of coker A (+) coker A.
  bool aat_matches_doubled_coker = false;
  /// coker A is isomorphic to K_{k-1}.
  bool coker_a_matches_lower = false;
  bool coker_a_matches_upper = false;
  /// Every nontrivial invariant factor of K_{k-1} and K_k equals n.
  bool all_factors_n = false;
  /// Number of Z/n summands in K_{k-1}, K_k compared with binom(n-2, k).
  std::size_t binom_n2_k = 0;
  std::size_t lower_copies = 0;
  std::size_t upper_copies = 0;

  /// The literal claim: adjacent sum matches and every K is a sum of Z/n.
  bool passed() const { return aat_matches_adjacent_sum && all_factors_n; }
};

SimplexStructureReport verify_simplex_structure(int n, int k);

/// Invariant factors of a direct sum, normalized to divisibility order.
std::vector<Integer> direct_sum_factors(const std::vector<Integer>& a, const std::vector<Integer>& b);

}  // namespace critgroup
