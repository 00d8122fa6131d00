#pragma once

#include <string>
#include <vector>

#include "critgroup/critical.hpp"
#include "critgroup/spanning_trees.hpp"

namespace critgroup {

// Both simplicial matrix-tree identities in dimension i, evaluated exactly:
//   pi_i * |H_{i-2}(D)|^2 == tau_i * tau_{i-1}
//   tau_i * |H_{i-2}(T)|^2 == |H_{i-2}(D)|^2 * det(reduced L_{i-1})
// where T is an (i-1)-dimensional spanning tree and the reduced Laplacian
// drops T's faces.
struct SmttReport {
  int dimension = 0;
  Integer pi;
  Integer tau;        // tau_i
  Integer tau_lower;  // tau_{i-1}
  Integer homology_order = 1;  // |H_{i-2}(D; Z)|
  SpanningTree lower_tree;     // the (i-1)-tree used in the determinant formula
  Integer reduced_determinant;
  bool product_formula_holds = false;
  bool determinant_formula_holds = false;
  bool partial = false;
  std::vector<std::string> warnings;

  bool passed() const { return !partial && product_formula_holds && determinant_formula_holds; }
};

/// 1 <= i <= d. Throws HypothesisError when tau_{i-1} = 0. When the budget
/// runs out only the tau fields are filled and `partial` is set.
SmttReport verify_smtt(const SimplicialComplex& complex, int i, const EnumerationOptions& options = {});

}  // namespace critgroup
