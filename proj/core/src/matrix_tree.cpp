#include "critgroup/matrix_tree.hpp"

#include "critgroup/errors.hpp"

namespace critgroup {

SmttReport verify_smtt(const SimplicialComplex& complex, int i, const EnumerationOptions& options) {
  if (i < 1 || i > complex.dimension())
    throw DimensionError("verify_smtt: dimension " + std::to_string(i) + " outside [1, " +
                         std::to_string(complex.dimension()) + "]");
  EnumerationOptions counting = options;
  counting.on_tree = nullptr;
  counting.keep_going = nullptr;

  SmttReport rep;
  rep.dimension = i;
  const TreeCensus upper = enumerate_trees(complex, i, counting);
  const TreeCensus lower = enumerate_trees(complex, i - 1, counting);
  rep.tau = upper.tau;
  rep.tau_lower = lower.tau;
  rep.partial = upper.partial || lower.partial;
  rep.warnings = upper.warnings;
  rep.warnings.insert(rep.warnings.end(), lower.warnings.begin(), lower.warnings.end());
  if (rep.partial) return rep;
  if (sgn(rep.tau_lower) == 0)
    throw HypothesisError("tau_" + std::to_string(i - 1) + " is zero; the identities are undefined");

  const HomologyGroup h = complex.reduced_homology(i - 2);
  if (h.free_rank != 0) throw HypothesisError("H_{i-2} is infinite");
  rep.homology_order = h.torsion_order();
  rep.pi = pi_product(complex, i);

  auto tree = find_torsion_free_tree(complex, i - 1);
  if (!tree) {
    EnumerationOptions first;
    first.keep_going = [&](const SpanningTree& t) {
      tree = t;
      return false;
    };
    enumerate_trees(complex, i - 1, first);
  }
  rep.lower_tree = *tree;
  rep.reduced_determinant = determinant(reduced_laplacian(complex, i - 1, *tree));

  const Integer h2 = rep.homology_order * rep.homology_order;
  const Integer t2 = tree->torsion_order * tree->torsion_order;
  rep.product_formula_holds = rep.pi * h2 == rep.tau * rep.tau_lower;
  rep.determinant_formula_holds = rep.tau * t2 == h2 * rep.reduced_determinant;
  return rep;
}

}  // namespace critgroup
