#pragma once

#include <optional>
#include <string>
#include <vector>

#include "critgroup/integer_matrix.hpp"

namespace critgroup {

// Smith normal form with unimodular transforms: left * A * right is the
// rows x cols matrix with factors[0..rank) on the diagonal and zeros elsewhere.
// right_inverse == right^{-1}.
struct SmithForm {
  std::vector<Integer> factors;
  std::size_t rank = 0;
  IntegerMatrix left;
  IntegerMatrix right;
  IntegerMatrix right_inverse;

  IntegerMatrix diagonal(std::size_t rows, std::size_t cols) const {
    return IntegerMatrix::diagonal(factors, rows, cols);
  }
};

// Finitely generated abelian group Z^free_rank + (+)_j Z/torsion[j].
struct CokernelStructure {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  Integer torsion_order() const;
  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  std::string to_string() const;

  friend bool operator==(const CokernelStructure&, const CokernelStructure&) = default;
};

/// Pivot is the nonzero entry of least absolute value, ties broken by lowest
/// (row, col), so the output is a deterministic function of the input.
SmithForm smith_normal_form(const IntegerMatrix& a);

/// Same diagonal as smith_normal_form, without accumulating transforms.
std::vector<Integer> invariant_factors(const IntegerMatrix& a);

CokernelStructure cokernel(const IntegerMatrix& a);
CokernelStructure cokernel_from_factors(std::size_t rows, const std::vector<Integer>& factors);

/// Some integer x with a * x == v, or nullopt when v lies outside the integer
/// column span of a.
std::optional<IntegerVector> lattice_membership(const IntegerMatrix& a, const IntegerVector& v);
std::optional<IntegerVector> lattice_membership(const SmithForm& snf, const IntegerVector& v);

/// Columns form a Z-basis of ker a (saturated, so every integer kernel vector
/// is an integer combination of them).
IntegerMatrix kernel_basis(const IntegerMatrix& a);

std::size_t rank(const IntegerMatrix& a);

/// Fraction-free Bareiss elimination.
Integer determinant(const IntegerMatrix& a);

/// Coefficients of det(xI - a), lowest degree first; result has size n + 1
/// with a leading (last) coefficient of 1.
std::vector<Integer> char_poly(const IntegerMatrix& a);

/// Product of the nonzero eigenvalues of a symmetric positive semidefinite
/// matrix; 1 for the zero matrix. Symmetry is checked, semidefiniteness is
/// assumed.
Integer pseudo_determinant(const IntegerMatrix& a);

}  // namespace critgroup
