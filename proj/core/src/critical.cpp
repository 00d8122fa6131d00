#include "critgroup/critical.hpp"

#include <algorithm>
#include <sstream>

#include "critgroup/errors.hpp"
#include "critgroup/generators.hpp"

namespace critgroup {

namespace {

void check_critical_dimension(const SimplicialComplex& complex, int i, const char* what) {
  if (i < 0 || i >= complex.dimension()) {
    std::ostringstream os;
    os << what << ": dimension " << i << " outside [0, " << complex.dimension() - 1 << "]";
    throw DimensionError(os.str());
  }
}

SpanningTree validated_tree(const SimplicialComplex& complex, int i, const SpanningTree& tree) {
  if (tree.dimension != i)
    throw NotATree("tree has dimension " + std::to_string(tree.dimension) + ", expected " +
                   std::to_string(i));
  auto checked = is_spanning_tree(complex, i, tree.faces);
  if (!checked) throw NotATree("faces do not form an " + std::to_string(i) + "-dimensional spanning tree");
  return *checked;
}

std::size_t count_factor(const std::vector<Integer>& factors, const Integer& n) {
  return static_cast<std::size_t>(std::count(factors.begin(), factors.end(), n));
}

std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int j = 1; j <= k; ++j) r = r * static_cast<std::size_t>(n - k + j) / static_cast<std::size_t>(j);
  return r;
}

}  // namespace

std::string CriticalGroup::to_string() const {
  CokernelStructure c{free_rank, invariant_factors};
  return c.to_string();
}

CriticalGroup to_critical_group(int dimension, const CokernelStructure& c) {
  CriticalGroup g;
  g.dimension = dimension;
  g.invariant_factors = c.torsion;
  g.free_rank = c.free_rank;
  g.order = c.torsion_order();
  return g;
}

IntegerMatrix laplacian(const SimplicialComplex& complex, int i, LaplacianKind kind) {
  if (i < 0 || i > complex.dimension())
    throw DimensionError("laplacian: dimension " + std::to_string(i) + " outside [0, " +
                         std::to_string(complex.dimension()) + "]");
  const std::size_t n = complex.face_count(i);
  IntegerMatrix up(n, n);
  if (kind != LaplacianKind::down_up && i < complex.dimension()) {
    const IntegerMatrix b = complex.boundary_matrix(i + 1);
    up = b * b.transpose();
  }
  if (kind == LaplacianKind::up_down) return up;
  const IntegerMatrix b = complex.boundary_matrix(i);
  IntegerMatrix down = b.transpose() * b;
  return kind == LaplacianKind::down_up ? down : up + down;
}

IntegerMatrix reduced_laplacian(const SimplicialComplex& complex, int i, const SpanningTree& tree) {
  const SpanningTree checked = validated_tree(complex, i, tree);
  const std::vector<std::size_t> theta = checked.complement(complex);
  return laplacian(complex, i).submatrix(theta, theta);
}

CriticalGroup critical_group_reduced(const SimplicialComplex& complex, int i,
                                     const SpanningTree& tree) {
  check_critical_dimension(complex, i, "critical_group_reduced");
  const SpanningTree checked = validated_tree(complex, i, tree);
  if (!checked.is_torsion_free())
    throw TreeHasTorsion("spanning tree has codimension-one torsion of order " +
                         checked.torsion_order.get_str());
  const std::vector<std::size_t> theta = checked.complement(complex);
  return to_critical_group(i, cokernel(laplacian(complex, i).submatrix(theta, theta)));
}

CriticalGroup critical_group_direct(const SimplicialComplex& complex, int i) {
  check_critical_dimension(complex, i, "critical_group_direct");
  const IntegerMatrix boundary = complex.boundary_matrix(i);
  const SmithForm snf = smith_normal_form(boundary);
  // Columns rank..n-1 of snf.right span ker d_i, so the coordinates of any
  // kernel vector x in that basis are the trailing entries of right^{-1} x.
  const IntegerMatrix coords = snf.right_inverse * laplacian(complex, i);
  std::vector<std::size_t> kernel_rows;
  for (std::size_t r = 0; r < coords.rows(); ++r) {
    if (r < snf.rank) {
      for (std::size_t c = 0; c < coords.cols(); ++c)
        if (sgn(coords(r, c)) != 0) throw std::logic_error("Laplacian column outside ker d_i");
    } else {
      kernel_rows.push_back(r);
    }
  }
  return to_critical_group(i, cokernel(coords.select_rows(kernel_rows)));
}

Integer pi_product(const SimplicialComplex& complex, int j) {
  if (j < 0 || j > complex.dimension())
    throw DimensionError("pi_product: index " + std::to_string(j) + " outside [0, " +
                         std::to_string(complex.dimension()) + "]");
  const IntegerMatrix b = complex.boundary_matrix(j);
  return pseudo_determinant(b * b.transpose());
}

Rational alternating_order(const SimplicialComplex& complex, int i) {
  check_critical_dimension(complex, i, "alternating_order");
  Rational out = 1;
  for (int j = 0; j <= i + 1; ++j) {
    const Rational pi(pi_product(complex, j));
    if ((i + 1 - j) % 2 == 0)
      out *= pi;
    else
      out /= pi;
  }
  out.canonicalize();
  return out;
}

IntegerMatrix maxwell_matrix(int n, int k) {
  if (n < 3 || k < 1 || k > n - 2)
    throw InputError("maxwell_matrix: need 1 <= k <= n-2, got n=" + std::to_string(n) +
                     " k=" + std::to_string(k));
  const SimplicialComplex simplex = gen::simplex_skeleton(n, k + 1);
  std::vector<std::size_t> lower_rows, upper_rows;
  const auto& lower = simplex.faces(k - 1);
  for (std::size_t r = 0; r < lower.size(); ++r)
    if (!lower[r].contains(1)) lower_rows.push_back(r);
  const auto& upper = simplex.faces(k + 1);
  for (std::size_t r = 0; r < upper.size(); ++r)
    if (upper[r].contains(1)) upper_rows.push_back(r);
  const IntegerMatrix top = simplex.boundary_matrix(k).select_rows(lower_rows);
  const IntegerMatrix bottom = simplex.coboundary_matrix(k + 1).select_rows(upper_rows);
  return IntegerMatrix::vstack(top, -bottom);
}

std::vector<Integer> direct_sum_factors(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  std::vector<Integer> all(a);
  all.insert(all.end(), b.begin(), b.end());
  std::vector<Integer> out;
  for (auto& f : invariant_factors(IntegerMatrix::diagonal(all, all.size(), all.size())))
    if (f != 1) out.push_back(f);
  return out;
}

SimplexStructureReport verify_simplex_structure(int n, int k) {
  SimplexStructureReport rep;
  rep.n = n;
  rep.k = k;
  const IntegerMatrix a = maxwell_matrix(n, k);
  const IntegerMatrix aat = a * a.transpose();
  rep.coker_a = cokernel(a);
  rep.coker_aat = cokernel(aat);

  const SimplicialComplex simplex = gen::simplex_skeleton(n, k + 1);
  rep.k_lower = critical_group_direct(simplex, k - 1);
  rep.k_upper = critical_group_direct(simplex, k);

  std::vector<std::size_t> lower_rows, upper_rows;
  const auto& lower = simplex.faces(k - 1);
  for (std::size_t r = 0; r < lower.size(); ++r)
    if (!lower[r].contains(1)) lower_rows.push_back(r);
  const auto& upper = simplex.faces(k + 1);
  for (std::size_t r = 0; r < upper.size(); ++r)
    if (upper[r].contains(1)) upper_rows.push_back(r);
  const IntegerMatrix ud = laplacian(simplex, k - 1, LaplacianKind::up_down).submatrix(lower_rows, lower_rows);
  const IntegerMatrix du = laplacian(simplex, k + 1, LaplacianKind::down_up).submatrix(upper_rows, upper_rows);
  IntegerMatrix blocks(aat.rows(), aat.cols());
  for (std::size_t r = 0; r < ud.rows(); ++r)
    for (std::size_t c = 0; c < ud.cols(); ++c) blocks(r, c) = ud(r, c);
  for (std::size_t r = 0; r < du.rows(); ++r)
    for (std::size_t c = 0; c < du.cols(); ++c) blocks(ud.rows() + r, ud.cols() + c) = du(r, c);
  rep.aat_block_diagonal = blocks == aat;

  const bool finite = rep.coker_aat.free_rank == 0 && rep.k_lower.is_finite() && rep.k_upper.is_finite();
  rep.aat_matches_adjacent_sum =
      finite && rep.coker_aat.torsion ==
                    direct_sum_factors(rep.k_lower.invariant_factors, rep.k_upper.invariant_factors);
  rep.aat_matches_doubled_coker =
      finite && rep.coker_a.free_rank == 0 &&
      rep.coker_aat.torsion == direct_sum_factors(rep.coker_a.torsion, rep.coker_a.torsion);
  rep.coker_a_matches_lower =
      rep.coker_a.free_rank == rep.k_lower.free_rank && rep.coker_a.torsion == rep.k_lower.invariant_factors;
  rep.coker_a_matches_upper =
      rep.coker_a.free_rank == rep.k_upper.free_rank && rep.coker_a.torsion == rep.k_upper.invariant_factors;

  const Integer nn = n;
  auto only_n = [&](const CriticalGroup& g) {
    return g.is_finite() &&
           std::all_of(g.invariant_factors.begin(), g.invariant_factors.end(),
                       [&](const Integer& f) { return f == nn; });
  };
  rep.all_factors_n = only_n(rep.k_lower) && only_n(rep.k_upper);
  rep.binom_n2_k = binomial(n - 2, k);
  rep.lower_copies = count_factor(rep.k_lower.invariant_factors, nn);
  rep.upper_copies = count_factor(rep.k_upper.invariant_factors, nn);
  return rep;
}

}  // namespace critgroup
