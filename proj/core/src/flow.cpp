#include "critgroup/flow.hpp"

#include "critgroup/errors.hpp"

namespace critgroup {

namespace {

Integer reduce(const Integer& x, const Integer& modulus) {
  if (sgn(modulus) == 0) return x;
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

SpanningTree checked_torsion_free(const SimplicialComplex& complex, int i, const SpanningTree& tree) {
  if (tree.dimension != i) throw NotATree("tree dimension does not match the flow dimension");
  auto checked = is_spanning_tree(complex, i, tree.faces);
  if (!checked) throw NotATree("faces do not form a spanning tree");
  if (!checked->is_torsion_free())
    throw TreeHasTorsion("spanning tree has codimension-one torsion of order " +
                         checked->torsion_order.get_str());
  return *checked;
}

}  // namespace

GroupElement::GroupElement(std::vector<Integer> residues, std::vector<Integer> moduli)
    : residues_(std::move(residues)), moduli_(std::move(moduli)) {
  if (residues_.size() != moduli_.size()) throw InputError("GroupElement: residue/modulus count mismatch");
  for (std::size_t j = 0; j < residues_.size(); ++j) residues_[j] = reduce(residues_[j], moduli_[j]);
}

bool GroupElement::is_identity() const { return is_zero(residues_); }

GroupElement GroupElement::operator+(const GroupElement& other) const {
  if (moduli_ != other.moduli_) throw InputError("GroupElement: adding elements of different groups");
  return GroupElement(add(residues_, other.residues_), moduli_);
}

GroupElement GroupElement::operator-() const {
  std::vector<Integer> neg(residues_.size());
  for (std::size_t j = 0; j < neg.size(); ++j) neg[j] = -residues_[j];
  return GroupElement(std::move(neg), moduli_);
}

FlowModel::FlowModel(SimplicialComplex complex, int i)
    : complex_(std::move(complex)), dim_(i) {
  if (i < 0 || i > complex_.dimension())
    throw DimensionError("flow dimension " + std::to_string(i) + " outside [0, " +
                         std::to_string(complex_.dimension()) + "]");
  boundary_ = complex_.boundary_matrix(i);
  laplacian_ = critgroup::laplacian(complex_, i);
}

Configuration FlowModel::zero() const { return Configuration{dim_, IntegerVector(size())}; }

Configuration FlowModel::make(IntegerVector values) const {
  Configuration c{dim_, std::move(values)};
  check(c);
  return c;
}

void FlowModel::check(const Configuration& c) const {
  if (c.dimension != dim_ || c.values.size() != size())
    throw InputError("configuration does not match the flow model (expected " +
                     std::to_string(size()) + " entries in dimension " + std::to_string(dim_) + ")");
}

Configuration FlowModel::fire(const Configuration& c, const Simplex& face) const {
  const auto idx = complex_.index_of(face);
  if (!idx || face.dimension() != dim_) throw InputError("unknown face " + face.to_string());
  return fire(c, *idx);
}

Configuration FlowModel::fire(const Configuration& c, std::size_t face_index) const {
  check(c);
  if (face_index >= size()) throw InputError("face index out of range");
  Configuration out = c;
  for (std::size_t r = 0; r < size(); ++r) out.values[r] -= laplacian_(r, face_index);
  return out;
}

bool FlowModel::is_conservative(const Configuration& c) const {
  check(c);
  return is_zero(boundary_ * c.values);
}

Configuration FlowModel::extend_to_conservative(const SpanningTree& tree,
                                                std::span<const Integer> theta) const {
  const SpanningTree checked = checked_torsion_free(complex_, dim_, tree);
  const std::vector<std::size_t> theta_idx = checked.complement(complex_);
  if (theta.size() != theta_idx.size())
    throw InputError("extend_to_conservative: expected " + std::to_string(theta_idx.size()) +
                     " values on the non-tree faces");
  const IntegerVector theta_vec(theta.begin(), theta.end());
  IntegerVector rhs = boundary_.select_columns(theta_idx) * theta_vec;
  for (auto& x : rhs) x = -x;
  const auto tree_part = lattice_membership(boundary_.select_columns(checked.faces), rhs);
  if (!tree_part) throw std::logic_error("extend_to_conservative: no integral tree flow");
  Configuration out = zero();
  for (std::size_t j = 0; j < theta_idx.size(); ++j) out.values[theta_idx[j]] = theta_vec[j];
  for (std::size_t j = 0; j < checked.faces.size(); ++j) out.values[checked.faces[j]] = (*tree_part)[j];
  return out;
}

std::optional<IntegerVector> FlowModel::firing_witness(const Configuration& c1,
                                                       const Configuration& c2) const {
  check(c1);
  check(c2);
  if (!laplacian_snf_) laplacian_snf_ = smith_normal_form(laplacian_);
  return lattice_membership(*laplacian_snf_, subtract(c1.values, c2.values));
}

bool FlowModel::equivalent(const Configuration& c1, const Configuration& c2) const {
  return firing_witness(c1, c2).has_value();
}

CriticalCoordinates::CriticalCoordinates(const FlowModel& model, const SpanningTree& tree)
    : tree_(checked_torsion_free(model.complex(), model.dimension(), tree)),
      full_size_(model.size()),
      theta_(tree_.complement(model.complex())),
      snf_(smith_normal_form(model.laplacian().submatrix(theta_, theta_))) {
  for (std::size_t j = 0; j < theta_.size(); ++j)
    moduli_.push_back(j < snf_.rank ? snf_.factors[j] : Integer(0));
}

GroupElement CriticalCoordinates::to_group_element(std::span<const Integer> values) const {
  IntegerVector restricted;
  if (values.size() == theta_.size()) {
    restricted.assign(values.begin(), values.end());
  } else if (values.size() == full_size_) {
    for (auto idx : theta_) restricted.push_back(values[idx]);
  } else {
    throw InputError("to_group_element: expected " + std::to_string(theta_.size()) + " or " +
                     std::to_string(full_size_) + " values");
  }
  return GroupElement(snf_.left * restricted, moduli_);
}

GroupElement CriticalCoordinates::identity() const {
  return GroupElement(std::vector<Integer>(moduli_.size()), moduli_);
}

GroupElement CriticalCoordinates::generator(std::size_t theta_position) const {
  IntegerVector e(theta_.size());
  e.at(theta_position) = 1;
  return to_group_element(e);
}

}  // namespace critgroup
