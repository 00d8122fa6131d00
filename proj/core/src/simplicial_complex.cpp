#include "critgroup/simplicial_complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "critgroup/errors.hpp"

namespace critgroup {

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  for (std::size_t j = 0; j < vertices_.size(); ++j) {
    if (vertices_[j] == 0) throw InputError("vertex labels must be positive");
    if (j > 0 && vertices_[j - 1] >= vertices_[j])
      throw InputError("simplex vertices must be strictly increasing");
  }
}

Simplex Simplex::from_unsorted(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw InputError("repeated vertex in a face");
  return Simplex(std::move(vertices));
}

bool Simplex::contains(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_subset_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                       vertices_.end());
}

Simplex Simplex::without(std::size_t j) const {
  Simplex out;
  out.vertices_.reserve(vertices_.size() - 1);
  for (std::size_t p = 0; p < vertices_.size(); ++p)
    if (p != j) out.vertices_.push_back(vertices_[p]);
  return out;
}

Simplex Simplex::with(Vertex v) const {
  std::vector<Vertex> vs = vertices_;
  vs.push_back(v);
  return from_unsorted(std::move(vs));
}

std::string Simplex::to_string() const {
  if (vertices_.empty()) return "{}";
  const bool compact = std::all_of(vertices_.begin(), vertices_.end(), [](Vertex v) { return v < 10; });
  std::string out;
  for (std::size_t j = 0; j < vertices_.size(); ++j) {
    if (!compact && j > 0) out += ' ';
    out += std::to_string(vertices_[j]);
  }
  return out;
}

SimplicialComplex::SimplicialComplex(std::vector<std::vector<Simplex>> faces)
    : faces_(std::move(faces)) {}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<Vertex>>& facets) {
  std::vector<Simplex> simplices;
  simplices.reserve(facets.size());
  for (const auto& f : facets) {
    if (f.empty()) throw InputError("empty facet");
    simplices.push_back(Simplex::from_unsorted(f));
  }
  return from_facets(simplices);
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<Simplex>& facets) {
  if (facets.empty()) throw InputError("facet list is empty");
  std::size_t top = 0;
  for (const auto& f : facets) {
    if (f.size() == 0) throw InputError("empty facet");
    top = std::max(top, f.size());
  }
  std::vector<std::set<Simplex>> by_size(top + 1);
  by_size[0].insert(Simplex{});
  for (const auto& f : facets) {
    if (!by_size[f.size()].insert(f).second) continue;
    // Enumerate every nonempty proper subset through bitmasks; facets in this
    // library are small (dimension well below 30).
    const std::size_t n = f.size();
    if (n >= 31) throw InputError("facet dimension too large");
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
      std::vector<Vertex> vs;
      for (std::size_t p = 0; p < n; ++p)
        if (mask & (1u << p)) vs.push_back(f.vertices()[p]);
      by_size[vs.size()].insert(Simplex(std::move(vs)));
    }
  }
  std::vector<std::vector<Simplex>> faces(top + 1);
  for (std::size_t s = 0; s <= top; ++s) faces[s].assign(by_size[s].begin(), by_size[s].end());
  return SimplicialComplex(std::move(faces));
}

void SimplicialComplex::check_dimension(int i, int lo, int hi, const char* what) const {
  if (i < lo || i > hi) {
    std::ostringstream os;
    os << what << ": dimension " << i << " outside [" << lo << ", " << hi << "]";
    throw DimensionError(os.str());
  }
}

std::size_t SimplicialComplex::face_count(int i) const {
  if (i < -1 || i > dimension()) return 0;
  return faces_[static_cast<std::size_t>(i + 1)].size();
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (const auto& level : faces_) f.push_back(level.size());
  return f;
}

const std::vector<Simplex>& SimplicialComplex::faces(int i) const {
  check_dimension(i, -1, dimension(), "faces");
  return faces_[static_cast<std::size_t>(i + 1)];
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& face) const {
  const int i = face.dimension();
  if (i > dimension()) return std::nullopt;
  const auto& level = faces_[static_cast<std::size_t>(i + 1)];
  auto it = std::lower_bound(level.begin(), level.end(), face);
  if (it == level.end() || *it != face) return std::nullopt;
  return static_cast<std::size_t>(it - level.begin());
}

std::vector<Vertex> SimplicialComplex::vertices() const {
  std::vector<Vertex> out;
  if (dimension() < 0) return out;
  for (const auto& s : faces(0)) out.push_back(s.vertices().front());
  return out;
}

std::vector<Simplex> SimplicialComplex::facets() const {
  std::vector<Simplex> out;
  for (int i = 0; i <= dimension(); ++i) {
    for (const auto& s : faces(i)) {
      bool maximal = true;
      if (i < dimension()) {
        for (const auto& t : faces(i + 1))
          if (s.is_subset_of(t)) {
            maximal = false;
            break;
          }
      }
      if (maximal) out.push_back(s);
    }
  }
  return out;
}

bool SimplicialComplex::is_pure() const {
  const auto fs = facets();
  return std::all_of(fs.begin(), fs.end(), [&](const Simplex& s) { return s.dimension() == dimension(); });
}

SimplicialComplex SimplicialComplex::skeleton(int i) const {
  check_dimension(i, -1, dimension(), "skeleton");
  std::vector<std::vector<Simplex>> faces(faces_.begin(), faces_.begin() + i + 2);
  return SimplicialComplex(std::move(faces));
}

IntegerMatrix SimplicialComplex::boundary_matrix(int i) const {
  check_dimension(i, -1, dimension(), "boundary_matrix");
  if (i == -1) return IntegerMatrix(0, face_count(-1));
  const auto& cols = faces(i);
  IntegerMatrix m(face_count(i - 1), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Simplex& s = cols[c];
    for (std::size_t p = 0; p < s.size(); ++p) {
      const auto r = index_of(s.without(p));
      m(*r, c) = (p % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

IntegerMatrix SimplicialComplex::coboundary_matrix(int i) const {
  return boundary_matrix(i).transpose();
}

HomologyGroup SimplicialComplex::reduced_homology(int i) const {
  check_dimension(i, -1, dimension(), "reduced_homology");
  const std::size_t nullity = face_count(i) - rank(boundary_matrix(i));
  std::vector<Integer> upper;
  if (i < dimension()) upper = invariant_factors(boundary_matrix(i + 1));
  HomologyGroup h;
  h.free_rank = nullity - upper.size();
  for (auto& f : upper)
    if (f != 1) h.torsion.push_back(f);
  return h;
}

std::size_t SimplicialComplex::betti(int i) const {
  check_dimension(i, -1, dimension(), "betti");
  const std::size_t upper = i < dimension() ? rank(boundary_matrix(i + 1)) : 0;
  return face_count(i) - rank(boundary_matrix(i)) - upper;
}

bool SimplicialComplex::is_apc() const {
  for (int i = -1; i < dimension(); ++i)
    if (betti(i) != 0) return false;
  return true;
}

}  // namespace critgroup
