#include "critgroup/generators.hpp"

#include <string>

#include "critgroup/errors.hpp"

namespace critgroup::gen {

namespace {

void k_subsets(int n, int k, int start, std::vector<Vertex>& cur,
               std::vector<std::vector<Vertex>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int v = start; v <= n; ++v) {
    cur.push_back(static_cast<Vertex>(v));
    k_subsets(n, k, v + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

SimplicialComplex bipyramid() {
  return SimplicialComplex::from_facets(std::vector<std::vector<Vertex>>{
      {1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}, {2, 3, 4}, {2, 3, 5}});
}

SimplicialComplex cycle(int n) {
  if (n < 3) throw InputError("cycle: need n >= 3, got " + std::to_string(n));
  std::vector<std::vector<Vertex>> facets;
  for (int v = 1; v <= n; ++v)
    facets.push_back({static_cast<Vertex>(v), static_cast<Vertex>(v % n + 1)});
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex complete_graph(int n) {
  if (n < 2) throw InputError("complete: need n >= 2, got " + std::to_string(n));
  return simplex_skeleton(n, 1);
}

SimplicialComplex simplex_skeleton(int n, int k) {
  if (n < 1 || k < 0 || k > n - 1)
    throw InputError("simplex-skeleton: need n >= 1 and 0 <= k <= n-1, got n=" +
                     std::to_string(n) + " k=" + std::to_string(k));
  std::vector<std::vector<Vertex>> facets;
  std::vector<Vertex> cur;
  k_subsets(n, k + 1, 1, cur, facets);
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex sphere(int d) {
  if (d < 0) throw InputError("sphere: need d >= 0, got " + std::to_string(d));
  return simplex_skeleton(d + 2, d);
}

SimplicialComplex projective_plane() {
  return SimplicialComplex::from_facets(std::vector<std::vector<Vertex>>{
      {1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
      {2, 3, 5}, {3, 4, 6}, {2, 4, 5}, {3, 5, 6}, {2, 4, 6}});
}

}  // namespace critgroup::gen
