#include <gtest/gtest.h>

#include <sstream>

#include "critgroup/errors.hpp"
#include "critgroup/facet_io.hpp"
#include "critgroup/generators.hpp"
#include "critgroup/simplicial_complex.hpp"
#include "support/oracles.hpp"

using namespace critgroup;

namespace {

std::vector<SimplicialComplex> fixtures() {
  return {gen::bipyramid(),          gen::cycle(5),       gen::complete_graph(5), gen::sphere(1),
          gen::sphere(2),            gen::sphere(3),      gen::simplex_skeleton(6, 2),
          gen::simplex_skeleton(5, 3), gen::projective_plane()};
}

}  // namespace

TEST(Simplex, Basics) {
  const Simplex s({1, 3, 7});
  EXPECT_EQ(s.dimension(), 2);
  EXPECT_EQ(s.without(1), Simplex({1, 7}));
  EXPECT_EQ(s.to_string(), "137");
  EXPECT_EQ(Simplex({2, 13}).to_string(), "2 13");
  EXPECT_EQ(Simplex().to_string(), "{}");
  EXPECT_EQ(Simplex().dimension(), -1);
  EXPECT_TRUE(Simplex({1, 3}).is_subset_of(s));
  EXPECT_THROW(Simplex({3, 1}), InputError);
  EXPECT_THROW(Simplex::from_unsorted({1, 1}), InputError);
  EXPECT_THROW(Simplex({0, 1}), InputError);
  EXPECT_EQ(Simplex::from_unsorted({5, 2}), Simplex({2, 5}));
}

TEST(Complex, BipyramidFaces) {
  const SimplicialComplex b = gen::bipyramid();
  EXPECT_EQ(b.dimension(), 2);
  EXPECT_EQ(b.f_vector(), (std::vector<std::size_t>{1, 5, 9, 7}));
  EXPECT_TRUE(b.is_pure());
  EXPECT_TRUE(b.contains(Simplex({2, 3})));
  EXPECT_FALSE(b.contains(Simplex({4, 5})));
  std::vector<std::string> edges;
  for (const auto& e : b.faces(1)) edges.push_back(e.to_string());
  EXPECT_EQ(edges, (std::vector<std::string>{"12", "13", "14", "15", "23", "24", "25", "34", "35"}));
  EXPECT_EQ(b.facets().size(), 7u);
}

TEST(Complex, Closure) {
  const auto c = SimplicialComplex::from_facets(std::vector<std::vector<Vertex>>{{1, 2, 3}, {3, 4}, {5}});
  EXPECT_EQ(c.f_vector(), (std::vector<std::size_t>{1, 5, 4, 1}));
  EXPECT_FALSE(c.is_pure());
  EXPECT_EQ(c.facets().size(), 3u);
  EXPECT_THROW(SimplicialComplex::from_facets(std::vector<std::vector<Vertex>>{}), InputError);
  EXPECT_THROW(SimplicialComplex::from_facets(std::vector<std::vector<Vertex>>{{1, 1}}), InputError);
}

TEST(Complex, BoundaryOrientation) {
  const auto tri = SimplicialComplex::from_facets(std::vector<std::vector<Vertex>>{{1, 2, 3}});
  const IntegerMatrix d2 = tri.boundary_matrix(2);
  // d[123] = 23 - 13 + 12, rows ordered 12, 13, 23
  EXPECT_EQ(d2, (IntegerMatrix{{1}, {-1}, {1}}));
  EXPECT_EQ(tri.boundary_matrix(0), (IntegerMatrix{{1, 1, 1}}));
  EXPECT_EQ(tri.boundary_matrix(-1).rows(), 0u);
  EXPECT_EQ(tri.coboundary_matrix(2), d2.transpose());
  EXPECT_THROW(tri.boundary_matrix(3), DimensionError);
}

TEST(Complex, BoundaryOfBoundaryVanishes) {
  for (const auto& c : fixtures())
    for (int i = 0; i <= c.dimension(); ++i)
      EXPECT_TRUE((c.boundary_matrix(i - 1) * c.boundary_matrix(i)).is_zero());
}

TEST(Complex, EulerPoincare) {
  for (const auto& c : fixtures()) {
    long faces = 0;
    long betti = 0;
    for (int i = -1; i <= c.dimension(); ++i) {
      const long sign = (i + 1) % 2 == 0 ? 1 : -1;
      faces += sign * static_cast<long>(c.face_count(i));
      betti += sign * static_cast<long>(c.betti(i));
    }
    EXPECT_EQ(faces, betti);
  }
}

TEST(Complex, BettiMatchesRationalRanks) {
  for (const auto& c : fixtures()) {
    for (int i = -1; i <= c.dimension(); ++i) {
      const std::size_t r_i = oracle::rational_rank(c.boundary_matrix(i));
      const std::size_t r_up = i < c.dimension() ? oracle::rational_rank(c.boundary_matrix(i + 1)) : 0;
      EXPECT_EQ(c.betti(i), c.face_count(i) - r_i - r_up);
    }
  }
}

TEST(Complex, Homology) {
  const auto b = gen::bipyramid();
  EXPECT_TRUE(b.reduced_homology(0).is_trivial());
  EXPECT_TRUE(b.reduced_homology(1).is_trivial());
  EXPECT_EQ(b.reduced_homology(2), (HomologyGroup{2, {}}));
  EXPECT_TRUE(b.is_apc());

  const auto rp2 = gen::projective_plane();
  EXPECT_EQ(rp2.f_vector(), (std::vector<std::size_t>{1, 6, 15, 10}));
  EXPECT_EQ(rp2.reduced_homology(1), (HomologyGroup{0, {2}}));
  EXPECT_TRUE(rp2.reduced_homology(2).is_trivial());

  for (int d = 1; d <= 3; ++d) {
    const auto s = gen::sphere(d);
    for (int i = -1; i < d; ++i) EXPECT_TRUE(s.reduced_homology(i).is_trivial());
    EXPECT_EQ(s.reduced_homology(d), (HomologyGroup{1, {}}));
  }
  EXPECT_EQ(gen::cycle(6).reduced_homology(1), (HomologyGroup{1, {}}));
  const auto two_points = SimplicialComplex::from_facets(std::vector<std::vector<Vertex>>{{1}, {2}});
  EXPECT_EQ(two_points.reduced_homology(0), (HomologyGroup{1, {}}));
}

TEST(Complex, Skeleton) {
  const auto s = gen::simplex_skeleton(6, 2);
  EXPECT_EQ(s.face_count(2), 20u);
  EXPECT_EQ(s.skeleton(1), gen::complete_graph(6));
  EXPECT_EQ(gen::sphere(2).face_count(2), 4u);
}

TEST(Generators, BadParameters) {
  EXPECT_THROW(gen::cycle(2), InputError);
  EXPECT_THROW(gen::complete_graph(1), InputError);
  EXPECT_THROW(gen::simplex_skeleton(4, 4), InputError);
  EXPECT_THROW(gen::sphere(-1), InputError);
}

TEST(FacetIo, ParseAndFormat) {
  const std::string text = "# bipyramid\n1 2 3\n\n  1 2 4\n1 2 5\n1 3 4\n1 3 5\n2 3 4\n2 3 5\n";
  const auto c = SimplicialComplex::from_facets(parse_facets(text));
  EXPECT_EQ(c, gen::bipyramid());
  std::istringstream again(format_facets(c));
  EXPECT_EQ(read_complex(again), c);
}

TEST(FacetIo, Errors) {
  EXPECT_THROW(parse_facets("1 2\n3 x\n"), InputError);
  EXPECT_THROW(parse_facets("1 -2\n"), InputError);
  EXPECT_THROW(parse_facets("0 1\n"), InputError);
  try {
    parse_facets("1 2\n\n3 4a\n");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  std::istringstream empty("# nothing\n");
  EXPECT_THROW(read_complex(empty), InputError);
  EXPECT_THROW(load_complex("/nonexistent/facets.txt"), InputError);
}
