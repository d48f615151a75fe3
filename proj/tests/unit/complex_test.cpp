#include <gtest/gtest.h>

#include "towerkit/errors.hpp"
#include "towerkit/io.hpp"
#include "towerkit/simplicial_complex.hpp"
#include "towerkit/suites.hpp"

using namespace towerkit;

using FVec = std::vector<std::size_t>;

TEST(Complex, FromFacetsIsDownwardClosed) {
  const auto k = SimplicialComplex::from_facets({"a", "b", "c", "d"}, {{0, 1, 2}, {2, 3}});
  EXPECT_EQ(k.f_vector(), (FVec{4, 4, 1}));
  EXPECT_TRUE(k.has_edge(0, 2));
  EXPECT_FALSE(k.has_edge(0, 3));
  EXPECT_NO_THROW(k.validate());
}

TEST(Complex, FromFacesRejectsMissingSubfaces) {
  EXPECT_THROW(SimplicialComplex::from_faces({"a", "b"}, {{0}, {0, 1}}), InvariantError);
  EXPECT_THROW(SimplicialComplex::from_faces({"a", "b", "c"}, {{0}, {1}, {2}, {0, 1, 2}}), InvariantError);
}

TEST(Complex, StandardShapes) {
  EXPECT_EQ(simplex_complex(2).f_vector(), (FVec{3, 3, 1}));
  EXPECT_EQ(simplex_complex(3, 1).f_vector(), (FVec{4, 6}));
  EXPECT_EQ(simplex_boundary(3).f_vector(), (FVec{4, 6, 4}));
  EXPECT_EQ(cycle_graph(3).f_vector(), (FVec{3, 3}));
  EXPECT_EQ(sphere0().f_vector(), (FVec{2}));
  EXPECT_EQ(complete_bipartite(2, 2).f_vector(), (FVec{4, 4}));
  EXPECT_EQ(empty_complex().dimension(), -1);
}

TEST(Complex, JoinOfSpheresIsASquare) {
  const auto sq = join(sphere0(), sphere0());
  EXPECT_EQ(sq.f_vector(), (FVec{4, 4}));
  const auto gi = graph_isomorphic(sq, cycle_graph(4));
  EXPECT_TRUE(gi.isomorphic);
}

TEST(Complex, JoinWithPointIsCone) {
  const auto c = join(point_complex(), cycle_graph(3));
  EXPECT_EQ(c.f_vector(), cone(cycle_graph(3)).f_vector());
  EXPECT_EQ(join(empty_complex(), cycle_graph(3)).f_vector(), cycle_graph(3).f_vector());
}

TEST(Complex, ProductOfIntervalsIsTwoTriangles) {
  const auto sq = product(simplex_complex(1), simplex_complex(1));
  EXPECT_EQ(sq.f_vector(), (FVec{4, 5, 2}));
}

TEST(Complex, SubdivisionOfInterval) {
  const auto sd = subdivision(simplex_complex(1));
  EXPECT_EQ(sd.f_vector(), (FVec{3, 2}));
  const VertexMap lv = last_vertex_map(simplex_complex(1));
  EXPECT_TRUE(is_simplicial_map(sd, simplex_complex(1), lv));
}

TEST(Complex, SkeletonIsIdempotent) {
  EXPECT_EQ(complex_skeleton(complex_skeleton(simplex_complex(4), 2), 1), complex_skeleton(simplex_complex(4), 1));
  EXPECT_EQ(complex_skeleton(simplex_boundary(3), 2), simplex_boundary(3));
}

TEST(Complex, WedgeAndUnion) {
  EXPECT_EQ(wedge(cycle_graph(3), cycle_graph(3)).f_vector(), (FVec{5, 6}));
  EXPECT_EQ(disjoint_union(sphere0(), cycle_graph(3)).f_vector(), (FVec{5, 3}));
  EXPECT_EQ(suspension(sphere0()).f_vector(), (FVec{4, 4}));
}

TEST(Complex, JoinMapIsSimplicial) {
  const auto a = sphere0();
  const auto j = join(a, a);
  // Swapping within the first factor keeps every edge increasing.
  EXPECT_TRUE(is_simplicial_map(j, j, join_map({1, 0}, 2, identity_vertex_map(2))));
  EXPECT_TRUE(is_simplicial_map(j, j, join_map({0, 0}, 2, {0, 0})));
}

TEST(Complex, JsonRoundTrip) {
  const auto k = wedge(cycle_graph(3), simplex_boundary(3));
  const auto back = complex_from_json(complex_to_json(k));
  EXPECT_EQ(back, k);
  nlohmann::json j = {{"vertices", {"x", "y", "z"}}, {"facets", {{"x", "y"}, {"z"}}}};
  EXPECT_EQ(complex_from_json(j).f_vector(), (FVec{3, 1}));
  j["facets"] = {{"x", "w"}};
  EXPECT_THROW(complex_from_json(j), ParseError);
}

TEST(Corpus, ContentsAndInvariants) {
  const auto& c = corpus();
  ASSERT_FALSE(c.empty());
  EXPECT_EQ(named_complex("S0").vertex_count(), 2);
  EXPECT_EQ(named_complex("S2").f_vector(), (FVec{4, 6, 4}));
  for (const auto& item : c) EXPECT_NO_THROW(item.complex.validate()) << item.name;
  EXPECT_EQ(named_complex("D7").dimension(), 7);
  EXPECT_EQ(named_complex("S3").f_vector(), simplex_boundary(4).f_vector());
  EXPECT_THROW(named_complex("torus"), ParseError);
}
