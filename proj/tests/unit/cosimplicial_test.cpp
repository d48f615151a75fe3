#include <gtest/gtest.h>

#include "towerkit/cosimplicial.hpp"
#include "towerkit/homalg.hpp"
#include "towerkit/sset.hpp"

using namespace towerkit;

using FVec = std::vector<std::size_t>;

TEST(Families, LowLevels) {
  const auto y1 = cosimplicial_family(Family::join_power, 1, empty_complex(), 2);
  EXPECT_TRUE(graph_isomorphic(y1.level(1), complete_bipartite(2, 2)).isomorphic);
  EXPECT_EQ(y1.level(0).f_vector(), (FVec{2, 1}));
  const auto x1 = cosimplicial_family(Family::skeleton, 1, empty_complex(), 3);
  EXPECT_EQ(x1.level(3).f_vector(), (FVec{4, 6}));
  EXPECT_EQ(x1.level(1).f_vector(), (FVec{2, 1}));
}

TEST(Families, KZeroSkeletonMatchesJoinPower) {
  const auto x0 = cosimplicial_family(Family::skeleton, 0, empty_complex(), 3);
  const auto y0 = cosimplicial_family(Family::join_power, 0, empty_complex(), 3);
  for (int p = 0; p <= 3; ++p) EXPECT_EQ(x0.level(p).f_vector(), y0.level(p).f_vector()) << p;
}

TEST(Families, JoinPowerOverS0HasWedgeOfCircles) {
  const auto y = cosimplicial_family(Family::join_power_over, 0, sphere0(), 3);
  for (int n = 0; n <= 3; ++n) {
    const auto h = homology(complex_to_sset(y.level(n)), 1);
    EXPECT_EQ(h.betti(1), n) << n;
  }
}

TEST(Families, Validate) {
  for (int k = 0; k <= 2; ++k) {
    EXPECT_NO_THROW(cosimplicial_family(Family::skeleton, k, empty_complex(), 3).validate()) << k;
    EXPECT_NO_THROW(cosimplicial_family(Family::join_power, k, empty_complex(), 2).validate()) << k;
  }
  EXPECT_NO_THROW(cosimplicial_family(Family::join_power_over, 0, cycle_graph(3), 2).validate());
  EXPECT_EQ(parse_family(to_string(Family::join_power_over)), Family::join_power_over);
}

TEST(Families, ValidateRejectsBrokenCoface) {
  auto x = cosimplicial_family(Family::skeleton, 0, empty_complex(), 2);
  x.set_coface(0, {1}, 0, VertexMap{0});
  EXPECT_THROW(x.validate(), InvariantError);
}

TEST(Constant, LevelsAndDiagonal) {
  const auto c = constant_cosimplicial(cycle_graph(3), {2, 2});
  EXPECT_NO_THROW(c.validate());
  const auto d = diagonal(c);
  EXPECT_EQ(d.arity(), 1);
  for (int j = 0; j <= 2; ++j) EXPECT_EQ(d.level(j), cycle_graph(3));
  EXPECT_NO_THROW(d.validate());
}

TEST(Cech, DiscreteLevels) {
  const auto c = cech_cosimplicial(2, 0, 3);
  EXPECT_NO_THROW(c.validate());
  for (int p = 0; p <= 3; ++p) {
    EXPECT_EQ(c.level(p).dimension(), 0);
    EXPECT_EQ(c.level(p).vertex_count(), 1 << (p + 1));
  }
}

TEST(ExternalProduct, LevelsAreProducts) {
  const auto a = cosimplicial_family(Family::join_power, 0, empty_complex(), 1);
  const auto p = external_product(a, a);
  EXPECT_EQ(p.arity(), 2);
  EXPECT_NO_THROW(p.validate());
  EXPECT_EQ(p.level({1, 0}).vertex_count(), a.level(1).vertex_count() * a.level(0).vertex_count());
}

TEST(MultiJoin, DiagonalMatchesJoinPower) {
  const auto m = multi_join_cosimplicial(2, point_complex(), 2);
  EXPECT_NO_THROW(m.validate());
  const auto d = diagonal(m);
  const auto y = join_power_cosimplicial(2, point_complex(), 2);
  for (int j = 0; j <= 2; ++j) EXPECT_EQ(d.level(j).f_vector(), y.level(j).f_vector()) << j;
}

TEST(Coskeleton, AllDirectionsAtZero) {
  const auto x = cosimplicial_family(Family::join_power, 0, empty_complex(), 2);
  const auto c = coskeleton_direction(x, 0, 0);
  EXPECT_EQ(c.level(0), x.level(0));
  EXPECT_NO_THROW(c.validate());
}
