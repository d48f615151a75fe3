#include <gtest/gtest.h>

#include "towerkit/hom.hpp"
#include "towerkit/homalg.hpp"
#include "towerkit/sset.hpp"

using namespace towerkit;

using Counts = std::vector<std::size_t>;

TEST(StandardSimplex, CellCounts) {
  EXPECT_EQ(standard_simplex(0, 3).cell_counts(), (Counts{1}));
  EXPECT_EQ(standard_simplex(2, 2).cell_counts(), (Counts{3, 3, 1}));
  EXPECT_EQ(standard_simplex(3, 1).cell_counts(), (Counts{4, 6}));
  EXPECT_FALSE(standard_simplex(3, 1).complete());
  EXPECT_TRUE(standard_simplex(3, 3).complete());
}

TEST(StandardSimplex, SimplicialIdentities) {
  for (int n = 0; n <= 4; ++n) EXPECT_NO_THROW(standard_simplex(n, 5).check_identities());
}

TEST(StandardSimplex, AllSimplicesAreMonotoneMaps) {
  // Degree-m simplices of Delta^n are the monotone maps [m] -> [n].
  const auto d2 = standard_simplex(2, 3);
  for (int m = 0; m <= 3; ++m) EXPECT_EQ(d2.simplex_count(m), all_monotone(m, 2).size());
}

TEST(ComplexToSset, EdgeCircleAndPoints) {
  EXPECT_TRUE(complex_to_sset(simplex_complex(1)).same_structure(standard_simplex(1, 1)));
  EXPECT_EQ(complex_to_sset(cycle_graph(3)).cell_counts(), (Counts{3, 3}));
  EXPECT_EQ(homology(complex_to_sset(cycle_graph(3)), 1).betti(1), 1);
  EXPECT_EQ(homology(complex_to_sset(sphere0()), 0).betti(0), 1);
}

TEST(Skeleton, MinRuleAndIdentity) {
  const auto d4 = standard_simplex(4, 4);
  EXPECT_TRUE(skeleton(skeleton(d4, 2), 1).same_structure(skeleton(d4, 1)));
  EXPECT_EQ(skeleton(standard_simplex(3, 3), 1).cell_counts()[1], 6u);
  const auto s2 = complex_to_sset(simplex_boundary(3));
  EXPECT_TRUE(skeleton(s2, 2).same_structure(s2));
}

TEST(Coskeleton, PointAndVertexPowers) {
  const auto pt = coskeleton(complex_to_sset(point_complex()), 1, 3);
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(pt.simplex_count(n), 1u);
  const auto s0 = coskeleton(complex_to_sset(sphere0()), 0, 3);
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(s0.simplex_count(n), 1u << (n + 1));
  const auto tri = coskeleton(complex_to_sset(cycle_graph(3)), 0, 2);
  EXPECT_EQ(tri.simplex_count(2), 27u);
}

TEST(Coskeleton, AdjunctionCountOnBoundaryTriangle) {
  const auto b = complex_to_sset(simplex_boundary(2));
  const auto sk1 = skeleton(standard_simplex(2, 2), 1);
  const std::size_t maps = enumerate_maps(sk1, SimplexTable(b, 1), Limits{}, "test").size();
  const auto cb = coskeleton(b, 1, 2);
  EXPECT_EQ(maps, cb.simplex_count(2));
  EXPECT_EQ(maps, 10u);
}

TEST(Product, IntervalSquaredShuffles) {
  const auto d1 = standard_simplex(1, 3);
  const NormalForm sq = product(d1, d1, 3);
  EXPECT_EQ(sq.set.cell_counts(), (Counts{4, 5, 2}));
  EXPECT_NO_THROW(sq.set.check_identities());
}

TEST(Product, WithPointAndDimension) {
  const auto s1 = complex_to_sset(cycle_graph(3));
  const auto pt = standard_simplex(0, 2);
  EXPECT_EQ(product(s1, pt, 2).set.cell_counts(), (Counts{3, 3}));
  // sk_1 Delta^2 x sk_1 Delta^2 has dimension 2.
  const auto a = skeleton(standard_simplex(2, 2), 1);
  const NormalForm p = product(a, a, 3);
  EXPECT_EQ(p.set.cell_count(3), 0u);
  EXPECT_GT(p.set.cell_count(2), 0u);
}

TEST(Diagonal, ExternalProductMatchesProduct) {
  const auto d1 = standard_simplex(1, 3);
  const SimplexTable t(d1, 3);
  const NormalForm diag = diagonal_ss(external_product(t, t), 3);
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(diag.set.cell_count(n), product(d1, d1, 3).set.cell_count(n)) << n;
  EXPECT_TRUE(homology(diag.set, 2).trivial());
}

TEST(MappingSpace, Examples) {
  const auto y = complex_to_sset(cycle_graph(3));
  const auto pt = standard_simplex(0, 0);
  EXPECT_EQ(mapping_space(pt, y, 2).cell_counts(), (Counts{3, 3, 0}));
  const auto from_interval = mapping_space(standard_simplex(1, 1), complex_to_sset(point_complex()), 2);
  for (int n = 0; n <= 2; ++n) EXPECT_EQ(from_interval.simplex_count(n), 1u);
  const auto s0 = complex_to_sset(sphere0());
  EXPECT_EQ(mapping_space(s0, y, 1).cell_count(0), 9u);
}

TEST(ExApprox, DepthZeroAndCircle) {
  const auto s1 = complex_to_sset(cycle_graph(3));
  EXPECT_TRUE(ex_approx(s1, 0, 1).set.same_structure(s1));
  const ExApprox ex = ex_approx(s1, 1, 2);
  const HomologyResult h = homology(ex.set, 1);
  EXPECT_EQ(h.betti(0), 0);
  EXPECT_EQ(h.betti(1), 1);
  EXPECT_TRUE(is_simplicial(s1, ex.set, ex.inclusion, 1));
}

TEST(IteratedSubdivision, LastVertexMap) {
  VertexMap lv;
  const auto sd2 = iterated_subdivision(simplex_complex(1), 2, &lv);
  EXPECT_EQ(sd2.f_vector(), (std::vector<std::size_t>{5, 4}));
  EXPECT_TRUE(is_simplicial_map(sd2, simplex_complex(1), lv));
}

TEST(CechPower, CountsAndContraction) {
  for (int z = 1; z <= 3; ++z) {
    const CechPower c = cech_power(z, 0, 3);
    std::uint64_t expect = 1;
    for (int p = 0; p <= 3; ++p) {
      expect *= static_cast<std::uint64_t>(z);
      EXPECT_EQ(c.nf.set.simplex_count(p), expect);
    }
    std::vector<std::string> failures;
    EXPECT_GT(check_contracting_identities(c, 3, &failures), 0u);
    EXPECT_TRUE(failures.empty()) << failures.front();
  }
  EXPECT_EQ(cech_power(1, 0, 3).nf.set.cell_counts(), (Counts{1, 0, 0, 0}));
}

TEST(CountMaps, SimplexIntoSimplex) {
  // Maps Delta^1 -> Delta^2 are monotone maps [1] -> [2].
  EXPECT_EQ(count_maps(standard_simplex(1, 1), standard_simplex(2, 1)), 6u);
  EXPECT_EQ(count_maps(complex_to_sset(sphere0()), complex_to_sset(cycle_graph(3))), 9u);
}

TEST(Limits, CapIsAnErrorNotATruncation) {
  Limits tight;
  tight.cap = 5;
  EXPECT_THROW(coskeleton(complex_to_sset(cycle_graph(3)), 0, 3, tight), CapExceeded);
}
