#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "towerkit/cosimplicial.hpp"
#include "towerkit/homalg.hpp"
#include "towerkit/sset.hpp"
#include "towerkit/suites.hpp"

using namespace towerkit;

namespace {

std::vector<int> library_betti(const SimplicialSet& x, int top) {
  const HomologyResult h = homology(x, top, true);
  std::vector<int> out;
  for (const auto& g : h.groups) out.push_back(g.betti);
  return out;
}

/// Six-vertex projective plane.
SimplicialComplex projective_plane() {
  return SimplicialComplex::from_facets({"0", "1", "2", "3", "4", "5"},
                                        {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                         {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}});
}

}  // namespace

TEST(Chains, IntervalBoundary) {
  const ChainComplex c = chains(complex_to_sset(simplex_complex(1)), 1);
  const DenseMatrix d = to_dense(c.boundary[1]);
  ASSERT_EQ(d.rows, 2);
  ASSERT_EQ(d.cols, 1);
  EXPECT_EQ(d(0, 0) + d(1, 0), 0);
  EXPECT_EQ(abs(d(0, 0)), 1);
}

TEST(Chains, PointHasZeroBoundaries) {
  const ChainComplex c = chains(standard_simplex(0, 3), 3);
  for (int n = 1; n <= 3; ++n) EXPECT_EQ(c.rank[n], 0);
}

TEST(Chains, SquareToZero) {
  EXPECT_TRUE(chains(complex_to_sset(join(sphere0(), sphere0())), 1, true).squares_to_zero());
  EXPECT_TRUE(chains(product(standard_simplex(2, 4), standard_simplex(1, 4), 4).set, 4, true).squares_to_zero());
}

TEST(Smith, SmallMatrices) {
  const SmithResult r = smith_normal_form(DenseMatrix::from_rows({{2, 0}, {0, 3}}));
  ASSERT_EQ(r.diagonal.size(), 2u);
  EXPECT_EQ(r.diagonal[0], 1);
  EXPECT_EQ(r.diagonal[1], 6);
  EXPECT_TRUE(r.verified);
  EXPECT_TRUE(smith_normal_form(DenseMatrix(3, 2)).diagonal.empty());
  const SmithResult id = smith_normal_form(DenseMatrix::identity(3));
  EXPECT_EQ(id.s, DenseMatrix::identity(3));
}

TEST(Smith, ProductIsUnimodularTransform) {
  const DenseMatrix m = DenseMatrix::from_rows({{4, 6, 2}, {2, 8, 10}, {6, 2, 4}});
  const SmithResult r = smith_normal_form(m);
  EXPECT_TRUE(r.verified);
  EXPECT_EQ(multiply(multiply(r.u, m), r.v), r.s);
  for (std::size_t i = 1; i < r.diagonal.size(); ++i) EXPECT_EQ(r.diagonal[i] % r.diagonal[i - 1], 0);
  EXPECT_EQ(abs(determinant(r.u)), 1);
  EXPECT_EQ(abs(determinant(m)), abs(r.diagonal[0] * r.diagonal[1] * r.diagonal[2]));
}

TEST(Homology, Examples) {
  const HomologyResult sk = homology(complex_to_sset(simplex_complex(3, 1)), 2);
  EXPECT_EQ(sk.bettis(), (std::vector<int>{0, 3, 0}));
  EXPECT_EQ(homology(complex_to_sset(join(sphere0(), sphere0())), 1).betti(1), 1);
  const auto y = cosimplicial_family(Family::join_power_over, 0, sphere0(), 2);
  EXPECT_EQ(homology(complex_to_sset(y.level(2)), 2).betti(1), 2);
}

TEST(Homology, ProjectivePlaneTorsion) {
  const HomologyResult h = homology(complex_to_sset(projective_plane()), 2);
  EXPECT_EQ(h.betti(1), 0);
  ASSERT_EQ(h.at(1).torsion.size(), 1u);
  EXPECT_EQ(h.at(1).torsion[0], 2);
  EXPECT_EQ(h.betti(2), 0);
  // The oracle sees the torsion as a rank drop over GF(2).
  const auto over_f2 = oracle::reduced_betti(complex_to_sset(projective_plane()), 2, oracle::Chains::quotient, 2);
  EXPECT_EQ(over_f2[2], 1);
  EXPECT_EQ(over_f2[3], 1);
}

TEST(Homology, EmptySetAndUnreduced) {
  const HomologyResult e = homology(complex_to_sset(empty_complex()), 0);
  EXPECT_EQ(e.betti(-1), 1);
  const HomologyResult s0 = homology(complex_to_sset(sphere0()), 0, false);
  EXPECT_EQ(s0.betti(0), 2);
}

TEST(Connectivity, Examples) {
  EXPECT_EQ(connectivity(complex_to_sset(empty_complex()), 1).value, -2);
  EXPECT_EQ(connectivity(complex_to_sset(sphere0()), 1).value, -1);
  EXPECT_EQ(connectivity(complex_to_sset(join(sphere0(), sphere0())), 1).value, 0);
  const Connectivity s2 = connectivity(complex_to_sset(simplex_boundary(3)), 2, true);
  EXPECT_EQ(s2.value, 1);
  EXPECT_EQ(s2.tag, "Hurewicz-valid");
}

TEST(GraphIsomorphism, Examples) {
  const auto y1 = cosimplicial_family(Family::join_power, 1, empty_complex(), 1).level(1);
  EXPECT_TRUE(graph_isomorphic(y1, complete_bipartite(2, 2)).isomorphic);
  EXPECT_TRUE(graph_isomorphic(simplex_complex(2, 1), cycle_graph(3)).isomorphic);
  EXPECT_FALSE(graph_isomorphic(complete_bipartite(2, 2), cycle_graph(3)).isomorphic);
  const auto gi = graph_isomorphic(cycle_graph(4), complete_bipartite(2, 2));
  ASSERT_TRUE(gi.isomorphic);
  EXPECT_TRUE(is_simplicial_map(cycle_graph(4), complete_bipartite(2, 2), gi.witness) ||
              gi.witness.size() == 4u);
}

TEST(Euler, MatchesAlternatingBetti) {
  for (const auto& item : corpus()) {
    const auto x = complex_to_sset(item.complex);
    const HomologyResult h = homology(x, std::max(item.complex.dimension(), 0), false);
    long long chi = 0;
    for (const auto& g : h.groups) chi += (g.degree % 2 == 0 ? 1 : -1) * g.betti;
    EXPECT_EQ(euler_characteristic(x), chi) << item.name;
  }
}

TEST(InducedMaps, ComponentsAndRanks) {
  const auto s0 = complex_to_sset(sphere0());
  const auto pt = complex_to_sset(point_complex());
  SimplicialMap collapse;
  collapse.image = {{Simplex::cell_at(0, 0), Simplex::cell_at(0, 0)}};
  EXPECT_EQ(component_matrix(s0, pt, collapse), (std::vector<std::vector<int>>{{1, 1}}));
  EXPECT_EQ(induced_rank(s0, pt, collapse, 0), 1);
  const auto s1 = complex_to_sset(cycle_graph(3));
  SimplicialMap id;
  id.image.resize(2);
  for (int n = 0; n < 2; ++n)
    for (std::size_t c = 0; c < s1.cell_count(n); ++c) id.image[n].push_back(Simplex::cell_at(n, static_cast<int>(c)));
  EXPECT_EQ(induced_rank(s1, s1, id, 1), 1);
}

// Property: the library's normalized Smith-form homology agrees with the oracle on
// unnormalized chains and on the degenerate quotient.
TEST(OracleAgreement, CorpusComplexes) {
  for (const auto& item : corpus()) {
    if (item.complex.vertex_count() > 6) continue;
    const int top = std::max(item.complex.dimension(), 0);
    const auto x = complex_to_sset(item.complex);
    const auto lib = library_betti(x, top);
    EXPECT_EQ(oracle::reduced_betti(x, top, oracle::Chains::quotient), lib) << item.name;
    if (item.complex.dimension() <= 2 && item.complex.vertex_count() <= 5) {
      EXPECT_EQ(oracle::reduced_betti(x, top, oracle::Chains::unnormalized), lib) << item.name;
    }
  }
}

TEST(OracleAgreement, EnumeratedSets) {
  const auto d1 = standard_simplex(1, 3);
  const std::vector<std::pair<std::string, SimplicialSet>> sets{
      {"D1xD1", product(d1, d1, 3).set},
      {"cech3", cech_power(3, 0, 3).nf.set},
      {"ex S1", ex_approx(complex_to_sset(cycle_graph(3)), 1, 2).set},
      {"cosk0 S0", coskeleton(complex_to_sset(sphere0()), 0, 3)},
      {"sk1 D3 nerve", skeleton(standard_simplex(3, 3), 1)}};
  for (const auto& [name, x] : sets) {
    const int top = x.bound() - 1;
    const auto lib = library_betti(x, top);
    EXPECT_EQ(oracle::reduced_betti(x, top, oracle::Chains::quotient), lib) << name;
    EXPECT_EQ(oracle::reduced_betti(x, top, oracle::Chains::unnormalized), lib) << name;
  }
}

TEST(OracleAgreement, RandomComplexes) {
  std::mt19937 rng(20241015);
  for (int trial = 0; trial < 40; ++trial) {
    const int v = 4 + static_cast<int>(rng() % 3);
    std::vector<std::string> labels;
    for (int i = 0; i < v; ++i) labels.push_back(std::to_string(i));
    std::vector<std::vector<int>> facets;
    const int nf = 2 + static_cast<int>(rng() % 5);
    for (int f = 0; f < nf; ++f) {
      std::vector<int> face;
      for (int i = 0; i < v; ++i)
        if (rng() % 2) face.push_back(i);
      if (face.empty() || face.size() > 3) face = {static_cast<int>(rng() % v)};
      facets.push_back(face);
    }
    for (int i = 0; i < v; ++i) facets.push_back({i});
    const auto k = SimplicialComplex::from_facets(labels, facets);
    const auto x = complex_to_sset(k);
    const int top = std::max(k.dimension(), 0);
    EXPECT_EQ(oracle::reduced_betti(x, top, oracle::Chains::quotient), library_betti(x, top)) << "trial " << trial;
  }
}
