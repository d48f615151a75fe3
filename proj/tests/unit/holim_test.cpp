#include <gtest/gtest.h>

#include <memory>

#include "oracle.hpp"
#include "towerkit/holim.hpp"
#include "towerkit/sset.hpp"

using namespace towerkit;

namespace {

CategoryPtr shared(FiniteCategory c) { return std::make_shared<const FiniteCategory>(std::move(c)); }

DiagramSpec constant_diagram(CategoryPtr idx, const SimplicialComplex& y) {
  DiagramSpec d;
  d.index = idx;
  d.values.assign(idx->object_count(), y);
  d.maps.assign(idx->morphism_count(), identity_vertex_map(y.vertex_count()));
  return d;
}

}  // namespace

TEST(Holim, ConstantDiagramOverContractibleIndex) {
  const auto d = constant_diagram(shared(chain_category(2)), cycle_graph(3));
  const auto h = homology(holim_poset(d, 2, 0, Limits{}), 1);
  EXPECT_EQ(h.betti(0), 0);
  EXPECT_EQ(h.betti(1), 1);
}

TEST(Holim, DiscreteIndexIsAProduct) {
  const auto d = constant_diagram(shared(discrete_category(2)), sphere0());
  const auto x = holim_poset(d, 1, 0, Limits{});
  EXPECT_EQ(x.cell_count(0), 4u);
  EXPECT_EQ(homology(x, 0).betti(0), 3);
}

TEST(Holim, AgreesWithOracle) {
  const auto d = constant_diagram(shared(power_poset(1, true)), sphere0());
  const auto x = holim_poset(d, 2, 1, Limits{});
  const auto h = homology(x, 1);
  std::vector<int> lib;
  for (const auto& g : h.groups) lib.push_back(g.betti);
  EXPECT_EQ(oracle::reduced_betti(x, 1, oracle::Chains::quotient), lib);
}

TEST(Tot, ConstantObject) {
  const auto c = constant_cosimplicial(sphere0(), {2});
  for (int s = 0; s <= 2; ++s) EXPECT_EQ(homology(tot(c, s, 1, 0, Limits{}), 0).betti(0), 1) << s;
}

TEST(Tot, CechIsContractibleThroughZero) {
  const auto c = cech_cosimplicial(2, 0, 2);
  const auto x = tot(c, 1, 1, 0, Limits{});
  const auto h = homology(x, 0, false);
  EXPECT_EQ(h.betti(0), 1);
}

// T_0 of the identity is the cone on X, hence contractible.
TEST(Tn, StageZeroIsACone) {
  const auto f = FunctorSpec::identity();
  for (const Model m : {Model::poset, Model::cosimplicial}) {
    const auto out = compute_holim(T_n_problem(f, sphere0(), 0, m, 1), 1, Limits{});
    ASSERT_FALSE(out.capped) << to_string(m);
    EXPECT_TRUE(out.homology.trivial()) << to_string(m);
  }
}

TEST(Tn, ConstantFunctorIsConstant) {
  const auto f = FunctorSpec::constant("S1", cycle_graph(3));
  const auto out = compute_holim(T_n_problem(f, point_complex(), 1, Model::cosimplicial, 1), 1, Limits{});
  ASSERT_FALSE(out.capped);
  EXPECT_EQ(out.homology.betti(1), 1);
  EXPECT_EQ(out.homology.betti(0), 0);
}

TEST(Tnk, IdentityOnAPoint) {
  const auto f = FunctorSpec::identity();
  const auto diag = compute_holim(T_n_k_problem(f, point_complex(), 1, 1, 1), 0, Limits{});
  const auto iter = compute_holim(T_n_k_iterated_problem(f, point_complex(), 1, 1, 1), 0, Limits{});
  ASSERT_FALSE(diag.capped);
  ASSERT_FALSE(iter.capped);
  EXPECT_TRUE(diag.homology.same_groups(iter.homology));
}

TEST(Tower, SingleStageAndComposition) {
  const auto f = FunctorSpec::identity();
  const auto one = tower_report(f, "S0", sphere0(), 0, 1, 1, 0, 1, Limits{});
  EXPECT_EQ(one.stages.size(), 1u);
  EXPECT_TRUE(one.maps.empty());
  const auto r = tower_report(f, "S0", sphere0(), 0, 0, 2, 0, 1, Limits{});
  EXPECT_EQ(r.stages.size(), 3u);
  EXPECT_EQ(r.maps.size(), 2u);
  ASSERT_TRUE(r.composition_ok.has_value());
  EXPECT_TRUE(*r.composition_ok);
  const std::string csv = r.to_csv();
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "stage,degree,reduced_betti,torsion,map_rank");
  EXPECT_EQ(r.to_json()["stages"].size(), 3u);
}

TEST(Partial, ExternalProductAtZero) {
  const auto a = cech_cosimplicial(2, 0, 1);
  const auto b = external_product(a, a);
  const auto r = partial_holim_check(b, 0, 0, 0, Limits{});
  EXPECT_TRUE(r.agree());
}

TEST(Limits, TinyCapReportsCapped) {
  Limits tiny;
  tiny.cap = 3;
  const auto out = compute_holim(T_n_problem(FunctorSpec::identity(), sphere0(), 2, Model::poset, 1), 1, tiny);
  EXPECT_TRUE(out.capped);
  EXPECT_FALSE(out.note.empty());
}

TEST(Shape, WeightedDomain) {
  const auto w = Shape::weighted(1);
  const auto c = w.complex(1, {point_complex()});
  EXPECT_EQ(c.f_vector(), (std::vector<std::size_t>{3, 2}));
  EXPECT_FALSE(w.to_string().empty());
}
