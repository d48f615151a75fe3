#include <gtest/gtest.h>

#include <memory>

#include "towerkit/categories.hpp"
#include "towerkit/homalg.hpp"
#include "towerkit/sset.hpp"

using namespace towerkit;

TEST(Categories, PowerPosetCounts) {
  const auto p = power_poset(2, true);
  EXPECT_EQ(p.object_count(), 7);
  EXPECT_EQ(power_poset(2, false).object_count(), 8);
  EXPECT_TRUE(p.is_poset());
  EXPECT_NO_THROW(p.check());
  EXPECT_EQ(subset_of(p, p.find_object("{0,2}")), (std::vector<int>{0, 2}));
  EXPECT_EQ(p.terminal_object(), p.find_object("{0,1,2}"));
  EXPECT_FALSE(p.initial_object().has_value());
}

TEST(Categories, SimplexCategoryHoms) {
  const auto d = truncated_simplex_category(3);
  EXPECT_NO_THROW(d.check());
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(d.hom(0, n).size(), static_cast<std::size_t>(n + 1));
  EXPECT_EQ(d.hom(1, 1).size(), 3u);
  EXPECT_EQ(d.hom(2, 1).size(), 4u);
  EXPECT_FALSE(d.is_poset());
}

TEST(Categories, DiscreteAndChain) {
  EXPECT_EQ(discrete_category(3).morphism_count(), 3);
  EXPECT_EQ(chain_category(3).morphism_count(), 6);
  EXPECT_EQ(chain_category(3).terminal_object(), 2);
}

TEST(Functors, InclusionAndC) {
  EXPECT_NO_THROW(simplex_inclusion(1, 3).check());
  const auto c = c_functor(2);
  EXPECT_NO_THROW(c.check());
  const int obj = c.source->find_object("{0,2}");
  EXPECT_EQ(c.on_objects[obj], 1);
  const int single = c.source->find_object("{1}");
  EXPECT_EQ(c.on_objects[single], 0);
}

TEST(Nerves, Homotopy) {
  const auto pp1 = nerve(power_poset(1, true), -1);
  EXPECT_TRUE(homology(pp1, 2).trivial());
  EXPECT_EQ(homology(nerve(discrete_category(2), -1), 0).betti(0), 1);
  EXPECT_TRUE(homology(nerve(power_poset(2, true), -1), 2).trivial());
  EXPECT_EQ(nerve(chain_category(3), -1).cell_counts(), (std::vector<std::size_t>{3, 3, 1}));
  EXPECT_THROW(nerve(truncated_simplex_category(1), -1), InvariantError);
  EXPECT_EQ(nerve(truncated_simplex_category(1), 1).cell_count(0), 2u);
}

TEST(Comma, OverIdentityHasTerminal) {
  const auto c = std::make_shared<const FiniteCategory>(chain_category(3));
  const auto id = identity_functor(c);
  const auto over = comma(id, 1, CommaSide::over);
  EXPECT_EQ(over.object_count(), 2);
  EXPECT_TRUE(over.terminal_object().has_value());
  const auto under = comma(id, 1, CommaSide::under);
  EXPECT_EQ(under.object_count(), 2);
  EXPECT_TRUE(under.initial_object().has_value());
}

TEST(Cofinality, PowerSetFunctor) {
  for (int n = 0; n <= 2; ++n) {
    const auto r = cofinality_report(c_functor(n), CofinalityMode::comma_nerve, 2);
    EXPECT_TRUE(r.all_trivial()) << n;
    EXPECT_EQ(static_cast<int>(r.entries.size()), n + 1);
  }
}

TEST(Cofinality, DeltaShapedIdentity) {
  const auto d = std::make_shared<const FiniteCategory>(truncated_simplex_category(2));
  const auto r = cofinality_report(identity_functor(d), CofinalityMode::delta_shaped, 1);
  EXPECT_TRUE(r.all_trivial());
}

TEST(Cofinality, DiscreteIntoChainIsObstructed) {
  const auto src = std::make_shared<const FiniteCategory>(discrete_category(2));
  const auto tgt = std::make_shared<const FiniteCategory>(chain_category(3));
  const auto g = poset_functor(src, tgt, {0, 2});
  const auto r = cofinality_report(g, CofinalityMode::comma_nerve, 1);
  EXPECT_FALSE(r.all_trivial());
  EXPECT_EQ(r.to_json()["entries"].size(), 3u);
}

TEST(Categories, JsonRoundTrip) {
  const auto c = power_poset(1, true);
  const auto back = category_from_json(category_to_json(c));
  EXPECT_EQ(back.objects(), c.objects());
  EXPECT_EQ(back.morphism_count(), c.morphism_count());
  nlohmann::json bad = category_to_json(c);
  bad["objects"] = 3;
  EXPECT_THROW(category_from_json(bad), ParseError);
}

TEST(FunctorSpec, ParseAndApply) {
  auto resolve = [](const std::string& n) { return n == "S1" ? cycle_graph(3) : point_complex(); };
  const auto f = FunctorSpec::parse("join:point,const:S1", resolve);
  EXPECT_EQ(f.steps().size(), 2u);
  EXPECT_EQ(f.apply(sphere0()), cycle_graph(3));
  const auto j = FunctorSpec::parse("join:point", resolve);
  EXPECT_EQ(j.apply(sphere0()).f_vector(), (std::vector<std::size_t>{3, 2}));
  EXPECT_THROW(FunctorSpec::parse("bogus", resolve), ParseError);
}

TEST(Diagrams, FromJoinIsFunctorial) {
  const auto idx = std::make_shared<const FiniteCategory>(power_poset(1, true));
  const auto d = diagram_from_join(FunctorSpec::identity(), sphere0(), idx);
  EXPECT_NO_THROW(d.check());
  EXPECT_EQ(d.values.size(), 3u);
}
