#include <gtest/gtest.h>

#include <set>

#include "weylquant/errors.hpp"
#include "weylquant/rootsys.hpp"

using namespace weylquant;

namespace {

// Closure of the simple roots under simple reflections, written out with the
// Cartan matrix only.
std::set<Weight> root_closure(const RootSystem& g) {
  const std::size_t n = g.rank();
  std::set<Weight> out(g.simple_roots().begin(), g.simple_roots().end());
  std::vector<Weight> todo(out.begin(), out.end());
  while (!todo.empty()) {
    const Weight r = todo.back();
    todo.pop_back();
    for (std::size_t i = 0; i < n; ++i) {
      // s_i(r) = r - <r, a_i^vee> a_i; r[i] is twice the pairing.
      Weight s = r;
      const int k = r[i] / 2;
      for (std::size_t j = 0; j < n; ++j) s[j] -= k * 2 * g.cartan(j, i);
      if (out.insert(s).second) todo.push_back(s);
    }
  }
  return out;
}

struct Shape {
  const char* label;
  std::size_t positive;
  std::size_t order;
};

class ClassicalShapes : public ::testing::TestWithParam<Shape> {};

}  // namespace

TEST_P(ClassicalShapes, RootCountAndWeylOrder) {
  const Shape s = GetParam();
  const RootSystem g = RootSystem::build(s.label);
  EXPECT_EQ(g.positive_roots().size(), s.positive);
  EXPECT_EQ(g.weyl_order(), s.order);
  EXPECT_EQ(g.weyl_group().size(), s.order);
  EXPECT_EQ(root_closure(g).size(), 2 * s.positive);
}

TEST_P(ClassicalShapes, DeterminantIsSign) {
  const RootSystem g = RootSystem::build(GetParam().label);
  if (g.weyl_order() > 2000) GTEST_SKIP();
  int total = 0;
  for (const auto& w : g.weyl_group()) {
    EXPECT_EQ(w.determinant(), w.sign());
    total += w.sign();
  }
  EXPECT_EQ(total, 0);
}

TEST_P(ClassicalShapes, RhoIsHalfSumAndPairsToOne) {
  const RootSystem g = RootSystem::build(GetParam().label);
  const Weight two_rho = sum(g.positive_roots(), g.rank());
  EXPECT_EQ(two_rho.half(), g.rho());
  for (std::size_t i = 0; i < g.rank(); ++i) EXPECT_EQ(g.rho()[i], 2);
}

INSTANTIATE_TEST_SUITE_P(Types, ClassicalShapes,
                         ::testing::Values(Shape{"A1", 1, 2}, Shape{"A2", 3, 6}, Shape{"B2", 4, 8},
                                           Shape{"G2", 6, 12}, Shape{"A3", 6, 24}, Shape{"B3", 9, 48},
                                           Shape{"C3", 9, 48}, Shape{"D4", 12, 192}, Shape{"F4", 24, 1152}),
                         [](const auto& info) { return std::string(info.param.label); });

TEST(RootSystem, A2SimpleRootsAreDoubledCartanColumns) {
  const RootSystem g = RootSystem::build("A2");
  EXPECT_EQ(g.simple_roots()[0], (Weight{4, -2}));
  EXPECT_EQ(g.simple_roots()[1], (Weight{-2, 4}));
  EXPECT_TRUE(g.is_positive_root(Weight{2, 2}));
  EXPECT_TRUE(g.is_root(Weight{-2, -2}));
  EXPECT_FALSE(g.is_root(Weight{0, 6}));
}

TEST(RootSystem, B2AndG2LengthRatios) {
  for (const auto& [label, ratio] : std::vector<std::pair<std::string, int>>{{"B2", 2}, {"G2", 3}, {"C3", 2}}) {
    const RootSystem g = RootSystem::build(label);
    Rational lo(1000), hi(0);
    for (const auto& r : g.positive_roots()) {
      lo = std::min(lo, g.inner_product(r, r));
      hi = std::max(hi, g.inner_product(r, r));
    }
    EXPECT_EQ(hi / lo, Rational(ratio)) << label;
  }
}

TEST(RootSystem, ReflectionFixesWallAndNegatesRoot) {
  const RootSystem g = RootSystem::build("A2");
  const Weight a{4, -2};
  EXPECT_EQ(g.reflect(a, a), -a);
  EXPECT_EQ(g.reflect(a, Weight{0, 6}), (Weight{0, 6}));
  EXPECT_EQ(g.reflect(a, Weight{6, -6}), (Weight{-6, 0}));
}

TEST(RootSystem, HeightCountsSimpleRoots) {
  const RootSystem g = RootSystem::build("A2");
  EXPECT_EQ(g.height()(Weight{4, -2}), Rational(1));
  EXPECT_EQ(g.height()(Weight{2, 2}), Rational(2));
  EXPECT_EQ(g.height()(Weight{0, 0}), Rational(0));
}

TEST(RootSystem, TermOrderPutsHighestWeightFirst) {
  const RootSystem g = RootSystem::build("A2");
  const TermOrder& order = g.term_order();
  EXPECT_TRUE(order.less(Weight{0, 0}, Weight{2, 2}));
  EXPECT_TRUE(order.less(Weight{-2, -2}, Weight{0, 0}));
  EXPECT_FALSE(order.less(Weight{2, 2}, Weight{2, 2}));
}

TEST(RootSystem, BadLabelsAreConfigurationErrors) {
  for (const char* bad : {"", "A0", "E6", "B1", "D2", "G3", "F5", "Z2", "A"})
    EXPECT_THROW(RootSystem::build(bad), ConfigurationError) << bad;
}

TEST(SubgroupPair, LeviOfA2) {
  const RootSystem g = RootSystem::build("A2");
  const std::vector<Weight> k{{4, -2}};
  const SubgroupPair pair = SubgroupPair::make(g, k);
  EXPECT_EQ(pair.weyl_k().size(), 2u);
  EXPECT_EQ(pair.rho_k(), (Weight{2, -1}));
  EXPECT_TRUE(pair.is_dominant(Weight{0, 6}, Group::K));
  EXPECT_FALSE(pair.is_dominant(Weight{-2, 4}, Group::K));
  EXPECT_EQ(pair.classify(Weight{0, 6}, Group::K).kind, ChamberKind::Boundary);
  EXPECT_EQ(pair.classify(Weight{2, 2}, Group::K).kind, ChamberKind::Interior);
  EXPECT_EQ(pair.classify(Weight{-2, 4}, Group::K).kind, ChamberKind::Outside);
}

TEST(SubgroupPair, NonRootIsDomainError) {
  const RootSystem g = RootSystem::build("A2");
  const std::vector<Weight> k{{2, 0}};
  EXPECT_THROW(SubgroupPair::make(g, k), Error);
}

TEST(SubgroupPair, DominantConjugate) {
  const SubgroupPair pair = SubgroupPair::make(RootSystem::build("A2"), {});
  for (const auto& w : pair.g().weyl_group()) {
    const auto [u, dom] = pair.dominant_conjugate(w.apply(Weight{2, 4}), Group::G);
    EXPECT_EQ(dom, (Weight{2, 4}));
    EXPECT_EQ(u.apply(w.apply(Weight{2, 4})), dom);
  }
}
